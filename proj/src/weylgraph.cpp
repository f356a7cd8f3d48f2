#include "nichols/weylgraph.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <map>
#include <sstream>
#include <stdexcept>

#include <gmpxx.h>

#include "nichols/parallel.hpp"

namespace nichols {

std::string tuple_key(const ModuleTuple& m) {
  std::string out;
  for (const auto& v : m.entries) {
    std::vector<std::string> degrees;
    for (const auto& d : v.degrees()) degrees.push_back(v.group().label(d));
    std::sort(degrees.begin(), degrees.end());
    out += "{";
    for (const auto& d : degrees) out += d + ",";
    out += "|";
    for (const auto& a : v.actions()) {
      CycScalar tr(0);
      for (std::size_t k = 0; k < a.rows(); ++k) tr += a(k, k);
      out += tr.to_string() + ",";
    }
    out += "}";
  }
  return out;
}

namespace {

struct ReflectionData {
  CartanMatrix cartan;
  std::vector<ModuleTuple> reflections;
};

// Cartan matrix and all reflections of one tuple, sharing the ad computations.
std::vector<ReflectionData> reflect_all(const std::vector<const ModuleTuple*>& batch, std::size_t cutoff) {
  if (batch.empty()) return {};
  const std::size_t theta = batch[0]->theta();
  const std::size_t per = theta * theta;
  std::vector<int> top(batch.size() * per, 2);
  std::vector<YDModule> level(batch.size() * per);
  parallel_for(batch.size() * per, [&](std::size_t k) {
    const ModuleTuple& m = *batch[k / per];
    const std::size_t i = (k % per) / theta, j = k % theta;
    if (i == j) {
      level[k] = dual(m[i]);
      return;
    }
    const AdModule ad = ad_power_module(m, i, j, cutoff);
    top[k] = -static_cast<int>(ad.top());
    level[k] = ad.levels[ad.top()].module;
  });
  std::vector<ReflectionData> out(batch.size());
  for (std::size_t b = 0; b < batch.size(); ++b) {
    std::vector<std::vector<int>> a(theta, std::vector<int>(theta));
    for (std::size_t i = 0; i < theta; ++i) {
      ModuleTuple r;
      for (std::size_t j = 0; j < theta; ++j) {
        a[i][j] = top[b * per + i * theta + j];
        r.entries.push_back(level[b * per + i * theta + j]);
      }
      out[b].reflections.push_back(std::move(r));
    }
    out[b].cartan = CartanMatrix(std::move(a));
  }
  return out;
}

}  // namespace

SemiCartanGraph build_cartan_graph(const ModuleTuple& m, const GraphCutoffs& cutoffs) {
  if (m.theta() == 0) throw std::invalid_argument("empty tuple");
  SemiCartanGraph g;
  g.theta = m.theta();
  std::map<std::string, std::vector<std::size_t>> by_key;
  auto add = [&](ModuleTuple t) {
    if (g.vertices.size() >= cutoffs.vertex_bound)
      throw ResourceLimitError("semi-Cartan graph exceeds the vertex bound of " +
                               std::to_string(cutoffs.vertex_bound));
    const std::size_t x = g.vertices.size();
    if (x > 0) t.name = "X" + std::to_string(x);
    std::string key = tuple_key(t);
    by_key[key].push_back(x);
    g.vertices.push_back({std::move(t), std::move(key), {}});
    g.r.emplace_back(g.theta, 0);
    return x;
  };
  auto find = [&](const ModuleTuple& t) -> std::optional<std::size_t> {
    auto it = by_key.find(tuple_key(t));
    if (it == by_key.end()) return std::nullopt;
    for (std::size_t x : it->second)
      if (tuples_isomorphic(g.vertices[x].tuple, t)) return x;
    return std::nullopt;
  };
  add(m);
  std::size_t done = 0;
  while (done < g.vertices.size()) {
    const std::size_t end = g.vertices.size();
    std::vector<const ModuleTuple*> batch;
    for (std::size_t x = done; x < end; ++x) batch.push_back(&g.vertices[x].tuple);
    auto data = reflect_all(batch, cutoffs.ad_cutoff);
    for (std::size_t x = done; x < end; ++x) {
      auto& d = data[x - done];
      g.vertices[x].cartan = std::move(d.cartan);
      for (std::size_t i = 0; i < g.theta; ++i) {
        auto& t = d.reflections[i];
        const auto hit = find(t);
        g.r[x][i] = hit ? *hit : add(std::move(t));
      }
    }
    done = end;
  }
  return g;
}

ValidationReport check_axioms(const SemiCartanGraph& g) {
  ValidationReport report;
  for (std::size_t x = 0; x < g.size(); ++x) {
    const CartanMatrix& a = g.vertices[x].cartan;
    for (const auto& v : a.check().violations) report.fail("vertex " + std::to_string(x) + ": " + v);
    for (std::size_t i = 0; i < g.theta; ++i) {
      const std::size_t y = g.r[x][i];
      if (g.r[y][i] != x)
        report.fail("CG1: r_" + std::to_string(i + 1) + "^2 moves vertex " + std::to_string(x) + " to " +
                    std::to_string(g.r[y][i]));
      if (a.rows()[i] != g.vertices[y].cartan.rows()[i])
        report.fail("CG2: row " + std::to_string(i + 1) + " differs between vertex " + std::to_string(x) +
                    " and its reflection " + std::to_string(y));
    }
  }
  return report;
}

GroupoidMorphism GroupoidMorphism::generator(const SemiCartanGraph& g, std::size_t i, std::size_t x) {
  GroupoidMorphism out = identity(g.theta, x);
  out.target = g.r[x][i];
  for (std::size_t j = 0; j < g.theta; ++j) out.f[i][j] -= g.vertices[x].cartan(i, j);
  return out;
}

GroupoidMorphism GroupoidMorphism::identity(std::size_t theta, std::size_t x) {
  GroupoidMorphism out{x, x, IntMatrix(theta, std::vector<int>(theta, 0))};
  for (std::size_t i = 0; i < theta; ++i) out.f[i][i] = 1;
  return out;
}

GroupoidMorphism compose(const GroupoidMorphism& g, const GroupoidMorphism& f) {
  if (g.source != f.target) throw std::invalid_argument("morphisms do not compose");
  const std::size_t n = f.f.size();
  GroupoidMorphism out{f.source, g.target, IntMatrix(n, std::vector<int>(n, 0))};
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t j = 0; j < n; ++j) out.f[i][j] += g.f[i][k] * f.f[k][j];
  return out;
}

std::vector<int> GroupoidMorphism::apply(const std::vector<int>& v) const {
  std::vector<int> out(v.size(), 0);
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j) out[i] += f[i][j] * v[j];
  return out;
}

bool GroupoidMorphism::is_identity() const {
  for (std::size_t i = 0; i < f.size(); ++i)
    for (std::size_t j = 0; j < f.size(); ++j)
      if (f[i][j] != (i == j ? 1 : 0)) return false;
  return true;
}

RootSet real_roots(const SemiCartanGraph& g, std::size_t x, int bound) {
  if (bound < 1) throw std::invalid_argument("root bound must be at least 1");
  RootSet out;
  std::set<std::pair<std::size_t, std::vector<int>>> seen;
  std::deque<std::pair<std::size_t, std::vector<int>>> queue;
  for (std::size_t y = 0; y < g.size(); ++y)
    for (std::size_t i = 0; i < g.theta; ++i) {
      std::vector<int> a(g.theta, 0);
      a[i] = 1;
      seen.insert({y, a});
      queue.emplace_back(y, std::move(a));
    }
  while (!queue.empty()) {
    auto [y, a] = std::move(queue.front());
    queue.pop_front();
    if (y == x) out.roots.insert(a);
    for (std::size_t i = 0; i < g.theta; ++i) {
      std::vector<int> b = GroupoidMorphism::generator(g, i, y).apply(a);
      if (std::any_of(b.begin(), b.end(), [&](int c) { return std::abs(c) > bound; })) {
        out.truncated = true;
        continue;
      }
      std::pair<std::size_t, std::vector<int>> next{g.r[y][i], std::move(b)};
      if (seen.insert(next).second) queue.push_back(std::move(next));
    }
  }
  return out;
}

Finiteness is_finite(const SemiCartanGraph& g, int bound) {
  Finiteness out;
  std::vector<RootSet> sets(g.size());
  parallel_for(g.size(), [&](std::size_t x) { sets[x] = real_roots(g, x, bound); });
  out.finite = true;
  for (const auto& s : sets) {
    out.roots_per_vertex.push_back(s.roots.size());
    out.truncated.push_back(s.truncated);
    if (s.truncated) out.finite = false;
  }
  return out;
}

bool is_standard(const SemiCartanGraph& g) {
  for (const auto& v : g.vertices)
    if (!(v.cartan == g.vertices[0].cartan)) return false;
  return true;
}

namespace {

mpq_class determinant(std::vector<std::vector<mpq_class>> m) {
  const std::size_t n = m.size();
  mpq_class det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m[p][c] == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      std::swap(m[p], m[c]);
      det = -det;
    }
    det *= m[c][c];
    for (std::size_t r = c + 1; r < n; ++r) {
      const mpq_class f = m[r][c] / m[c][c];
      for (std::size_t k = c; k < n; ++k) m[r][k] -= f * m[c][k];
    }
  }
  return det;
}

bool all_principal_minors_positive(const CartanMatrix& a, const std::vector<std::size_t>& idx) {
  const std::size_t n = idx.size();
  for (std::size_t mask = 1; mask < (std::size_t{1} << n); ++mask) {
    std::vector<std::size_t> sub;
    for (std::size_t k = 0; k < n; ++k)
      if (mask >> k & 1) sub.push_back(idx[k]);
    std::vector<std::vector<mpq_class>> m(sub.size(), std::vector<mpq_class>(sub.size()));
    for (std::size_t r = 0; r < sub.size(); ++r)
      for (std::size_t c = 0; c < sub.size(); ++c) m[r][c] = a(sub[r], sub[c]);
    if (determinant(std::move(m)) <= 0) return false;
  }
  return true;
}

// Dynkin label of a connected finite-type component, or empty if unrecognized.
std::string dynkin_label(const CartanMatrix& a, const std::vector<std::size_t>& c) {
  const std::size_t n = c.size();
  if (n == 1) return "A1";
  std::vector<std::vector<std::size_t>> adj(n);
  int max_bond = 0;
  std::size_t bu = 0, bv = 0;
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = 0; v < n; ++v) {
      if (u == v) continue;
      const int p = a(c[u], c[v]) * a(c[v], c[u]);
      if (p == 0) continue;
      adj[u].push_back(v);
      if (p > max_bond) {
        max_bond = p;
        bu = u;
        bv = v;
      }
    }
  const std::string sn = std::to_string(n);
  if (max_bond == 3) return n == 2 ? "G2" : "";
  if (max_bond == 2) {
    if (n == 2) return "B2";
    const bool u_end = adj[bu].size() == 1, v_end = adj[bv].size() == 1;
    if (!u_end && !v_end) return n == 4 ? "F4" : "";
    const std::size_t end = u_end ? bu : bv, other = u_end ? bv : bu;
    return (a(c[end], c[other]) == -2 ? "B" : "C") + sn;
  }
  std::size_t branch = n;
  for (std::size_t u = 0; u < n; ++u)
    if (adj[u].size() > 2) branch = u;
  if (branch == n) return "A" + sn;
  std::vector<std::size_t> arms;
  for (std::size_t start : adj[branch]) {
    std::size_t len = 1, prev = branch, cur = start;
    while (adj[cur].size() == 2) {
      const std::size_t next = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
      prev = cur;
      cur = next;
      ++len;
    }
    arms.push_back(len);
  }
  std::sort(arms.begin(), arms.end());
  if (arms.size() != 3) return "";
  if (arms[0] == 1 && arms[1] == 1) return "D" + sn;
  if (arms[0] == 1 && arms[1] == 2 && arms[2] >= 2 && arms[2] <= 4) return "E" + sn;
  return "";
}

}  // namespace

std::string CartanType::to_string() const {
  if (!finite) return "not finite type";
  std::string out;
  for (const auto& c : components) out += (out.empty() ? "" : " x ") + c;
  return out;
}

CartanType finite_cartan_type(const CartanMatrix& a) {
  CartanType out;
  const std::size_t n = a.size();
  if (!a.check().passed) return out;
  std::vector<bool> seen(n, false);
  std::vector<std::string> comps;
  for (std::size_t s = 0; s < n; ++s) {
    if (seen[s]) continue;
    std::vector<std::size_t> comp{s};
    seen[s] = true;
    for (std::size_t k = 0; k < comp.size(); ++k)
      for (std::size_t v = 0; v < n; ++v)
        if (!seen[v] && a(comp[k], v) != 0) {
          seen[v] = true;
          comp.push_back(v);
        }
    std::sort(comp.begin(), comp.end());
    if (!all_principal_minors_positive(a, comp)) return out;
    std::string label = dynkin_label(a, comp);
    if (label.empty()) return out;
    comps.push_back(std::move(label));
  }
  std::sort(comps.begin(), comps.end());
  out.finite = true;
  out.components = std::move(comps);
  return out;
}

std::string Certificate::report() const {
  std::ostringstream os;
  os << "verdict: " << (verdict == Verdict::InfiniteDimensional ? "infinite-dimensional" : "no conclusion") << "\n";
  os << "vertices: " << graph.size() << "\n";
  os << "standard: " << (standard ? "yes" : "no") << "\n";
  if (!graph.vertices.empty()) os << "cartan matrix: " << graph.vertices[0].cartan.to_string() << "\n";
  os << "cartan type: " << type.to_string() << "\n";
  if (verdict == Verdict::InfiniteDimensional)
    os << "reason: the semi-Cartan graph is standard and its Cartan matrix is not of finite type\n";
  else if (!standard)
    os << "reason: the semi-Cartan graph is not standard\n";
  else
    os << "reason: the Cartan matrix is of finite type\n";
  return os.str();
}

Certificate infinite_dim_certificate(const ModuleTuple& m, const GraphCutoffs& cutoffs) {
  Certificate out;
  out.graph = build_cartan_graph(m, cutoffs);
  out.standard = is_standard(out.graph);
  out.type = finite_cartan_type(out.graph.vertices[0].cartan);
  if (out.standard && !out.type.finite) out.verdict = Certificate::Verdict::InfiniteDimensional;
  return out;
}

std::string to_dot(const SemiCartanGraph& g) {
  std::ostringstream os;
  os << "graph semi_cartan {\n";
  for (std::size_t x = 0; x < g.size(); ++x) {
    const auto& v = g.vertices[x];
    std::string degrees;
    for (const auto& e : v.tuple.entries) {
      const auto d = e.homogeneous_degree();
      degrees += (degrees.empty() ? "" : ",") + (d ? e.group().label(*d) : std::string("?"));
    }
    os << "  v" << x << " [label=\"(" << degrees << ")\\n" << v.cartan.to_string() << "\"];\n";
  }
  for (std::size_t x = 0; x < g.size(); ++x)
    for (std::size_t i = 0; i < g.theta; ++i) {
      const std::size_t y = g.r[x][i];
      if (y < x) continue;
      os << "  v" << x << " -- v" << y << " [label=\"" << i + 1 << "\"];\n";
    }
  os << "}\n";
  return os.str();
}

}  // namespace nichols
