#include "nichols/ydcat.hpp"

#include <deque>
#include <random>

namespace nichols {

YDModule::YDModule(CocyclePtr phi, std::vector<GroupElement> degrees, std::vector<Matrix> action,
                   std::vector<std::string> labels, std::string name)
    : phi_(std::move(phi)), degrees_(std::move(degrees)), action_(std::move(action)), name_(std::move(name)) {
  if (!phi_) throw std::invalid_argument("module needs a cocycle");
  if (action_.size() != static_cast<std::size_t>(phi_->group().order()))
    throw std::invalid_argument("one action matrix per group element is required");
  for (const auto& m : action_)
    if (m.rows() != degrees_.size() || m.cols() != degrees_.size())
      throw std::invalid_argument("action matrix has the wrong shape");
  set_labels(std::move(labels));
}

void YDModule::set_labels(std::vector<std::string> labels) {
  if (labels.empty())
    for (std::size_t i = 0; i < degrees_.size(); ++i) labels.push_back("v" + std::to_string(i + 1));
  if (labels.size() != degrees_.size()) throw std::invalid_argument("one label per basis vector is required");
  labels_ = std::move(labels);
}

std::optional<GroupElement> YDModule::homogeneous_degree() const {
  if (degrees_.empty()) return std::nullopt;
  for (auto d : degrees_)
    if (d != degrees_.front()) return std::nullopt;
  return degrees_.front();
}

YDModule YDModule::from_generators(CocyclePtr phi, std::vector<GroupElement> degrees,
                                   const std::vector<std::pair<GroupElement, Matrix>>& generators,
                                   std::vector<std::string> labels, std::string name) {
  const Group& g = phi->group();
  const std::size_t n = degrees.size();
  std::vector<std::optional<Matrix>> known(static_cast<std::size_t>(g.order()));
  known[0] = Matrix::identity(n);
  for (const auto& [s, m] : generators)
    if (m.rows() != n || m.cols() != n) throw ValidationError("generator action has the wrong shape");

  std::deque<GroupElement> queue{g.identity()};
  while (!queue.empty()) {
    const GroupElement e = queue.front();
    queue.pop_front();
    for (const auto& [s, m] : generators) {
      const GroupElement se = g.mul(s, e);
      if (known[static_cast<std::size_t>(se.index)]) continue;
      // rho(se) v = F_d(s, e)^{-1} rho(s) rho(e) v
      Matrix prod = m * *known[static_cast<std::size_t>(e.index)];
      for (std::size_t c = 0; c < n; ++c) {
        const CycScalar f = action_twist(*phi, s, e, degrees[c]).inverse();
        for (std::size_t r = 0; r < n; ++r) prod(r, c) *= f;
      }
      known[static_cast<std::size_t>(se.index)] = std::move(prod);
      queue.push_back(se);
    }
  }
  std::vector<Matrix> action;
  action.reserve(known.size());
  for (std::size_t i = 0; i < known.size(); ++i) {
    if (!known[i]) throw ValidationError("generator actions do not generate the group (missing " +
                                         g.label({static_cast<int>(i)}) + ")");
    action.push_back(std::move(*known[i]));
  }
  YDModule out(std::move(phi), std::move(degrees), std::move(action), std::move(labels), std::move(name));
  const auto report = yd_axiom_check(out);
  if (!report.passed)
    throw ValidationError("module " + out.name() + " violates the Yetter-Drinfeld axioms: " +
                          report.violations.front());
  // the closure only used left multiplication by generators; check each generator is reproduced
  for (const auto& [s, m] : generators)
    if (!(out.action(s) == m))
      throw ValidationError("generator relations of module " + out.name() + " are inconsistent at " + g.label(s));
  return out;
}

YDModule YDModule::unit(CocyclePtr phi) {
  const auto n = static_cast<std::size_t>(phi->group().order());
  std::vector<Matrix> action(n, Matrix::identity(1));
  return YDModule(std::move(phi), {GroupElement{0}}, std::move(action), {"1"}, "1");
}

bool same_cocycle(const CocyclePtr& a, const CocyclePtr& b) { return a == b || *a == *b; }

DirectSum direct_sum(const std::vector<YDModule>& parts) {
  if (parts.empty()) throw std::invalid_argument("direct sum of nothing");
  DirectSum out;
  const auto& phi = parts.front().cocycle_ptr();
  std::size_t total = 0;
  for (std::size_t s = 0; s < parts.size(); ++s) {
    if (!same_cocycle(parts[s].cocycle_ptr(), phi)) throw std::invalid_argument("direct sum over different cocycles");
    out.offset.push_back(total);
    total += parts[s].dim();
    for (std::size_t i = 0; i < parts[s].dim(); ++i) out.slot.push_back(s);
  }
  std::vector<GroupElement> degrees;
  std::vector<std::string> labels;
  for (const auto& p : parts) {
    degrees.insert(degrees.end(), p.degrees().begin(), p.degrees().end());
    labels.insert(labels.end(), p.labels().begin(), p.labels().end());
  }
  std::vector<Matrix> action;
  for (auto g : phi->group().elements()) {
    Matrix m(total, total);
    for (std::size_t s = 0; s < parts.size(); ++s) {
      const Matrix& a = parts[s].action(g);
      for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = 0; c < a.cols(); ++c) m(out.offset[s] + r, out.offset[s] + c) = a(r, c);
    }
    action.push_back(std::move(m));
  }
  std::string name;
  for (const auto& p : parts) name += (name.empty() ? "" : "+") + p.name();
  out.module = YDModule(phi, std::move(degrees), std::move(action), std::move(labels), std::move(name));
  return out;
}

CycScalar action_twist(const Cocycle3& phi, GroupElement e, GroupElement f, GroupElement g) {
  const Group& G = phi.group();
  const GroupElement ef = G.mul(e, f);
  const GroupElement efg = G.conjugate(ef, g);
  const GroupElement fg = G.conjugate(f, g);
  return phi(e, f, g) * phi(efg, e, f) / phi(e, fg, f);
}

CycScalar tensor_action_scalar(const Cocycle3& phi, GroupElement x, GroupElement g, GroupElement h) {
  const Group& G = phi.group();
  const GroupElement xg = G.conjugate(x, g);
  const GroupElement xh = G.conjugate(x, h);
  return phi(x, g, h) * phi(xg, xh, x) / phi(xg, x, h);
}

CycScalar associator_scalar(const Cocycle3& phi, GroupElement e, GroupElement f, GroupElement g) {
  return phi(e, f, g).inverse();
}

ValidationReport yd_axiom_check(const YDModule& v) {
  ValidationReport report;
  const Group& G = v.group();
  const Cocycle3& phi = v.cocycle();
  const std::size_t n = v.dim();
  if (!v.action(G.identity()).is_identity()) report.fail("identity does not act as the identity matrix");
  for (auto g : G.elements()) {
    const Matrix& a = v.action(g);
    for (std::size_t c = 0; c < n; ++c)
      for (std::size_t r = 0; r < n; ++r)
        if (!a(r, c).is_zero() && v.degree(r) != G.conjugate(g, v.degree(c))) {
          report.fail("degree compatibility fails: " + G.label(g) + " |> " + v.label(c) + " has a component on " +
                      v.label(r));
          r = n;
          c = n;
        }
  }
  for (auto e : G.elements())
    for (auto f : G.elements()) {
      const Matrix lhs = v.action(e) * v.action(f);
      const Matrix& ef = v.action(G.mul(e, f));
      for (std::size_t c = 0; c < n; ++c) {
        const CycScalar t = action_twist(phi, e, f, v.degree(c));
        bool ok = true;
        for (std::size_t r = 0; r < n && ok; ++r) ok = lhs(r, c) == t * ef(r, c);
        if (!ok)
          report.fail("twisted composition fails at (" + G.label(e) + ", " + G.label(f) + ", " + v.label(c) + ")");
      }
    }
  return report;
}

YDModule tensor(const YDModule& v, const YDModule& w) {
  if (!same_cocycle(v.cocycle_ptr(), w.cocycle_ptr())) throw std::invalid_argument("tensor over different cocycles");
  const Group& G = v.group();
  const std::size_t dv = v.dim(), dw = w.dim(), n = dv * dw;
  std::vector<GroupElement> degrees(n);
  std::vector<std::string> labels(n);
  for (std::size_t i = 0; i < dv; ++i)
    for (std::size_t j = 0; j < dw; ++j) {
      degrees[i * dw + j] = G.mul(v.degree(i), w.degree(j));
      labels[i * dw + j] = v.label(i) + "(x)" + w.label(j);
    }
  std::vector<Matrix> action;
  for (auto x : G.elements()) {
    const Matrix& a = v.action(x);
    const Matrix& b = w.action(x);
    Matrix m(n, n);
    for (std::size_t i = 0; i < dv; ++i)
      for (std::size_t j = 0; j < dw; ++j) {
        const CycScalar t = tensor_action_scalar(v.cocycle(), x, v.degree(i), w.degree(j));
        for (std::size_t k = 0; k < dv; ++k) {
          if (a(k, i).is_zero()) continue;
          for (std::size_t l = 0; l < dw; ++l)
            if (!b(l, j).is_zero()) m(k * dw + l, i * dw + j) = t * a(k, i) * b(l, j);
        }
      }
    action.push_back(std::move(m));
  }
  return YDModule(v.cocycle_ptr(), std::move(degrees), std::move(action), std::move(labels),
                  v.name() + "(x)" + w.name());
}

Matrix braiding(const YDModule& v, const YDModule& w) {
  const std::size_t dv = v.dim(), dw = w.dim();
  Matrix c(dv * dw, dv * dw);
  for (std::size_t i = 0; i < dv; ++i) {
    const Matrix& a = w.action(v.degree(i));
    for (std::size_t j = 0; j < dw; ++j)
      for (std::size_t l = 0; l < dw; ++l)
        if (!a(l, j).is_zero()) c(l * dv + i, i * dw + j) = a(l, j);
  }
  return c;
}

Matrix associator_matrix(const YDModule& u, const YDModule& v, const YDModule& w) {
  const std::size_t du = u.dim(), dv = v.dim(), dw = w.dim();
  Matrix m(du * dv * dw, du * dv * dw);
  for (std::size_t i = 0; i < du; ++i)
    for (std::size_t j = 0; j < dv; ++j)
      for (std::size_t k = 0; k < dw; ++k) {
        const std::size_t idx = (i * dv + j) * dw + k;
        m(idx, idx) = associator_scalar(u.cocycle(), u.degree(i), v.degree(j), w.degree(k));
      }
  return m;
}

YDModule dual(const YDModule& v) {
  const Group& G = v.group();
  const std::size_t n = v.dim();
  std::vector<GroupElement> degrees(n);
  std::vector<std::string> labels(n);
  for (std::size_t i = 0; i < n; ++i) {
    degrees[i] = G.inverse(v.degree(i));
    labels[i] = v.label(i) + "*";
  }
  std::vector<Matrix> action;
  for (auto x : G.elements()) {
    const auto inv = inverse(v.action(x));
    if (!inv) throw ValidationError("action of " + G.label(x) + " on " + v.name() + " is not invertible");
    // (x |> f)(x |> u) T(x, deg f, deg u) = f(u)
    Matrix m = inv->transpose();
    for (std::size_t c = 0; c < n; ++c) {
      const CycScalar s = tensor_action_scalar(v.cocycle(), x, degrees[c], v.degree(c)).inverse();
      for (std::size_t r = 0; r < n; ++r)
        if (!m(r, c).is_zero()) m(r, c) *= s;
    }
    action.push_back(std::move(m));
  }
  YDModule out(v.cocycle_ptr(), std::move(degrees), std::move(action), std::move(labels), v.name() + "*");
  const auto report = yd_axiom_check(out);
  if (!report.passed) throw ValidationError("dual of " + v.name() + " fails: " + report.violations.front());
  return out;
}

namespace {

// Rows: linear conditions on the entries of T (dim W x dim V, index r * dim V + c),
// restricted to degree-preserving positions listed in `vars`.
Matrix intertwiner_system(const YDModule& v, const YDModule& w, std::vector<std::pair<std::size_t, std::size_t>>& vars) {
  const std::size_t dv = v.dim(), dw = w.dim();
  vars.clear();
  std::vector<long> var_of(dv * dw, -1);
  for (std::size_t r = 0; r < dw; ++r)
    for (std::size_t c = 0; c < dv; ++c)
      if (w.degree(r) == v.degree(c)) {
        var_of[r * dv + c] = static_cast<long>(vars.size());
        vars.emplace_back(r, c);
      }
  std::vector<Vector> rows;
  for (auto g : v.group().elements()) {
    const Matrix& a = v.action(g);
    const Matrix& b = w.action(g);
    // (T a - b T)(r, c) = sum_k T(r,k) a(k,c) - sum_k b(r,k) T(k,c)
    for (std::size_t r = 0; r < dw; ++r)
      for (std::size_t c = 0; c < dv; ++c) {
        Vector row(vars.size());
        bool any = false;
        for (std::size_t k = 0; k < dv; ++k) {
          const long x = var_of[r * dv + k];
          if (x >= 0 && !a(k, c).is_zero()) {
            row[static_cast<std::size_t>(x)] += a(k, c);
            any = true;
          }
        }
        for (std::size_t k = 0; k < dw; ++k) {
          const long x = var_of[k * dv + c];
          if (x >= 0 && !b(r, k).is_zero()) {
            row[static_cast<std::size_t>(x)] -= b(r, k);
            any = true;
          }
        }
        if (any) rows.push_back(std::move(row));
      }
  }
  return Matrix::from_rows(rows, vars.size());
}

Matrix hom_basis(const YDModule& v, const YDModule& w, std::vector<std::pair<std::size_t, std::size_t>>& vars) {
  const Matrix sys = intertwiner_system(v, w, vars);
  if (sys.rows() == 0) return Matrix::identity(vars.size());
  return nullspace(sys);
}

}  // namespace

std::size_t hom_dimension(const YDModule& v, const YDModule& w) {
  if (!same_cocycle(v.cocycle_ptr(), w.cocycle_ptr())) throw std::invalid_argument("modules over different cocycles");
  std::vector<std::pair<std::size_t, std::size_t>> vars;
  return hom_basis(v, w, vars).rows();
}

bool is_isomorphic(const YDModule& v, const YDModule& w) {
  if (v.dim() != w.dim()) return false;
  if (v.dim() == 0) return true;
  // The category is semisimple, so V ~ W iff Hom(V,V) + Hom(W,W) = 2 Hom(V,W).
  const std::size_t vv = hom_dimension(v, v);
  const std::size_t ww = hom_dimension(w, w);
  const std::size_t vw = hom_dimension(v, w);
  return vv + ww == 2 * vw;
}

std::optional<Matrix> iso_test(const YDModule& v, const YDModule& w) {
  if (!same_cocycle(v.cocycle_ptr(), w.cocycle_ptr())) throw std::invalid_argument("modules over different cocycles");
  if (!is_isomorphic(v, w)) return std::nullopt;
  const std::size_t n = v.dim();
  std::vector<std::pair<std::size_t, std::size_t>> vars;
  const Matrix basis = hom_basis(v, w, vars);
  auto assemble = [&](const std::vector<long>& coeffs) {
    Matrix t(n, n);
    for (std::size_t b = 0; b < basis.rows(); ++b) {
      if (coeffs[b] == 0) continue;
      for (std::size_t x = 0; x < vars.size(); ++x)
        if (!basis(b, x).is_zero()) t(vars[x].first, vars[x].second) += CycScalar(coeffs[b]) * basis(b, x);
    }
    return t;
  };
  std::vector<long> coeffs(basis.rows(), 1);
  // An invertible element exists; det is a nonzero polynomial of degree n in the
  // coefficients, so points from a box of side > n hit a nonzero value quickly.
  std::mt19937_64 rng(0x5eed);
  for (long side = 2 * static_cast<long>(n) + 1;; side *= 2) {
    for (int attempt = 0; attempt < 16; ++attempt) {
      Matrix t = assemble(coeffs);
      if (rank(t) == n) return t;
      std::uniform_int_distribution<long> dist(-side, side);
      for (auto& c : coeffs) c = dist(rng);
    }
  }
}

bool tuples_isomorphic(const ModuleTuple& a, const ModuleTuple& b) {
  if (a.theta() != b.theta()) return false;
  for (std::size_t i = 0; i < a.theta(); ++i)
    if (!is_isomorphic(a[i], b[i])) return false;
  return true;
}

}  // namespace nichols
