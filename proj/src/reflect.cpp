#include "nichols/reflect.hpp"

#include <sstream>
#include <stdexcept>

#include "nichols/parallel.hpp"

namespace nichols {

void add_term(SmashElement& x, const SmashKey& k, const CycScalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = x.try_emplace(k, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) x.erase(it);
}

void add_term(SmashTensor& x, const std::vector<SmashKey>& k, const CycScalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = x.try_emplace(k, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) x.erase(it);
}

SmashAlgebra::SmashAlgebra(std::shared_ptr<const TensorAlgebra> t, std::shared_ptr<NicholsEngine> reduce)
    : t_(std::move(t)), engine_(std::move(reduce)) {
  if (engine_ && &engine_->algebra() != t_.get())
    throw std::invalid_argument("reduction engine is built over a different tensor algebra");
}

SmashElement SmashAlgebra::element(const Word& w, GroupElement g, CycScalar c) {
  SmashElement out;
  add_term(out, {w, g}, c);
  return out;
}

SmashElement SmashAlgebra::from_vector(const GradedVector& x, GroupElement g) const {
  SmashElement out;
  for (const auto& [w, c] : reduce(x)) add_term(out, {w, g}, c);
  return out;
}

GradedVector SmashAlgebra::reduce(const GradedVector& x) const { return engine_ ? engine_->normal_form(x) : x; }

SmashElement SmashAlgebra::multiply(const SmashElement& x, const SmashElement& y) const {
  const Group& g = group();
  SmashElement out;
  for (const auto& [kx, cx] : x) {
    const GroupElement dx = t_->degree(kx.first);
    const GroupElement h = kx.second;
    for (const auto& [ky, cy] : y) {
      const GroupElement dy = t_->degree(ky.first);
      const GroupElement k = ky.second;
      const GroupElement hyh = g.conjugate(h, dy);
      const CycScalar ratio = t_->phi(h, dy, k) * t_->phi(dx, hyh, g.mul(h, k)) /
                              (t_->phi(dx, h, g.mul(dy, k)) * t_->phi(hyh, h, k));
      const GradedVector prod = reduce(t_->multiply(single(kx.first), t_->act(h, ky.first)));
      const GroupElement hk = g.mul(h, k);
      for (const auto& [w, c] : prod) add_term(out, {w, hk}, cx * cy * ratio * c);
    }
  }
  return out;
}

SmashTensor SmashAlgebra::coproduct(const SmashElement& x) const {
  const Group& g = group();
  SmashTensor out;
  for (const auto& [k, c] : x) {
    const GroupElement h = k.second;
    for (const auto& [lr, d] : t_->coproduct(k.first)) {
      const GroupElement x1 = t_->degree(lr.first);
      const GroupElement x2 = t_->degree(lr.second);
      const CycScalar s = c * d / t_->phi(x1, x2, h);
      const GroupElement left_group = g.mul(x2, h);
      for (const auto& [u, cu] : reduce(single(lr.first)))
        for (const auto& [v, cv] : reduce(single(lr.second)))
          add_term(out, {{u, left_group}, {v, h}}, s * cu * cv);
    }
  }
  return out;
}

SmashTensor SmashAlgebra::coproduct_at(const SmashTensor& x, std::size_t k) const {
  SmashTensor out;
  for (const auto& [keys, c] : x) {
    if (k >= keys.size()) throw std::out_of_range("tensor factor index out of range");
    for (const auto& [pair, d] : coproduct(element(keys[k].first, keys[k].second))) {
      std::vector<SmashKey> spliced(keys.begin(), keys.begin() + static_cast<std::ptrdiff_t>(k));
      spliced.insert(spliced.end(), pair.begin(), pair.end());
      spliced.insert(spliced.end(), keys.begin() + static_cast<std::ptrdiff_t>(k) + 1, keys.end());
      add_term(out, spliced, c * d);
    }
  }
  return out;
}

CycScalar SmashAlgebra::counit(const SmashElement& x) const {
  CycScalar out(0);
  for (const auto& [k, c] : x)
    if (k.first.empty()) out += c;
  return out;
}

CycScalar SmashAlgebra::associator(const SmashKey& a, const SmashKey& b, const SmashKey& c) const {
  if (!a.first.empty() || !b.first.empty() || !c.first.empty()) return CycScalar(0);
  return t_->phi(a.second, b.second, c.second);
}

std::pair<SmashElement, SmashElement> SmashAlgebra::quasi_associativity(const SmashKey& a, const SmashKey& b,
                                                                        const SmashKey& c) const {
  const SmashTensor da = coproduct(element(a.first, a.second));
  const SmashTensor db = coproduct(element(b.first, b.second));
  const SmashTensor dc = coproduct(element(c.first, c.second));
  SmashElement lhs, rhs;
  for (const auto& [ka, ca] : da)
    for (const auto& [kb, cb] : db)
      for (const auto& [kc, cc] : dc) {
        const CycScalar coeff = ca * cb * cc;
        const CycScalar right = associator(ka[1], kb[1], kc[1]);
        if (!right.is_zero()) {
          const SmashElement prod =
              multiply(element(ka[0].first, ka[0].second),
                       multiply(element(kb[0].first, kb[0].second), element(kc[0].first, kc[0].second)));
          for (const auto& [k, v] : prod) add_term(lhs, k, coeff * right * v);
        }
        const CycScalar left = associator(ka[0], kb[0], kc[0]);
        if (!left.is_zero()) {
          const SmashElement prod =
              multiply(multiply(element(ka[1].first, ka[1].second), element(kb[1].first, kb[1].second)),
                       element(kc[1].first, kc[1].second));
          for (const auto& [k, v] : prod) add_term(rhs, k, coeff * left * v);
        }
      }
  return {lhs, rhs};
}

GradedVector SmashAlgebra::ad_group_smash(GroupElement g, const GradedVector& x) const {
  const Group& grp = group();
  const GroupElement e = grp.identity();
  const GroupElement ginv = grp.inverse(g);
  GradedVector out;
  for (const auto& [w, c] : x) {
    const GroupElement dx = t_->degree(w);
    const CycScalar s = antipode_beta(t_->cocycle(), g) * t_->phi(grp.mul(g, dx), ginv, g);
    const SmashElement prod = multiply(multiply(element({}, g), element(w, e)), element({}, ginv));
    for (const auto& [k, v] : prod) {
      if (k.second != e) throw std::logic_error("adjoint action left the group-degree 1 part");
      add_term(out, k.first, c * s * v);
    }
  }
  return reduce(out);
}

std::string SmashAlgebra::format(const SmashElement& x) const {
  if (x.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : x) {
    if (!first) os << " + ";
    first = false;
    if (!c.is_one()) os << "(" << c.to_string() << ")*";
    os << t_->format(k.first) << "#" << group().label(k.second);
  }
  return os.str();
}

GradedVector ad_group(const TensorAlgebra& t, GroupElement g, const GradedVector& x) { return t.act(g, x); }

GradedVector ad_letter(const TensorAlgebra& t, Letter v, const GradedVector& y) {
  GradedVector out = t.multiply(single({v}), y);
  add_scaled(out, t.multiply(t.act(t.letter_degree(v), y), single({v})), CycScalar(-1));
  return out;
}

GradedVector ad_primitive(const NicholsTruncation& b, const GradedVector& x, const GradedVector& y) {
  const TensorAlgebra& t = b.engine->algebra();
  std::optional<GroupElement> deg;
  GradedVector out;
  for (const auto& [w, c] : x) {
    if (w.size() != 1) throw std::invalid_argument("ad_primitive needs an element of degree 1");
    const GroupElement d = t.letter_degree(w[0]);
    if (deg && *deg != d) throw std::invalid_argument("ad_primitive needs a G-homogeneous element");
    deg = d;
    add_scaled(out, ad_letter(t, w[0], y), c);
  }
  return normal_form(out, b);
}

std::size_t AdModule::top() const {
  std::size_t top = 0;
  for (std::size_t n = 0; n < levels.size(); ++n)
    if (!levels[n].basis.empty()) top = n;
  return top;
}

namespace {

std::string level_name(const YDModule& mi, const YDModule& mj, std::size_t n) {
  if (n == 0) return mj.name();
  std::string out = "ad(" + mi.name() + ")";
  if (n > 1) out += "^" + std::to_string(n);
  return out + "(" + mj.name() + ")";
}

// The YD module spanned by a homogeneous basis of B_beta that is stable under G.
YDModule package_level(NicholsEngine& e, const MultiDegree& beta, const std::vector<GradedVector>& basis,
                       std::string name) {
  const TensorAlgebra& t = e.algebra();
  const std::size_t r = basis.size();
  const std::size_t dim = e.dimension(beta);
  Matrix c(dim, r);
  std::vector<GroupElement> degrees;
  std::vector<std::string> labels;
  for (std::size_t k = 0; k < r; ++k) {
    const Vector v = e.coordinates(basis[k]);
    for (std::size_t a = 0; a < dim; ++a) c(a, k) = v[a];
    degrees.push_back(t.degree(basis[k].begin()->first));
    labels.push_back("u" + std::to_string(k + 1));
  }
  std::vector<Matrix> action;
  for (const auto& g : t.group().elements()) {
    Matrix m(r, r);
    for (std::size_t k = 0; k < r; ++k) {
      Vector v = e.coordinates(t.act(g, basis[k]));
      if (v.empty()) v.assign(dim, CycScalar(0));
      const auto sol = solve(c, v);
      if (!sol) throw ValidationError(name + " is not stable under the group action");
      for (std::size_t a = 0; a < r; ++a) m(a, k) = (*sol)[a];
    }
    action.push_back(std::move(m));
  }
  YDModule out(t.module().cocycle_ptr(), std::move(degrees),
               std::move(action), std::move(labels), std::move(name));
  const auto report = yd_axiom_check(out);
  if (!report.passed) throw ValidationError(out.name() + " fails the Yetter-Drinfeld axioms: " + report.violations[0]);
  return out;
}

}  // namespace

AdModule ad_power_module(const ModuleTuple& m, std::size_t i, std::size_t j, std::size_t cutoff) {
  if (i >= m.theta() || j >= m.theta()) throw std::out_of_range("tuple index out of range");
  if (i == j) throw std::invalid_argument("ad_power_module needs i != j");
  const YDModule& mi = m[i];
  const YDModule& mj = m[j];
  AdModule out;
  out.i = i;
  out.j = j;
  auto t = std::make_shared<const TensorAlgebra>(direct_sum({mi, mj}));
  out.ambient = std::make_shared<NicholsEngine>(t);
  NicholsEngine& e = *out.ambient;
  const auto di = static_cast<Letter>(mi.dim());

  std::vector<GradedVector> current;
  for (std::size_t k = 0; k < mj.dim(); ++k) current.push_back(single({static_cast<Letter>(di + k)}));
  out.levels.push_back({0, current, package_level(e, {0, 1}, current, level_name(mi, mj, 0))});

  for (std::size_t n = 1;; ++n) {
    const MultiDegree beta{static_cast<int>(n), 1};
    const std::size_t dim = e.dimension(beta);
    std::map<GroupElement, SpanBuilder> spans;
    std::vector<GradedVector> next;
    for (const auto& y : current)
      for (Letter a = 0; a < di; ++a) {
        GradedVector z = e.normal_form(ad_letter(*t, a, y));
        if (z.empty()) continue;
        const GroupElement d = t->degree(z.begin()->first);
        auto it = spans.try_emplace(d, dim).first;
        if (it->second.add(e.coordinates(z))) next.push_back(std::move(z));
      }
    if (next.empty()) {
      out.levels.push_back({n, {}, YDModule(mi.cocycle_ptr(), {}, std::vector<Matrix>(mi.group().order(), Matrix()),
                                            {}, level_name(mi, mj, n))});
      return out;
    }
    if (n >= cutoff)
      throw UndecidedError(level_name(mi, mj, n) + " is still non-zero at the cutoff " + std::to_string(cutoff));
    out.levels.push_back({n, next, package_level(e, beta, next, level_name(mi, mj, n))});
    current = std::move(next);
  }
}

CartanMatrix::CartanMatrix(std::vector<std::vector<int>> a) : a_(std::move(a)) {
  for (const auto& row : a_)
    if (row.size() != a_.size()) throw std::invalid_argument("Cartan matrix must be square");
}

ValidationReport CartanMatrix::check() const {
  ValidationReport report;
  const std::size_t n = size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const std::string at = "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
      if (i == j && a_[i][j] != 2) report.fail("diagonal entry " + at + " is not 2");
      if (i != j && a_[i][j] > 0) report.fail("off-diagonal entry " + at + " is positive");
      if (i != j && (a_[i][j] == 0) != (a_[j][i] == 0)) report.fail("entry " + at + " breaks a_ij = 0 iff a_ji = 0");
    }
  return report;
}

std::string CartanMatrix::to_string() const {
  std::string out = "[";
  for (std::size_t i = 0; i < size(); ++i) {
    out += i ? ",[" : "[";
    for (std::size_t j = 0; j < size(); ++j) out += (j ? "," : "") + std::to_string(a_[i][j]);
    out += "]";
  }
  return out + "]";
}

int cartan_entry(const ModuleTuple& m, std::size_t i, std::size_t j, std::size_t cutoff) {
  if (i >= m.theta() || j >= m.theta()) throw std::out_of_range("tuple index out of range");
  if (i == j) return 2;
  return -static_cast<int>(ad_power_module(m, i, j, cutoff).top());
}

CartanMatrix cartan_matrix(const ModuleTuple& m, std::size_t cutoff) {
  const std::size_t n = m.theta();
  std::vector<std::vector<int>> a(n, std::vector<int>(n, 2));
  parallel_for(n * n, [&](std::size_t k) {
    const std::size_t i = k / n, j = k % n;
    if (i != j) a[i][j] = cartan_entry(m, i, j, cutoff);
  });
  return CartanMatrix(std::move(a));
}

ModuleTuple reflect(const ModuleTuple& m, std::size_t i, std::size_t cutoff) {
  if (i >= m.theta()) throw std::out_of_range("tuple index out of range");
  ModuleTuple out;
  out.name = "R" + std::to_string(i + 1) + "(" + m.name + ")";
  out.entries.resize(m.theta());
  parallel_for(m.theta(), [&](std::size_t j) {
    if (j == i) {
      out.entries[j] = dual(m[i]);
    } else {
      const AdModule ad = ad_power_module(m, i, j, cutoff);
      out.entries[j] = ad.levels[ad.top()].module;
    }
  });
  return out;
}

std::map<MultiDegree, std::size_t> adjoint_subalgebra_dims(const YDModule& m, const YDModule& n,
                                                           std::size_t max_total, std::size_t cutoff) {
  // ad(N)^k(M) sits in bidegree (k, 1) of B(N (+) M).
  const AdModule ad = ad_power_module(ModuleTuple{{n, m}, ""}, 0, 1, cutoff);
  NicholsEngine& e = *ad.ambient;
  const TensorAlgebra& t = e.algebra();
  std::map<MultiDegree, std::vector<GradedVector>> k_basis;
  k_basis[{0, 0}] = {single({})};
  for (std::size_t s = 1; s <= max_total; ++s)
    for (const auto& beta : multidegrees_of_total(2, s)) {
      SpanBuilder span(e.dimension(beta));
      auto& basis = k_basis[beta];
      for (const auto& level : ad.levels) {
        const MultiDegree rest{beta[0] - static_cast<int>(level.n), beta[1] - 1};
        if (rest[0] < 0 || rest[1] < 0) continue;
        for (const auto& l : level.basis)
          for (const auto& k : k_basis.at(rest)) {
            GradedVector z = e.normal_form(t.multiply(l, k));
            if (!z.empty() && span.add(e.coordinates(z))) basis.push_back(std::move(z));
          }
      }
    }
  std::map<MultiDegree, std::size_t> out;
  for (const auto& [beta, basis] : k_basis) out[{beta[1], beta[0]}] = basis.size();
  return out;
}

}  // namespace nichols
