#include "nichols/freebraid.hpp"

#include <sstream>
#include <stdexcept>

namespace nichols {

void add_term(GradedVector& x, const Word& w, const CycScalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = x.try_emplace(w, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) x.erase(it);
}

void add_term(PairVector& x, const std::pair<Word, Word>& w, const CycScalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = x.try_emplace(w, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) x.erase(it);
}

void add_scaled(GradedVector& acc, const GradedVector& x, const CycScalar& s) {
  if (s.is_zero()) return;
  for (const auto& [w, c] : x) add_term(acc, w, c * s);
}

void add_scaled(PairVector& acc, const PairVector& x, const CycScalar& s) {
  if (s.is_zero()) return;
  for (const auto& [w, c] : x) add_term(acc, w, c * s);
}

GradedVector single(const Word& w, CycScalar c) {
  GradedVector x;
  add_term(x, w, c);
  return x;
}

Tree Tree::leaf() { return Tree(); }

Tree Tree::node(Tree left, Tree right) {
  Tree t;
  t.leaves_ = left.leaves_ + right.leaves_;
  t.node_ = std::make_shared<const Node>(Node{std::move(left), std::move(right)});
  return t;
}

namespace {

Tree parse_tree(std::string_view s, std::size_t& pos) {
  if (pos >= s.size()) throw ParseError("unexpected end of bracketing");
  if (s[pos] == 'x') {
    ++pos;
    return Tree::leaf();
  }
  if (s[pos] != '(') throw ParseError("bad bracketing character '" + std::string(1, s[pos]) + "'");
  ++pos;
  Tree left = parse_tree(s, pos);
  Tree right = parse_tree(s, pos);
  if (pos >= s.size() || s[pos] != ')') throw ParseError("expected ')' in bracketing");
  ++pos;
  return Tree::node(std::move(left), std::move(right));
}

}  // namespace

Tree Tree::parse(std::string_view text) {
  std::size_t pos = 0;
  Tree t = parse_tree(text, pos);
  if (pos != text.size()) throw ParseError("trailing characters in bracketing");
  return t;
}

Tree Tree::left_comb(std::size_t n) {
  if (n == 0) throw std::invalid_argument("a bracketing needs at least one factor");
  Tree t = leaf();
  for (std::size_t k = 1; k < n; ++k) t = node(std::move(t), leaf());
  return t;
}

Tree Tree::right_comb(std::size_t n) {
  if (n == 0) throw std::invalid_argument("a bracketing needs at least one factor");
  Tree t = leaf();
  for (std::size_t k = 1; k < n; ++k) t = node(leaf(), std::move(t));
  return t;
}

std::vector<Tree> Tree::all(std::size_t n) {
  if (n == 0) throw std::invalid_argument("a bracketing needs at least one factor");
  if (n == 1) return {leaf()};
  std::vector<Tree> out;
  for (std::size_t k = 1; k < n; ++k)
    for (const auto& l : all(k))
      for (const auto& r : all(n - k)) out.push_back(node(l, r));
  return out;
}

std::string Tree::to_string() const {
  if (is_leaf()) return "x";
  return "(" + left().to_string() + right().to_string() + ")";
}

bool operator==(const Tree& a, const Tree& b) {
  if (a.is_leaf() || b.is_leaf()) return a.is_leaf() && b.is_leaf();
  return a.left() == b.left() && a.right() == b.right();
}

namespace {

CycScalar merge_degrees(const Cocycle3& phi, GroupElement left, const GroupElement* right, std::size_t q) {
  const Group& g = phi.group();
  CycScalar s(1);
  GroupElement prefix = q ? right[0] : g.identity();
  for (std::size_t k = 1; k < q; ++k) {
    s *= phi(left, prefix, right[k]);
    prefix = g.mul(prefix, right[k]);
  }
  return s;
}

CycScalar left_nested_impl(const Cocycle3& phi, const Tree& t, const GroupElement* degrees, GroupElement& total) {
  const Group& g = phi.group();
  if (t.is_leaf()) {
    total = degrees[0];
    return CycScalar(1);
  }
  GroupElement dl, dr;
  CycScalar s = left_nested_impl(phi, t.left(), degrees, dl);
  s *= left_nested_impl(phi, t.right(), degrees + t.left().leaves(), dr);
  s *= merge_degrees(phi, dl, degrees + t.left().leaves(), t.right().leaves());
  total = g.mul(dl, dr);
  return s;
}

}  // namespace

CycScalar left_nested_scalar(const Cocycle3& phi, const Tree& t, const std::vector<GroupElement>& degrees) {
  if (t.leaves() != degrees.size()) throw std::invalid_argument("bracketing and degree list differ in length");
  GroupElement total;
  return left_nested_impl(phi, t, degrees.data(), total);
}

CycScalar rebracket_scalar(const Cocycle3& phi, const std::vector<GroupElement>& degrees, const Tree& from,
                           const Tree& to) {
  return left_nested_scalar(phi, from, degrees) / left_nested_scalar(phi, to, degrees);
}

TensorAlgebra::TensorAlgebra(YDModule v) : v_(std::move(v)), slot_(v_.dim(), 0), theta_(1) { build_tables(); }

TensorAlgebra::TensorAlgebra(const DirectSum& sum)
    : v_(sum.module), slot_(sum.slot), theta_(sum.offset.size()) {
  build_tables();
}

void TensorAlgebra::build_tables() {
  if (v_.dim() > 65535) throw std::invalid_argument("module too large for the word encoding");
  const Group& g = group();
  const std::size_t n = letters();
  letter_action_.assign(static_cast<std::size_t>(g.order()) * n, {});
  for (auto x : g.elements()) {
    const Matrix& a = v_.action(x);
    for (std::size_t c = 0; c < n; ++c) {
      auto& col = letter_action_[static_cast<std::size_t>(x.index) * n + c];
      for (std::size_t r = 0; r < n; ++r)
        if (!a(r, c).is_zero()) col.emplace_back(static_cast<Letter>(r), a(r, c));
    }
  }
  const auto order = static_cast<std::size_t>(g.order());
  tensor_scalar_.resize(order * order * order);
  for (auto x : g.elements())
    for (auto a : g.elements())
      for (auto b : g.elements())
        tensor_scalar_[(static_cast<std::size_t>(x.index) * order + static_cast<std::size_t>(a.index)) * order +
                       static_cast<std::size_t>(b.index)] = tensor_action_scalar(cocycle(), x, a, b);
}

const CycScalar& TensorAlgebra::tensor_scalar(GroupElement x, GroupElement g, GroupElement h) const {
  const auto order = static_cast<std::size_t>(group().order());
  return tensor_scalar_[(static_cast<std::size_t>(x.index) * order + static_cast<std::size_t>(g.index)) * order +
                        static_cast<std::size_t>(h.index)];
}

GroupElement TensorAlgebra::degree(const Word& w) const {
  GroupElement d = group().identity();
  for (Letter l : w) d = group().mul(d, letter_degree(l));
  return d;
}

GradedVector TensorAlgebra::act(GroupElement g, const Word& w) const {
  // g |> (w' (x) v) = T(g, deg w', deg v) (g |> w') (x) (g |> v)
  std::vector<std::pair<Word, CycScalar>> terms{{Word{}, CycScalar(1)}};
  GroupElement prefix = group().identity();
  for (Letter l : w) {
    const CycScalar& t = tensor_scalar(g, prefix, letter_degree(l));
    const auto& col = act_letter(g, l);
    std::vector<std::pair<Word, CycScalar>> next;
    next.reserve(terms.size() * col.size());
    for (const auto& [u, c] : terms)
      for (const auto& [l2, a] : col) {
        Word u2 = u;
        u2.push_back(l2);
        next.emplace_back(std::move(u2), c * a * t);
      }
    terms = std::move(next);
    prefix = group().mul(prefix, letter_degree(l));
  }
  GradedVector out;
  for (const auto& [u, c] : terms) add_term(out, u, c);
  return out;
}

GradedVector TensorAlgebra::act(GroupElement g, const GradedVector& x) const {
  GradedVector out;
  for (const auto& [w, c] : x) add_scaled(out, act(g, w), c);
  return out;
}

CycScalar TensorAlgebra::merge_scalar(GroupElement left_degree, const Word& right) const {
  CycScalar s(1);
  if (right.empty()) return s;
  GroupElement prefix = letter_degree(right[0]);
  for (std::size_t k = 1; k < right.size(); ++k) {
    s *= phi(left_degree, prefix, letter_degree(right[k]));
    prefix = group().mul(prefix, letter_degree(right[k]));
  }
  return s;
}

GradedVector TensorAlgebra::multiply(const Word& u, const Word& w) const {
  Word uw = u;
  uw.insert(uw.end(), w.begin(), w.end());
  return single(uw, merge_scalar(degree(u), w));
}

GradedVector TensorAlgebra::multiply(const GradedVector& x, const GradedVector& y) const {
  GradedVector out;
  for (const auto& [u, a] : x) {
    const GroupElement du = degree(u);
    for (const auto& [w, b] : y) {
      Word uw = u;
      uw.insert(uw.end(), w.begin(), w.end());
      add_term(out, uw, a * b * merge_scalar(du, w));
    }
  }
  return out;
}

PairVector TensorAlgebra::braiding(const PairVector& x) const {
  PairVector out;
  for (const auto& [ab, c] : x)
    for (const auto& [b2, s] : act(degree(ab.first), ab.second)) add_term(out, {b2, ab.first}, c * s);
  return out;
}

PairVector TensorAlgebra::braided_multiply(const PairVector& x, const PairVector& y) const {
  // (a (x) b)(c (x) d) = K (a (beta |> c)) (x) (b d)
  const Group& g = group();
  PairVector out;
  for (const auto& [ab, s1] : x) {
    const GroupElement alpha = degree(ab.first), beta = degree(ab.second);
    for (const auto& [cd, s2] : y) {
      const GroupElement gamma = degree(cd.first), delta = degree(cd.second);
      const GroupElement bgb = g.conjugate(beta, gamma);
      const CycScalar k = phi(beta, gamma, delta) * phi(alpha, bgb, g.mul(beta, delta)) /
                          (phi(alpha, beta, g.mul(gamma, delta)) * phi(bgb, beta, delta));
      const GradedVector left = multiply(single(ab.first), act(beta, cd.first));
      const GradedVector right = multiply(ab.second, cd.second);
      for (const auto& [l, a] : left)
        for (const auto& [r, b] : right) add_term(out, {l, r}, s1 * s2 * k * a * b);
    }
  }
  return out;
}

PairVector TensorAlgebra::coproduct(const Word& w) const {
  PairVector out;
  for (std::size_t i = 0; i <= w.size(); ++i) add_scaled(out, delta_component(w, i), CycScalar(1));
  return out;
}

PairVector TensorAlgebra::delta_component(const Word& w, std::size_t i) const {
  if (i > w.size()) throw std::invalid_argument("split exceeds word length");
  const Group& g = group();
  // comps[j] = Delta_{j, k-j}(w_1 ... w_k) for the current prefix length k
  std::vector<PairVector> comps(w.size() + 1);
  comps[0][{Word{}, Word{}}] = CycScalar(1);
  for (std::size_t k = 0; k < w.size(); ++k) {
    const Letter v = w[k];
    const GroupElement gamma = letter_degree(v);
    std::vector<PairVector> next(w.size() + 1);
    for (std::size_t j = 0; j <= k; ++j) {
      // only components that can still reach (i, n - i)
      const std::size_t remaining = w.size() - k;
      for (const auto& [lr, c] : comps[j]) {
        const GroupElement alpha = degree(lr.first), beta = degree(lr.second);
        if (j + 1 <= i && i <= j + remaining) {
          const CycScalar k1 = c * phi(alpha, g.conjugate(beta, gamma), beta) / phi(alpha, beta, gamma);
          for (const auto& [v2, a] : act_letter(beta, v)) {
            Word l = lr.first;
            l.push_back(v2);
            add_term(next[j + 1], {l, lr.second}, k1 * a);
          }
        }
        if (j <= i && i <= j + remaining - 1) {
          Word r = lr.second;
          r.push_back(v);
          add_term(next[j], {lr.first, r}, c / phi(alpha, beta, gamma));
        }
      }
    }
    comps = std::move(next);
  }
  return comps[i];
}

std::vector<TensorAlgebra::LastSplit> TensorAlgebra::delta_last(const Word& w) const {
  const Group& g = group();
  std::vector<LastSplit> terms;
  Word prefix;
  for (Letter v : w) {
    const GroupElement gamma = letter_degree(v);
    std::vector<LastSplit> next;
    for (const auto& t : terms) {
      // (L (x) r)(v (x) 1)
      const GroupElement alpha = degree(t.left), beta = letter_degree(t.right);
      const CycScalar k1 = t.coeff * phi(alpha, g.conjugate(beta, gamma), beta) / phi(alpha, beta, gamma);
      for (const auto& [v2, a] : act_letter(beta, v)) {
        Word l = t.left;
        l.push_back(v2);
        next.push_back({std::move(l), t.right, k1 * a});
      }
    }
    next.push_back({prefix, v, CycScalar(1)});
    prefix.push_back(v);
    // merge duplicates
    std::map<std::pair<Word, Letter>, CycScalar, std::less<>> merged;
    for (auto& t : next) {
      auto [it, ins] = merged.try_emplace({t.left, t.right}, t.coeff);
      if (!ins) it->second += t.coeff;
    }
    terms.clear();
    for (auto& [k, c] : merged)
      if (!c.is_zero()) terms.push_back({k.first, k.second, c});
  }
  return terms;
}

GradedVector TensorAlgebra::delta_1n(const Word& w) const {
  if (w.size() <= 1) return single(w);
  GradedVector out;
  for (const auto& t : delta_last(w)) {
    for (const auto& [u, c] : delta_1n(t.left)) {
      Word u2 = u;
      u2.push_back(t.right);
      add_term(out, u2, c * t.coeff);
    }
  }
  return out;
}

GradedVector TensorAlgebra::delta_1n(const GradedVector& x) const {
  GradedVector out;
  for (const auto& [w, c] : x) add_scaled(out, delta_1n(w), c);
  return out;
}

GradedVector TensorAlgebra::delta_1n_tree(const Word& w, const Tree& t) const {
  if (t.leaves() != w.size()) throw std::invalid_argument("bracketing and word differ in length");
  if (t.is_leaf()) return single(w);
  GradedVector out;
  for (const auto& [lr, c] : delta_component(w, t.left().leaves())) {
    const GradedVector left = delta_1n_tree(lr.first, t.left());
    const GradedVector right = delta_1n_tree(lr.second, t.right());
    add_scaled(out, multiply(left, right), c);
  }
  return out;
}

std::string TensorAlgebra::format(const Word& w) const {
  if (w.empty()) return "1";
  std::string s;
  for (std::size_t k = 0; k < w.size(); ++k) s += (k ? "*" : "") + v_.label(w[k]);
  return s;
}

namespace {

std::string coefficient_prefix(const CycScalar& c, bool first) {
  std::string text = c.to_string();
  const bool negative = c.is_rational() && c.coefficients()[0] < 0;
  if (c.is_one()) return first ? "" : " + ";
  if (c == CycScalar(-1)) return first ? "-" : " - ";
  if (negative) return (first ? "-" : " - ") + (-c).to_string() + "*";
  if (!c.is_rational()) text = "(" + text + ")";
  return (first ? "" : " + ") + text + "*";
}

}  // namespace

std::string TensorAlgebra::format(const GradedVector& x) const {
  if (x.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [w, c] : x) {
    s += coefficient_prefix(c, first) + format(w);
    first = false;
  }
  return s;
}

std::string TensorAlgebra::format(const PairVector& x) const {
  if (x.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [w, c] : x) {
    s += coefficient_prefix(c, first) + format(w.first) + "(x)" + format(w.second);
    first = false;
  }
  return s;
}

}  // namespace nichols
