#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "nichols/nichols.hpp"

namespace nichols {

/// Basis element X # g of T(N) # kG (or of B(N) # kG after reduction).
using SmashKey = std::pair<Word, GroupElement>;

struct SmashKeyLess {
  bool operator()(const SmashKey& a, const SmashKey& b) const {
    LengthLex less;
    if (less(a.first, b.first)) return true;
    if (less(b.first, a.first)) return false;
    return a.second < b.second;
  }
};

using SmashElement = std::map<SmashKey, CycScalar, SmashKeyLess>;

struct SmashTensorLess {
  bool operator()(const std::vector<SmashKey>& a, const std::vector<SmashKey>& b) const {
    SmashKeyLess less;
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(), less);
  }
};

/// Element of (T(N) # kG)^{(x) n}, one key per tensor factor.
using SmashTensor = std::map<std::vector<SmashKey>, CycScalar, SmashTensorLess>;

void add_term(SmashElement& x, const SmashKey& k, const CycScalar& c);
void add_term(SmashTensor& x, const std::vector<SmashKey>& k, const CycScalar& c);

/// The bosonization T(N) # kG, optionally reduced to B(N) # kG through a
/// Nichols engine over the same tensor algebra.
class SmashAlgebra {
public:
  explicit SmashAlgebra(std::shared_ptr<const TensorAlgebra> t, std::shared_ptr<NicholsEngine> reduce = nullptr);

  const TensorAlgebra& algebra() const noexcept { return *t_; }
  const Group& group() const noexcept { return t_->group(); }

  static SmashElement element(const Word& w, GroupElement g, CycScalar c = CycScalar(1));
  SmashElement from_vector(const GradedVector& x, GroupElement g) const;

  /// (X # h)(Y # g) = ratio * X (h |> Y) # hg.
  SmashElement multiply(const SmashElement& x, const SmashElement& y) const;
  /// Delta(X # h) = sum Phi^{-1}(x1, x2, h) (X1 # x2 h) (x) (X2 # h).
  SmashTensor coproduct(const SmashElement& x) const;
  /// Applies Delta to factor k of every term.
  SmashTensor coproduct_at(const SmashTensor& x, std::size_t k) const;
  CycScalar counit(const SmashElement& x) const;

  /// Associator of T(N) # kG on basis elements: eps(X) eps(Y) eps(Z) Phi(h, g, k).
  CycScalar associator(const SmashKey& a, const SmashKey& b, const SmashKey& c) const;

  /// Both sides of quasi-associativity for basis elements,
  /// a1(b1 c1) Phi(a2, b2, c2) and Phi(a1, b1, c1) (a2 b2)c2, summed over coproducts.
  std::pair<SmashElement, SmashElement> quasi_associativity(const SmashKey& a, const SmashKey& b,
                                                            const SmashKey& c) const;

  /// beta(g) Phi(g x, g^{-1}, g) ((1 # g)(X # 1))(1 # g^{-1}) for homogeneous X of degree x.
  GradedVector ad_group_smash(GroupElement g, const GradedVector& x) const;

  std::string format(const SmashElement& x) const;

private:
  GradedVector reduce(const GradedVector& x) const;

  std::shared_ptr<const TensorAlgebra> t_;
  std::shared_ptr<NicholsEngine> engine_;
};

/// ad(g)(X) = g |> X.
GradedVector ad_group(const TensorAlgebra& t, GroupElement g, const GradedVector& x);

/// ad(v)(Y) = vY - (deg v |> Y) v for a letter v, in T(V).
GradedVector ad_letter(const TensorAlgebra& t, Letter v, const GradedVector& y);

/// ad(X)(Y) for X homogeneous of degree 1, reduced in the truncation.
/// Throws std::out_of_range past the truncation degree.
GradedVector ad_primitive(const NicholsTruncation& b, const GradedVector& x, const GradedVector& y);

/// One level ad(M_i)^n(M_j) inside B(M_i (+) M_j): a homogeneous basis of
/// normal forms and the Yetter-Drinfeld module it spans.
struct AdLevel {
  std::size_t n = 0;
  std::vector<GradedVector> basis;
  YDModule module;
};

struct AdModule {
  std::size_t i = 0;
  std::size_t j = 0;
  /// Ambient B(M_i (+) M_j); letters of M_i come first.
  std::shared_ptr<NicholsEngine> ambient;
  /// levels[n] = ad(M_i)^n(M_j), up to and including the first zero level.
  std::vector<AdLevel> levels;

  /// m_ij: index of the top non-zero level.
  std::size_t top() const;
};

/// Levels of ad(M_i)^n(M_j) for n = 0, 1, ... until one vanishes. Indices are
/// 0-based. Throws UndecidedError if level `cutoff` is still non-zero.
AdModule ad_power_module(const ModuleTuple& m, std::size_t i, std::size_t j, std::size_t cutoff = 8);

/// Generalized Cartan matrix, 0-based indices.
class CartanMatrix {
public:
  CartanMatrix() = default;
  explicit CartanMatrix(std::vector<std::vector<int>> a);

  std::size_t size() const noexcept { return a_.size(); }
  int operator()(std::size_t i, std::size_t j) const { return a_[i][j]; }
  const std::vector<std::vector<int>>& rows() const noexcept { return a_; }
  /// a_ii = 2, a_ij <= 0 off the diagonal, a_ij = 0 iff a_ji = 0.
  ValidationReport check() const;
  /// "[[2,-1],[-1,2]]"
  std::string to_string() const;

  friend bool operator==(const CartanMatrix&, const CartanMatrix&) = default;

private:
  std::vector<std::vector<int>> a_;
};

/// a_ii = 2, a_ij = -m_ij.
int cartan_entry(const ModuleTuple& m, std::size_t i, std::size_t j, std::size_t cutoff = 8);
/// All entries, computed in parallel.
CartanMatrix cartan_matrix(const ModuleTuple& m, std::size_t cutoff = 8);

/// R_i(M): entry i is M_i^*, entry j the top level ad(M_i)^{m_ij}(M_j).
ModuleTuple reflect(const ModuleTuple& m, std::size_t i, std::size_t cutoff = 8);

/// Bigraded dimensions of the subalgebra of B(M (+) N) generated by
/// L = ad B(N)(M), for total degree <= max_total. Keys are (deg in M, deg in N).
std::map<MultiDegree, std::size_t> adjoint_subalgebra_dims(const YDModule& m, const YDModule& n,
                                                           std::size_t max_total, std::size_t cutoff = 8);

}  // namespace nichols
