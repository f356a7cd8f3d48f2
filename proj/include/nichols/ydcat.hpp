#pragma once

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "nichols/errors.hpp"
#include "nichols/group.hpp"
#include "nichols/linalg.hpp"

namespace nichols {

using CocyclePtr = std::shared_ptr<const Cocycle3>;

/// Finite-dimensional object of the twisted Yetter-Drinfeld category over
/// (kG, Phi), given on a homogeneous basis.
///
/// action(g) is the matrix of v -> g |> v; column j holds the image of basis
/// vector j.
class YDModule {
public:
  YDModule() = default;
  /// No validation; see yd_axiom_check.
  YDModule(CocyclePtr phi, std::vector<GroupElement> degrees, std::vector<Matrix> action,
           std::vector<std::string> labels = {}, std::string name = {});

  /// Closes the given generator actions to all of G using the twisted
  /// composition rule, then validates. Throws ValidationError.
  static YDModule from_generators(CocyclePtr phi, std::vector<GroupElement> degrees,
                                  const std::vector<std::pair<GroupElement, Matrix>>& generators,
                                  std::vector<std::string> labels = {}, std::string name = {});
  /// One-dimensional, degree 1, trivial action (the unit object).
  static YDModule unit(CocyclePtr phi);

  std::size_t dim() const noexcept { return degrees_.size(); }
  GroupElement degree(std::size_t i) const { return degrees_[i]; }
  const std::vector<GroupElement>& degrees() const noexcept { return degrees_; }
  const Matrix& action(GroupElement g) const { return action_[static_cast<std::size_t>(g.index)]; }
  const std::vector<Matrix>& actions() const noexcept { return action_; }
  const std::string& label(std::size_t i) const { return labels_[i]; }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  const std::string& name() const noexcept { return name_; }
  void set_name(std::string name) { name_ = std::move(name); }
  void set_labels(std::vector<std::string> labels);

  const Cocycle3& cocycle() const noexcept { return *phi_; }
  const CocyclePtr& cocycle_ptr() const noexcept { return phi_; }
  const Group& group() const noexcept { return phi_->group(); }

  /// Degree shared by all basis vectors, if any.
  std::optional<GroupElement> homogeneous_degree() const;

private:
  CocyclePtr phi_;
  std::vector<GroupElement> degrees_;
  std::vector<Matrix> action_;
  std::vector<std::string> labels_;
  std::string name_;
};

bool same_cocycle(const CocyclePtr& a, const CocyclePtr& b);

/// Ordered tuple (M_1, ..., M_theta) over a common (G, Phi).
struct ModuleTuple {
  std::vector<YDModule> entries;
  std::string name;

  std::size_t theta() const noexcept { return entries.size(); }
  const YDModule& operator[](std::size_t i) const { return entries[i]; }
};

/// Direct sum of a tuple with bookkeeping: basis vector k belongs to slot[k]
/// and is local index k - offset[slot[k]] there.
struct DirectSum {
  YDModule module;
  std::vector<std::size_t> slot;
  std::vector<std::size_t> offset;
};

DirectSum direct_sum(const std::vector<YDModule>& parts);

/// F_g(e, f) with e |> (f |> v) = F_g(e, f) (ef) |> v for v of degree g.
CycScalar action_twist(const Cocycle3& phi, GroupElement e, GroupElement f, GroupElement g);

/// T(x, g, h) with x |> (m (x) n) = T(x, g, h) (x |> m) (x) (x |> n) for deg m = g, deg n = h.
CycScalar tensor_action_scalar(const Cocycle3& phi, GroupElement x, GroupElement g, GroupElement h);

/// Phi(e, f, g)^{-1}, the scalar of (u (x) v) (x) w -> u (x) (v (x) w).
CycScalar associator_scalar(const Cocycle3& phi, GroupElement e, GroupElement f, GroupElement g);

/// Exhaustive check of unit law, degree compatibility and twisted composition.
ValidationReport yd_axiom_check(const YDModule& v);

/// Basis of V (x) W is v_i (x) w_j at index i * dim W + j.
YDModule tensor(const YDModule& v, const YDModule& w);

/// Matrix of c: V (x) W -> W (x) V, c(u (x) v) = (deg u |> v) (x) u.
Matrix braiding(const YDModule& v, const YDModule& w);

/// Diagonal matrix of the associator (U (x) V) (x) W -> U (x) (V (x) W).
Matrix associator_matrix(const YDModule& u, const YDModule& v, const YDModule& w);

/// Left dual on the dual basis, deg(v_i^*) = deg(v_i)^{-1}. Throws ValidationError
/// if the result fails yd_axiom_check.
YDModule dual(const YDModule& v);

/// Dimension of the space of degree-preserving G-linear maps V -> W.
std::size_t hom_dimension(const YDModule& v, const YDModule& w);

/// An invertible intertwiner T (T rho_V(g) = rho_W(g) T, degree preserving), or nullopt.
std::optional<Matrix> iso_test(const YDModule& v, const YDModule& w);

bool is_isomorphic(const YDModule& v, const YDModule& w);

/// Entrywise isomorphism of tuples of equal length.
bool tuples_isomorphic(const ModuleTuple& a, const ModuleTuple& b);

}  // namespace nichols
