#pragma once

#include <array>
#include <compare>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "nichols/cyclo.hpp"

namespace nichols {

/// Index of an element in a Group's Cayley table; 0 is always the identity.
struct GroupElement {
  int index = 0;
  friend auto operator<=>(const GroupElement&, const GroupElement&) = default;
};

/// Finite group carried by its Cayley table, optionally with an abelian
/// presentation Z_{m1} x ... x Z_{mn} (elements are then exponent vectors,
/// enumerated with the first factor varying fastest).
class Group {
public:
  static Group abelian(std::vector<int> orders, std::string symbol = "g");
  /// Validates the table (identity at index 0, latin square, associativity).
  static Group from_cayley(const std::vector<std::vector<int>>& table);

  int order() const noexcept { return order_; }
  GroupElement identity() const noexcept { return {0}; }
  std::vector<GroupElement> elements() const;

  GroupElement mul(GroupElement a, GroupElement b) const {
    return {cayley_[static_cast<std::size_t>(a.index * order_ + b.index)]};
  }
  GroupElement inverse(GroupElement a) const { return {inverse_[static_cast<std::size_t>(a.index)]}; }
  /// g x g^{-1}
  GroupElement conjugate(GroupElement g, GroupElement x) const { return mul(mul(g, x), inverse(g)); }
  GroupElement product(const std::vector<GroupElement>& xs) const;

  bool has_abelian_presentation() const noexcept { return !factor_orders_.empty(); }
  const std::vector<int>& factor_orders() const noexcept { return factor_orders_; }
  std::vector<int> exponents(GroupElement g) const;
  GroupElement from_exponents(const std::vector<int>& exps) const;
  /// i-th generator of the abelian presentation (0-based).
  GroupElement generator(std::size_t i) const;

  /// "1", "h1", "h1h2^3"; Cayley-only groups use "e<index>".
  std::string label(GroupElement g) const;
  /// Accepts labels, exponent lists "1,0,0" and "e3"/plain indices.
  std::optional<GroupElement> parse_element(std::string_view text) const;

  const std::string& symbol() const noexcept { return symbol_; }
  const std::vector<int>& cayley() const noexcept { return cayley_; }

  friend bool operator==(const Group& a, const Group& b) {
    return a.order_ == b.order_ && a.cayley_ == b.cayley_;
  }

private:
  Group() = default;
  void finish_tables();

  int order_ = 1;
  std::vector<int> cayley_{0};
  std::vector<int> inverse_{0};
  std::vector<int> factor_orders_;
  std::string symbol_ = "g";
};

/// Normalized 3-cochain Phi: G^3 -> nonzero cyclotomic numbers, stored densely.
class Cocycle3 {
public:
  static Cocycle3 trivial(std::shared_ptr<const Group> group);
  /// Phi(a, b, c) = (-1)^(c_1 b_2 a_3) on a 3-factor abelian presentation.
  static Cocycle3 sign3(std::shared_ptr<const Group> group);
  /// Rejects non-normalized tables and zero entries (ValidationError).
  static Cocycle3 from_table(std::shared_ptr<const Group> group, std::vector<CycScalar> table);

  const CycScalar& operator()(GroupElement a, GroupElement b, GroupElement c) const {
    return table_[index(a, b, c)];
  }

  const Group& group() const noexcept { return *group_; }
  const std::shared_ptr<const Group>& group_ptr() const noexcept { return group_; }
  const std::vector<CycScalar>& table() const noexcept { return table_; }
  const std::string& kind() const noexcept { return kind_; }

  /// Copy with one entry replaced; still required to be normalized and nonzero.
  Cocycle3 with_entry(GroupElement a, GroupElement b, GroupElement c, CycScalar value) const;

  friend bool operator==(const Cocycle3& a, const Cocycle3& b) {
    return *a.group_ == *b.group_ && a.table_ == b.table_;
  }

private:
  Cocycle3(std::shared_ptr<const Group> group, std::vector<CycScalar> table, std::string kind);
  std::size_t index(GroupElement a, GroupElement b, GroupElement c) const {
    const auto n = static_cast<std::size_t>(group_->order());
    return (static_cast<std::size_t>(a.index) * n + static_cast<std::size_t>(b.index)) * n +
           static_cast<std::size_t>(c.index);
  }

  std::shared_ptr<const Group> group_;
  std::vector<CycScalar> table_;
  std::string kind_;
};

struct CocycleReport {
  bool passed = true;
  bool normalized = true;
  std::size_t quadruples_checked = 0;
  /// First (a, b, c, d) violating Phi(b,c,d) Phi(a,bc,d) Phi(a,b,c) = Phi(a,b,cd) Phi(ab,c,d).
  std::optional<std::array<GroupElement, 4>> witness;
  std::string message;
};

CocycleReport check_3cocycle(const Cocycle3& phi);

/// Coefficient of g^{-1} in the preantipode of (kG, Phi): Phi(g, g^{-1}, g)^{-1}.
CycScalar preantipode_scalar(const Cocycle3& phi, GroupElement g);
/// alpha(g) = epsilon(g) = 1.
CycScalar antipode_alpha(const Cocycle3& phi, GroupElement g);
/// beta(g) = Phi(g, g^{-1}, g)^{-1}.
CycScalar antipode_beta(const Cocycle3& phi, GroupElement g);

}  // namespace nichols
