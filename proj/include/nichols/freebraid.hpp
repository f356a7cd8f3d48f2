#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "nichols/ydcat.hpp"

namespace nichols {

/// Index of a basis vector of V.
using Letter = std::uint16_t;
/// Letters of a left-nested tensor (((v1 (x) v2) (x) v3) ...); empty = unit.
using Word = std::vector<Letter>;

/// Length first, then lexicographic.
struct LengthLex {
  bool operator()(const Word& a, const Word& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  }
};

using GradedVector = std::map<Word, CycScalar, LengthLex>;

struct PairLess {
  bool operator()(const std::pair<Word, Word>& a, const std::pair<Word, Word>& b) const {
    LengthLex less;
    if (less(a.first, b.first)) return true;
    if (less(b.first, a.first)) return false;
    return less(a.second, b.second);
  }
};

/// Element of T(V) (x) T(V) on pairs of left-nested words.
using PairVector = std::map<std::pair<Word, Word>, CycScalar, PairLess>;

void add_term(GradedVector& x, const Word& w, const CycScalar& c);
void add_term(PairVector& x, const std::pair<Word, Word>& w, const CycScalar& c);
void add_scaled(GradedVector& acc, const GradedVector& x, const CycScalar& s);
void add_scaled(PairVector& acc, const PairVector& x, const CycScalar& s);
GradedVector single(const Word& w, CycScalar c = CycScalar(1));

/// Full binary tree describing a bracketing of n factors.
class Tree {
public:
  static Tree leaf();
  static Tree node(Tree left, Tree right);
  /// "x" is a leaf, "(AB)" a node: "((xx)x)".
  static Tree parse(std::string_view text);
  static Tree left_comb(std::size_t n);
  static Tree right_comb(std::size_t n);
  /// All bracketings of n >= 1 factors.
  static std::vector<Tree> all(std::size_t n);

  bool is_leaf() const noexcept { return !node_; }
  const Tree& left() const;
  const Tree& right() const;
  std::size_t leaves() const noexcept { return leaves_; }
  std::string to_string() const;

  friend bool operator==(const Tree& a, const Tree& b);

private:
  struct Node;
  std::shared_ptr<const Node> node_;
  std::size_t leaves_ = 1;
};

struct Tree::Node {
  Tree left;
  Tree right;
};

inline const Tree& Tree::left() const { return node_->left; }
inline const Tree& Tree::right() const { return node_->right; }

/// sigma with (element bracketed by t) = sigma * (same element left-nested),
/// for factors of the given degrees.
CycScalar left_nested_scalar(const Cocycle3& phi, const Tree& t, const std::vector<GroupElement>& degrees);
/// Scalar of the coherence isomorphism from one bracketing to another.
CycScalar rebracket_scalar(const Cocycle3& phi, const std::vector<GroupElement>& degrees, const Tree& from,
                           const Tree& to);

/// The braided tensor algebra T(V) of a Yetter-Drinfeld module V.
///
/// Letters carry an optional slot index, used for the Z^theta grading when V
/// is the direct sum of a tuple.
class TensorAlgebra {
public:
  explicit TensorAlgebra(YDModule v);
  explicit TensorAlgebra(const DirectSum& sum);

  const YDModule& module() const noexcept { return v_; }
  const Cocycle3& cocycle() const noexcept { return v_.cocycle(); }
  const Group& group() const noexcept { return v_.group(); }
  std::size_t letters() const noexcept { return v_.dim(); }
  std::size_t theta() const noexcept { return theta_; }
  std::size_t slot(Letter l) const { return slot_[l]; }
  GroupElement letter_degree(Letter l) const { return v_.degree(l); }
  GroupElement degree(const Word& w) const;

  /// Phi lookups through the precomputed table.
  const CycScalar& phi(GroupElement a, GroupElement b, GroupElement c) const { return cocycle()(a, b, c); }
  /// T(x, g, h), cached.
  const CycScalar& tensor_scalar(GroupElement x, GroupElement g, GroupElement h) const;

  /// Sparse column of g |> v_l.
  const std::vector<std::pair<Letter, CycScalar>>& act_letter(GroupElement g, Letter l) const {
    return letter_action_[static_cast<std::size_t>(g.index) * letters() + l];
  }
  GradedVector act(GroupElement g, const Word& w) const;
  GradedVector act(GroupElement g, const GradedVector& x) const;

  /// Scalar with u (x) w = merge_scalar(deg u, w) * (uw) for left-nested u, w.
  CycScalar merge_scalar(GroupElement left_degree, const Word& right) const;
  GradedVector multiply(const Word& u, const Word& w) const;
  GradedVector multiply(const GradedVector& x, const GradedVector& y) const;

  /// c(a (x) b) = (deg a |> b) (x) a
  PairVector braiding(const PairVector& x) const;
  /// Product of the braided algebra T(V) (x) T(V).
  PairVector braided_multiply(const PairVector& x, const PairVector& y) const;

  /// Delta(w), extended multiplicatively from Delta(v) = v (x) 1 + 1 (x) v.
  PairVector coproduct(const Word& w) const;
  /// The (i, n - i) component of Delta(w).
  PairVector delta_component(const Word& w, std::size_t i) const;

  struct LastSplit {
    Word left;
    Letter right;
    CycScalar coeff;
  };
  /// Delta_{n-1,1}(w) as a list of terms left (x) right.
  std::vector<LastSplit> delta_last(const Word& w) const;

  /// Delta_{1^n}(w) in V^{(x) n}, left-nested.
  GradedVector delta_1n(const Word& w) const;
  GradedVector delta_1n(const GradedVector& x) const;
  /// Delta_{1^n} computed by splitting along the given tree, then rebracketed.
  GradedVector delta_1n_tree(const Word& w, const Tree& t) const;

  std::string format(const Word& w) const;
  std::string format(const GradedVector& x) const;
  std::string format(const PairVector& x) const;

private:
  void build_tables();

  YDModule v_;
  std::vector<std::size_t> slot_;
  std::size_t theta_ = 1;
  std::vector<std::vector<std::pair<Letter, CycScalar>>> letter_action_;
  std::vector<CycScalar> tensor_scalar_;
};

}  // namespace nichols
