#pragma once

#include <map>
#include <memory>
#include <set>
#include <vector>

#include "nichols/freebraid.hpp"

namespace nichols {

/// Point of Z^theta (letter counts per slot).
using MultiDegree = std::vector<int>;

/// Degree-by-degree model of B(V) = T(V)/I(V).
///
/// For a word w of multidegree beta the map
///   w -> sum coeff * coord_{beta - e_s}(L) (x) e_r  over Delta_{n-1,1}(w) = sum L (x) r
/// has kernel I(V)_beta, because Delta_{1^n} = (Delta_{1^{n-1}} (x) id) Delta_{n-1,1}
/// and Delta_{1^{n-1}} is injective on B_{beta - e_s}. Coordinates of w in
/// B_beta are the pivot entries of its image.
///
/// Not thread-safe: caches are filled lazily.
class NicholsEngine {
public:
  explicit NicholsEngine(std::shared_ptr<const TensorAlgebra> t, std::size_t word_limit = 1'000'000);

  const TensorAlgebra& algebra() const noexcept { return *t_; }
  std::size_t theta() const noexcept { return t_->theta(); }
  MultiDegree multidegree(const Word& w) const;

  std::size_t dimension(const MultiDegree& beta);
  /// Coordinates of w in B_beta.
  const Vector& coordinates(const Word& w);
  /// x must be homogeneous for the Z^theta grading (zero is fine).
  Vector coordinates(const GradedVector& x);
  bool is_zero(const GradedVector& x);

  /// Basis of B_beta: the length-lex first words whose classes are independent.
  const std::vector<Word>& standard_words(const MultiDegree& beta);
  /// Unique combination of standard words congruent to x modulo I(V).
  GradedVector normal_form(const GradedVector& x);
  /// w - normal_form(w) for every non-standard word w of multidegree beta.
  std::vector<GradedVector> ideal_basis(const MultiDegree& beta);
  /// All words of multidegree beta in lexicographic order.
  std::vector<Word> words(const MultiDegree& beta) const;
  std::size_t word_count(const MultiDegree& beta) const;

  /// Element of B with the given coordinates in B_beta, as standard words.
  GradedVector from_coordinates(const MultiDegree& beta, const Vector& coords);

private:
  struct Block {
    std::vector<std::size_t> offsets;  // per letter, into the image space
    std::size_t image_dim = 0;
    std::vector<std::size_t> pivots;
    std::vector<Word> standard;
    Matrix standard_inverse;  // inverse of the coordinate matrix of `standard`
    std::map<Word, Vector, LengthLex> coords;
  };

  Block& block(const MultiDegree& beta);
  Vector image(Block& b, const MultiDegree& beta, const Word& w);

  std::shared_ptr<const TensorAlgebra> t_;
  std::size_t word_limit_;
  std::map<MultiDegree, std::unique_ptr<Block>> blocks_;
};

struct NicholsTruncation {
  std::size_t max_degree = 0;
  std::size_t theta = 1;
  /// dims[n] = dim B(V)_n
  std::vector<std::size_t> dims;
  std::vector<std::size_t> word_counts;
  std::vector<std::size_t> ideal_dims;
  /// Multigraded dimensions (all points with |beta| <= max_degree).
  std::map<MultiDegree, std::size_t> multi_dims;
  std::shared_ptr<NicholsEngine> engine;
};

/// Throws ResourceLimitError if a degree block has more than word_limit words.
NicholsTruncation nichols_truncate(const YDModule& v, std::size_t n_max, std::size_t word_limit = 1'000'000);
NicholsTruncation nichols_truncate(const ModuleTuple& m, std::size_t n_max, std::size_t word_limit = 1'000'000);

/// Multidegrees with nonzero quotient dimension.
std::set<MultiDegree> support(const NicholsTruncation& t);

/// Throws std::out_of_range if x has a term above the truncation degree.
GradedVector normal_form(const GradedVector& x, const NicholsTruncation& t);

/// Checks that Delta_{i,n-i} maps I_beta into I (x) T + T (x) I for every split.
ValidationReport coideal_check(NicholsEngine& engine, const MultiDegree& beta);

/// Dimension of the primitive elements of B_beta (kernel of all Delta_{i,n-i}, 0 < i < n).
std::size_t primitive_dimension(NicholsEngine& engine, const MultiDegree& beta);

/// All points of N^theta with total degree exactly n, in lexicographic order.
std::vector<MultiDegree> multidegrees_of_total(std::size_t theta, std::size_t n);

}  // namespace nichols
