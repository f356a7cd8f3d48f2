#pragma once

// Independent reference implementations used only by the tests.

#include <map>
#include <random>
#include <utility>
#include <vector>

#include "nichols/freebraid.hpp"
#include "nichols/linalg.hpp"

namespace oracle {

using namespace nichols;

/// Braid generator sigma_k (0-based, acting on factors k, k+1) on a
/// left-nested word: rebracket P (x) (a (x) b), braid, rebracket back.
inline GradedVector braid_generator(const TensorAlgebra& t, const Word& w, std::size_t k) {
  const Group& g = t.group();
  GroupElement p = g.identity();
  for (std::size_t i = 0; i < k; ++i) p = g.mul(p, t.letter_degree(w[i]));
  const GroupElement a = t.letter_degree(w[k]);
  const GroupElement b = t.letter_degree(w[k + 1]);
  const GroupElement aba = g.conjugate(a, b);
  const CycScalar scalar = t.phi(p, a, b).inverse() * t.phi(p, aba, a);
  GradedVector out;
  for (const auto& [b2, c] : t.act_letter(a, w[k + 1])) {
    Word u = w;
    u[k] = b2;
    u[k + 1] = w[k];
    add_term(out, u, scalar * c);
  }
  return out;
}

inline GradedVector braid_generator(const TensorAlgebra& t, const GradedVector& x, std::size_t k) {
  GradedVector out;
  for (const auto& [w, c] : x) add_scaled(out, braid_generator(t, w, k), c);
  return out;
}

/// Braided symmetrizer: sum over S_n of the Matsumoto lifts, built by
/// walking up the weak order so every permutation is reached along a
/// reduced word.
inline GradedVector shuffle_symmetrizer(const TensorAlgebra& t, const Word& w) {
  const std::size_t n = w.size();
  std::vector<int> id(n);
  for (std::size_t i = 0; i < n; ++i) id[i] = static_cast<int>(i);
  std::map<std::vector<int>, GradedVector> level{{id, single(w)}};
  GradedVector total = single(w);
  while (!level.empty()) {
    std::map<std::vector<int>, GradedVector> next;
    for (const auto& [perm, x] : level)
      for (std::size_t k = 0; k + 1 < n; ++k) {
        if (perm[k] > perm[k + 1]) continue;
        std::vector<int> p2 = perm;
        std::swap(p2[k], p2[k + 1]);
        if (next.count(p2)) continue;
        next[p2] = braid_generator(t, x, k);
      }
    for (const auto& [perm, x] : next) add_scaled(total, x, CycScalar(1));
    level = std::move(next);
  }
  return total;
}

inline GradedVector shuffle_symmetrizer(const TensorAlgebra& t, const GradedVector& x) {
  GradedVector out;
  for (const auto& [w, c] : x) add_scaled(out, shuffle_symmetrizer(t, w), c);
  return out;
}

/// All words with the given letter counts per slot.
inline std::vector<Word> words_of_multidegree(const TensorAlgebra& t, const std::vector<int>& beta) {
  std::vector<Word> out{{}};
  std::vector<std::vector<int>> counts{std::vector<int>(beta.size(), 0)};
  int n = 0;
  for (int b : beta) n += b;
  for (int step = 0; step < n; ++step) {
    std::vector<Word> next;
    std::vector<std::vector<int>> next_counts;
    for (std::size_t i = 0; i < out.size(); ++i)
      for (std::size_t l = 0; l < t.letters(); ++l) {
        const std::size_t s = t.slot(static_cast<Letter>(l));
        if (counts[i][s] >= beta[s]) continue;
        Word w = out[i];
        w.push_back(static_cast<Letter>(l));
        auto c = counts[i];
        ++c[s];
        next.push_back(std::move(w));
        next_counts.push_back(std::move(c));
      }
    out = std::move(next);
    counts = std::move(next_counts);
  }
  return out;
}

/// dim of T_beta / ker(symmetrizer), by brute force.
inline std::size_t brute_force_dimension(const TensorAlgebra& t, const std::vector<int>& beta) {
  const auto words = words_of_multidegree(t, beta);
  std::map<Word, std::size_t, LengthLex> index;
  for (const auto& w : words) index.emplace(w, index.size());
  std::vector<Vector> rows;
  for (const auto& w : words) {
    Vector row(words.size());
    for (const auto& [u, c] : shuffle_symmetrizer(t, w)) row[index.at(u)] = c;
    rows.push_back(std::move(row));
  }
  return rank(Matrix::from_rows(rows, words.size()));
}

/// One elementary associator move somewhere in the tree, with its scalar in
/// the sense (element in old bracketing) = scalar * (element in new bracketing)
/// read through the coherence isomorphism.
struct Move {
  Tree tree;
  CycScalar scalar;
};

inline GroupElement tree_degree(const Group& g, const std::vector<GroupElement>& d, std::size_t offset, const Tree& t) {
  GroupElement x = g.identity();
  for (std::size_t i = 0; i < t.leaves(); ++i) x = g.mul(x, d[offset + i]);
  return x;
}

inline std::vector<Move> moves(const Cocycle3& phi, const std::vector<GroupElement>& d, std::size_t offset,
                               const Tree& t) {
  std::vector<Move> out;
  if (t.is_leaf()) return out;
  const Group& g = phi.group();
  // ((A B) C) -> (A (B C)) multiplies by Phi(a, b, c)^{-1}
  if (!t.left().is_leaf()) {
    const Tree& a = t.left().left();
    const Tree& b = t.left().right();
    const Tree& c = t.right();
    const GroupElement da = tree_degree(g, d, offset, a);
    const GroupElement db = tree_degree(g, d, offset + a.leaves(), b);
    const GroupElement dc = tree_degree(g, d, offset + a.leaves() + b.leaves(), c);
    out.push_back({Tree::node(a, Tree::node(b, c)), phi(da, db, dc).inverse()});
  }
  if (!t.right().is_leaf()) {
    const Tree& a = t.left();
    const Tree& b = t.right().left();
    const Tree& c = t.right().right();
    const GroupElement da = tree_degree(g, d, offset, a);
    const GroupElement db = tree_degree(g, d, offset + a.leaves(), b);
    const GroupElement dc = tree_degree(g, d, offset + a.leaves() + b.leaves(), c);
    out.push_back({Tree::node(Tree::node(a, b), c), phi(da, db, dc)});
  }
  for (auto& m : moves(phi, d, offset, t.left())) out.push_back({Tree::node(m.tree, t.right()), m.scalar});
  for (auto& m : moves(phi, d, offset + t.left().leaves(), t.right()))
    out.push_back({Tree::node(t.left(), m.tree), m.scalar});
  return out;
}

/// Random walk of associator moves; returns the end tree and the composed scalar.
inline Move random_walk(const Cocycle3& phi, const std::vector<GroupElement>& d, const Tree& start, int steps,
                        std::mt19937& rng) {
  Move cur{start, CycScalar(1)};
  for (int s = 0; s < steps; ++s) {
    const auto options = moves(phi, d, 0, cur.tree);
    if (options.empty()) break;
    std::uniform_int_distribution<std::size_t> pick(0, options.size() - 1);
    const auto& m = options[pick(rng)];
    cur = {m.tree, cur.scalar * m.scalar};
  }
  return cur;
}

inline Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (!a(i, j).is_zero())
        for (std::size_t k = 0; k < b.rows(); ++k)
          for (std::size_t l = 0; l < b.cols(); ++l) out(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
  return out;
}

}  // namespace oracle
