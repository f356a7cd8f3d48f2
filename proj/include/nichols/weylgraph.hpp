#pragma once

#include <set>
#include <string>
#include <vector>

#include "nichols/reflect.hpp"

namespace nichols {

struct GraphCutoffs {
  std::size_t ad_cutoff = 8;
  std::size_t vertex_bound = 64;
};

/// Semi-Cartan graph of a tuple: vertices are iso-classes of tuples reached
/// by reflections, with reflection maps and per-vertex Cartan matrices.
/// Indices are 0-based.
struct SemiCartanGraph {
  struct Vertex {
    ModuleTuple tuple;  // representative
    std::string key;    // cheap invariants; equal for isomorphic tuples
    CartanMatrix cartan;
  };

  std::size_t theta = 0;
  std::vector<Vertex> vertices;
  /// r[x][i] = r_i(x)
  std::vector<std::vector<std::size_t>> r;

  std::size_t size() const noexcept { return vertices.size(); }
};

/// Iso-invariant key of a tuple: per entry, sorted degrees and sorted action traces.
std::string tuple_key(const ModuleTuple& m);

/// BFS over reflections from m (vertex 0). Throws UndecidedError from ad
/// cutoffs and ResourceLimitError past the vertex bound.
SemiCartanGraph build_cartan_graph(const ModuleTuple& m, const GraphCutoffs& cutoffs = {});

/// CG1 (r_i^2 = id), CG2 (A^X, A^{r_i(X)} share row i) and the Cartan matrix conditions.
ValidationReport check_axioms(const SemiCartanGraph& g);

using IntMatrix = std::vector<std::vector<int>>;

/// Morphism (target, f, source) of the Weyl groupoid; f acts on Z^theta in the
/// basis alpha_1, ..., alpha_theta (column j = f(alpha_j)).
struct GroupoidMorphism {
  std::size_t source = 0;
  std::size_t target = 0;
  IntMatrix f;

  /// (r_i(x), s_i^x, x) with s_i^x(alpha_j) = alpha_j - a_ij^x alpha_i.
  static GroupoidMorphism generator(const SemiCartanGraph& g, std::size_t i, std::size_t x);
  static GroupoidMorphism identity(std::size_t theta, std::size_t x);
  /// (Z, g f, X) from g = (Z, g, Y) and f = (Y, f, X).
  friend GroupoidMorphism compose(const GroupoidMorphism& g, const GroupoidMorphism& f);
  std::vector<int> apply(const std::vector<int>& v) const;
  bool is_identity() const;
};

struct RootSet {
  std::set<std::vector<int>> roots;
  /// Set when some root had a coordinate of absolute value above the bound.
  bool truncated = false;
};

/// Real roots at vertex x: images of the simple roots under morphisms into x.
RootSet real_roots(const SemiCartanGraph& g, std::size_t x, int bound = 50);

struct Finiteness {
  /// True only if every vertex's root set closed within the bound.
  bool finite = false;
  std::vector<std::size_t> roots_per_vertex;
  std::vector<bool> truncated;
};

Finiteness is_finite(const SemiCartanGraph& g, int bound = 50);

bool is_standard(const SemiCartanGraph& g);

struct CartanType {
  bool finite = false;
  /// Dynkin components like "A2", "D4", sorted; empty if not finite type.
  std::vector<std::string> components;

  std::string to_string() const;
};

CartanType finite_cartan_type(const CartanMatrix& a);

struct Certificate {
  enum class Verdict { InfiniteDimensional, NoConclusion };
  Verdict verdict = Verdict::NoConclusion;
  SemiCartanGraph graph;
  bool standard = false;
  CartanType type;

  std::string report() const;
};

/// Applies: dim B(M) finite and G(M) standard imply A^M is of finite type.
Certificate infinite_dim_certificate(const ModuleTuple& m, const GraphCutoffs& cutoffs = {});

/// Graphviz text; vertices show entry degrees and the Cartan matrix, edges the reflection index.
std::string to_dot(const SemiCartanGraph& g);

}  // namespace nichols
