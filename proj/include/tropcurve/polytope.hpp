#pragma once

// Convex polytopes with exact face lattices, Minkowski sums and volumes.

#include "tropcurve/exact.hpp"

#include <vector>

namespace tropcurve {

struct Face {
  std::vector<std::size_t> vertex_indices; // into Polytope::vertices(), sorted
  int dim = 0;
  /// Primitive integer outer normal. Facets carry their facet normal, lower
  /// faces the sum of the normals of the facets containing them. The
  /// polytope itself (as its own top face) carries the zero vector.
  std::vector<Int> outer_normal;
};

class Polytope {
public:
  std::size_t ambient_dim() const { return ambient_dim_; }
  int dim() const { return dim_; }
  const std::vector<RatVec> &vertices() const { return vertices_; }
  /// All nonempty faces, ordered by dimension then vertex set.
  const std::vector<Face> &faces() const { return faces_; }
  std::vector<Face> faces_of_dim(int k) const;
  std::vector<Face> facets() const { return faces_of_dim(dim_ - 1); }

  /// Euclidean volume in the ambient space; zero unless full-dimensional.
  const Rat &volume() const { return volume_; }
  /// Volume relative to the lattice of the affine hull (for lattice
  /// polytopes); a primitive k-simplex has lattice volume 1/k!.
  const Rat &lattice_volume() const;
  bool is_lattice() const { return lattice_; }
  bool full_dimensional() const {
    return static_cast<std::size_t>(dim_) == ambient_dim_;
  }

  bool contains_vertex(const RatVec &p) const;

private:
  friend Polytope convex_hull(const std::vector<RatVec> &points);

  std::size_t ambient_dim_ = 0;
  int dim_ = 0;
  std::vector<RatVec> vertices_;
  std::vector<Face> faces_;
  Rat volume_;
  Rat lattice_volume_;
  bool lattice_ = false;
};

Polytope convex_hull(const std::vector<RatVec> &points);
Polytope convex_hull(const std::vector<LatticePoint> &points);

/// Gamma_d^m = conv{0, d e_1, ..., d e_m}.
Polytope standard_simplex(unsigned d, std::size_t m);

Polytope minkowski_sum(const Polytope &p, const Polytope &q);

/// conv(P u Q), the additive operation of the polytope semiring.
Polytope convex_union(const Polytope &p, const Polytope &q);

/// Polytope scaled by a nonnegative integer factor.
Polytope dilate(const Polytope &p, unsigned k);

inline const Rat &volume(const Polytope &p) { return p.volume(); }

/// Mixed volume of m polytopes in R^m by inclusion-exclusion over the
/// volumes of all partial Minkowski sums.
Rat mixed_volume(const std::vector<Polytope> &polytopes);

/// The face of P on which <w, .> is maximal.
Face face_in_direction(const Polytope &p, const RatVec &w);

/// Vertex sets equal as point sets (order-insensitive).
bool same_vertices(const Polytope &p, const Polytope &q);

} // namespace tropcurve
