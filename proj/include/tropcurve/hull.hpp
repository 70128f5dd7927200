#pragma once

// Exact face-lattice construction for integer point configurations.
//
// Facets are found by gift wrapping: starting from one facet, each ridge is
// rotated about until it meets the next point. Ridges are the facets of a
// facet, which are computed by recursing into the facet's own affine chart,
// so the whole face lattice falls out of the same recursion. Degenerate
// inputs (many points on one facet) are handled naturally since a face is
// identified by the set of ALL input points on its supporting hyperplane.

#include "tropcurve/exact.hpp"

#include <map>
#include <vector>

namespace tropcurve {

using IntVec = std::vector<Int>;

Int dot(const IntVec &a, const IntVec &b);
IntVec primitive(IntVec v);

/// Affine chart of a point subset: its dimension and a set of coordinates
/// onto which the affine hull projects injectively.
struct AffineChart {
  int dim = -1;
  std::vector<std::size_t> coords;
};

AffineChart affine_chart(const std::vector<IntVec> &points,
                         const std::vector<int> &subset);

/// Normalized lattice volume (dim! times the volume relative to the lattice
/// of the affine hull) of the simplex spanned by the given points, which
/// must be affinely independent.
Int normalized_simplex_volume(const std::vector<IntVec> &simplex);

struct FaceNode {
  std::vector<int> points;   // all input points on the face, sorted
  std::vector<int> vertices; // extreme points, sorted
  int dim = 0;
  std::vector<int> facets;   // node ids
  std::vector<IntVec> facet_normals; // outer normals, parallel to `facets`
};

/// A facet found by wrapping, with its outer normal in ambient coordinates
/// (zero outside the chart of the hull it came from).
struct WrappedFacet {
  std::vector<int> points;
  IntVec normal;
  Int offset;
};

class FaceLattice {
public:
  explicit FaceLattice(std::vector<IntVec> points);

  const std::vector<IntVec> &points() const { return points_; }
  const FaceNode &node(int id) const { return nodes_[static_cast<std::size_t>(id)]; }
  std::size_t size() const { return nodes_.size(); }

  /// Builds (memoized) the face lattice of conv(points[subset]); `subset`
  /// must be every input point lying on the face.
  int face(std::vector<int> subset);

  /// Facets of conv(points[subset]) with outer normals. In `upper_only`
  /// mode the subset must be full-dimensional and only facets whose normal
  /// has positive last coordinate are returned.
  std::vector<WrappedFacet> facets(const std::vector<int> &subset,
                                   bool upper_only = false);

  /// Node id for a given point set, or -1.
  int find(const std::vector<int> &subset) const;

  /// Pulling triangulation of a face; each simplex lists point indices.
  std::vector<std::vector<int>> triangulate(int id) const;

  /// Normalized lattice volume of a face (sum over a triangulation).
  Int normalized_volume(int id) const;

  /// Node ids of all faces of `id` (including itself).
  std::vector<int> subfaces(int id) const;

private:
  std::vector<WrappedFacet> wrap(const std::vector<int> &subset,
                                 const AffineChart &chart, bool upper_only);

  std::vector<IntVec> points_;
  std::vector<FaceNode> nodes_;
  std::map<std::vector<int>, int> memo_;
};

} // namespace tropcurve
