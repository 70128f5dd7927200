#pragma once

// Regular subdivisions induced by tropical polynomials, the dual tropical
// hypersurface, and mixed subdivisions of products.
//
// A cell of Subdiv(f) is the projection of an upper face of the lifted
// point set {(a, lambda_a)}. Cells are identified by the set of ALL support
// points on them, so coefficient ties are represented faithfully as
// non-simplicial cells instead of being perturbed away.

#include "tropcurve/exact.hpp"
#include "tropcurve/tropical.hpp"

#include <vector>

namespace tropcurve {

struct SubdivCell {
  std::vector<int> points;   // indices into RegularSubdivision::support()
  std::vector<int> vertices; // extreme points of the cell
  int dim = 0;
  std::vector<int> facets;          // cell ids
  std::vector<int> maximal_cells;   // maximal cells containing this one
  std::vector<int> boundary_facets; // facets of the Newton polytope containing it
  Int normalized_volume;            // dim! times the lattice volume
  bool on_boundary() const { return !boundary_facets.empty(); }
  /// Volume relative to the lattice of the cell's affine hull.
  Rat lattice_volume() const;
};

class RegularSubdivision {
public:
  RegularSubdivision(std::vector<LatticePoint> support, std::vector<Rat> heights);
  explicit RegularSubdivision(const TropicalPolynomial &f)
      : RegularSubdivision(f.support(), f.coefficients()) {}

  std::size_t ambient_dim() const { return ambient_dim_; }
  /// Dimension of the Newton polytope.
  int dim() const { return dim_; }
  const std::vector<LatticePoint> &support() const { return support_; }
  const std::vector<Rat> &heights() const { return heights_; }

  const std::vector<SubdivCell> &cells() const { return cells_; }
  const SubdivCell &cell(int id) const { return cells_[static_cast<std::size_t>(id)]; }
  std::vector<int> cells_of_dim(int k) const;
  std::vector<int> maximal_cells() const { return cells_of_dim(dim_); }
  int find_cell(const std::vector<int> &points) const;

  /// Facets of the Newton polytope: point sets and primitive outer normals.
  const std::vector<std::vector<int>> &polytope_facets() const { return polytope_facets_; }
  const std::vector<std::vector<Int>> &polytope_facet_normals() const {
    return polytope_facet_normals_;
  }

  /// For a maximal cell: the point x at which lambda_a + <a, x> is maximal
  /// exactly on the cell's points. Only unique for full-dimensional
  /// Newton polytopes; otherwise the representative with zeros outside the
  /// chart coordinates is returned.
  const RatVec &dual_point(int maximal_id) const;

  /// A functional (x, t) in R^m x R, t > 0, in the relative interior of the
  /// normal cone of the lifted cell: the sum of the normals (dual_point, 1)
  /// of incident maximal cells and (nu, 0) of incident polytope facets.
  RatVec normal_cone_point(int id) const;

private:
  std::size_t ambient_dim_ = 0;
  int dim_ = 0;
  std::vector<LatticePoint> support_;
  std::vector<Rat> heights_;
  std::vector<SubdivCell> cells_;
  std::vector<int> maximal_dual_index_; // cell id -> index into dual_points_
  std::vector<RatVec> dual_points_;
  std::vector<std::vector<int>> polytope_facets_;
  std::vector<std::vector<Int>> polytope_facet_normals_;
};

/// Lifted Newton polytope: the lifted points and the upper faces, given as
/// the cells of the subdivision they project to.
struct LiftedPolytope {
  TropicalPolynomial base;
  std::vector<RatVec> lifted_points;
  RegularSubdivision upper;
  std::size_t upper_facet_count() const { return upper.maximal_cells().size(); }
};

LiftedPolytope lift(const TropicalPolynomial &f);
RegularSubdivision subdivision_of(const TropicalPolynomial &f);

/// Every maximal cell is a simplex of normalized lattice volume 1 (volume
/// 1/m! for a full-dimensional Newton polytope).
bool is_smooth(const RegularSubdivision &s);
bool is_smooth(const TropicalPolynomial &f);

struct DualVertex {
  RatVec coords;
  int dual_cell = -1;
};
struct DualEdge {
  int from = -1, to = -1;
  int dual_cell = -1;
};
struct DualRay {
  int vertex = -1;
  std::vector<Int> direction; // primitive
  int dual_cell = -1;
};
struct CellDuality {
  int cell = -1;
  int dual_dim = 0;
  bool bounded = true;
};

/// V_tr(f) realized in dimensions 0 and 1, plus the dimension/boundedness
/// of the dual of every cell of Subdiv(f).
struct DualComplex {
  std::size_t ambient_dim = 0;
  RegularSubdivision subdivision;
  std::vector<DualVertex> vertices;
  std::vector<DualEdge> edges;
  std::vector<DualRay> rays;
  std::vector<CellDuality> duality;
};

/// Requires a full-dimensional Newton polytope.
DualComplex dual_complex(const TropicalPolynomial &f);

/// Solves lambda_a + <a, x> = lambda_b + <b, x> over the given support
/// points (an affinely spanning set); nullopt when no common solution.
std::optional<RatVec> solve_tie(const std::vector<LatticePoint> &points,
                                const std::vector<Rat> &heights);

struct Summand {
  std::vector<int> points; // indices into the factor's support()
  int dim = 0;
};

class MixedSubdivision {
public:
  explicit MixedSubdivision(std::vector<TropicalPolynomial> factors);

  const std::vector<TropicalPolynomial> &factors() const { return factors_; }
  const TropicalPolynomial &product() const { return product_; }
  const RegularSubdivision &subdivision() const { return subdivision_; }
  const std::vector<LatticePoint> &factor_support(std::size_t i) const {
    return factor_supports_[i];
  }

  /// Privileged representation of a cell: one summand per factor.
  const std::vector<Summand> &privileged(int cell) const {
    return privileged_[static_cast<std::size_t>(cell)];
  }
  bool is_mixed(int cell) const;
  std::vector<int> mixed_cells(int k) const;

private:
  std::vector<TropicalPolynomial> factors_;
  std::vector<std::vector<LatticePoint>> factor_supports_;
  TropicalPolynomial product_;
  RegularSubdivision subdivision_;
  std::vector<std::vector<Summand>> privileged_;
};

MixedSubdivision mixed_subdivision(const std::vector<TropicalPolynomial> &fs);

/// Affine dimension of a set of lattice points.
int affine_dim(const std::vector<LatticePoint> &points);

} // namespace tropcurve
