#pragma once

// Transversal intersections of smooth tropical hypersurfaces: points
// (n = m) and complete intersection curves (n = m - 1), their
// multiplicities, and checks of the counting formulas.

#include "tropcurve/subdivision.hpp"

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace tropcurve {

struct TransversalityFailure {
  std::vector<std::size_t> subset; // factor indices J
  std::vector<LatticePoint> cell;  // points of the offending cell of Subdiv_{U_J}
  int cell_dim = 0;
  std::vector<int> summand_dims;
  std::string reason;
};

struct TransversalityReport {
  bool transversal = true;
  std::vector<TransversalityFailure> failures;
};

class NotTransversalError : public std::runtime_error {
public:
  explicit NotTransversalError(TransversalityReport report)
      : std::runtime_error("intersection is not transversal"),
        report_(std::move(report)) {}
  const TransversalityReport &report() const { return report_; }

private:
  TransversalityReport report_;
};

/// n smooth hypersurfaces together with the mixed subdivision of their union.
struct Arrangement {
  std::vector<TropicalPolynomial> factors;
  MixedSubdivision union_subdiv;
  std::vector<std::optional<unsigned>> degrees;

  std::size_t ambient_dim() const { return factors.front().num_vars(); }
  /// All factors have a degree.
  std::optional<std::vector<unsigned>> all_degrees() const;
};

/// Validates smoothness of every factor (UsageError otherwise) and builds
/// the union subdivision.
std::shared_ptr<const Arrangement>
make_arrangement(const std::vector<TropicalPolynomial> &fs);

/// Tightness and properness along every cell for every subset J, |J| >= 2.
TransversalityReport check_transversality(const Arrangement &arr);
TransversalityReport check_transversality(const std::vector<TropicalPolynomial> &fs);

/// Checks the conditions of a single sub-arrangement (all factors of `ms`).
void check_subset(const MixedSubdivision &ms, const std::vector<std::size_t> &subset,
                  TransversalityReport &report);

struct CurveVertex {
  RatVec coords;
  Rat multiplicity;
  int dual_cell = -1;
};
struct CurveEdge {
  int from = -1, to = -1;
  int dual_cell = -1;
};
struct CurveRay {
  int vertex = -1;
  std::vector<Int> direction; // primitive
  int dual_cell = -1;
  int facet = -1; // facet of the union Newton polytope containing the dual
};

struct CurveStats {
  Rat weighted_vertices; // sum of m_P
  std::size_t vertex_count = 0;
  std::size_t bounded_edges = 0;
  std::size_t rays = 0;
  std::size_t components = 0;
  long genus = 0; // first Betti number
};

struct IntersectionCurve {
  std::shared_ptr<const Arrangement> arrangement;
  std::vector<CurveVertex> vertices;
  std::vector<CurveEdge> edges;
  std::vector<CurveRay> rays;
  std::vector<int> component; // per vertex
  CurveStats stats;

  std::size_t ambient_dim() const { return arrangement->ambient_dim(); }
  std::size_t factor_count() const { return arrangement->factors.size(); }
  bool smooth() const;
  bool connected() const { return stats.components == 1; }
  /// Number of edges and rays incident to each vertex.
  std::vector<int> valences() const;
};

IntersectionCurve extract_curve(std::shared_ptr<const Arrangement> arr);
IntersectionCurve extract_curve(const std::vector<TropicalPolynomial> &fs);

struct IntersectionPoint {
  RatVec coords;
  Rat multiplicity;
  int dual_cell = -1;
};

struct PointIntersection {
  std::shared_ptr<const Arrangement> arrangement;
  std::vector<IntersectionPoint> points;
  Rat total() const;
};

PointIntersection intersect_points(std::shared_ptr<const Arrangement> arr);
PointIntersection intersect_points(const std::vector<TropicalPolynomial> &fs);

struct Verification {
  bool passed = false;
  bool skipped = false;
  std::string detail;
  explicit operator bool() const { return passed; }
};

/// Sum of m_P equals d_1...d_n (d_1 + ... + d_n).
Verification verify_vertex_count(const IntersectionCurve &c,
                                 const std::vector<unsigned> &degrees);
/// x = (n+2) d_1...d_n with d_1...d_n rays through each facet; smooth only.
Verification verify_unbounded_edges(const IntersectionCurve &c,
                                    const std::vector<unsigned> &degrees);
long genus(const IntersectionCurve &c);
/// Betti-number genus against 2g-2 = v-x and the closed form; smooth and
/// connected only.
Verification verify_genus(const IntersectionCurve &c,
                          const std::vector<unsigned> &degrees);
/// sum over curve vertices of vol(P^dual) equals the alternating sum of
/// vol(Delta_J) over nonempty J.
Verification verify_volume_identity(const IntersectionCurve &c);
Verification verify_volume_identity(const std::vector<TropicalPolynomial> &fs);
/// Sum of m_P equals the mixed volume of the Newton polytopes.
Verification verify_bernstein(const PointIntersection &p);
/// Every vertex 3-valent, m_P in (1/2)Z_{>0}, e = (3v + x)/2 and vertex
/// duals of the form (n-1 primitive intervals) + primitive triangle.
Verification verify_structure(const IntersectionCurve &c);

/// Alternating sum over nonempty J of vol(sum_{i in J} Delta_i).
Rat alternating_volume_sum(const std::vector<Polytope> &polytopes);

struct CycleClassification {
  std::vector<int> internal;
  std::vector<int> external;
};

/// Vertices on the unique cycle of a genus-1 curve versus the rest.
CycleClassification classify_cycle_vertices(const IntersectionCurve &c);

/// Same on a bare graph: vertex count and bounded edges.
CycleClassification classify_cycle_vertices(std::size_t vertex_count,
                                            const std::vector<std::pair<int, int>> &edges);

/// No cell of any sub-arrangement witnesses a low-dimensional skeleton of
/// one part meeting another (which would force the summand dimensions of a
/// mixed cell to exceed m).
bool skeleton_disjointness_check(const std::vector<TropicalPolynomial> &fs);

} // namespace tropcurve
