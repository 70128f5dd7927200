#pragma once

// JSON, CSV and OBJ output for subdivisions, hypersurfaces, intersections
// and census runs.

#include "tropcurve/census.hpp"
#include "tropcurve/intersection.hpp"
#include "tropcurve/subdivision.hpp"

#include <json.hpp>

#include <string>

namespace tropcurve {

inline constexpr int kSchemaVersion = 1;

/// Integer-valued rationals become JSON integers, the rest "p/q" strings.
nlohmann::json rat_to_json(const Rat &r);
nlohmann::json ratvec_to_json(const RatVec &v);

TropicalPolynomial read_polynomial_file(const std::string &path);

nlohmann::json subdivision_json(const RegularSubdivision &s);
nlohmann::json dual_complex_json(const DualComplex &dc);
nlohmann::json transversality_json(const TransversalityReport &r);

struct NamedCheck {
  std::string name;
  Verification result;
};

/// Every applicable theorem check for a curve. Degree-based checks are
/// reported as skipped when some factor has no degree.
std::vector<NamedCheck> curve_checks(const IntersectionCurve &c);
std::vector<NamedCheck> point_checks(const PointIntersection &p);

/// {vertices:[{coords, mult}], edges:[[i,j]], rays:[{vertex, dir}],
///  stats:{v, x, genus, components, internal, external}, checks:[...]}
nlohmann::json curve_json(const IntersectionCurve &c);
nlohmann::json points_json(const PointIntersection &p);

nlohmann::json census_json(const CensusResult &r, const CensusConfig &config);
/// Columns m, attempts_until_found, f_coeffs, g_coeffs, seed; one row per
/// witness, coefficients space separated in the order of quadric_monomials().
std::string census_csv(const CensusResult &r);

/// Line meshes. Rays are truncated at ray_length lattice units along their
/// primitive direction. Points beyond R^3 are projected to the first three
/// coordinates; R^1 and R^2 are padded with zeros.
std::string curve_obj(const IntersectionCurve &c, const Rat &ray_length);
std::string dual_complex_obj(const DualComplex &dc, const Rat &ray_length);
std::string points_obj(const PointIntersection &p);

} // namespace tropcurve
