#pragma once

// Random search for pairs of smooth tropical quadric surfaces in R^3 whose
// intersection is a smooth elliptic curve, tabulated by the number of
// vertices on the cycle.

#include "tropcurve/intersection.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <vector>

namespace tropcurve {

/// Exponents of a quadric in R^3 in the order 1, x, y, z, x^2, xy, xz, y^2,
/// yz, z^2. Coefficient lists in census I/O use this order.
const std::vector<LatticePoint> &quadric_monomials();
TropicalPolynomial quadric_from_coeffs(const std::vector<Rat> &coeffs);
std::vector<Rat> quadric_coeffs(const TropicalPolynomial &f);

/// The pair of quadrics of the worked example with a 16-vertex cycle.
TropicalPolynomial paper_quadric_f();
TropicalPolynomial paper_quadric_g();

/// Integer uniform in [lo, hi] by rejection on raw 64-bit output, so the
/// stream of values depends only on the engine (unlike the standard
/// distributions, whose algorithms are implementation-defined).
std::int64_t uniform_int(std::mt19937_64 &rng, std::int64_t lo, std::int64_t hi);

/// Engine for attempt `index` of a census with the given seed.
std::mt19937_64 attempt_rng(std::uint64_t seed, std::uint64_t index);

struct QuadricDraw {
  TropicalPolynomial f;
  std::size_t rejected = 0; // non-smooth draws discarded before f
};

/// Full-support quadric with integer coefficients in [lo, hi], redrawn until
/// smooth. Throws UsageError after `max_resamples` failures.
QuadricDraw random_smooth_quadric(std::mt19937_64 &rng, std::int64_t lo = -15,
                                  std::int64_t hi = 15,
                                  std::size_t max_resamples = 10000);

struct CensusConfig {
  std::int64_t coeff_min = -15;
  std::int64_t coeff_max = 15;
  std::size_t max_attempts = 1000;
  std::uint64_t seed = 1;
  std::set<int> targets;               // empty: every m in [3, 16]
  bool include_paper_example = false;  // paper pair as attempt 0
  unsigned threads = 0;                // 0: TROPCURVE_THREADS or hardware
};

void validate(const CensusConfig &config);

struct CensusRecord {
  TropicalPolynomial f, g;
  int internal_count = 0;
  int external_count = 0;
  std::size_t v = 0, x = 0;
  long genus = 0;
  std::uint64_t seed = 0;
  std::uint64_t attempt = 0; // 0 is the built-in worked example when included
};

struct CensusRejections {
  std::size_t non_smooth_draws = 0;
  std::size_t non_transversal = 0;
  std::size_t non_smooth_curve = 0;
  std::size_t disconnected = 0;
};

struct CensusResult {
  std::map<int, std::size_t> histogram; // m -> number of accepted attempts
  std::map<int, CensusRecord> witnesses; // first witness per target m
  CensusRejections rejections;
  std::size_t attempts = 0;  // attempts evaluated
  std::size_t accepted = 0;
  bool all_targets_found = false;
};

/// Record from a pair, or nullopt with the rejection counted.
std::optional<CensusRecord> evaluate_pair(const TropicalPolynomial &f,
                                          const TropicalPolynomial &g,
                                          CensusRejections &rejections);

/// Deterministic for a fixed config regardless of the thread count: attempt
/// i uses its own stream attempt_rng(seed, i), and results are merged in
/// attempt order. The search stops after the first attempt at which every
/// target has a witness.
CensusResult run_census(const CensusConfig &config);

/// Builds the worked example and checks genus 1, 16 internal and 0 external
/// vertices; throws InvariantError otherwise.
CensusRecord reproduce_paper_example();

/// Re-runs the pipeline on a witness and compares its statistics.
bool reverify(const CensusRecord &r);

/// TROPCURVE_THREADS if set and positive, else hardware concurrency.
unsigned default_thread_count();

} // namespace tropcurve
