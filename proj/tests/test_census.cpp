#include "support.hpp"

#include <doctest.h>

using namespace testing;

TEST_CASE("bounded uniform integers") {
  std::mt19937_64 a(5), b(5);
  std::set<std::int64_t> seen;
  for (int i = 0; i < 2000; ++i) {
    const auto x = uniform_int(a, -3, 4);
    CHECK(x == uniform_int(b, -3, 4));
    CHECK(x >= -3);
    CHECK(x <= 4);
    seen.insert(x);
  }
  CHECK(seen.size() == 8);
  CHECK(uniform_int(a, 7, 7) == 7);
  CHECK_THROWS_AS(uniform_int(a, 2, 1), UsageError);
}

TEST_CASE("quadric coefficient order") {
  CHECK(quadric_monomials().size() == 10);
  const auto mons = quadric_monomials();
  const auto pts = simplex_lattice_points(2, 3);
  CHECK(std::set<LatticePoint>(mons.begin(), mons.end()) ==
        std::set<LatticePoint>(pts.begin(), pts.end()));
  CHECK(quadric_coeffs(paper_quadric_f()) == rats({-6, 13, -3, -4, 10, 2, 4, -9, 5, -9}));
  CHECK(quadric_coeffs(paper_quadric_g()) == rats({-15, -10, -4, 2, -7, -2, 0, 2, 15, -1}));
  CHECK_THROWS_AS(quadric_from_coeffs(rats({1, 2})), UsageError);
  CHECK(is_smooth(paper_quadric_f()));
  CHECK(degree_of(paper_quadric_g()) == 2u);
}

TEST_CASE("random smooth quadrics") {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    auto rng = attempt_rng(seed, 0);
    const auto q = random_smooth_quadric(rng);
    CHECK(q.f.size() == 10);
    CHECK(q.f.support() == simplex_lattice_points(2, 3));
    const auto s = subdivision_of(q.f);
    CHECK(s.maximal_cells().size() == 8);
    CHECK(is_smooth(s));
    for (const auto &c : q.f.coefficients()) {
      CHECK(c >= -15);
      CHECK(c <= 15);
    }
  }
  auto rng = attempt_rng(1, 1);
  CHECK_THROWS_AS(random_smooth_quadric(rng, 0, 0, 5), UsageError);
}

TEST_CASE("worked example reproduces") {
  const auto r = reproduce_paper_example();
  CHECK(r.internal_count == 16);
  CHECK(r.external_count == 0);
  CHECK(r.genus == 1);
  CHECK(r.v == 16);
  CHECK(r.x == 16);
  CHECK(reverify(r));
}

TEST_CASE("census with the worked example injected") {
  CensusConfig c;
  c.include_paper_example = true;
  c.targets = {16};
  c.max_attempts = 0;
  c.threads = 1;
  const auto r = run_census(c);
  REQUIRE(r.witnesses.contains(16));
  CHECK(r.witnesses.at(16).attempt == 0);
  CHECK(r.witnesses.at(16).f == paper_quadric_f());
  CHECK(r.all_targets_found);
}

TEST_CASE("census with no attempts is empty") {
  CensusConfig c;
  c.targets = {3};
  c.max_attempts = 0;
  const auto r = run_census(c);
  CHECK(r.histogram.empty());
  CHECK(r.witnesses.empty());
  CHECK(r.attempts == 0);
}

TEST_CASE("census is deterministic and independent of thread count") {
  CensusConfig c;
  c.seed = 7;
  c.max_attempts = 40;
  c.threads = 1;
  const auto a = run_census(c);
  c.threads = 3;
  const auto b = run_census(c);
  CHECK(a.histogram == b.histogram);
  CHECK(a.attempts == b.attempts);
  CHECK(a.rejections.non_transversal == b.rejections.non_transversal);
  CHECK(a.rejections.non_smooth_draws == b.rejections.non_smooth_draws);
  REQUIRE(a.witnesses.size() == b.witnesses.size());
  for (const auto &[m, w] : a.witnesses) {
    CHECK(b.witnesses.at(m).f == w.f);
    CHECK(b.witnesses.at(m).g == w.g);
    CHECK(b.witnesses.at(m).attempt == w.attempt);
    CHECK(reverify(w));
    CHECK(m >= 3);
    CHECK(m <= 16);
  }
  std::size_t accepted = 0;
  for (const auto &[m, n] : a.histogram)
    accepted += n;
  CHECK(accepted == a.accepted);
  CHECK(a.accepted + a.rejections.non_transversal + a.rejections.non_smooth_curve +
            a.rejections.disconnected ==
        a.attempts);
}

TEST_CASE("census stops once every target is found") {
  CensusConfig c;
  c.seed = 7;
  c.max_attempts = 40;
  c.threads = 2;
  const auto full = run_census(c);
  REQUIRE_FALSE(full.witnesses.empty());
  const auto first = full.witnesses.begin();
  c.targets = {first->first};
  const auto r = run_census(c);
  CHECK(r.all_targets_found);
  CHECK(r.attempts == first->second.attempt);
}

TEST_CASE("census configuration is validated") {
  CensusConfig c;
  c.coeff_min = 3;
  c.coeff_max = 2;
  CHECK_THROWS_AS(run_census(c), UsageError);
  c = CensusConfig{};
  c.targets = {2};
  CHECK_THROWS_AS(run_census(c), UsageError);
}
