#include "support.hpp"

#include <doctest.h>

using namespace testing;

namespace {

TropicalPolynomial line2() { return TropicalPolynomial(2, {{{0, 0}, 0}, {{1, 0}, 0}, {{0, 1}, 0}}); }

TropicalPolynomial random_sparse(std::mt19937_64 &rng, std::size_t m, std::size_t terms) {
  TropicalPolynomial::Terms t;
  while (t.size() < terms) {
    LatticePoint a;
    for (std::size_t i = 0; i < m; ++i)
      a.push_back(draw(rng, -2, 3));
    t.emplace(a, Rat(static_cast<long>(draw(rng, -20, 20)), static_cast<long>(draw(rng, 1, 4))));
  }
  for (auto &[a, c] : t)
    c.canonicalize();
  return TropicalPolynomial(m, std::move(t));
}

RatVec random_point(std::mt19937_64 &rng, std::size_t m) {
  RatVec x;
  for (std::size_t i = 0; i < m; ++i) {
    x.emplace_back(static_cast<long>(draw(rng, -30, 30)), static_cast<long>(draw(rng, 1, 6)));
    x.back().canonicalize();
  }
  return x;
}

} // namespace

TEST_CASE("evaluate reports the full argmax") {
  const auto r = evaluate(line2(), rv({0, 0}));
  CHECK(r.value == 0);
  CHECK(r.argmax == std::vector<LatticePoint>{{0, 0}, {0, 1}, {1, 0}});
  const auto s = evaluate(line2(), rv({2, 1}));
  CHECK(s.value == 2);
  CHECK(s.argmax == std::vector<LatticePoint>{{1, 0}});
  CHECK_THROWS_AS(evaluate(line2(), rv({1, 2, 3})), UsageError);
}

TEST_CASE("evaluate on the worked quadric matches brute force") {
  const auto f = paper_quadric_f();
  const auto x = rv({100, 0, 0});
  const auto r = evaluate(f, x);
  const auto b = brute_eval(f, x);
  CHECK(r.value == b.value);
  // far along the x axis the x^2 term dominates
  CHECK(r.value == 10 + 200);
  CHECK(r.argmax == std::vector<LatticePoint>{{2, 0, 0}});
  CHECK(std::set<LatticePoint>(r.argmax.begin(), r.argmax.end()) == b.argmax);
  // inside the region of the x term: 13 + x beats 10 + 2x and the constant
  const auto y = evaluate(f, rv({2, 0, 0}));
  CHECK(y.value == 15);
  CHECK(y.argmax == std::vector<LatticePoint>{{1, 0, 0}});
  CHECK(brute_eval(f, rv({2, 0, 0})).argmax == std::set<LatticePoint>{{1, 0, 0}});
}

TEST_CASE("evaluate agrees with brute force on random input") {
  std::mt19937_64 rng(41);
  for (int t = 0; t < 200; ++t) {
    const std::size_t m = 1 + static_cast<std::size_t>(t % 3);
    const auto f = random_sparse(rng, m, 1 + static_cast<std::size_t>(t % 6));
    const auto x = random_point(rng, m);
    const auto r = evaluate(f, x);
    const auto b = brute_eval(f, x);
    CHECK(r.value == b.value);
    CHECK(std::set<LatticePoint>(r.argmax.begin(), r.argmax.end()) == b.argmax);
  }
}

TEST_CASE("tropical product") {
  const TropicalPolynomial a(1, {{{0}, 0}, {{1}, 0}});
  CHECK(tropical_product(a, a) == TropicalPolynomial(1, {{{0}, 0}, {{1}, 0}, {{2}, 0}}));
  const auto fg = tropical_product(paper_quadric_f(), paper_quadric_g());
  CHECK(degree_of(fg) == 4u);
  std::mt19937_64 rng(43);
  for (int t = 0; t < 100; ++t) {
    const auto x = random_point(rng, 3);
    CHECK(evaluate(fg, x).value ==
          evaluate(paper_quadric_f(), x).value + evaluate(paper_quadric_g(), x).value);
  }
  CHECK_THROWS_AS(tropical_product(a, line2()), UsageError);
}

TEST_CASE("tropical product is associative and commutative") {
  std::mt19937_64 rng(47);
  for (int t = 0; t < 20; ++t) {
    const auto f = random_sparse(rng, 2, 3), g = random_sparse(rng, 2, 4), h = random_sparse(rng, 2, 2);
    CHECK(tropical_product(f, g) == tropical_product(g, f));
    CHECK(tropical_product(tropical_product(f, g), h) == tropical_product(f, tropical_product(g, h)));
    CHECK(same_vertices(newton_polytope(tropical_product(f, g)),
                        minkowski_sum(newton_polytope(f), newton_polytope(g))));
  }
}

TEST_CASE("evaluation is convex") {
  std::mt19937_64 rng(53);
  for (int t = 0; t < 100; ++t) {
    const auto f = random_sparse(rng, 2, 5);
    const auto x = random_point(rng, 2), y = random_point(rng, 2);
    Rat s(static_cast<long>(draw(rng, 0, 10)), 10);
    s.canonicalize();
    const RatVec z = add(scale(x, s), scale(y, 1 - s));
    CHECK(evaluate(f, z).value <= s * evaluate(f, x).value + (1 - s) * evaluate(f, y).value);
  }
}

TEST_CASE("newton polytopes") {
  CHECK(same_vertices(newton_polytope(paper_quadric_f()), standard_simplex(2, 3)));
  CHECK(newton_polytope(TropicalPolynomial(2, {{{3, 1}, 5}})).vertices().size() == 1);
  CHECK(same_vertices(newton_polytope(line2()), standard_simplex(1, 2)));
}

TEST_CASE("degree detection") {
  CHECK(degree_of(paper_quadric_g()) == 2u);
  CHECK_FALSE(degree_of(TropicalPolynomial(2, {{{1, 1}, 0}})));
  CHECK(degree_of(TropicalPolynomial(2, {{{0, 0}, 0}})) == 0u);
  CHECK_FALSE(degree_of(TropicalPolynomial(2, {{{0, 0}, 0}, {{1, 0}, 0}, {{0, 2}, 0}})));
  // translated simplex is not Gamma_d
  CHECK_FALSE(degree_of(TropicalPolynomial(2, {{{1, 1}, 0}, {{2, 1}, 0}, {{1, 2}, 0}})));
  CHECK_FALSE(degree_of(TropicalPolynomial(2, {{{0, 0}, 0}, {{1, 0}, 0}, {{0, 1}, 0}, {{-1, 0}, 0}})));
}

TEST_CASE("dominated terms are kept") {
  const TropicalPolynomial f(1, {{{0}, 0}, {{1}, -10}, {{2}, 0}});
  CHECK(f.size() == 3);
  CHECK(subdivision_of(f).maximal_cells().size() == 1);
}

TEST_CASE("polynomial JSON round trip and validation") {
  const auto f = paper_quadric_f();
  CHECK(polynomial_from_json(to_json(f)) == f);
  const auto j = nlohmann::json::parse(
      R"({"vars": 2, "terms": [{"exp": [0, 0], "coeff": "1/2"}, {"exp": [-1, 3], "coeff": 4}]})");
  const auto g = polynomial_from_json(j);
  CHECK(g.terms().at({0, 0}) == Rat(1, 2));
  CHECK(g.terms().at({-1, 3}) == 4);
  auto bad = [](const char *s) { return polynomial_from_json(nlohmann::json::parse(s)); };
  CHECK_THROWS_AS(bad(R"({"terms": []})"), UsageError);
  CHECK_THROWS_AS(bad(R"({"vars": 0, "terms": [{"exp": [], "coeff": 1}]})"), UsageError);
  CHECK_THROWS_AS(bad(R"({"vars": 1, "terms": []})"), UsageError);
  CHECK_THROWS_AS(bad(R"({"vars": 2, "terms": [{"exp": [0], "coeff": 1}]})"), UsageError);
  CHECK_THROWS_AS(bad(R"({"vars": 1, "terms": [{"exp": [0], "coeff": 1}, {"exp": [0], "coeff": 2}]})"),
                  UsageError);
  CHECK_THROWS_AS(bad(R"({"vars": 1, "terms": [{"exp": [0], "coeff": 1.5}]})"), UsageError);
  CHECK_THROWS_AS(bad(R"({"vars": 1, "terms": [{"exp": [0.5], "coeff": 1}]})"), UsageError);
  CHECK_THROWS_AS(bad(R"([1, 2])"), UsageError);
}

TEST_CASE("coefficients are stored in canonical form") {
  const TropicalPolynomial f(2, {{{0, 0}, Rat(4, 2)}, {{1, 0}, Rat(-3, 6)}, {{0, 1}, 0}});
  CHECK(f.terms().at({0, 0}).get_den() == 1);
  CHECK(f.terms().at({1, 0}) == Rat(-1, 2));
  CHECK(dual_complex(f).vertices.size() == 1);
}
