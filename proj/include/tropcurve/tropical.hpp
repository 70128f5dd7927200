#pragma once

// Tropical (max-plus) Laurent polynomials.

#include "tropcurve/exact.hpp"
#include "tropcurve/polytope.hpp"

#include <json.hpp>

#include <map>
#include <optional>
#include <vector>

namespace tropcurve {

/// f(x) = max_a { lambda_a + <a, x> } over a finite support in Z^m.
///
/// Terms whose coefficient never attains the maximum are kept; they simply
/// do not show up in the subdivision.
class TropicalPolynomial {
public:
  using Terms = std::map<LatticePoint, Rat>;

  TropicalPolynomial(std::size_t num_vars, Terms terms);

  std::size_t num_vars() const { return num_vars_; }
  const Terms &terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }

  /// Support in lexicographic order, with the matching coefficients.
  std::vector<LatticePoint> support() const;
  std::vector<Rat> coefficients() const;

  /// Copy without the terms for which `drop` returns true.
  template <typename Pred> TropicalPolynomial without(Pred drop) const {
    Terms kept;
    for (const auto &[a, c] : terms_)
      if (!drop(a))
        kept.emplace(a, c);
    return TropicalPolynomial(num_vars_, std::move(kept));
  }

  bool operator==(const TropicalPolynomial &other) const = default;

private:
  std::size_t num_vars_;
  Terms terms_;
};

struct EvalResult {
  Rat value;
  std::vector<LatticePoint> argmax; // lexicographic order
};

EvalResult evaluate(const TropicalPolynomial &f, const RatVec &x);

/// f (.) g: exponents add, coefficients add, ties resolved by max.
TropicalPolynomial tropical_product(const TropicalPolynomial &f,
                                    const TropicalPolynomial &g);
TropicalPolynomial tropical_product(const std::vector<TropicalPolynomial> &fs);

Polytope newton_polytope(const TropicalPolynomial &f);

/// d when the support hull is exactly Gamma_d^m (anchored at the origin).
std::optional<unsigned> degree_of(const TropicalPolynomial &f);

/// Lattice points of Gamma_d^m in lexicographic order.
std::vector<LatticePoint> simplex_lattice_points(unsigned d, std::size_t m);

/// Polynomial with support Gamma_d^m and the given coefficients, listed in
/// the order of simplex_lattice_points.
TropicalPolynomial dense_polynomial(unsigned d, std::size_t m,
                                    const std::vector<Rat> &coeffs);

// {"vars": m, "terms": [{"exp": [...], "coeff": "p/q"}, ...]}
TropicalPolynomial polynomial_from_json(const nlohmann::json &j);
nlohmann::json to_json(const TropicalPolynomial &f);
/// Rationals travel as strings "p/q" or as JSON integers.
Rat rat_from_json(const nlohmann::json &j);

} // namespace tropcurve
