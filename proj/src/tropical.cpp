#include "tropcurve/tropical.hpp"

#include <algorithm>
#include <functional>

namespace tropcurve {

TropicalPolynomial::TropicalPolynomial(std::size_t num_vars, Terms terms)
    : num_vars_(num_vars), terms_(std::move(terms)) {
  if (num_vars_ == 0)
    throw UsageError("tropical polynomial needs at least one variable");
  if (terms_.empty())
    throw UsageError("tropical polynomial needs a nonempty support");
  for (auto &[a, c] : terms_) {
    if (a.size() != num_vars_)
      throw UsageError("exponent vector has wrong dimension");
    c.canonicalize();
  }
}

std::vector<LatticePoint> TropicalPolynomial::support() const {
  std::vector<LatticePoint> out;
  out.reserve(terms_.size());
  for (const auto &[a, c] : terms_)
    out.push_back(a);
  return out;
}

std::vector<Rat> TropicalPolynomial::coefficients() const {
  std::vector<Rat> out;
  out.reserve(terms_.size());
  for (const auto &[a, c] : terms_)
    out.push_back(c);
  return out;
}

EvalResult evaluate(const TropicalPolynomial &f, const RatVec &x) {
  if (x.size() != f.num_vars())
    throw UsageError("evaluate: point has wrong dimension");
  EvalResult r;
  bool first = true;
  for (const auto &[a, c] : f.terms()) {
    Rat v = c;
    for (std::size_t i = 0; i < a.size(); ++i)
      if (a[i] != 0)
        v += static_cast<long>(a[i]) * x[i];
    if (first || v > r.value) {
      r.value = v;
      r.argmax.clear();
      first = false;
    }
    if (v == r.value)
      r.argmax.push_back(a);
  }
  return r;
}

TropicalPolynomial tropical_product(const TropicalPolynomial &f,
                                    const TropicalPolynomial &g) {
  if (f.num_vars() != g.num_vars())
    throw UsageError("tropical_product: variable count mismatch");
  TropicalPolynomial::Terms out;
  for (const auto &[a, c] : f.terms())
    for (const auto &[b, d] : g.terms()) {
      LatticePoint s(a.size());
      for (std::size_t i = 0; i < a.size(); ++i)
        s[i] = a[i] + b[i];
      Rat v = c + d;
      auto it = out.find(s);
      if (it == out.end())
        out.emplace(std::move(s), std::move(v));
      else if (v > it->second)
        it->second = std::move(v);
    }
  return TropicalPolynomial(f.num_vars(), std::move(out));
}

TropicalPolynomial tropical_product(const std::vector<TropicalPolynomial> &fs) {
  if (fs.empty())
    throw UsageError("tropical_product: empty factor list");
  TropicalPolynomial acc = fs.front();
  for (std::size_t i = 1; i < fs.size(); ++i)
    acc = tropical_product(acc, fs[i]);
  return acc;
}

Polytope newton_polytope(const TropicalPolynomial &f) {
  return convex_hull(f.support());
}

std::optional<unsigned> degree_of(const TropicalPolynomial &f) {
  const std::size_t m = f.num_vars();
  const LatticePoint origin(m, 0);
  if (!f.terms().contains(origin))
    return std::nullopt;
  // Gamma_d^m is the only lattice polytope containing 0 whose points all
  // satisfy a >= 0, sum(a) <= d, with d e_i present for every i.
  std::int64_t d = -1;
  for (const auto &[a, c] : f.terms()) {
    std::int64_t total = 0;
    for (auto ai : a) {
      if (ai < 0)
        return std::nullopt;
      total += ai;
    }
    d = std::max(d, total);
  }
  for (std::size_t i = 0; i < m; ++i) {
    LatticePoint corner(m, 0);
    corner[i] = d;
    if (!f.terms().contains(corner))
      return std::nullopt;
  }
  return static_cast<unsigned>(d);
}

std::vector<LatticePoint> simplex_lattice_points(unsigned d, std::size_t m) {
  std::vector<LatticePoint> out;
  LatticePoint cur(m, 0);
  std::function<void(std::size_t, std::int64_t)> rec = [&](std::size_t i,
                                                           std::int64_t left) {
    if (i == m) {
      out.push_back(cur);
      return;
    }
    for (std::int64_t v = 0; v <= left; ++v) {
      cur[i] = v;
      rec(i + 1, left - v);
    }
    cur[i] = 0;
  };
  rec(0, d);
  std::sort(out.begin(), out.end());
  return out;
}

TropicalPolynomial dense_polynomial(unsigned d, std::size_t m,
                                    const std::vector<Rat> &coeffs) {
  const auto pts = simplex_lattice_points(d, m);
  if (pts.size() != coeffs.size())
    throw UsageError("dense_polynomial: expected " +
                     std::to_string(pts.size()) + " coefficients");
  TropicalPolynomial::Terms terms;
  for (std::size_t i = 0; i < pts.size(); ++i)
    terms.emplace(pts[i], coeffs[i]);
  return TropicalPolynomial(m, std::move(terms));
}

Rat rat_from_json(const nlohmann::json &j) {
  if (j.is_number_integer())
    return Rat(std::to_string(j.get<long long>()));
  if (j.is_string())
    return parse_rat(j.get<std::string>());
  throw UsageError("coefficient must be an integer or a \"p/q\" string");
}

TropicalPolynomial polynomial_from_json(const nlohmann::json &j) {
  if (!j.is_object() || !j.contains("vars") || !j.contains("terms"))
    throw UsageError("polynomial JSON needs \"vars\" and \"terms\"");
  if (!j["vars"].is_number_integer() || j["vars"].get<long long>() <= 0)
    throw UsageError("\"vars\" must be a positive integer");
  const auto m = static_cast<std::size_t>(j["vars"].get<long long>());
  if (!j["terms"].is_array())
    throw UsageError("\"terms\" must be an array");
  TropicalPolynomial::Terms terms;
  for (const auto &t : j["terms"]) {
    if (!t.is_object() || !t.contains("exp") || !t.contains("coeff") ||
        !t["exp"].is_array())
      throw UsageError("each term needs \"exp\" and \"coeff\"");
    LatticePoint a;
    for (const auto &e : t["exp"]) {
      if (!e.is_number_integer())
        throw UsageError("exponents must be integers");
      a.push_back(e.get<std::int64_t>());
    }
    if (a.size() != m)
      throw UsageError("exponent vector length differs from \"vars\"");
    if (!terms.emplace(std::move(a), rat_from_json(t["coeff"])).second)
      throw UsageError("duplicate exponent in polynomial");
  }
  return TropicalPolynomial(m, std::move(terms));
}

nlohmann::json to_json(const TropicalPolynomial &f) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto &[a, c] : f.terms())
    terms.push_back({{"exp", a}, {"coeff", format_rat(c)}});
  return {{"vars", f.num_vars()}, {"terms", terms}};
}

} // namespace tropcurve
