#pragma once

// Generators and independent oracles shared by the unit and acceptance
// tests. Oracles deliberately avoid the library's geometry code: they work
// by brute force over point sets.

#include "tropcurve/census.hpp"
#include "tropcurve/intersection.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>

namespace testing {

using namespace tropcurve;

inline std::vector<Rat> rats(std::initializer_list<long> v) {
  std::vector<Rat> out;
  for (long x : v)
    out.emplace_back(x);
  return out;
}

inline RatVec rv(std::initializer_list<long> v) { return rats(v); }

inline std::int64_t draw(std::mt19937_64 &rng, std::int64_t lo, std::int64_t hi) {
  return uniform_int(rng, lo, hi);
}

/// Dense polynomial on Gamma_d^m with heights -K|a|^2 plus bounded noise.
/// Concave heights make unimodular subdivisions likely; the noise breaks
/// the symmetric ties of the pure quadratic.
inline TropicalPolynomial concave_noisy(std::mt19937_64 &rng, unsigned d, std::size_t m) {
  std::vector<Rat> c;
  for (const auto &a : simplex_lattice_points(d, m)) {
    long q = 0;
    for (auto x : a)
      q += static_cast<long>(x * x);
    c.emplace_back(-1000 * q + static_cast<long>(draw(rng, -400, 400)));
  }
  return dense_polynomial(d, m, c);
}

inline TropicalPolynomial random_smooth(std::mt19937_64 &rng, unsigned d, std::size_t m) {
  for (;;) {
    auto f = concave_noisy(rng, d, m);
    if (is_smooth(f))
      return f;
  }
}

/// Smooth factors of the given degrees whose arrangement is transversal.
inline std::vector<TropicalPolynomial>
random_transversal(std::mt19937_64 &rng, const std::vector<unsigned> &degrees,
                   std::size_t m) {
  for (;;) {
    std::vector<TropicalPolynomial> fs;
    for (auto d : degrees)
      fs.push_back(random_smooth(rng, d, m));
    if (check_transversality(fs).transversal)
      return fs;
  }
}

// ---- brute-force tropical evaluation ------------------------------------

struct BruteEval {
  Rat value;
  std::set<LatticePoint> argmax;
};

inline BruteEval brute_eval(const TropicalPolynomial &f, const RatVec &x) {
  std::vector<std::pair<Rat, LatticePoint>> vals;
  for (const auto &[a, c] : f.terms()) {
    Rat v = c;
    for (std::size_t i = 0; i < a.size(); ++i)
      v += Rat(static_cast<long>(a[i])) * x[i];
    vals.emplace_back(v, a);
  }
  Rat best = vals.front().first;
  for (const auto &[v, a] : vals)
    best = std::max(best, v);
  BruteEval out{best, {}};
  for (const auto &[v, a] : vals)
    if (v == best)
      out.argmax.insert(a);
  return out;
}

// ---- brute-force hulls and volumes ---------------------------------------

inline Rat cross2(const RatVec &o, const RatVec &a, const RatVec &b) {
  return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
}

/// Counter-clockwise hull of planar points (monotone chain).
inline std::vector<RatVec> hull2(std::vector<RatVec> pts) {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() < 3)
    return pts;
  std::vector<RatVec> h(2 * pts.size());
  std::size_t k = 0;
  for (const auto &p : pts) {
    while (k >= 2 && cross2(h[k - 2], h[k - 1], p) <= 0)
      --k;
    h[k++] = p;
  }
  for (std::size_t i = pts.size() - 1, t = k + 1; i-- > 0;) {
    while (k >= t && cross2(h[k - 2], h[k - 1], pts[i]) <= 0)
      --k;
    h[k++] = pts[i];
  }
  h.resize(k - 1);
  return h;
}

inline Rat area2(const std::vector<RatVec> &pts) {
  const auto h = hull2(pts);
  Rat a = 0;
  for (std::size_t i = 0; i < h.size(); ++i) {
    const auto &p = h[i];
    const auto &q = h[(i + 1) % h.size()];
    a += p[0] * q[1] - p[1] * q[0];
  }
  return a / 2;
}

inline RatVec cross3(const RatVec &u, const RatVec &v) {
  return {u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2], u[0] * v[1] - u[1] * v[0]};
}

/// Volume of the hull of points in R^3 by the divergence theorem over
/// facets found by testing every triple of points.
inline Rat volume3(std::vector<RatVec> pts) {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  const std::size_t n = pts.size();
  std::set<std::vector<std::size_t>> seen;
  Rat vol = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        RatVec nrm = cross3(sub(pts[j], pts[i]), sub(pts[k], pts[i]));
        if (is_zero(nrm))
          continue;
        int pos = 0, neg = 0;
        std::vector<std::size_t> on;
        for (std::size_t l = 0; l < n; ++l) {
          const Rat s = dot(nrm, sub(pts[l], pts[i]));
          if (s > 0)
            ++pos;
          else if (s < 0)
            ++neg;
          else
            on.push_back(l);
        }
        if (pos && neg)
          continue;
        if (pos == 0 && neg == 0)
          return 0; // flat
        if (!seen.insert(on).second)
          continue;
        if (pos)
          nrm = scale(nrm, Rat(-1)); // outward
        // order the facet polygon in a coordinate projection
        std::size_t drop = 0;
        for (std::size_t c = 1; c < 3; ++c)
          if (abs(nrm[c]) > abs(nrm[drop]))
            drop = c;
        std::map<RatVec, RatVec> lift;
        std::vector<RatVec> proj;
        for (auto l : on) {
          RatVec p;
          for (std::size_t c = 0; c < 3; ++c)
            if (c != drop)
              p.push_back(pts[l][c]);
          lift[p] = pts[l];
          proj.push_back(p);
        }
        const auto poly = hull2(proj);
        RatVec area(3, Rat(0));
        for (std::size_t t = 0; t < poly.size(); ++t)
          area = add(area, cross3(lift[poly[t]], lift[poly[(t + 1) % poly.size()]]));
        if (dot(area, nrm) < 0)
          area = scale(area, Rat(-1));
        vol += dot(area, lift[poly[0]]) / 6;
      }
  return vol;
}

inline Rat brute_volume(const std::vector<RatVec> &pts) {
  return pts.front().size() == 2 ? area2(pts) : volume3(pts);
}

inline std::vector<RatVec> brute_minkowski(const std::vector<RatVec> &p,
                                           const std::vector<RatVec> &q) {
  std::vector<RatVec> out;
  for (const auto &a : p)
    for (const auto &b : q)
      out.push_back(add(a, b));
  return out;
}

inline std::vector<RatVec> brute_dilate(const std::vector<RatVec> &p, long k) {
  std::vector<RatVec> out;
  for (const auto &a : p)
    out.push_back(scale(a, Rat(k)));
  return out;
}

/// Planar mixed volume as the st-coefficient of vol(sP + tQ), recovered
/// from three evaluations of that quadratic form.
inline Rat mixed_volume_2d_by_coefficient(const std::vector<RatVec> &p,
                                          const std::vector<RatVec> &q) {
  auto v = [&](long s, long t) {
    return area2(brute_minkowski(brute_dilate(p, s), brute_dilate(q, t)));
  };
  const Rat a = v(1, 0), c = v(0, 1), v11 = v(1, 1);
  const Rat two_b = v11 - a - c;
  // consistency with a second evaluation point
  if (v(2, 1) != 4 * a + 2 * two_b + c)
    throw std::logic_error("mixed volume oracle: not a quadratic form");
  return two_b;
}

// ---- brute-force regular subdivision in the plane --------------------------

/// Maximal cells of the subdivision of a planar point configuration, each
/// as the sorted set of support points on an upper supporting plane.
inline std::set<std::set<LatticePoint>> brute_upper_cells_2d(const TropicalPolynomial &f) {
  std::vector<std::pair<LatticePoint, Rat>> pts(f.terms().begin(), f.terms().end());
  std::set<std::set<LatticePoint>> cells;
  const std::size_t n = pts.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        auto P = [&](std::size_t l) {
          return RatVec{Rat(static_cast<long>(pts[l].first[0])),
                        Rat(static_cast<long>(pts[l].first[1])), pts[l].second};
        };
        RatVec nrm = cross3(sub(P(j), P(i)), sub(P(k), P(i)));
        if (nrm[2] == 0)
          continue; // vertical or degenerate
        if (nrm[2] < 0)
          nrm = scale(nrm, Rat(-1));
        bool upper = true;
        std::set<LatticePoint> on;
        for (std::size_t l = 0; l < n && upper; ++l) {
          const Rat s = dot(nrm, sub(P(l), P(i)));
          if (s > 0)
            upper = false;
          else if (s == 0)
            on.insert(pts[l].first);
        }
        if (upper)
          cells.insert(on);
      }
  return cells;
}

// ---- graph helpers --------------------------------------------------------

/// Connected components of a graph by depth-first search.
inline std::size_t count_components(std::size_t n, const std::vector<std::pair<int, int>> &edges) {
  std::vector<std::vector<int>> adj(n);
  for (const auto &[a, b] : edges) {
    adj[static_cast<std::size_t>(a)].push_back(b);
    adj[static_cast<std::size_t>(b)].push_back(a);
  }
  std::vector<bool> seen(n, false);
  std::size_t comps = 0;
  for (std::size_t s = 0; s < n; ++s) {
    if (seen[s])
      continue;
    ++comps;
    std::vector<int> stack{static_cast<int>(s)};
    seen[s] = true;
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      for (int w : adj[static_cast<std::size_t>(v)])
        if (!seen[static_cast<std::size_t>(w)]) {
          seen[static_cast<std::size_t>(w)] = true;
          stack.push_back(w);
        }
    }
  }
  return comps;
}

inline std::vector<std::pair<int, int>> edge_pairs(const IntersectionCurve &c) {
  std::vector<std::pair<int, int>> out;
  for (const auto &e : c.edges)
    out.emplace_back(e.from, e.to);
  return out;
}

/// Point on the segment/ray from `a` in direction `d` (bounded by `b` if given).
inline bool on_segment(const RatVec &p, const RatVec &a, const RatVec &d,
                       const std::optional<RatVec> &b) {
  // p = a + t d with t >= 0 (and <= 1 for a segment with d = b - a)
  std::optional<Rat> t;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (d[i] == 0) {
      if (p[i] != a[i])
        return false;
      continue;
    }
    const Rat ti = (p[i] - a[i]) / d[i];
    if (t && *t != ti)
      return false;
    t = ti;
  }
  if (!t)
    return false;
  return *t >= 0 && (!b || *t <= 1);
}

} // namespace testing
