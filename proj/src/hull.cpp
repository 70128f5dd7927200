#include "tropcurve/hull.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace tropcurve {

Int dot(const IntVec &a, const IntVec &b) {
  Int s = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    s += a[i] * b[i];
  return s;
}

IntVec primitive(IntVec v) {
  Int g = 0;
  for (const auto &c : v)
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  if (g > 1)
    for (auto &c : v)
      mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  return v;
}

namespace {

RatMatrix difference_matrix(const std::vector<IntVec> &pts,
                            const std::vector<int> &subset, std::size_t dim) {
  RatMatrix m(subset.empty() ? 0 : subset.size() - 1, dim);
  for (std::size_t r = 1; r < subset.size(); ++r)
    for (std::size_t c = 0; c < dim; ++c)
      m(r - 1, c) = pts[static_cast<std::size_t>(subset[r])][c] -
                    pts[static_cast<std::size_t>(subset[0])][c];
  return m;
}

IntVec to_int_direction(const RatVec &v) {
  auto p = primitive_direction(v);
  return IntVec(p.begin(), p.end());
}

// Integer basis of the linear functionals vanishing on the directions of
// aff(q[subset]) (and on the extra rows, if any).
std::vector<IntVec> annihilator(const std::vector<IntVec> &q,
                                const std::vector<int> &subset, std::size_t k,
                                const std::vector<IntVec> &extra) {
  RatMatrix m(subset.size() - 1 + extra.size(), k);
  for (std::size_t r = 1; r < subset.size(); ++r)
    for (std::size_t c = 0; c < k; ++c)
      m(r - 1, c) = q[static_cast<std::size_t>(subset[r])][c] -
                    q[static_cast<std::size_t>(subset[0])][c];
  for (std::size_t e = 0; e < extra.size(); ++e)
    for (std::size_t c = 0; c < k; ++c)
      m(subset.size() - 1 + e, c) = extra[e][c];
  std::vector<IntVec> out;
  for (const auto &v : nullspace(m))
    out.push_back(to_int_direction(v));
  return out;
}

bool parallel(const IntVec &a, const IntVec &b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = i + 1; j < a.size(); ++j)
      if (a[i] * b[j] != a[j] * b[i])
        return false;
  return true;
}

struct Hyperplane {
  IntVec normal;
  Int offset;
  std::vector<int> on; // local indices of points on it, sorted
};

Hyperplane support(const std::vector<IntVec> &q, IntVec normal) {
  Hyperplane h{std::move(normal), 0, {}};
  bool first = true;
  for (std::size_t i = 0; i < q.size(); ++i) {
    Int v = dot(h.normal, q[i]);
    if (first || v > h.offset) {
      h.offset = v;
      h.on.clear();
      first = false;
    }
    if (v == h.offset)
      h.on.push_back(static_cast<int>(i));
  }
  return h;
}

// Rotates the supporting hyperplane `h` about an affine subspace through
// `anchor` on which the functional `u` is constant, in the direction of `u`,
// until it meets the first point off the hyperplane. Returns the new
// supporting hyperplane.
Hyperplane rotate(const std::vector<IntVec> &q, const Hyperplane &h,
                  const IntVec &anchor, const IntVec &u) {
  const Int u0 = dot(u, anchor);
  Int best_s, best_t;
  bool found = false;
  for (std::size_t i = 0; i < q.size(); ++i) {
    Int s = dot(h.normal, q[i]) - h.offset;
    if (s == 0)
      continue;
    Int t = dot(u, q[i]) - u0;
    // maximize t / (-s); both -s and -best_s are positive
    if (!found || t * (-best_s) > best_t * (-s)) {
      best_s = std::move(s);
      best_t = std::move(t);
      found = true;
    }
  }
  if (!found)
    throw InvariantError("rotate: no point off the supporting hyperplane");
  IntVec n(h.normal.size());
  for (std::size_t c = 0; c < n.size(); ++c)
    n[c] = best_t * h.normal[c] - best_s * u[c];
  return support(q, primitive(std::move(n)));
}

} // namespace

AffineChart affine_chart(const std::vector<IntVec> &points,
                         const std::vector<int> &subset) {
  if (subset.empty())
    throw UsageError("affine_chart: empty point set");
  const std::size_t dim = points[static_cast<std::size_t>(subset[0])].size();
  AffineChart chart;
  chart.coords = pivot_columns(difference_matrix(points, subset, dim));
  chart.dim = static_cast<int>(chart.coords.size());
  return chart;
}

Int normalized_simplex_volume(const std::vector<IntVec> &simplex) {
  if (simplex.empty())
    throw UsageError("normalized_simplex_volume: empty simplex");
  const std::size_t k = simplex.size() - 1;
  const std::size_t d = simplex[0].size();
  if (k == 0)
    return 1;
  if (k > d)
    throw UsageError("normalized_simplex_volume: too many points");
  std::vector<IntVec> edges;
  for (std::size_t i = 1; i <= k; ++i) {
    IntVec e(d);
    for (std::size_t c = 0; c < d; ++c)
      e[c] = simplex[i][c] - simplex[0][c];
    edges.push_back(std::move(e));
  }
  // gcd of all maximal minors of the k x d edge matrix
  Int g = 0;
  std::vector<std::size_t> cols(k);
  for (std::size_t i = 0; i < k; ++i)
    cols[i] = i;
  while (true) {
    RatMatrix m(k, k);
    for (std::size_t r = 0; r < k; ++r)
      for (std::size_t c = 0; c < k; ++c)
        m(r, c) = edges[r][cols[c]];
    Rat det = determinant(m);
    Int num = det.get_num();
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), num.get_mpz_t());
    // next combination
    std::size_t i = k;
    while (i > 0 && cols[i - 1] == d - k + (i - 1))
      --i;
    if (i == 0)
      break;
    ++cols[i - 1];
    for (std::size_t j = i; j < k; ++j)
      cols[j] = cols[j - 1] + 1;
  }
  if (g == 0)
    throw InvariantError("normalized_simplex_volume: degenerate simplex");
  return g;
}

FaceLattice::FaceLattice(std::vector<IntVec> points)
    : points_(std::move(points)) {}

int FaceLattice::find(const std::vector<int> &subset) const {
  auto it = memo_.find(subset);
  return it == memo_.end() ? -1 : it->second;
}

int FaceLattice::face(std::vector<int> subset) {
  std::sort(subset.begin(), subset.end());
  if (auto it = memo_.find(subset); it != memo_.end())
    return it->second;
  const AffineChart chart = affine_chart(points_, subset);
  const int id = static_cast<int>(nodes_.size());
  nodes_.push_back(FaceNode{subset, {}, chart.dim, {}, {}});
  memo_.emplace(subset, id);
  if (chart.dim == 0) {
    if (subset.size() != 1)
      throw InvariantError("face: repeated input points");
    nodes_[static_cast<std::size_t>(id)].vertices = subset;
    return id;
  }
  const auto facets = wrap(subset, chart, false);
  std::set<int> verts;
  std::vector<int> children;
  std::vector<IntVec> normals;
  for (const auto &f : facets) {
    const int fid = face(f.points);
    children.push_back(fid);
    normals.push_back(f.normal);
    const auto &fv = nodes_[static_cast<std::size_t>(fid)].vertices;
    verts.insert(fv.begin(), fv.end());
  }
  auto &node = nodes_[static_cast<std::size_t>(id)];
  node.facets = std::move(children);
  node.facet_normals = std::move(normals);
  node.vertices.assign(verts.begin(), verts.end());
  return id;
}

std::vector<WrappedFacet> FaceLattice::facets(const std::vector<int> &subset,
                                              bool upper_only) {
  std::vector<int> sorted = subset;
  std::sort(sorted.begin(), sorted.end());
  const AffineChart chart = affine_chart(points_, sorted);
  if (chart.dim == 0)
    return {};
  if (upper_only && static_cast<std::size_t>(chart.dim) !=
                        points_[static_cast<std::size_t>(sorted[0])].size())
    throw UsageError("facets: upper mode needs a full-dimensional set");
  return wrap(sorted, chart, upper_only);
}

std::vector<WrappedFacet> FaceLattice::wrap(const std::vector<int> &subset,
                                            const AffineChart &chart,
                                            bool upper_only) {
  const std::size_t k = static_cast<std::size_t>(chart.dim);
  const std::size_t ambient = points_[static_cast<std::size_t>(subset[0])].size();
  std::vector<IntVec> q;
  q.reserve(subset.size());
  for (int g : subset) {
    IntVec local(k);
    for (std::size_t c = 0; c < k; ++c)
      local[c] = points_[static_cast<std::size_t>(g)][chart.coords[c]];
    q.push_back(std::move(local));
  }
  std::map<int, int> local_of;
  for (std::size_t i = 0; i < subset.size(); ++i)
    local_of[subset[i]] = static_cast<int>(i);

  auto to_global = [&](const Hyperplane &h) {
    WrappedFacet f;
    for (int i : h.on)
      f.points.push_back(subset[static_cast<std::size_t>(i)]);
    f.normal.assign(ambient, 0);
    for (std::size_t c = 0; c < k; ++c)
      f.normal[chart.coords[c]] = h.normal[c];
    f.offset = h.offset;
    return f;
  };

  auto dim_of = [&](const std::vector<int> &local) {
    RatMatrix m(local.size() - 1, k);
    for (std::size_t r = 1; r < local.size(); ++r)
      for (std::size_t c = 0; c < k; ++c)
        m(r - 1, c) = q[static_cast<std::size_t>(local[r])][c] -
                      q[static_cast<std::size_t>(local[0])][c];
    return rank(m);
  };

  IntVec last_axis(k, 0);
  last_axis[k - 1] = 1;

  if (k == 1) {
    std::vector<WrappedFacet> out;
    if (!upper_only)
      out.push_back(to_global(support(q, IntVec{-1})));
    out.push_back(to_global(support(q, IntVec{1})));
    return out;
  }

  // Initial facet: start from a coordinate direction and rotate until the
  // supported face is (k-1)-dimensional.
  IntVec start(k, 0);
  start[upper_only ? k - 1 : 0] = 1;
  Hyperplane h = support(q, start);
  while (dim_of(h.on) + 1 < k) {
    std::vector<IntVec> extra;
    if (upper_only)
      extra.push_back(last_axis);
    const auto basis = annihilator(q, h.on, k, extra);
    const IntVec *u = nullptr;
    for (const auto &b : basis)
      if (!parallel(b, h.normal)) {
        u = &b;
        break;
      }
    if (u == nullptr)
      throw InvariantError("wrap: no rotation axis for initial facet");
    const auto &anchor = q[static_cast<std::size_t>(h.on.front())];
    Hyperplane next = rotate(q, h, anchor, *u);
    if (upper_only && next.normal[k - 1] <= 0) {
      IntVec neg = *u;
      for (auto &c : neg)
        c = -c;
      next = rotate(q, h, anchor, neg);
    }
    h = std::move(next);
  }

  std::vector<WrappedFacet> out;
  std::set<std::vector<int>> seen;
  std::deque<Hyperplane> queue;
  seen.insert(h.on);
  queue.push_back(std::move(h));
  while (!queue.empty()) {
    Hyperplane f = std::move(queue.front());
    queue.pop_front();
    WrappedFacet global = to_global(f);
    const int fid = face(global.points);
    out.push_back(std::move(global));
    const std::vector<int> ridge_ids = nodes_[static_cast<std::size_t>(fid)].facets;
    for (int rid : ridge_ids) {
      std::vector<int> ridge;
      for (int g : nodes_[static_cast<std::size_t>(rid)].points)
        ridge.push_back(local_of.at(g));
      const auto basis = annihilator(q, ridge, k, {});
      const IntVec *b = nullptr;
      for (const auto &cand : basis)
        if (!parallel(cand, f.normal)) {
          b = &cand;
          break;
        }
      if (b == nullptr)
        throw InvariantError("wrap: ridge has no rotation axis");
      IntVec axis = *b;
      // orient so that the facet itself lies on the non-positive side
      const auto &r0 = q[static_cast<std::size_t>(ridge.front())];
      for (int i : f.on) {
        if (std::binary_search(ridge.begin(), ridge.end(), i))
          continue;
        Int t = dot(axis, q[static_cast<std::size_t>(i)]) - dot(axis, r0);
        if (t > 0)
          for (auto &c : axis)
            c = -c;
        break;
      }
      Hyperplane next = rotate(q, f, r0, axis);
      if (upper_only && next.normal[k - 1] <= 0)
        continue;
      if (seen.insert(next.on).second)
        queue.push_back(std::move(next));
    }
  }
  return out;
}

std::vector<std::vector<int>> FaceLattice::triangulate(int id) const {
  const auto &node = nodes_[static_cast<std::size_t>(id)];
  if (node.dim == 0)
    return {{node.vertices.front()}};
  const int apex = node.vertices.front();
  std::vector<std::vector<int>> out;
  for (int fid : node.facets) {
    const auto &f = nodes_[static_cast<std::size_t>(fid)];
    if (std::binary_search(f.points.begin(), f.points.end(), apex))
      continue;
    for (auto &s : triangulate(fid)) {
      s.insert(s.begin(), apex);
      out.push_back(std::move(s));
    }
  }
  return out;
}

Int FaceLattice::normalized_volume(int id) const {
  Int total = 0;
  for (const auto &s : triangulate(id)) {
    std::vector<IntVec> pts;
    for (int i : s)
      pts.push_back(points_[static_cast<std::size_t>(i)]);
    total += normalized_simplex_volume(pts);
  }
  return total;
}

std::vector<int> FaceLattice::subfaces(int id) const {
  std::set<int> seen{id};
  std::vector<int> stack{id};
  while (!stack.empty()) {
    int cur = stack.back();
    stack.pop_back();
    for (int f : nodes_[static_cast<std::size_t>(cur)].facets)
      if (seen.insert(f).second)
        stack.push_back(f);
  }
  return {seen.begin(), seen.end()};
}

} // namespace tropcurve
