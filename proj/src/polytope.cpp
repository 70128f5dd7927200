#include "tropcurve/polytope.hpp"

#include "tropcurve/hull.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace tropcurve {

namespace {

bool lex_less(const RatVec &a, const RatVec &b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

} // namespace

std::vector<Face> Polytope::faces_of_dim(int k) const {
  std::vector<Face> out;
  for (const auto &f : faces_)
    if (f.dim == k)
      out.push_back(f);
  return out;
}

const Rat &Polytope::lattice_volume() const {
  if (!lattice_)
    throw UsageError("lattice_volume: polytope has non-integral vertices");
  return lattice_volume_;
}

bool Polytope::contains_vertex(const RatVec &p) const {
  return std::find(vertices_.begin(), vertices_.end(), p) != vertices_.end();
}

Polytope convex_hull(const std::vector<RatVec> &points) {
  if (points.empty())
    throw UsageError("convex_hull: empty point list");
  const std::size_t m = points.front().size();
  for (const auto &p : points)
    if (p.size() != m)
      throw UsageError("convex_hull: points of different dimension");

  std::vector<RatVec> pts = points;
  std::sort(pts.begin(), pts.end(), lex_less);
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

  Int scale = 1;
  for (const auto &p : pts)
    for (const auto &c : p)
      mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), c.get_den_mpz_t());
  std::vector<IntVec> ints;
  ints.reserve(pts.size());
  for (const auto &p : pts) {
    IntVec v(m);
    for (std::size_t c = 0; c < m; ++c)
      v[c] = p[c].get_num() * (scale / p[c].get_den());
    ints.push_back(std::move(v));
  }

  FaceLattice lattice(std::move(ints));
  std::vector<int> all(pts.size());
  for (std::size_t i = 0; i < all.size(); ++i)
    all[i] = static_cast<int>(i);
  const int root = lattice.face(all);
  const auto &top = lattice.node(root);

  Polytope poly;
  poly.ambient_dim_ = m;
  poly.dim_ = top.dim;
  poly.lattice_ = scale == 1;
  std::map<int, std::size_t> vertex_pos;
  for (int v : top.vertices) {
    vertex_pos[v] = poly.vertices_.size();
    poly.vertices_.push_back(pts[static_cast<std::size_t>(v)]);
  }

  // facets of the root with their normals, for normals of lower faces
  std::vector<std::pair<std::vector<int>, IntVec>> root_facets;
  for (std::size_t i = 0; i < top.facets.size(); ++i)
    root_facets.emplace_back(lattice.node(top.facets[i]).vertices,
                             primitive(top.facet_normals[i]));

  for (int id : lattice.subfaces(root)) {
    const auto &node = lattice.node(id);
    Face face;
    face.dim = node.dim;
    for (int v : node.vertices)
      face.vertex_indices.push_back(vertex_pos.at(v));
    std::sort(face.vertex_indices.begin(), face.vertex_indices.end());
    IntVec normal(m, 0);
    if (id != root) {
      for (const auto &[fverts, fnormal] : root_facets)
        if (std::includes(fverts.begin(), fverts.end(), node.vertices.begin(),
                          node.vertices.end()))
          for (std::size_t c = 0; c < m; ++c)
            normal[c] += fnormal[c];
      normal = primitive(std::move(normal));
    }
    face.outer_normal.assign(normal.begin(), normal.end());
    poly.faces_.push_back(std::move(face));
  }
  std::sort(poly.faces_.begin(), poly.faces_.end(),
            [](const Face &a, const Face &b) {
              if (a.dim != b.dim)
                return a.dim < b.dim;
              return a.vertex_indices < b.vertex_indices;
            });

  const Int normalized = lattice.normalized_volume(root);
  const auto k = static_cast<unsigned>(top.dim);
  Int denom = factorial(k);
  Int scale_k;
  mpz_pow_ui(scale_k.get_mpz_t(), scale.get_mpz_t(), k);
  poly.lattice_volume_ = Rat(normalized, denom * scale_k);
  poly.lattice_volume_.canonicalize();
  if (poly.full_dimensional()) {
    // for a full-dimensional simplex the normalized lattice volume is |det|
    poly.volume_ = poly.lattice_volume_;
  } else {
    poly.volume_ = 0;
  }
  return poly;
}

Polytope convex_hull(const std::vector<LatticePoint> &points) {
  std::vector<RatVec> pts;
  pts.reserve(points.size());
  for (const auto &p : points)
    pts.push_back(to_ratvec(p));
  return convex_hull(pts);
}

Polytope standard_simplex(unsigned d, std::size_t m) {
  if (m == 0)
    throw UsageError("standard_simplex: dimension must be positive");
  std::vector<RatVec> pts{RatVec(m, Rat(0))};
  if (d > 0)
    for (std::size_t i = 0; i < m; ++i) {
      RatVec v(m, Rat(0));
      v[i] = d;
      pts.push_back(std::move(v));
    }
  return convex_hull(pts);
}

Polytope minkowski_sum(const Polytope &p, const Polytope &q) {
  if (p.ambient_dim() != q.ambient_dim())
    throw UsageError("minkowski_sum: ambient dimension mismatch");
  std::vector<RatVec> pts;
  pts.reserve(p.vertices().size() * q.vertices().size());
  for (const auto &a : p.vertices())
    for (const auto &b : q.vertices())
      pts.push_back(add(a, b));
  return convex_hull(pts);
}

Polytope convex_union(const Polytope &p, const Polytope &q) {
  if (p.ambient_dim() != q.ambient_dim())
    throw UsageError("convex_union: ambient dimension mismatch");
  std::vector<RatVec> pts = p.vertices();
  pts.insert(pts.end(), q.vertices().begin(), q.vertices().end());
  return convex_hull(pts);
}

Polytope dilate(const Polytope &p, unsigned k) {
  std::vector<RatVec> pts;
  for (const auto &v : p.vertices())
    pts.push_back(scale(v, Rat(k)));
  return convex_hull(pts);
}

Rat mixed_volume(const std::vector<Polytope> &polytopes) {
  const std::size_t m = polytopes.size();
  if (m == 0)
    throw UsageError("mixed_volume: no polytopes");
  for (const auto &p : polytopes)
    if (p.ambient_dim() != m)
      throw UsageError("mixed_volume: need exactly m polytopes in R^m");
  // partial[mask] = sum of the polytopes in mask, built from the mask with
  // its highest bit removed
  std::vector<Polytope> partial(std::size_t{1} << m);
  Rat total = 0;
  for (std::size_t mask = 1; mask < partial.size(); ++mask) {
    std::size_t high = 0;
    while ((mask >> (high + 1)) != 0)
      ++high;
    const std::size_t rest = mask & ~(std::size_t{1} << high);
    partial[mask] = rest == 0 ? polytopes[high]
                              : minkowski_sum(partial[rest], polytopes[high]);
    const auto size = static_cast<std::size_t>(__builtin_popcountll(mask));
    if ((m - size) % 2 == 0)
      total += partial[mask].volume();
    else
      total -= partial[mask].volume();
  }
  return total;
}

Face face_in_direction(const Polytope &p, const RatVec &w) {
  if (w.size() != p.ambient_dim())
    throw UsageError("face_in_direction: dimension mismatch");
  if (is_zero(w))
    throw UsageError("face_in_direction: zero direction");
  Rat best;
  std::vector<std::size_t> arg;
  for (std::size_t i = 0; i < p.vertices().size(); ++i) {
    Rat v = dot(w, p.vertices()[i]);
    if (arg.empty() || v > best) {
      best = v;
      arg.clear();
    }
    if (v == best)
      arg.push_back(i);
  }
  for (const auto &f : p.faces())
    if (f.vertex_indices == arg)
      return f;
  throw InvariantError("face_in_direction: maximizing vertex set is not a face");
}

bool same_vertices(const Polytope &p, const Polytope &q) {
  if (p.vertices().size() != q.vertices().size())
    return false;
  std::set<RatVec> a(p.vertices().begin(), p.vertices().end());
  std::set<RatVec> b(q.vertices().begin(), q.vertices().end());
  return a == b;
}

} // namespace tropcurve
