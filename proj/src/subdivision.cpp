#include "tropcurve/subdivision.hpp"

#include "tropcurve/hull.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace tropcurve {

namespace {

IntVec to_intvec(const LatticePoint &p) {
  IntVec v;
  v.reserve(p.size());
  for (auto c : p)
    v.emplace_back(static_cast<long>(c));
  return v;
}

bool subset_of(const std::vector<int> &small, const std::vector<int> &big) {
  return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

} // namespace

int affine_dim(const std::vector<LatticePoint> &points) {
  if (points.empty())
    return -1;
  std::vector<IntVec> ints;
  std::vector<int> idx;
  for (std::size_t i = 0; i < points.size(); ++i) {
    ints.push_back(to_intvec(points[i]));
    idx.push_back(static_cast<int>(i));
  }
  return affine_chart(ints, idx).dim;
}

Rat SubdivCell::lattice_volume() const {
  Rat v(normalized_volume, factorial(static_cast<unsigned>(dim)));
  v.canonicalize();
  return v;
}

std::optional<RatVec> solve_tie(const std::vector<LatticePoint> &points,
                                const std::vector<Rat> &heights) {
  if (points.empty() || points.size() != heights.size())
    throw UsageError("solve_tie: need matching points and heights");
  const std::size_t m = points[0].size();
  // greedily collect m affinely independent difference rows
  std::vector<RatVec> rows;
  RatVec rhs;
  for (std::size_t i = 1; i < points.size() && rows.size() < m; ++i) {
    RatVec r(m);
    for (std::size_t c = 0; c < m; ++c)
      r[c] = static_cast<long>(points[i][c] - points[0][c]);
    auto trial = rows;
    trial.push_back(r);
    if (rank(RatMatrix::from_rows(trial)) == trial.size()) {
      rows = std::move(trial);
      rhs.push_back(heights[0] - heights[i]);
    }
  }
  if (rows.size() < m)
    return std::nullopt;
  auto x = solve_linear(RatMatrix::from_rows(rows), rhs);
  if (!x)
    return std::nullopt;
  const RatVec base = to_ratvec(points[0]);
  const Rat value = heights[0] + dot(base, *x);
  for (std::size_t i = 1; i < points.size(); ++i)
    if (heights[i] + dot(to_ratvec(points[i]), *x) != value)
      return std::nullopt;
  return x;
}

RegularSubdivision::RegularSubdivision(std::vector<LatticePoint> support,
                                       std::vector<Rat> heights)
    : support_(std::move(support)), heights_(std::move(heights)) {
  if (support_.empty() || support_.size() != heights_.size())
    throw UsageError("subdivision: need one height per support point");
  ambient_dim_ = support_[0].size();
  for (const auto &a : support_)
    if (a.size() != ambient_dim_)
      throw UsageError("subdivision: support points of different dimension");

  const std::size_t n = support_.size();
  std::vector<IntVec> base;
  std::vector<int> all(n);
  for (std::size_t i = 0; i < n; ++i) {
    base.push_back(to_intvec(support_[i]));
    all[i] = static_cast<int>(i);
  }
  const AffineChart chart = affine_chart(base, all);
  dim_ = chart.dim;
  const auto k = static_cast<std::size_t>(dim_);

  Int height_scale = 1;
  for (const auto &h : heights_)
    mpz_lcm(height_scale.get_mpz_t(), height_scale.get_mpz_t(),
            h.get_den_mpz_t());

  std::vector<IntVec> local(n), lifted(n);
  for (std::size_t i = 0; i < n; ++i) {
    IntVec p(k);
    for (std::size_t c = 0; c < k; ++c)
      p[c] = base[i][chart.coords[c]];
    local[i] = p;
    p.push_back(heights_[i].get_num() * (height_scale / heights_[i].get_den()));
    lifted[i] = std::move(p);
  }

  FaceLattice lattice(lifted);
  struct Top {
    std::vector<int> points;
    IntVec normal; // empty for a flat lift
  };
  std::vector<Top> tops;
  if (affine_chart(lifted, all).dim == dim_ + 1) {
    for (auto &f : lattice.facets(all, true))
      tops.push_back({std::move(f.points), std::move(f.normal)});
  } else {
    tops.push_back({all, {}});
  }

  std::set<int> node_ids;
  std::vector<int> top_nodes;
  for (const auto &t : tops) {
    const int id = lattice.face(t.points);
    top_nodes.push_back(id);
    for (int s : lattice.subfaces(id))
      node_ids.insert(s);
  }
  std::vector<int> order(node_ids.begin(), node_ids.end());
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    const auto &na = lattice.node(a);
    const auto &nb = lattice.node(b);
    if (na.dim != nb.dim)
      return na.dim < nb.dim;
    return na.points < nb.points;
  });
  std::map<int, int> cell_of_node;
  for (std::size_t i = 0; i < order.size(); ++i)
    cell_of_node[order[i]] = static_cast<int>(i);

  // facets of the Newton polytope
  if (k >= 1) {
    FaceLattice base_lattice(local);
    for (auto &f : base_lattice.facets(all)) {
      std::vector<Int> normal(ambient_dim_, 0);
      for (std::size_t c = 0; c < k; ++c)
        normal[chart.coords[c]] = f.normal[c];
      polytope_facets_.push_back(std::move(f.points));
      polytope_facet_normals_.push_back(std::move(normal));
    }
  }

  // dual points of maximal cells
  maximal_dual_index_.assign(order.size(), -1);
  std::vector<int> top_cells;
  for (std::size_t t = 0; t < tops.size(); ++t) {
    const int cid = cell_of_node.at(top_nodes[t]);
    top_cells.push_back(cid);
    RatVec x(ambient_dim_, Rat(0));
    if (!tops[t].normal.empty()) {
      const Int &nt = tops[t].normal[k];
      for (std::size_t c = 0; c < k; ++c) {
        Rat v(tops[t].normal[c], nt * height_scale);
        v.canonicalize();
        x[chart.coords[c]] = v;
      }
    } else if (k > 0) {
      std::vector<LatticePoint> pts;
      for (const auto &p : local) {
        LatticePoint lp;
        for (const auto &c : p)
          lp.push_back(c.get_si());
        pts.push_back(std::move(lp));
      }
      auto sol = solve_tie(pts, heights_);
      if (!sol)
        throw InvariantError("subdivision: flat lift without a tie point");
      for (std::size_t c = 0; c < k; ++c)
        x[chart.coords[c]] = (*sol)[c];
    }
    maximal_dual_index_[static_cast<std::size_t>(cid)] =
        static_cast<int>(dual_points_.size());
    dual_points_.push_back(std::move(x));
  }

  cells_.reserve(order.size());
  for (int nid : order) {
    const auto &node = lattice.node(nid);
    SubdivCell cell;
    cell.points = node.points;
    cell.vertices = node.vertices;
    cell.dim = node.dim;
    for (int f : node.facets)
      cell.facets.push_back(cell_of_node.at(f));
    std::sort(cell.facets.begin(), cell.facets.end());
    for (std::size_t t = 0; t < tops.size(); ++t)
      if (subset_of(cell.points, lattice.node(top_nodes[t]).points))
        cell.maximal_cells.push_back(top_cells[t]);
    std::sort(cell.maximal_cells.begin(), cell.maximal_cells.end());
    for (std::size_t f = 0; f < polytope_facets_.size(); ++f)
      if (subset_of(cell.points, polytope_facets_[f]))
        cell.boundary_facets.push_back(static_cast<int>(f));
    cell.normalized_volume = 0;
    for (const auto &simplex : lattice.triangulate(nid)) {
      std::vector<IntVec> pts;
      for (int i : simplex)
        pts.push_back(base[static_cast<std::size_t>(i)]);
      cell.normalized_volume += normalized_simplex_volume(pts);
    }
    cells_.push_back(std::move(cell));
  }
}

std::vector<int> RegularSubdivision::cells_of_dim(int k) const {
  std::vector<int> out;
  for (std::size_t i = 0; i < cells_.size(); ++i)
    if (cells_[i].dim == k)
      out.push_back(static_cast<int>(i));
  return out;
}

int RegularSubdivision::find_cell(const std::vector<int> &points) const {
  std::vector<int> key = points;
  std::sort(key.begin(), key.end());
  for (std::size_t i = 0; i < cells_.size(); ++i)
    if (cells_[i].points == key)
      return static_cast<int>(i);
  return -1;
}

const RatVec &RegularSubdivision::dual_point(int maximal_id) const {
  const int idx = maximal_dual_index_.at(static_cast<std::size_t>(maximal_id));
  if (idx < 0)
    throw UsageError("dual_point: cell is not maximal");
  return dual_points_[static_cast<std::size_t>(idx)];
}

RatVec RegularSubdivision::normal_cone_point(int id) const {
  const auto &c = cell(id);
  RatVec w(ambient_dim_ + 1, Rat(0));
  for (int mx : c.maximal_cells) {
    const auto &x = dual_point(mx);
    for (std::size_t i = 0; i < ambient_dim_; ++i)
      w[i] += x[i];
    w[ambient_dim_] += 1;
  }
  for (int f : c.boundary_facets)
    for (std::size_t i = 0; i < ambient_dim_; ++i)
      w[i] += polytope_facet_normals_[static_cast<std::size_t>(f)][i];
  return w;
}

LiftedPolytope lift(const TropicalPolynomial &f) {
  std::vector<RatVec> pts;
  for (const auto &[a, c] : f.terms()) {
    RatVec p = to_ratvec(a);
    p.push_back(c);
    pts.push_back(std::move(p));
  }
  return LiftedPolytope{f, std::move(pts), RegularSubdivision(f)};
}

RegularSubdivision subdivision_of(const TropicalPolynomial &f) {
  return RegularSubdivision(f);
}

bool is_smooth(const RegularSubdivision &s) {
  for (int id : s.maximal_cells()) {
    const auto &c = s.cell(id);
    if (c.points.size() != static_cast<std::size_t>(c.dim) + 1 ||
        c.vertices.size() != c.points.size() || c.normalized_volume != 1)
      return false;
  }
  return true;
}

bool is_smooth(const TropicalPolynomial &f) {
  // Only the upper facets of the lift are needed, not the whole complex.
  const auto support = f.support();
  const auto heights = f.coefficients();
  const std::size_t n = support.size();
  std::vector<IntVec> base;
  std::vector<int> all(n);
  for (std::size_t i = 0; i < n; ++i) {
    base.push_back(to_intvec(support[i]));
    all[i] = static_cast<int>(i);
  }
  const AffineChart chart = affine_chart(base, all);
  const auto k = static_cast<std::size_t>(chart.dim);
  Int height_scale = 1;
  for (const auto &h : heights)
    mpz_lcm(height_scale.get_mpz_t(), height_scale.get_mpz_t(), h.get_den_mpz_t());
  std::vector<IntVec> local(n), lifted(n);
  for (std::size_t i = 0; i < n; ++i) {
    IntVec p(k);
    for (std::size_t c = 0; c < k; ++c)
      p[c] = base[i][chart.coords[c]];
    local[i] = p;
    p.push_back(heights[i].get_num() * (height_scale / heights[i].get_den()));
    lifted[i] = std::move(p);
  }
  if (k == 0 || affine_chart(lifted, all).dim != chart.dim + 1)
    return is_smooth(RegularSubdivision(f));
  FaceLattice lattice(lifted);
  for (const auto &top : lattice.facets(all, true)) {
    if (top.points.size() != k + 1)
      return false;
    std::vector<IntVec> simplex;
    for (int p : top.points)
      simplex.push_back(local[static_cast<std::size_t>(p)]);
    if (normalized_simplex_volume(simplex) != 1)
      return false;
  }
  return true;
}

DualComplex dual_complex(const TropicalPolynomial &f) {
  DualComplex dc{f.num_vars(), RegularSubdivision(f), {}, {}, {}, {}};
  const auto &s = dc.subdivision;
  const int m = static_cast<int>(f.num_vars());
  if (s.dim() != m)
    throw UsageError("dual_complex: Newton polytope is not full-dimensional");

  std::map<int, int> vertex_of_cell;
  for (int id : s.maximal_cells()) {
    const auto &c = s.cell(id);
    std::vector<LatticePoint> pts;
    std::vector<Rat> hs;
    for (int p : c.points) {
      pts.push_back(s.support()[static_cast<std::size_t>(p)]);
      hs.push_back(s.heights()[static_cast<std::size_t>(p)]);
    }
    auto x = solve_tie(pts, hs);
    if (!x || *x != s.dual_point(id))
      throw InvariantError("dual_complex: inconsistent maximal cell");
    const auto ev = evaluate(f, *x);
    if (ev.argmax != pts)
      throw InvariantError("dual_complex: maximal cell is not the argmax set");
    vertex_of_cell[id] = static_cast<int>(dc.vertices.size());
    dc.vertices.push_back({std::move(*x), id});
  }
  for (int id : s.cells_of_dim(m - 1)) {
    const auto &c = s.cell(id);
    if (!c.on_boundary()) {
      if (c.maximal_cells.size() != 2)
        throw InvariantError("dual_complex: interior cell not between two maximal cells");
      dc.edges.push_back({vertex_of_cell.at(c.maximal_cells[0]),
                          vertex_of_cell.at(c.maximal_cells[1]), id});
    } else {
      if (c.maximal_cells.size() != 1 || c.boundary_facets.size() != 1)
        throw InvariantError("dual_complex: boundary cell with bad incidence");
      dc.rays.push_back(
          {vertex_of_cell.at(c.maximal_cells[0]),
           s.polytope_facet_normals()[static_cast<std::size_t>(c.boundary_facets[0])],
           id});
    }
  }
  for (std::size_t i = 0; i < s.cells().size(); ++i)
    dc.duality.push_back({static_cast<int>(i), m - s.cells()[i].dim,
                          !s.cells()[i].on_boundary()});
  return dc;
}

MixedSubdivision::MixedSubdivision(std::vector<TropicalPolynomial> factors)
    : factors_(std::move(factors)), product_(tropical_product(factors_)),
      subdivision_(product_) {
  for (const auto &f : factors_)
    factor_supports_.push_back(f.support());
  const std::size_t m = product_.num_vars();
  privileged_.reserve(subdivision_.cells().size());
  for (std::size_t id = 0; id < subdivision_.cells().size(); ++id) {
    const RatVec w = subdivision_.normal_cone_point(static_cast<int>(id));
    std::vector<Summand> parts;
    for (std::size_t i = 0; i < factors_.size(); ++i) {
      Summand sm;
      Rat best;
      int idx = 0;
      for (const auto &[a, lambda] : factors_[i].terms()) {
        Rat v = w[m] * lambda;
        for (std::size_t c = 0; c < m; ++c)
          if (a[c] != 0)
            v += static_cast<long>(a[c]) * w[c];
        if (sm.points.empty() || v > best) {
          best = v;
          sm.points.clear();
        }
        if (v == best)
          sm.points.push_back(idx);
        ++idx;
      }
      std::vector<LatticePoint> pts;
      for (int p : sm.points)
        pts.push_back(factor_supports_[i][static_cast<std::size_t>(p)]);
      sm.dim = affine_dim(pts);
      parts.push_back(std::move(sm));
    }
    privileged_.push_back(std::move(parts));
  }
}

bool MixedSubdivision::is_mixed(int cell) const {
  const auto &parts = privileged(cell);
  return std::all_of(parts.begin(), parts.end(),
                     [](const Summand &s) { return s.dim >= 1; });
}

std::vector<int> MixedSubdivision::mixed_cells(int k) const {
  std::vector<int> out;
  for (int id : subdivision_.cells_of_dim(k))
    if (is_mixed(id))
      out.push_back(id);
  return out;
}

MixedSubdivision mixed_subdivision(const std::vector<TropicalPolynomial> &fs) {
  if (fs.empty())
    throw UsageError("mixed_subdivision: no factors");
  for (const auto &f : fs)
    if (f.num_vars() != fs.front().num_vars())
      throw UsageError("mixed_subdivision: variable count mismatch");
  return MixedSubdivision(fs);
}

} // namespace tropcurve
