#include "tropcurve/intersection.hpp"

#include "tropcurve/hull.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

namespace tropcurve {

namespace {

std::vector<std::vector<std::size_t>> subsets_of_size_at_least(std::size_t n,
                                                               std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  for (std::size_t mask = 1; mask < (std::size_t{1} << n); ++mask) {
    std::vector<std::size_t> s;
    for (std::size_t i = 0; i < n; ++i)
      if (mask & (std::size_t{1} << i))
        s.push_back(i);
    if (s.size() >= k)
      out.push_back(std::move(s));
  }
  return out;
}

std::vector<LatticePoint> cell_points(const RegularSubdivision &s, int id) {
  std::vector<LatticePoint> out;
  for (int p : s.cell(id).points)
    out.push_back(s.support()[static_cast<std::size_t>(p)]);
  return out;
}

std::vector<LatticePoint> summand_points(const MixedSubdivision &ms,
                                         std::size_t factor, const Summand &sm) {
  std::vector<LatticePoint> out;
  for (int p : sm.points)
    out.push_back(ms.factor_support(factor)[static_cast<std::size_t>(p)]);
  return out;
}

IntVec to_intvec(const LatticePoint &p) {
  IntVec v;
  for (auto c : p)
    v.emplace_back(static_cast<long>(c));
  return v;
}

class UnionFind {
public:
  explicit UnionFind(std::size_t n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x)
      x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) { parent_[find(a)] = find(b); }

private:
  std::vector<std::size_t> parent_;
};

std::string join_dims(const std::vector<int> &dims) {
  std::ostringstream os;
  for (std::size_t i = 0; i < dims.size(); ++i)
    os << (i ? "+" : "") << dims[i];
  return os.str();
}

} // namespace

std::optional<std::vector<unsigned>> Arrangement::all_degrees() const {
  std::vector<unsigned> out;
  for (const auto &d : degrees) {
    if (!d)
      return std::nullopt;
    out.push_back(*d);
  }
  return out;
}

std::shared_ptr<const Arrangement>
make_arrangement(const std::vector<TropicalPolynomial> &fs) {
  if (fs.empty())
    throw UsageError("arrangement needs at least one hypersurface");
  for (std::size_t i = 0; i < fs.size(); ++i) {
    if (fs[i].num_vars() != fs.front().num_vars())
      throw UsageError("arrangement: variable count mismatch");
    if (!is_smooth(fs[i]))
      throw UsageError("arrangement: factor " + std::to_string(i + 1) +
                       " is not smooth");
  }
  std::vector<std::optional<unsigned>> degrees;
  for (const auto &f : fs)
    degrees.push_back(degree_of(f));
  return std::make_shared<const Arrangement>(
      Arrangement{fs, MixedSubdivision(fs), std::move(degrees)});
}

void check_subset(const MixedSubdivision &ms,
                  const std::vector<std::size_t> &subset,
                  TransversalityReport &report) {
  const auto &s = ms.subdivision();
  const int m = static_cast<int>(s.ambient_dim());
  const int codim = static_cast<int>(subset.size());
  bool any_mixed = false;
  bool top_dimensional = false;
  for (std::size_t id = 0; id < s.cells().size(); ++id) {
    const int cid = static_cast<int>(id);
    if (!ms.is_mixed(cid))
      continue;
    any_mixed = true;
    const auto &cell = s.cell(cid);
    std::vector<int> dims;
    int sum = 0;
    for (const auto &sm : ms.privileged(cid)) {
      dims.push_back(sm.dim);
      sum += sm.dim;
    }
    if (cell.dim != sum)
      report.failures.push_back({subset, cell_points(s, cid), cell.dim, dims,
                                 "not transversal: dim " +
                                     std::to_string(cell.dim) + " != " +
                                     join_dims(dims)});
    if (cell.dim < codim)
      report.failures.push_back({subset, cell_points(s, cid), cell.dim, dims,
                                 "not proper: intersection cell of dimension " +
                                     std::to_string(m - cell.dim)});
    if (cell.dim == codim)
      top_dimensional = true;
  }
  if (any_mixed && !top_dimensional)
    report.failures.push_back(
        {subset, {}, -1, {}, "not proper: no intersection cell of dimension " +
                                 std::to_string(m - codim)});
  report.transversal = report.failures.empty();
}

TransversalityReport check_transversality(const Arrangement &arr) {
  TransversalityReport report;
  const std::size_t n = arr.factors.size();
  if (n < 2)
    return report;
  std::vector<std::size_t> everything(n);
  std::iota(everything.begin(), everything.end(), 0);
  // Tightness of the full mixed subdivision is necessary: a non-tight cell
  // restricts to a non-tight cell of the sub-arrangement of its positive-
  // dimensional summands.
  const auto &s = arr.union_subdiv.subdivision();
  for (std::size_t id = 0; id < s.cells().size(); ++id) {
    const auto &parts = arr.union_subdiv.privileged(static_cast<int>(id));
    std::vector<int> dims;
    std::vector<std::size_t> active;
    int sum = 0;
    for (std::size_t i = 0; i < parts.size(); ++i) {
      dims.push_back(parts[i].dim);
      sum += parts[i].dim;
      if (parts[i].dim > 0)
        active.push_back(i);
    }
    if (sum != s.cells()[id].dim)
      report.failures.push_back({active, cell_points(s, static_cast<int>(id)),
                                 s.cells()[id].dim, dims,
                                 "not tight: dim " + std::to_string(s.cells()[id].dim) +
                                     " != " + join_dims(dims)});
  }
  if (!report.failures.empty()) {
    report.transversal = false;
    return report;
  }
  for (const auto &subset : subsets_of_size_at_least(n, 2)) {
    if (subset.size() == n) {
      check_subset(arr.union_subdiv, subset, report);
      continue;
    }
    std::vector<TropicalPolynomial> part;
    for (auto i : subset)
      part.push_back(arr.factors[i]);
    check_subset(MixedSubdivision(part), subset, report);
  }
  report.transversal = report.failures.empty();
  return report;
}

TransversalityReport check_transversality(const std::vector<TropicalPolynomial> &fs) {
  return check_transversality(*make_arrangement(fs));
}

bool IntersectionCurve::smooth() const {
  return std::all_of(vertices.begin(), vertices.end(),
                     [](const CurveVertex &v) { return v.multiplicity == 1; });
}

std::vector<int> IntersectionCurve::valences() const {
  std::vector<int> val(vertices.size(), 0);
  for (const auto &e : edges) {
    ++val[static_cast<std::size_t>(e.from)];
    ++val[static_cast<std::size_t>(e.to)];
  }
  for (const auto &r : rays)
    ++val[static_cast<std::size_t>(r.vertex)];
  return val;
}

namespace {

RatVec tie_point(const MixedSubdivision &ms, int cell) {
  const auto &s = ms.subdivision();
  std::vector<LatticePoint> pts;
  std::vector<Rat> hs;
  for (int p : s.cell(cell).points) {
    pts.push_back(s.support()[static_cast<std::size_t>(p)]);
    hs.push_back(s.heights()[static_cast<std::size_t>(p)]);
  }
  auto x = solve_tie(pts, hs);
  if (!x || *x != s.dual_point(cell))
    throw InvariantError("intersection: maximal cell without a consistent tie point");
  if (evaluate(ms.product(), *x).argmax != pts)
    throw InvariantError("intersection: tie point does not realize the cell");
  return *x;
}

} // namespace

IntersectionCurve extract_curve(std::shared_ptr<const Arrangement> arr) {
  const std::size_t n = arr->factors.size();
  const std::size_t m = arr->ambient_dim();
  if (m != n + 1)
    throw UsageError("extract_curve: need n hypersurfaces in R^(n+1)");
  auto report = check_transversality(*arr);
  if (!report.transversal)
    throw NotTransversalError(std::move(report));
  const auto &ms = arr->union_subdiv;
  const auto &s = ms.subdivision();
  if (s.dim() != static_cast<int>(m))
    throw UsageError("extract_curve: union Newton polytope is not full-dimensional");

  IntersectionCurve c;
  c.arrangement = arr;
  std::map<int, int> vertex_of_cell;
  for (int id : ms.mixed_cells(static_cast<int>(m))) {
    vertex_of_cell[id] = static_cast<int>(c.vertices.size());
    c.vertices.push_back({tie_point(ms, id), 2 * s.cell(id).lattice_volume(), id});
  }
  for (int id : ms.mixed_cells(static_cast<int>(n))) {
    const auto &cell = s.cell(id);
    if (!cell.on_boundary()) {
      if (cell.maximal_cells.size() != 2)
        throw InvariantError("extract_curve: interior edge dual without two neighbours");
      c.edges.push_back({vertex_of_cell.at(cell.maximal_cells[0]),
                         vertex_of_cell.at(cell.maximal_cells[1]), id});
    } else {
      if (cell.maximal_cells.size() != 1 || cell.boundary_facets.size() != 1)
        throw InvariantError("extract_curve: ray dual with bad incidence");
      const int facet = cell.boundary_facets[0];
      c.rays.push_back({vertex_of_cell.at(cell.maximal_cells[0]),
                        s.polytope_facet_normals()[static_cast<std::size_t>(facet)],
                        id, facet});
    }
  }

  UnionFind uf(c.vertices.size());
  for (const auto &e : c.edges)
    uf.unite(static_cast<std::size_t>(e.from), static_cast<std::size_t>(e.to));
  std::map<std::size_t, int> label;
  for (std::size_t v = 0; v < c.vertices.size(); ++v) {
    auto root = uf.find(v);
    auto it = label.find(root);
    if (it == label.end())
      it = label.emplace(root, static_cast<int>(label.size())).first;
    c.component.push_back(it->second);
  }

  c.stats.weighted_vertices = 0;
  for (const auto &v : c.vertices)
    c.stats.weighted_vertices += v.multiplicity;
  c.stats.vertex_count = c.vertices.size();
  c.stats.bounded_edges = c.edges.size();
  c.stats.rays = c.rays.size();
  c.stats.components = label.size();
  c.stats.genus = static_cast<long>(c.edges.size()) -
                  static_cast<long>(c.vertices.size()) +
                  static_cast<long>(label.size());
  return c;
}

IntersectionCurve extract_curve(const std::vector<TropicalPolynomial> &fs) {
  return extract_curve(make_arrangement(fs));
}

Rat PointIntersection::total() const {
  Rat t = 0;
  for (const auto &p : points)
    t += p.multiplicity;
  return t;
}

PointIntersection intersect_points(std::shared_ptr<const Arrangement> arr) {
  const std::size_t m = arr->ambient_dim();
  if (arr->factors.size() != m)
    throw UsageError("intersect_points: need m hypersurfaces in R^m");
  auto report = check_transversality(*arr);
  if (!report.transversal)
    throw NotTransversalError(std::move(report));
  PointIntersection out;
  out.arrangement = arr;
  const auto &ms = arr->union_subdiv;
  for (int id : ms.mixed_cells(static_cast<int>(m)))
    out.points.push_back(
        {tie_point(ms, id), ms.subdivision().cell(id).lattice_volume(), id});
  return out;
}

PointIntersection intersect_points(const std::vector<TropicalPolynomial> &fs) {
  return intersect_points(make_arrangement(fs));
}

namespace {

Rat product_of(const std::vector<unsigned> &d) {
  Rat p = 1;
  for (auto x : d)
    p *= x;
  return p;
}

Rat sum_of(const std::vector<unsigned> &d) {
  Rat s = 0;
  for (auto x : d)
    s += x;
  return s;
}

std::string str(const Rat &r) { return format_rat(r); }

} // namespace

Verification verify_vertex_count(const IntersectionCurve &c,
                                 const std::vector<unsigned> &degrees) {
  if (degrees.size() != c.factor_count())
    throw UsageError("verify_vertex_count: one degree per factor required");
  const Rat expected = product_of(degrees) * sum_of(degrees);
  const Rat &actual = c.stats.weighted_vertices;
  return {actual == expected, false,
          "sum m_P = " + str(actual) + ", expected " + str(expected)};
}

Verification verify_unbounded_edges(const IntersectionCurve &c,
                                    const std::vector<unsigned> &degrees) {
  if (degrees.size() != c.factor_count())
    throw UsageError("verify_unbounded_edges: one degree per factor required");
  if (!c.smooth())
    return {false, true, "skipped: curve is not smooth"};
  const Rat per_facet = product_of(degrees);
  const Rat expected = Rat(static_cast<long>(c.factor_count() + 2)) * per_facet;
  const auto &facets = c.arrangement->union_subdiv.subdivision().polytope_facets();
  std::vector<long> counts(facets.size(), 0);
  for (const auto &r : c.rays)
    ++counts[static_cast<std::size_t>(r.facet)];
  bool ok = Rat(static_cast<long>(c.rays.size())) == expected &&
            facets.size() == c.factor_count() + 2;
  std::ostringstream os;
  os << "x = " << c.rays.size() << ", expected " << expected << "; per facet";
  for (auto k : counts) {
    os << ' ' << k;
    ok = ok && Rat(k) == per_facet;
  }
  os << " (expected " << per_facet << " each)";
  return {ok, false, os.str()};
}

long genus(const IntersectionCurve &c) { return c.stats.genus; }

Verification verify_genus(const IntersectionCurve &c,
                          const std::vector<unsigned> &degrees) {
  if (degrees.size() != c.factor_count())
    throw UsageError("verify_genus: one degree per factor required");
  if (!c.smooth())
    return {false, true, "skipped: curve is not smooth"};
  if (!c.connected())
    return {false, true,
            "skipped: curve has " + std::to_string(c.stats.components) +
                " components; the genus formula assumes a connected curve"};
  const long g = c.stats.genus;
  // Euler characteristic route, independent of the cycle count
  const long v = static_cast<long>(c.stats.vertex_count);
  const long x = static_cast<long>(c.stats.rays);
  const Rat closed = product_of(degrees) *
                     (sum_of(degrees) - Rat(static_cast<long>(c.factor_count() + 2)));
  const bool euler_ok = 2 * g - 2 == v - x;
  const bool closed_ok = Rat(2 * g - 2) == closed;
  std::ostringstream os;
  os << "g = " << g << "; 2g-2 = " << 2 * g - 2 << ", v-x = " << v - x
     << ", closed form " << closed;
  return {euler_ok && closed_ok, false, os.str()};
}

Rat alternating_volume_sum(const std::vector<Polytope> &polytopes) {
  const std::size_t n = polytopes.size();
  std::vector<Polytope> partial(std::size_t{1} << n);
  Rat total = 0;
  for (std::size_t mask = 1; mask < partial.size(); ++mask) {
    std::size_t high = 0;
    while ((mask >> (high + 1)) != 0)
      ++high;
    const std::size_t rest = mask & ~(std::size_t{1} << high);
    partial[mask] = rest == 0 ? polytopes[high]
                              : minkowski_sum(partial[rest], polytopes[high]);
    const auto size = static_cast<std::size_t>(__builtin_popcountll(mask));
    if ((n - size) % 2 == 0)
      total += partial[mask].volume();
    else
      total -= partial[mask].volume();
  }
  return total;
}

Verification verify_volume_identity(const IntersectionCurve &c) {
  Rat lhs = 0;
  for (const auto &v : c.vertices)
    lhs += v.multiplicity / 2;
  std::vector<Polytope> polys;
  for (const auto &f : c.arrangement->factors)
    polys.push_back(newton_polytope(f));
  const Rat rhs = alternating_volume_sum(polys);
  return {lhs == rhs, false,
          "sum vol(P^dual) = " + str(lhs) + ", alternating volume sum = " + str(rhs)};
}

Verification verify_volume_identity(const std::vector<TropicalPolynomial> &fs) {
  return verify_volume_identity(extract_curve(fs));
}

Verification verify_bernstein(const PointIntersection &p) {
  std::vector<Polytope> polys;
  for (const auto &f : p.arrangement->factors)
    polys.push_back(newton_polytope(f));
  const Rat mv = mixed_volume(polys);
  const Rat total = p.total();
  bool ok = total == mv;
  std::string detail = "sum m_P = " + str(total) + ", mixed volume = " + str(mv);
  if (auto d = p.arrangement->all_degrees()) {
    const Rat bezout = product_of(*d);
    ok = ok && total == bezout;
    detail += ", product of degrees = " + str(bezout);
  }
  return {ok, false, detail};
}

Verification verify_structure(const IntersectionCurve &c) {
  std::vector<std::string> problems;
  const auto val = c.valences();
  for (std::size_t v = 0; v < val.size(); ++v)
    if (val[v] != 3)
      problems.push_back("vertex " + std::to_string(v) + " has valence " +
                         std::to_string(val[v]));
  for (std::size_t v = 0; v < c.vertices.size(); ++v) {
    const Rat twice = 2 * c.vertices[v].multiplicity;
    if (c.vertices[v].multiplicity <= 0 || twice.get_den() != 1)
      problems.push_back("vertex " + std::to_string(v) + " has multiplicity " +
                         str(c.vertices[v].multiplicity));
  }
  const auto e = c.edges.size() + c.rays.size();
  if (2 * e != 3 * c.vertices.size() + c.rays.size())
    problems.push_back("edge count " + std::to_string(e) + " != (3v+x)/2");

  const auto &ms = c.arrangement->union_subdiv;
  for (std::size_t v = 0; v < c.vertices.size(); ++v) {
    const auto &parts = ms.privileged(c.vertices[v].dual_cell);
    std::size_t intervals = 0, triangles = 0;
    for (std::size_t i = 0; i < parts.size(); ++i) {
      const auto pts = summand_points(ms, i, parts[i]);
      std::vector<IntVec> ints;
      for (const auto &p : pts)
        ints.push_back(to_intvec(p));
      if (parts[i].dim == 1 && pts.size() == 2 && normalized_simplex_volume(ints) == 1)
        ++intervals;
      else if (parts[i].dim == 2 && pts.size() == 3 &&
               normalized_simplex_volume(ints) == 1)
        ++triangles;
    }
    if (triangles != 1 || intervals + 1 != parts.size())
      problems.push_back("vertex " + std::to_string(v) +
                         " dual is not (primitive intervals) + primitive triangle");
  }
  std::string detail = problems.empty() ? "all structural invariants hold"
                                        : problems.front();
  if (problems.size() > 1)
    detail += " (+" + std::to_string(problems.size() - 1) + " more)";
  return {problems.empty(), false, detail};
}

CycleClassification classify_cycle_vertices(std::size_t vertex_count,
                                            const std::vector<std::pair<int, int>> &edges) {
  std::vector<std::vector<int>> adj(vertex_count);
  for (const auto &[a, b] : edges) {
    adj[static_cast<std::size_t>(a)].push_back(b);
    adj[static_cast<std::size_t>(b)].push_back(a);
  }
  std::vector<int> degree(vertex_count);
  std::vector<bool> removed(vertex_count, false);
  std::vector<int> stack;
  for (std::size_t v = 0; v < vertex_count; ++v) {
    degree[v] = static_cast<int>(adj[v].size());
    if (degree[v] <= 1)
      stack.push_back(static_cast<int>(v));
  }
  while (!stack.empty()) {
    const auto v = static_cast<std::size_t>(stack.back());
    stack.pop_back();
    if (removed[v])
      continue;
    removed[v] = true;
    for (int w : adj[v]) {
      const auto wi = static_cast<std::size_t>(w);
      if (!removed[wi] && --degree[wi] <= 1)
        stack.push_back(w);
    }
  }
  CycleClassification out;
  for (std::size_t v = 0; v < vertex_count; ++v)
    (removed[v] ? out.external : out.internal).push_back(static_cast<int>(v));
  return out;
}

CycleClassification classify_cycle_vertices(const IntersectionCurve &c) {
  if (c.stats.genus != 1)
    throw UsageError("classify_cycle_vertices: curve has genus " +
                     std::to_string(c.stats.genus) + ", expected 1");
  std::vector<std::pair<int, int>> edges;
  for (const auto &e : c.edges)
    edges.emplace_back(e.from, e.to);
  return classify_cycle_vertices(c.vertices.size(), edges);
}

bool skeleton_disjointness_check(const std::vector<TropicalPolynomial> &fs) {
  if (fs.size() < 2)
    return true;
  const int m = static_cast<int>(fs.front().num_vars());
  for (const auto &subset : subsets_of_size_at_least(fs.size(), 2)) {
    std::vector<TropicalPolynomial> part;
    for (auto i : subset)
      part.push_back(fs[i]);
    const MixedSubdivision ms(part);
    for (std::size_t id = 0; id < ms.subdivision().cells().size(); ++id) {
      if (!ms.is_mixed(static_cast<int>(id)))
        continue;
      int sum = 0;
      for (const auto &sm : ms.privileged(static_cast<int>(id)))
        sum += sm.dim;
      // cells of dims m - d_i meeting with sum(m - d_i) < m(|K|-1) would
      // need sum(d_i) > m
      if (sum > m)
        return false;
    }
  }
  return true;
}

} // namespace tropcurve
