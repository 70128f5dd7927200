#include "tropcurve/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

namespace tropcurve {

namespace {

nlohmann::json intvec_json(const std::vector<Int> &v) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto &x : v)
    out.push_back(x.get_si());
  return out;
}

nlohmann::json check_json(const NamedCheck &c) {
  return {{"name", c.name},
          {"status", c.result.skipped ? "SKIP" : (c.result.passed ? "PASS" : "FAIL")},
          {"detail", c.result.detail}};
}

std::string obj_number(const Rat &r) {
  char buf[64];
  double d = r.get_d();
  if (d == 0)
    d = 0; // no negative zero
  std::snprintf(buf, sizeof buf, "%.6f", d);
  return buf;
}

class ObjWriter {
public:
  int vertex(const RatVec &p) {
    os_ << 'v';
    for (std::size_t i = 0; i < 3; ++i)
      os_ << ' ' << obj_number(i < p.size() ? p[i] : Rat(0));
    os_ << '\n';
    return ++count_;
  }
  void line(int a, int b) { lines_ << "l " << a << ' ' << b << '\n'; }
  std::string str(const std::string &header) const {
    return "# " + header + "\n" + os_.str() + lines_.str();
  }

private:
  std::ostringstream os_, lines_;
  int count_ = 0;
};

RatVec ray_end(const RatVec &from, const std::vector<Int> &dir, const Rat &len) {
  RatVec out = from;
  for (std::size_t i = 0; i < out.size(); ++i)
    out[i] += len * Rat(dir[i]);
  return out;
}

} // namespace

nlohmann::json rat_to_json(const Rat &r) {
  if (r.get_den() == 1 && r.get_num().fits_slong_p())
    return r.get_num().get_si();
  return format_rat(r);
}

nlohmann::json ratvec_to_json(const RatVec &v) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto &x : v)
    out.push_back(rat_to_json(x));
  return out;
}

TropicalPolynomial read_polynomial_file(const std::string &path) {
  std::ifstream in(path);
  if (!in)
    throw UsageError("cannot open " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception &e) {
    throw UsageError(path + ": " + e.what());
  }
  try {
    return polynomial_from_json(j);
  } catch (const UsageError &e) {
    throw UsageError(path + ": " + e.what());
  }
}

nlohmann::json subdivision_json(const RegularSubdivision &s) {
  nlohmann::json support = nlohmann::json::array();
  for (std::size_t i = 0; i < s.support().size(); ++i)
    support.push_back({{"exp", s.support()[i]}, {"height", rat_to_json(s.heights()[i])}});
  nlohmann::json cells = nlohmann::json::array();
  for (const auto &c : s.cells())
    cells.push_back({{"dim", c.dim},
                     {"points", c.points},
                     {"vertices", c.vertices},
                     {"boundary", c.on_boundary()},
                     {"volume", rat_to_json(c.lattice_volume())}});
  return {{"schema", kSchemaVersion},
          {"dim", s.dim()},
          {"support", support},
          {"cells", cells},
          {"smooth", is_smooth(s)}};
}

nlohmann::json dual_complex_json(const DualComplex &dc) {
  nlohmann::json vertices = nlohmann::json::array();
  for (const auto &v : dc.vertices)
    vertices.push_back({{"coords", ratvec_to_json(v.coords)}, {"dual_cell", v.dual_cell}});
  nlohmann::json edges = nlohmann::json::array();
  for (const auto &e : dc.edges)
    edges.push_back({{"from", e.from}, {"to", e.to}, {"dual_cell", e.dual_cell}});
  nlohmann::json rays = nlohmann::json::array();
  for (const auto &r : dc.rays)
    rays.push_back({{"vertex", r.vertex},
                    {"dir", intvec_json(r.direction)},
                    {"dual_cell", r.dual_cell}});
  nlohmann::json duality = nlohmann::json::array();
  for (const auto &d : dc.duality)
    duality.push_back({{"cell", d.cell}, {"dual_dim", d.dual_dim}, {"bounded", d.bounded}});
  return {{"schema", kSchemaVersion},
          {"ambient_dim", dc.ambient_dim},
          {"vertices", vertices},
          {"edges", edges},
          {"rays", rays},
          {"duality", duality},
          {"subdivision", subdivision_json(dc.subdivision)}};
}

nlohmann::json transversality_json(const TransversalityReport &r) {
  nlohmann::json failures = nlohmann::json::array();
  for (const auto &f : r.failures) {
    nlohmann::json subset = nlohmann::json::array();
    for (auto i : f.subset)
      subset.push_back(i + 1);
    failures.push_back({{"factors", subset},
                        {"cell", f.cell},
                        {"cell_dim", f.cell_dim},
                        {"summand_dims", f.summand_dims},
                        {"reason", f.reason}});
  }
  return {{"transversal", r.transversal}, {"failures", failures}};
}

std::vector<NamedCheck> curve_checks(const IntersectionCurve &c) {
  std::vector<NamedCheck> out;
  const auto degrees = c.arrangement->all_degrees();
  const Verification no_degree{false, true, "skipped: some factor has no degree"};
  if (degrees) {
    out.push_back({"vertex_count", verify_vertex_count(c, *degrees)});
    out.push_back({"unbounded_edges", verify_unbounded_edges(c, *degrees)});
    out.push_back({"genus", verify_genus(c, *degrees)});
  } else {
    out.push_back({"vertex_count", no_degree});
    out.push_back({"unbounded_edges", no_degree});
    out.push_back({"genus", no_degree});
  }
  out.push_back({"volume_identity", verify_volume_identity(c)});
  out.push_back({"structure", verify_structure(c)});
  return out;
}

std::vector<NamedCheck> point_checks(const PointIntersection &p) {
  return {{"bernstein", verify_bernstein(p)}};
}

nlohmann::json curve_json(const IntersectionCurve &c) {
  nlohmann::json vertices = nlohmann::json::array();
  for (const auto &v : c.vertices)
    vertices.push_back({{"coords", ratvec_to_json(v.coords)},
                        {"mult", rat_to_json(v.multiplicity)}});
  nlohmann::json edges = nlohmann::json::array();
  for (const auto &e : c.edges)
    edges.push_back({e.from, e.to});
  nlohmann::json rays = nlohmann::json::array();
  for (const auto &r : c.rays)
    rays.push_back({{"vertex", r.vertex}, {"dir", intvec_json(r.direction)}});
  nlohmann::json stats = {{"v", rat_to_json(c.stats.weighted_vertices)},
                          {"vertex_count", c.stats.vertex_count},
                          {"bounded_edges", c.stats.bounded_edges},
                          {"x", c.stats.rays},
                          {"genus", c.stats.genus},
                          {"components", c.stats.components},
                          {"smooth", c.smooth()},
                          {"internal", nullptr},
                          {"external", nullptr}};
  if (c.stats.genus == 1) {
    const auto cls = classify_cycle_vertices(c);
    stats["internal"] = cls.internal.size();
    stats["external"] = cls.external.size();
  }
  nlohmann::json checks = nlohmann::json::array();
  for (const auto &ch : curve_checks(c))
    checks.push_back(check_json(ch));
  return {{"schema", kSchemaVersion},
          {"mode", "curve"},
          {"transversal", true},
          {"vertices", vertices},
          {"edges", edges},
          {"rays", rays},
          {"stats", stats},
          {"checks", checks}};
}

nlohmann::json points_json(const PointIntersection &p) {
  nlohmann::json points = nlohmann::json::array();
  for (const auto &q : p.points)
    points.push_back({{"coords", ratvec_to_json(q.coords)}, {"mult", rat_to_json(q.multiplicity)}});
  nlohmann::json checks = nlohmann::json::array();
  for (const auto &ch : point_checks(p))
    checks.push_back(check_json(ch));
  return {{"schema", kSchemaVersion},
          {"mode", "points"},
          {"transversal", true},
          {"points", points},
          {"total", rat_to_json(p.total())},
          {"checks", checks}};
}

nlohmann::json census_json(const CensusResult &r, const CensusConfig &config) {
  nlohmann::json histogram = nlohmann::json::object();
  for (const auto &[m, count] : r.histogram)
    histogram[std::to_string(m)] = count;
  nlohmann::json witnesses = nlohmann::json::array();
  for (const auto &[m, w] : r.witnesses) {
    nlohmann::json fc = nlohmann::json::array(), gc = nlohmann::json::array();
    for (const auto &c : quadric_coeffs(w.f))
      fc.push_back(rat_to_json(c));
    for (const auto &c : quadric_coeffs(w.g))
      gc.push_back(rat_to_json(c));
    witnesses.push_back({{"m", m},
                         {"attempts_until_found", w.attempt},
                         {"f_coeffs", fc},
                         {"g_coeffs", gc},
                         {"seed", w.seed},
                         {"external", w.external_count},
                         {"v", w.v},
                         {"x", w.x},
                         {"genus", w.genus}});
  }
  return {{"schema", kSchemaVersion},
          {"config",
           {{"seed", config.seed},
            {"max_attempts", config.max_attempts},
            {"coeff_min", config.coeff_min},
            {"coeff_max", config.coeff_max},
            {"include_paper_example", config.include_paper_example},
            {"targets", config.targets}}},
          {"attempts", r.attempts},
          {"accepted", r.accepted},
          {"all_targets_found", r.all_targets_found},
          {"rejections",
           {{"non_smooth_draws", r.rejections.non_smooth_draws},
            {"non_transversal", r.rejections.non_transversal},
            {"non_smooth_curve", r.rejections.non_smooth_curve},
            {"disconnected", r.rejections.disconnected}}},
          {"histogram", histogram},
          {"witnesses", witnesses}};
}

std::string census_csv(const CensusResult &r) {
  std::ostringstream os;
  os << "m,attempts_until_found,f_coeffs,g_coeffs,seed\n";
  auto coeffs = [](const TropicalPolynomial &f) {
    std::string s;
    for (const auto &c : quadric_coeffs(f))
      s += (s.empty() ? "" : " ") + format_rat(c);
    return s;
  };
  for (const auto &[m, w] : r.witnesses)
    os << m << ',' << w.attempt << ',' << coeffs(w.f) << ',' << coeffs(w.g) << ','
       << w.seed << '\n';
  return os.str();
}

std::string curve_obj(const IntersectionCurve &c, const Rat &ray_length) {
  ObjWriter w;
  std::vector<int> ids;
  for (const auto &v : c.vertices)
    ids.push_back(w.vertex(v.coords));
  for (const auto &e : c.edges)
    w.line(ids[static_cast<std::size_t>(e.from)], ids[static_cast<std::size_t>(e.to)]);
  for (const auto &r : c.rays) {
    const auto &from = c.vertices[static_cast<std::size_t>(r.vertex)].coords;
    w.line(ids[static_cast<std::size_t>(r.vertex)],
           w.vertex(ray_end(from, r.direction, ray_length)));
  }
  return w.str("tropical curve: " + std::to_string(c.vertices.size()) + " vertices, " +
               std::to_string(c.edges.size()) + " edges, " +
               std::to_string(c.rays.size()) + " rays");
}

std::string dual_complex_obj(const DualComplex &dc, const Rat &ray_length) {
  ObjWriter w;
  std::vector<int> ids;
  for (const auto &v : dc.vertices)
    ids.push_back(w.vertex(v.coords));
  for (const auto &e : dc.edges)
    w.line(ids[static_cast<std::size_t>(e.from)], ids[static_cast<std::size_t>(e.to)]);
  for (const auto &r : dc.rays) {
    const auto &from = dc.vertices[static_cast<std::size_t>(r.vertex)].coords;
    w.line(ids[static_cast<std::size_t>(r.vertex)],
           w.vertex(ray_end(from, r.direction, ray_length)));
  }
  return w.str("tropical hypersurface 1-skeleton: " + std::to_string(dc.vertices.size()) +
               " vertices, " + std::to_string(dc.edges.size()) + " edges, " +
               std::to_string(dc.rays.size()) + " rays");
}

std::string points_obj(const PointIntersection &p) {
  ObjWriter w;
  for (const auto &q : p.points)
    w.vertex(q.coords);
  return w.str("tropical intersection points: " + std::to_string(p.points.size()));
}

} // namespace tropcurve
