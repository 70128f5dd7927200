#include "tropcurve/census.hpp"
#include "tropcurve/intersection.hpp"
#include "tropcurve/io.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using namespace tropcurve;

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitNotTransversal = 3;

struct Options {
  std::vector<std::string> inputs;
  std::string output;
  std::string format;
  std::uint64_t seed = 1;
  std::size_t max_attempts = 1000;
  std::int64_t coeff_min = -15;
  std::int64_t coeff_max = 15;
  std::string ray_length = "1";
  bool include_paper_example = false;
  std::vector<int> targets;
  unsigned threads = 0;
};

void emit(const Options &o, const std::string &text) {
  if (o.output.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(o.output, std::ios::binary);
  if (!out)
    throw UsageError("cannot write " + o.output);
  out << text;
}

std::vector<TropicalPolynomial> read_inputs(const Options &o) {
  std::vector<TropicalPolynomial> fs;
  for (const auto &path : o.inputs)
    fs.push_back(read_polynomial_file(path));
  for (const auto &f : fs)
    if (f.num_vars() != fs.front().num_vars())
      throw UsageError("input polynomials have different variable counts");
  return fs;
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

int report_not_transversal(const TransversalityReport &r, const Options &o) {
  if (o.format == "json") {
    nlohmann::json j = transversality_json(r);
    j["schema"] = kSchemaVersion;
    emit(o, j.dump(2) + "\n");
  } else {
    std::ostringstream os;
    os << "not transversal\n";
    for (const auto &f : r.failures) {
      os << "  factors {";
      for (std::size_t i = 0; i < f.subset.size(); ++i)
        os << (i ? "," : "") << f.subset[i] + 1;
      os << "}: " << f.reason << "\n";
    }
    std::cerr << os.str();
  }
  return kExitNotTransversal;
}

int cmd_analyze(const Options &o) {
  const auto f = read_polynomial_file(o.inputs.front());
  const RegularSubdivision s(f);
  const auto degree = degree_of(f);
  std::optional<DualComplex> dc;
  if (s.dim() == static_cast<int>(f.num_vars()))
    dc = dual_complex(f);
  if (o.format == "json") {
    nlohmann::json j = {{"schema", kSchemaVersion},
                        {"vars", f.num_vars()},
                        {"terms", f.size()},
                        {"degree", degree ? nlohmann::json(*degree) : nlohmann::json()},
                        {"smooth", is_smooth(s)},
                        {"newton_dim", s.dim()},
                        {"maximal_cells", s.maximal_cells().size()},
                        {"cells", s.cells().size()}};
    if (dc)
      j["dual_complex"] = {{"vertices", dc->vertices.size()},
                           {"edges", dc->edges.size()},
                           {"rays", dc->rays.size()}};
    emit(o, j.dump(2) + "\n");
    return 0;
  }
  std::ostringstream os;
  os << "variables: " << f.num_vars() << "\n"
     << "terms: " << f.size() << "\n"
     << "degree: " << (degree ? std::to_string(*degree) : "none") << "\n"
     << "smooth: " << yes_no(is_smooth(s)) << "\n"
     << "newton polytope dimension: " << s.dim() << "\n"
     << "maximal cells: " << s.maximal_cells().size() << "\n"
     << "cells: " << s.cells().size() << "\n";
  if (dc)
    os << "hypersurface vertices: " << dc->vertices.size() << "\n"
       << "hypersurface bounded edges: " << dc->edges.size() << "\n"
       << "hypersurface rays: " << dc->rays.size() << "\n";
  else
    os << "hypersurface: not computed (Newton polytope not full-dimensional)\n";
  emit(o, os.str());
  return 0;
}

std::string checks_text(const std::vector<NamedCheck> &checks) {
  std::ostringstream os;
  for (const auto &c : checks)
    os << "  " << (c.result.skipped ? "SKIP" : (c.result.passed ? "PASS" : "FAIL")) << " "
       << c.name << ": " << c.result.detail << "\n";
  return os.str();
}

int cmd_intersect(const Options &o) {
  const auto fs = read_inputs(o);
  const std::size_t m = fs.front().num_vars();
  if (fs.size() != m && fs.size() + 1 != m)
    throw UsageError("need m or m-1 polynomials in m variables, got " +
                     std::to_string(fs.size()) + " in " + std::to_string(m));
  const auto arr = make_arrangement(fs);
  const auto report = check_transversality(*arr);
  if (!report.transversal)
    return report_not_transversal(report, o);
  if (fs.size() == m) {
    const auto p = intersect_points(arr);
    if (o.format == "json") {
      emit(o, points_json(p).dump(2) + "\n");
      return 0;
    }
    std::ostringstream os;
    os << "transversal: yes\nmode: points\npoints: " << p.points.size()
       << "\nsum of multiplicities: " << format_rat(p.total()) << "\n";
    for (const auto &q : p.points) {
      os << "  (";
      for (std::size_t i = 0; i < q.coords.size(); ++i)
        os << (i ? ", " : "") << format_rat(q.coords[i]);
      os << ") multiplicity " << format_rat(q.multiplicity) << "\n";
    }
    os << "checks:\n" << checks_text(point_checks(p));
    emit(o, os.str());
    return 0;
  }
  const auto c = extract_curve(arr);
  if (o.format == "json") {
    emit(o, curve_json(c).dump(2) + "\n");
    return 0;
  }
  std::ostringstream os;
  os << "transversal: yes\nmode: curve\n"
     << "v (sum of multiplicities): " << format_rat(c.stats.weighted_vertices) << "\n"
     << "vertices: " << c.stats.vertex_count << "\n"
     << "bounded edges: " << c.stats.bounded_edges << "\n"
     << "x (rays): " << c.stats.rays << "\n"
     << "components: " << c.stats.components << "\n"
     << "genus: " << c.stats.genus << "\n"
     << "smooth: " << yes_no(c.smooth()) << "\n";
  if (c.stats.genus == 1) {
    const auto cls = classify_cycle_vertices(c);
    os << "internal vertices: " << cls.internal.size() << "\n"
       << "external vertices: " << cls.external.size() << "\n";
  }
  os << "checks:\n" << checks_text(curve_checks(c));
  emit(o, os.str());
  return 0;
}

int cmd_census(const Options &o) {
  CensusConfig config;
  config.seed = o.seed;
  config.max_attempts = o.max_attempts;
  config.coeff_min = o.coeff_min;
  config.coeff_max = o.coeff_max;
  config.include_paper_example = o.include_paper_example;
  config.targets = {o.targets.begin(), o.targets.end()};
  config.threads = o.threads;
  const auto result = run_census(config);
  emit(o, o.format == "json" ? census_json(result, config).dump(2) + "\n"
                             : census_csv(result));
  std::cerr << "attempts " << result.attempts << ", accepted " << result.accepted
            << ", distinct m " << result.histogram.size() << "\n";
  return 0;
}

int cmd_export(const Options &o) {
  const auto fs = read_inputs(o);
  const Rat ray_length = parse_rat(o.ray_length);
  if (ray_length <= 0)
    throw UsageError("--ray-length must be positive");
  const std::size_t m = fs.front().num_vars();
  if (fs.size() == 1) {
    const auto dc = dual_complex(fs.front());
    emit(o, o.format == "json" ? dual_complex_json(dc).dump(2) + "\n"
                               : dual_complex_obj(dc, ray_length));
    return 0;
  }
  if (fs.size() != m && fs.size() + 1 != m)
    throw UsageError("need 1, m-1 or m polynomials in m variables");
  const auto arr = make_arrangement(fs);
  const auto report = check_transversality(*arr);
  if (!report.transversal)
    return report_not_transversal(report, o);
  if (fs.size() == m) {
    const auto p = intersect_points(arr);
    emit(o, o.format == "json" ? points_json(p).dump(2) + "\n" : points_obj(p));
  } else {
    const auto c = extract_curve(arr);
    emit(o, o.format == "json" ? curve_json(c).dump(2) + "\n" : curve_obj(c, ray_length));
  }
  return 0;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Tropical hypersurfaces, their transversal intersections and curve topology"};
  app.require_subcommand(1);
  Options o;

  auto *analyze = app.add_subcommand("analyze", "Degree, smoothness and subdivision of one polynomial");
  analyze->add_option("file", o.inputs, "polynomial JSON")->required()->expected(1);
  analyze->add_option("--format", o.format, "text or json")
      ->check(CLI::IsMember({"text", "json"}))
      ->default_val("text");
  analyze->add_option("-o,--output", o.output, "output file (default stdout)");

  auto *intersect = app.add_subcommand("intersect", "Intersect m or m-1 hypersurfaces in R^m");
  intersect->add_option("files", o.inputs, "polynomial JSON files")->required();
  intersect->add_option("--format", o.format, "text or json")
      ->check(CLI::IsMember({"text", "json"}))
      ->default_val("text");
  intersect->add_option("-o,--output", o.output, "output file (default stdout)");

  auto *census = app.add_subcommand("census", "Random search over pairs of quadrics in R^3");
  census->add_option("--seed", o.seed, "random seed")->default_val(1);
  census->add_option("--max-attempts", o.max_attempts, "number of random pairs")
      ->default_val(1000);
  census->add_option("--coeff-min", o.coeff_min, "smallest coefficient")->default_val(-15);
  census->add_option("--coeff-max", o.coeff_max, "largest coefficient")->default_val(15);
  census->add_flag("--include-paper-example", o.include_paper_example,
                   "evaluate the worked example as attempt 0");
  census->add_option("--targets", o.targets, "internal vertex counts to search for")
      ->delimiter(',')
      ->check(CLI::Range(3, 16));
  census->add_option("--threads", o.threads, "worker threads (capped by TROPCURVE_THREADS)");
  census->add_option("--format", o.format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}))
      ->default_val("csv");
  census->add_option("-o,--output", o.output, "output file (default stdout)");

  auto *exp = app.add_subcommand("export", "Mesh or JSON of a hypersurface, curve or point set");
  exp->add_option("files", o.inputs, "polynomial JSON files")->required();
  exp->add_option("--format", o.format, "obj or json")
      ->check(CLI::IsMember({"obj", "json"}))
      ->default_val("obj");
  exp->add_option("--ray-length", o.ray_length, "ray truncation length")->default_val("1");
  exp->add_option("-o,--output", o.output, "output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*analyze)
      return cmd_analyze(o);
    if (*intersect)
      return cmd_intersect(o);
    if (*census)
      return cmd_census(o);
    return cmd_export(o);
  } catch (const NotTransversalError &e) {
    return report_not_transversal(e.report(), o);
  } catch (const UsageError &e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const InvariantError &e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
}
