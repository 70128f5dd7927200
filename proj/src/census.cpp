#include "tropcurve/census.hpp"

#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <string>
#include <thread>

namespace tropcurve {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::vector<Rat> to_rats(std::initializer_list<long> v) {
  std::vector<Rat> out;
  for (long x : v)
    out.emplace_back(x);
  return out;
}

struct AttemptOutcome {
  CensusRejections rejections;
  std::optional<CensusRecord> record;
};

AttemptOutcome run_attempt(const CensusConfig &config, std::uint64_t index) {
  AttemptOutcome out;
  if (config.include_paper_example && index == 0) {
    out.record = evaluate_pair(paper_quadric_f(), paper_quadric_g(), out.rejections);
  } else {
    auto rng = attempt_rng(config.seed, index);
    auto f = random_smooth_quadric(rng, config.coeff_min, config.coeff_max);
    auto g = random_smooth_quadric(rng, config.coeff_min, config.coeff_max);
    out.rejections.non_smooth_draws = f.rejected + g.rejected;
    out.record = evaluate_pair(f.f, g.f, out.rejections);
  }
  if (out.record) {
    out.record->seed = config.seed;
    out.record->attempt = index;
  }
  return out;
}

void add(CensusRejections &acc, const CensusRejections &r) {
  acc.non_smooth_draws += r.non_smooth_draws;
  acc.non_transversal += r.non_transversal;
  acc.non_smooth_curve += r.non_smooth_curve;
  acc.disconnected += r.disconnected;
}

// Unimodular simplices contain no lattice points besides their vertices,
// so a smooth quadric uses every edge midpoint of Gamma_2^3 as a vertex,
// which needs it lifted strictly above the edge. Indices follow
// quadric_monomials().
bool midpoints_lifted(const std::vector<std::int64_t> &c) {
  static const int edges[6][3] = {{1, 0, 4}, {2, 0, 7}, {3, 0, 9},
                                  {5, 4, 7}, {6, 4, 9}, {8, 7, 9}};
  for (const auto &e : edges)
    if (2 * c[static_cast<std::size_t>(e[0])] <=
        c[static_cast<std::size_t>(e[1])] + c[static_cast<std::size_t>(e[2])])
      return false;
  return true;
}

} // namespace

const std::vector<LatticePoint> &quadric_monomials() {
  static const std::vector<LatticePoint> monomials{
      {0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {2, 0, 0},
      {1, 1, 0}, {1, 0, 1}, {0, 2, 0}, {0, 1, 1}, {0, 0, 2}};
  return monomials;
}

TropicalPolynomial quadric_from_coeffs(const std::vector<Rat> &coeffs) {
  const auto &mons = quadric_monomials();
  if (coeffs.size() != mons.size())
    throw UsageError("a quadric in R^3 needs 10 coefficients");
  TropicalPolynomial::Terms terms;
  for (std::size_t i = 0; i < mons.size(); ++i)
    terms.emplace(mons[i], coeffs[i]);
  return TropicalPolynomial(3, std::move(terms));
}

std::vector<Rat> quadric_coeffs(const TropicalPolynomial &f) {
  std::vector<Rat> out;
  for (const auto &a : quadric_monomials()) {
    auto it = f.terms().find(a);
    if (it == f.terms().end() || f.size() != quadric_monomials().size())
      throw UsageError("not a full-support quadric in R^3");
    out.push_back(it->second);
  }
  return out;
}

TropicalPolynomial paper_quadric_f() {
  return quadric_from_coeffs(to_rats({-6, 13, -3, -4, 10, 2, 4, -9, 5, -9}));
}

TropicalPolynomial paper_quadric_g() {
  return quadric_from_coeffs(to_rats({-15, -10, -4, 2, -7, -2, 0, 2, 15, -1}));
}

std::int64_t uniform_int(std::mt19937_64 &rng, std::int64_t lo, std::int64_t hi) {
  if (lo > hi)
    throw UsageError("uniform_int: empty range");
  const std::uint64_t span = static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo);
  if (span == UINT64_MAX)
    return static_cast<std::int64_t>(rng());
  const std::uint64_t n = span + 1;
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
  std::uint64_t r;
  do
    r = rng();
  while (r >= limit);
  return static_cast<std::int64_t>(static_cast<std::uint64_t>(lo) + r % n);
}

std::mt19937_64 attempt_rng(std::uint64_t seed, std::uint64_t index) {
  return std::mt19937_64(splitmix64(splitmix64(seed) ^ index));
}

QuadricDraw random_smooth_quadric(std::mt19937_64 &rng, std::int64_t lo,
                                  std::int64_t hi, std::size_t max_resamples) {
  for (std::size_t tries = 0; tries <= max_resamples; ++tries) {
    std::vector<std::int64_t> draw;
    for (std::size_t i = 0; i < quadric_monomials().size(); ++i)
      draw.push_back(uniform_int(rng, lo, hi));
    if (!midpoints_lifted(draw))
      continue;
    std::vector<Rat> coeffs;
    for (auto c : draw)
      coeffs.emplace_back(static_cast<long>(c));
    auto f = quadric_from_coeffs(coeffs);
    if (is_smooth(f))
      return {std::move(f), tries};
  }
  throw UsageError("random_smooth_quadric: no smooth quadric after " +
                   std::to_string(max_resamples) + " resamples");
}

void validate(const CensusConfig &config) {
  if (config.coeff_min > config.coeff_max)
    throw UsageError("census: coefficient range is empty");
  for (int m : config.targets)
    if (m < 3 || m > 16)
      throw UsageError("census: target " + std::to_string(m) + " outside [3, 16]");
}

std::optional<CensusRecord> evaluate_pair(const TropicalPolynomial &f,
                                          const TropicalPolynomial &g,
                                          CensusRejections &rejections) {
  auto arr = make_arrangement({f, g});
  if (!check_transversality(*arr).transversal) {
    ++rejections.non_transversal;
    return std::nullopt;
  }
  const auto curve = extract_curve(arr);
  if (!curve.smooth()) {
    ++rejections.non_smooth_curve;
    return std::nullopt;
  }
  if (!curve.connected()) {
    ++rejections.disconnected;
    return std::nullopt;
  }
  if (curve.stats.genus != 1)
    throw InvariantError("census: smooth connected quadric curve of genus " +
                         std::to_string(curve.stats.genus));
  const auto cls = classify_cycle_vertices(curve);
  CensusRecord r{f, g};
  r.internal_count = static_cast<int>(cls.internal.size());
  r.external_count = static_cast<int>(cls.external.size());
  r.v = curve.stats.vertex_count;
  r.x = curve.stats.rays;
  r.genus = curve.stats.genus;
  return r;
}

unsigned default_thread_count() {
  if (const char *env = std::getenv("TROPCURVE_THREADS")) {
    try {
      const long n = std::stol(env);
      if (n > 0)
        return static_cast<unsigned>(n);
    } catch (const std::exception &) {
    }
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

CensusResult run_census(const CensusConfig &config) {
  validate(config);
  std::set<int> targets = config.targets;
  if (targets.empty())
    for (int m = 3; m <= 16; ++m)
      targets.insert(m);

  const std::uint64_t first = config.include_paper_example ? 0 : 1;
  const std::uint64_t end = 1 + config.max_attempts;
  // TROPCURVE_THREADS caps an explicit request as well as the default
  unsigned threads = config.threads ? config.threads : default_thread_count();
  if (std::getenv("TROPCURVE_THREADS"))
    threads = std::min(threads, default_thread_count());

  CensusResult result;
  const std::uint64_t block = 16 * threads;
  for (std::uint64_t start = first; start < end && !result.all_targets_found;
       start += block) {
    const std::uint64_t stop = std::min(end, start + block);
    std::vector<AttemptOutcome> outcomes(stop - start);
    std::atomic<std::uint64_t> next{start};
    std::exception_ptr error;
    std::mutex error_mutex;
    auto worker = [&] {
      for (std::uint64_t i = next++; i < stop; i = next++) {
        try {
          outcomes[i - start] = run_attempt(config, i);
        } catch (...) {
          std::lock_guard lock(error_mutex);
          if (!error)
            error = std::current_exception();
        }
      }
    };
    if (threads == 1) {
      worker();
    } else {
      std::vector<std::thread> pool;
      for (unsigned t = 0; t < threads; ++t)
        pool.emplace_back(worker);
      for (auto &t : pool)
        t.join();
    }
    if (error)
      std::rethrow_exception(error);

    for (auto &o : outcomes) {
      ++result.attempts;
      add(result.rejections, o.rejections);
      if (o.record) {
        ++result.accepted;
        const int m = o.record->internal_count;
        ++result.histogram[m];
        if (targets.contains(m) && !result.witnesses.contains(m))
          result.witnesses.emplace(m, std::move(*o.record));
      }
      if (result.witnesses.size() == targets.size()) {
        result.all_targets_found = true;
        break;
      }
    }
  }
  return result;
}

CensusRecord reproduce_paper_example() {
  CensusRejections rejections;
  auto r = evaluate_pair(paper_quadric_f(), paper_quadric_g(), rejections);
  if (!r || r->genus != 1 || r->internal_count != 16 || r->external_count != 0 ||
      r->v != 16 || r->x != 16)
    throw InvariantError("worked example does not reproduce");
  return *r;
}

bool reverify(const CensusRecord &r) {
  CensusRejections rejections;
  const auto again = evaluate_pair(r.f, r.g, rejections);
  return again && again->internal_count == r.internal_count &&
         again->external_count == r.external_count && again->v == r.v &&
         again->x == r.x && again->genus == r.genus && r.v == 16 && r.x == 16 &&
         r.genus == 1 && r.internal_count >= 3 && r.internal_count <= 16;
}

} // namespace tropcurve
