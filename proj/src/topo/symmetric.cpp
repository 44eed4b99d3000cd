#include "symvar/symmetric.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "symvar/sturm.hpp"

namespace symvar {

std::vector<Rational> random_balanced_point(unsigned n, std::mt19937_64& rng) {
  std::uniform_int_distribution<long> dist(-10, 10);
  std::vector<long> v(n);
  long sum = 0;
  for (auto& x : v) {
    x = dist(rng);
    sum += x;
  }
  std::vector<Rational> out;
  out.reserve(n);
  for (long x : v) out.emplace_back(static_cast<long>(n) * x - sum);
  return out;
}

namespace {

unsigned threshold_for(int d) { return d <= 1 ? 2u : (1u << (d - 1)) + 1; }

bool degenerate_line(const UnivariatePoly& p) {
  if (p.degree() <= 1) return false;
  if (p.degree() <= 3) return sgn(discriminant(p)) == 0;
  return !is_squarefree(p);
}

}  // namespace

ComponentReport symmetric_b0(const SigmaCombination& f, unsigned n, unsigned sample_count, std::uint64_t seed) {
  const int d = f.degree();
  if (d < 1) throw std::invalid_argument("symmetric_b0 needs a combination of degree >= 1");
  if (n < std::max(3u, static_cast<unsigned>(d))) throw std::invalid_argument("symmetric_b0 needs n >= max(3, d)");
  if (sample_count == 0) throw std::invalid_argument("symmetric_b0 needs at least one sample");

  std::mt19937_64 rng(seed);
  SampleSummary summary;
  for (unsigned s = 0; s < sample_count; ++s) {
    const auto x = random_balanced_point(n, rng);
    const auto line = diagonal_restriction(f, n, x);
    ++summary.total;
    if (degenerate_line(line.poly)) {
      ++summary.degenerate;
      continue;
    }
    ++summary.root_counts[sturm_count(line.poly)];
  }

  ComponentReport report;
  report.seed = seed;
  report.samples = summary;
  if (summary.degenerate > kMaxDegenerateFraction * summary.total)
    throw std::runtime_error("symmetric_b0: " + std::to_string(summary.degenerate) + " of " +
                             std::to_string(summary.total) + " sampled lines are degenerate");
  if (summary.root_counts.empty()) throw std::runtime_error("symmetric_b0: no nondegenerate line sampled");
  if (summary.degenerate > 0) report.notes.push_back("degenerate lines excluded");

  report.count = summary.root_counts.rbegin()->first;
  if (summary.root_counts.size() == 1) {
    report.certified = Certification::sample_certified;
    report.notes.push_back("constant root count on sampled lines; evidence, not a proof");
  } else {
    report.certified = Certification::upper_structure_only;
    report.notes.push_back("root count varies across lines; count is the maximum observed");
  }
  if (d >= 1) report.bound_context = bounds(static_cast<unsigned>(d), n);
  return report;
}

StabilizationScan stabilization_scan(const SigmaCombination& f, unsigned n_min, unsigned n_max,
                                     unsigned sample_count, std::uint64_t seed) {
  const int d = f.degree();
  if (d < 1) throw std::invalid_argument("stabilization_scan needs a combination of degree >= 1");
  if (n_min < static_cast<unsigned>(d) || n_min > n_max)
    throw std::invalid_argument("stabilization_scan needs d <= n_min <= n_max");
  StabilizationScan scan;
  scan.monotone_from = threshold_for(d);
  for (unsigned n = std::max(n_min, 3u); n <= n_max; ++n) scan.rows.emplace_back(n, symmetric_b0(f, n, sample_count, seed));

  std::optional<long> prev;
  bool tail_constant = true;
  std::optional<long> tail_value;
  for (const auto& [n, report] : scan.rows) {
    if (n < scan.monotone_from) continue;
    if (prev && report.count > *prev)
      throw InvariantViolation("component count increased from " + std::to_string(*prev) + " to " +
                               std::to_string(report.count) + " at n = " + std::to_string(n) +
                               " (expected non-increasing for n >= " + std::to_string(scan.monotone_from) + ")");
    if (tail_value && *tail_value != report.count) tail_constant = false;
    tail_value = report.count;
    prev = report.count;
  }
  if (tail_value && tail_constant) scan.stabilized_value = tail_value;
  return scan;
}

bool orbit_stability_check(const MultiAffinePoly& p, const Box& box, unsigned res, const GridOptions& opts) {
  if (!is_symmetric(p)) throw std::invalid_argument("orbit check needs a symmetric polynomial");
  if (!box.is_symmetric()) throw std::invalid_argument("orbit check needs a box with equal axes");
  const CellComplex cx = zero_cells(p, box, res, opts);
  const unsigned n = cx.dim();
  for (std::uint64_t c = 0; c < cx.cell_count(); ++c) {
    if (!cx.marked(c)) continue;
    const auto root = cx.component(c);
    auto coords = cx.coords(c);
    for (unsigned a = 0; a + 1 < n; ++a) {
      if (coords[a] == coords[a + 1]) continue;
      std::swap(coords[a], coords[a + 1]);
      const auto image = cx.index(coords);
      std::swap(coords[a], coords[a + 1]);
      if (!cx.marked(image) || cx.component(image) != root) return false;
    }
  }
  return true;
}

bool hyperplane_cut_check(const SigmaCombination& f, unsigned n, unsigned res, const Rational& half_width,
                          const GridOptions& opts) {
  const int d = f.degree();
  if (d >= 1 && n < threshold_for(d))
    throw std::invalid_argument("hyperplane cut check needs n >= 2^(d-1) + 1");
  if (sgn(half_width) <= 0) throw std::invalid_argument("half width must be positive");
  const auto p = materialize(f, n);
  const Box box = Box::cube(n, -half_width, half_width);
  const CellComplex cx = zero_cells(p, box, res, opts);
  const Rational width = 2 * half_width / res;

  std::vector<std::uint32_t> roots;
  std::vector<std::uint32_t> touching;
  for (std::uint64_t c = 0; c < cx.cell_count(); ++c) {
    if (!cx.marked(c)) continue;
    const auto root = cx.component(c);
    roots.push_back(root);
    const Interval last = cx.extent(c, n - 1);
    if (last.lo <= width && last.hi >= -width) touching.push_back(root);
  }
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  std::sort(touching.begin(), touching.end());
  touching.erase(std::unique(touching.begin(), touching.end()), touching.end());
  return roots == touching;
}

bool aux_inequality_check(unsigned n, unsigned sample_count, std::uint64_t seed) {
  if (n < 3) throw std::invalid_argument("aux inequality needs n >= 3");
  const Rational factor = Rational((n - 2) * (n - 2)) / Rational(n * (n - 1));
  auto holds = [&](const std::vector<Rational>& x) {
    Rational n2 = 0, n3 = 0;
    for (const auto& xi : x) {
      n2 += xi * xi;
      n3 += xi * xi * xi;
    }
    return n3 * n3 <= factor * n2 * n2 * n2;
  };
  if (!holds(std::vector<Rational>(n, 0))) return false;
  for (long scale : {1L, 2L, 7L, -1L, -3L}) {
    std::vector<Rational> x(n, Rational(-scale));
    x[0] = Rational(static_cast<long>(n - 1) * scale);
    if (!holds(x)) return false;
  }
  std::mt19937_64 rng(seed);
  for (unsigned s = 0; s < sample_count; ++s)
    if (!holds(random_balanced_point(n, rng))) return false;
  return true;
}

}  // namespace symvar
