#include <bit>
#include <cstdlib>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>

#include "lattice_signs.hpp"
#include "parallel.hpp"
#include "symvar/grid.hpp"
#include "symvar/symfun.hpp"

namespace symvar {

std::uint64_t default_cell_budget() {
  if (const char* env = std::getenv("SYMVAR_CELL_BUDGET")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw std::invalid_argument("SYMVAR_CELL_BUDGET must be a positive integer");
    }
  }
  return std::uint64_t{1} << 24;
}

namespace {

std::uint64_t cells_for(unsigned n, unsigned res) {
  std::uint64_t cells = 1;
  for (unsigned i = 0; i < n; ++i) {
    if (cells > (std::uint64_t{1} << 40) / res) return std::uint64_t{1} << 41;
    cells *= res;
  }
  return cells;
}

// Calls f(cell, lattice_base, coords) for each cell; the lattice has res+1 points per axis.
template <typename F>
void scan_cells(unsigned n, unsigned res, unsigned threads, F&& f) {
  const std::uint64_t total = cells_for(n, res);
  const std::uint64_t side = res + 1;
  detail::parallel_chunks(total, threads, [&](std::uint64_t begin, std::uint64_t end) {
    std::vector<unsigned> coord(n);
    std::uint64_t rest = begin, base = 0, weight = 1;
    for (unsigned a = 0; a < n; ++a) {
      coord[a] = static_cast<unsigned>(rest % res);
      rest /= res;
      base += coord[a] * weight;
      weight *= side;
    }
    for (std::uint64_t c = begin; c < end; ++c) {
      f(c, base, std::span<const unsigned>(coord));
      std::uint64_t w = 1;
      for (unsigned a = 0; a < n; ++a, w *= side) {
        ++coord[a];
        base += w;
        if (coord[a] < res) break;
        coord[a] = 0;
        base -= w * res;
      }
    }
  });
}

std::vector<std::uint64_t> corner_offsets(unsigned n, unsigned res) {
  std::vector<std::uint64_t> off(std::uint64_t{1} << n, 0);
  for (std::uint64_t m = 0; m < off.size(); ++m) {
    std::uint64_t w = 1;
    for (unsigned a = 0; a < n; ++a, w *= res + 1)
      if (m >> a & 1) off[m] += w;
  }
  return off;
}

struct CornerSigns {
  bool any_pos = false, any_neg = false, any_zero = false;
  bool brackets() const { return (any_neg || any_zero) && (any_pos || any_zero); }
  std::int8_t definite() const {
    if (any_zero) return 0;
    if (any_pos && !any_neg) return 1;
    if (any_neg && !any_pos) return -1;
    return 0;
  }
};

CornerSigns corners(const std::vector<std::int8_t>& lattice, std::uint64_t base,
                    const std::vector<std::uint64_t>& offsets) {
  CornerSigns s;
  for (auto off : offsets) {
    const std::int8_t v = lattice[base + off];
    s.any_pos |= v > 0;
    s.any_neg |= v < 0;
    s.any_zero |= v == 0;
  }
  return s;
}

void check_dims(const Box& box, unsigned n) {
  if (box.dim() != n) throw std::invalid_argument("box dimension does not match polynomial");
  if (n == 0) throw std::invalid_argument("grid needs at least one variable");
}

void check_budget(unsigned n, unsigned res, const GridOptions& opts) {
  if (cells_for(n, res) > opts.cell_budget)
    throw std::invalid_argument("requested resolution exceeds the cell budget of " + std::to_string(opts.cell_budget) +
                                " cells");
}

std::optional<ComponentBounds> bounds_for(const MultiAffinePoly& p) {
  const auto d = p.degree();
  if (!d || *d == 0) return std::nullopt;
  return bounds(*d, p.n_vars());
}

enum class Schedule { exact, conservative, system };

template <typename Build>
ComponentReport run_schedule(unsigned n, unsigned res, const GridOptions& opts, Schedule kind, Build&& build) {
  if (res < 1) throw std::invalid_argument("resolution must be positive");
  check_budget(n, res, opts);
  ComponentReport report;
  for (;;) {
    const CellComplex cx = build(res);
    const long count = cx.component_count();
    report.trail.emplace_back(res, count);
    report.count = count;
    if (kind == Schedule::exact && cx.marked_count() == 0) {
      report.certified = Certification::exact_empty;
      break;
    }
    const auto& t = report.trail;
    if (t.size() >= 2 && t[t.size() - 2].second == count) {
      report.certified = Certification::resolution_converged;
      break;
    }
    if (res > std::numeric_limits<unsigned>::max() / 2 || cells_for(n, 2 * res) > opts.cell_budget) {
      report.certified = Certification::upper_structure_only;
      report.notes.push_back("cell budget reached before two resolutions agreed");
      break;
    }
    res *= 2;
  }
  if (kind == Schedule::system) report.certified = Certification::upper_structure_only;
  return report;
}

}  // namespace

CellComplex zero_cells(const MultiAffinePoly& p, const Box& box, unsigned res, const GridOptions& opts) {
  const unsigned n = p.n_vars();
  check_dims(box, n);
  const auto lattice = detail::lattice_signs(p, box, res, opts.threads);
  const auto offsets = corner_offsets(n, res);
  std::vector<std::int8_t> labels(cells_for(n, res), 0);
  scan_cells(n, res, opts.threads, [&](std::uint64_t c, std::uint64_t base, std::span<const unsigned>) {
    labels[c] = corners(lattice, base, offsets).brackets() ? 1 : 0;
  });
  return CellComplex(box, res, std::move(labels));
}

CellComplex sign_cells(const MultiAffinePoly& p, const Box& box, unsigned res, const GridOptions& opts) {
  const unsigned n = p.n_vars();
  check_dims(box, n);
  const auto lattice = detail::lattice_signs(p, box, res, opts.threads);
  const auto offsets = corner_offsets(n, res);
  std::vector<std::int8_t> labels(cells_for(n, res), 0);
  scan_cells(n, res, opts.threads, [&](std::uint64_t c, std::uint64_t base, std::span<const unsigned>) {
    labels[c] = corners(lattice, base, offsets).definite();
  });
  return CellComplex(box, res, std::move(labels));
}

CellComplex system_cells(std::span<const MultiAffinePoly> ps, const Box& box, unsigned res, const GridOptions& opts) {
  if (ps.empty()) throw std::invalid_argument("system needs at least one polynomial");
  const unsigned n = ps.front().n_vars();
  for (const auto& p : ps)
    if (p.n_vars() != n) throw std::invalid_argument("system polynomials must share a ring");
  check_dims(box, n);
  std::vector<std::vector<std::int8_t>> lattices;
  for (const auto& p : ps) lattices.push_back(detail::lattice_signs(p, box, res, opts.threads));
  const auto offsets = corner_offsets(n, res);
  std::vector<std::int8_t> labels(cells_for(n, res), 0);
  scan_cells(n, res, opts.threads, [&](std::uint64_t c, std::uint64_t base, std::span<const unsigned>) {
    for (const auto& lattice : lattices)
      if (!corners(lattice, base, offsets).brackets()) return;
    labels[c] = 1;
  });
  return CellComplex(box, res, std::move(labels));
}

namespace {

Interval interval_mul(const Interval& a, const Interval& b) {
  Rational p[4] = {a.lo * b.lo, a.lo * b.hi, a.hi * b.lo, a.hi * b.hi};
  Interval r{p[0], p[0]};
  for (const auto& v : p) {
    if (v < r.lo) r.lo = v;
    if (v > r.hi) r.hi = v;
  }
  return r;
}

Interval interval_pow(const Interval& x, unsigned e) {
  if (e == 0) return {1, 1};
  Rational plo = 1, phi = 1;
  for (unsigned i = 0; i < e; ++i) {
    plo *= x.lo;
    phi *= x.hi;
  }
  if (e % 2 == 1 || sgn(x.lo) >= 0) return {plo, phi};
  if (sgn(x.hi) <= 0) return {phi, plo};
  return {0, std::max(plo, phi)};
}

}  // namespace

CellComplex interval_cells(const SparsePoly& p, const Box& box, unsigned res, const GridOptions& opts) {
  const unsigned n = p.n_vars();
  check_dims(box, n);
  // powers[a][e][k]: enclosure of x_a^e over the k-th slab along axis a.
  std::vector<std::vector<std::vector<Interval>>> powers(n);
  for (unsigned a = 0; a < n; ++a) {
    const unsigned top = p.is_zero() ? 0 : p.degree_in(a + 1);
    const Rational step = box.axis(a).width() / res;
    powers[a].resize(top + 1);
    for (unsigned k = 0; k < res; ++k) {
      const Interval slab{box.axis(a).lo + step * k, box.axis(a).lo + step * (k + 1)};
      for (unsigned e = 0; e <= top; ++e) powers[a][e].push_back(interval_pow(slab, e));
    }
  }
  std::vector<std::int8_t> labels(cells_for(n, res), 0);
  scan_cells(n, res, opts.threads, [&](std::uint64_t c, std::uint64_t, std::span<const unsigned> coord) {
    Interval sum{0, 0};
    for (const auto& [e, coeff] : p.terms()) {
      Interval term{coeff, coeff};
      for (unsigned a = 0; a < n; ++a)
        if (e[a] != 0) term = interval_mul(term, powers[a][e[a]][coord[a]]);
      sum.lo += term.lo;
      sum.hi += term.hi;
    }
    labels[c] = (sgn(sum.lo) <= 0 && sgn(sum.hi) >= 0) ? 1 : 0;
  });
  return CellComplex(box, res, std::move(labels));
}

ComponentReport grid_components(const MultiAffinePoly& p, const Box& box, unsigned res, const GridOptions& opts) {
  check_dims(box, p.n_vars());
  ComponentReport report = run_schedule(p.n_vars(), res, opts, Schedule::exact,
                                        [&](unsigned r) { return zero_cells(p, box, r, opts); });
  report.bound_context = bounds_for(p);
  if (report.bound_context && report.count > report.bound_context->hypersurface)
    throw InvariantViolation("multi-affine hypersurface bound b0 <= 2^(d-1) = " +
                             report.bound_context->hypersurface.get_str() + " violated: counted " +
                             std::to_string(report.count) + " components");
  return report;
}

ComponentReport grid_components_general(const SparsePoly& p, const Box& box, unsigned res, const GridOptions& opts) {
  check_dims(box, p.n_vars());
  return run_schedule(p.n_vars(), res, opts, Schedule::conservative,
                      [&](unsigned r) { return interval_cells(p, box, r, opts); });
}

ComponentReport complement_components(const MultiAffinePoly& p, const Box& box, unsigned res,
                                      const GridOptions& opts) {
  check_dims(box, p.n_vars());
  ComponentReport report = run_schedule(p.n_vars(), res, opts, Schedule::conservative,
                                        [&](unsigned r) { return sign_cells(p, box, r, opts); });
  report.bound_context = bounds_for(p);
  if (report.bound_context && report.count > report.bound_context->complement)
    throw InvariantViolation("multi-affine complement bound b0 <= 2^d = " +
                             report.bound_context->complement.get_str() + " violated: counted " +
                             std::to_string(report.count) + " components");
  return report;
}

ComponentReport grid_components_system(std::span<const MultiAffinePoly> ps, const Box& box, unsigned res,
                                       const GridOptions& opts) {
  if (ps.empty()) throw std::invalid_argument("system needs at least one polynomial");
  check_dims(box, ps.front().n_vars());
  ComponentReport report = run_schedule(ps.front().n_vars(), res, opts, Schedule::system,
                                        [&](unsigned r) { return system_cells(ps, box, r, opts); });
  report.notes.push_back("cell test is necessary, not sufficient, for a common zero");
  return report;
}

std::vector<std::vector<Rational>> boolean_slice_points(unsigned k, unsigned n) {
  if (k > n || n > 20) throw std::invalid_argument("boolean_slice_points needs 0 <= k <= n <= 20");
  if (n == 0) return {{}};
  const auto family = example3_family(k, n);
  std::vector<std::vector<Rational>> out;
  std::vector<Rational> x(n);
  for (std::uint32_t bits = 0; bits < (std::uint32_t{1} << n); ++bits) {
    for (unsigned i = 0; i < n; ++i) x[i] = (bits >> i) & 1;
    bool common_zero = true;
    for (const auto& p : family) common_zero = common_zero && sgn(evaluate(p, x)) == 0;
    const bool on_slice = static_cast<unsigned>(std::popcount(bits)) == k;
    if (common_zero != on_slice)
      throw std::logic_error(on_slice ? "slice point is not a common zero" : "off-slice point is a common zero");
    if (on_slice) out.push_back(x);
  }
  return out;
}

}  // namespace symvar
