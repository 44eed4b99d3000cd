#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "symvar/grid.hpp"
#include "symvar/report.hpp"
#include "symvar/symfun.hpp"

namespace symvar {

inline constexpr std::uint64_t kDefaultSeed = 0x5eed2024;

/// Largest fraction of degenerate lines tolerated by symmetric_b0.
inline constexpr double kMaxDegenerateFraction = 0.01;

/// Random integer point on sigma_1 = 0: v uniform in [-10, 10]^n, x = n v - sum(v).
std::vector<Rational> random_balanced_point(unsigned n, std::mt19937_64& rng);

/// Estimates b0(Z(phi_n(f))) by counting real roots of f along random diagonal
/// lines x + t(1..1), sigma_1(x) = 0.  A constant root count over all
/// nondegenerate lines gives sample-certified; a varying count reports the
/// maximum as upper-structure-only.  Throws std::runtime_error when more than
/// 1% of the lines are degenerate (multiple root on the line).
ComponentReport symmetric_b0(const SigmaCombination& f, unsigned n, unsigned sample_count,
                             std::uint64_t seed = kDefaultSeed);

struct StabilizationScan {
  std::vector<std::pair<unsigned, ComponentReport>> rows;
  unsigned monotone_from = 0;           // 2^(d-1) + 1
  std::optional<long> stabilized_value;  // set when the tail from monotone_from is constant
};

/// symmetric_b0 for n = n_min..n_max.  Throws InvariantViolation when the count
/// increases somewhere at or beyond n = 2^(d-1) + 1.
StabilizationScan stabilization_scan(const SigmaCombination& f, unsigned n_min, unsigned n_max,
                                     unsigned sample_count = 500, std::uint64_t seed = kDefaultSeed);

/// Every marked cell and its images under adjacent coordinate swaps lie in one
/// union-find component.  P must be symmetric and the box a cube.
bool orbit_stability_check(const MultiAffinePoly& p, const Box& box, unsigned res, const GridOptions& opts = {});

/// Every component of Z(phi_n(f)) in [-half_width, half_width]^n holds a cell
/// meeting the slab |x_n| <= cell width.  Needs n >= 2^(d-1) + 1.
bool hyperplane_cut_check(const SigmaCombination& f, unsigned n, unsigned res, const Rational& half_width = 4,
                          const GridOptions& opts = {});

/// Checks N3(x)^2 <= (n-2)^2 / (n(n-1)) * N2(x)^3 exactly on random points with
/// sigma_1(x) = 0, on x = 0, and on the extremal points +-(n-1, -1, ..., -1) * s.
bool aux_inequality_check(unsigned n, unsigned sample_count, std::uint64_t seed = kDefaultSeed);

}  // namespace symvar
