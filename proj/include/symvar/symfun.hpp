#pragma once

#include <array>
#include <span>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "symvar/multi_affine.hpp"
#include "symvar/sparse_poly.hpp"
#include "symvar/univariate.hpp"

namespace symvar {

/// sigma_{l,n}: sum of all l-fold products of distinct variables among X_1..X_n.
/// sigma_{-1,n} = 0, sigma_{0,n} = 1, and sigma_{l,n} = 0 for l > n.
/// Built with sigma_{l,n} = X_n sigma_{l-1,n-1} + sigma_{l,n-1}.
MultiAffinePoly elementary(int l, unsigned n);

/// All of sigma_{0,n} .. sigma_{max_l,n} in one pass of the recursion.
std::vector<MultiAffinePoly> elementary_table(unsigned max_l, unsigned n);

/// Values sigma_{0..max_l}(x) at a point (sigma_j = 0 for j > len(x)).
std::vector<Rational> elementary_values(std::span<const Rational> x, unsigned max_l);

/// N_{l,n} = X_1^l + ... + X_n^l.
SparsePoly power_sum(unsigned l, unsigned n);

/// Checks the l-th Newton identity (1 <= l <= 4) as a polynomial identity in n variables:
///   N1 = s1, N2 = N1 s1 - 2 s2, N3 = N2 s1 - N1 s2 + 3 s3,
///   N4 = N3 s1 - N2 s2 + N1 s3 - 4 s4.
bool verify_newton_identity(unsigned l, unsigned n);

/// f = a_0 sigma_0 + ... + a_d sigma_d as an element of the ring of symmetric
/// functions, independent of the number of variables.
struct SigmaCombination {
  std::vector<Rational> coeffs;

  /// Index of the highest nonzero coefficient; -1 when all vanish.
  int degree() const;
  friend bool operator==(const SigmaCombination&, const SigmaCombination&) = default;
};

nlohmann::json to_json(const SigmaCombination& f);
SigmaCombination sigma_combination_from_json(const nlohmann::json& j);

/// phi_n(f) = sum a_i sigma_{i,n}.
MultiAffinePoly materialize(const SigmaCombination& f, unsigned n);

/// Sets the last variable to zero: phi_n(f) -> phi_{n-1}(f).
MultiAffinePoly truncate_last(const MultiAffinePoly& p);

/// f restricted to the diagonal line x + t(1, ..., 1) through a base point with sigma_1(x) = 0.
struct DiagonalRestriction {
  std::vector<Rational> base;
  UnivariatePoly poly;
};

/// Uses sigma_{l,n}(x + t1) = sum_j C(n-j, l-j) sigma_j(x) t^(l-j).
DiagonalRestriction diagonal_restriction(const SigmaCombination& f, unsigned n, std::span<const Rational> x);

/// X_1 X_2 ... X_d - 1 in d variables.
MultiAffinePoly sharpness_poly(unsigned d);

/// k = 0 is allowed (the common zero set is then the origin).
/// P1 = s1 - k, P2 = s2 - k(k-1)/2, P3 = (4k-6) s3 - 4 s4 - k(k-1)^2(k-2)/2 in n variables.
std::array<MultiAffinePoly, 3> example3_family(unsigned k, unsigned n);

/// Largest n accepted by the symbolic sum-of-squares check.
inline constexpr unsigned kSymbolicBudget = 6;

/// Verifies sum X_i^2 (X_i - 1)^2 = N4 - 2 N3 + N2 symbolically, and that under
/// s1 = k, s2 = k(k-1)/2 the right side reduces to the third family member,
/// with explicit cofactors checked back in Q[X_1..X_n].
bool sos_identity_check(unsigned k, unsigned n);

/// Named polynomial families accepted on the command line:
/// "sharpness:d", "example3:k", "sigma:a0,a1,...,ad".
struct FamilySpec {
  enum class Kind { sharpness, example3, sigma };
  Kind kind = Kind::sharpness;
  unsigned parameter = 0;  // d for sharpness, k for example3
  SigmaCombination sigma;  // sigma only
};

FamilySpec parse_family(std::string_view text);

/// Comma-separated rationals, e.g. "-1,0,1".
SigmaCombination parse_sigma_coeffs(std::string_view text);

}  // namespace symvar
