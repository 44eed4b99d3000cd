#include <stdexcept>

#include "symvar/symfun.hpp"

namespace symvar {

namespace {

// Power sums N_1..N_4 written in the abstract ring Q[s1, s2, s3, s4] by the Newton recursion.
std::array<SparsePoly, 5> newton_in_sigma() {
  auto s = [](unsigned i) { return SparsePoly::variable(4, i); };
  std::array<SparsePoly, 5> N;
  N[0] = SparsePoly(4);
  N[1] = s(1);
  N[2] = N[1] * s(1) - Rational(2) * s(2);
  N[3] = N[2] * s(1) - N[1] * s(2) + Rational(3) * s(3);
  N[4] = N[3] * s(1) - N[2] * s(2) + N[1] * s(3) - Rational(4) * s(4);
  return N;
}

}  // namespace

bool verify_newton_identity(unsigned l, unsigned n) {
  if (l < 1 || l > 4) throw std::invalid_argument("Newton identities are provided for l = 1..4");
  if (n < 1) throw std::invalid_argument("Newton identity check needs n >= 1");
  std::vector<SparsePoly> sigma;
  for (const auto& p : elementary_table(4, n)) sigma.push_back(SparsePoly::from_multi_affine(p));
  std::array<SparsePoly, 5> N;
  for (unsigned i = 1; i <= 4; ++i) N[i] = power_sum(i, n);
  SparsePoly rhs(n);
  switch (l) {
    case 1: rhs = sigma[1]; break;
    case 2: rhs = N[1] * sigma[1] - Rational(2) * sigma[2]; break;
    case 3: rhs = N[2] * sigma[1] - N[1] * sigma[2] + Rational(3) * sigma[3]; break;
    case 4: rhs = N[3] * sigma[1] - N[2] * sigma[2] + N[1] * sigma[3] - Rational(4) * sigma[4]; break;
  }
  return N[l] == rhs;
}

bool sos_identity_check(unsigned k, unsigned n) {
  if (n > kSymbolicBudget)
    throw std::length_error("sum-of-squares check limited to n <= " + std::to_string(kSymbolicBudget));
  if (k < 1 || n < k) throw std::invalid_argument("sum-of-squares check needs n >= k >= 1");

  // Step 1: sum X_i^2 (X_i - 1)^2 = N4 - 2 N3 + N2 in Q[X].
  SparsePoly sos(n);
  for (unsigned i = 1; i <= n; ++i) {
    SparsePoly x = SparsePoly::variable(n, i);
    SparsePoly y = x * (x - SparsePoly::constant(n, 1));
    sos = sos + y * y;
  }
  const SparsePoly newton_combo = power_sum(4, n) - Rational(2) * power_sum(3, n) + power_sum(2, n);
  if (sos != newton_combo) return false;

  // Step 2: E(s) = N4 - 2 N3 + N2 in Q[s1..s4]; impose s1 = k, s2 = k(k-1)/2.
  const auto N = newton_in_sigma();
  const SparsePoly E = N[4] - Rational(2) * N[3] + N[2];
  const Rational kk = k;
  const Rational s2_value = kk * (kk - 1) / 2;
  auto [cofactor1, rest1] = divide_linear(E, 1, kk);
  auto [cofactor2, reduced] = divide_linear(rest1, 2, s2_value);
  const auto s = [](unsigned i) { return SparsePoly::variable(4, i); };
  const SparsePoly expected = (4 * kk - 6) * s(3) - Rational(4) * s(4) -
                              SparsePoly::constant(4, kk * (kk - 1) * (kk - 1) * (kk - 2) / 2);
  if (reduced != expected) return false;

  // Step 3: materialize sigma_j in n variables and confirm
  //   sum X_i^2 (X_i - 1)^2 - P3 = P1 * A(sigma) + P2 * B(sigma).
  std::vector<SparsePoly> sigma;
  for (unsigned j = 1; j <= 4; ++j) sigma.push_back(SparsePoly::from_multi_affine(elementary(static_cast<int>(j), n)));
  const auto family = example3_family(k, n);
  const SparsePoly p1 = SparsePoly::from_multi_affine(family[0]);
  const SparsePoly p2 = SparsePoly::from_multi_affine(family[1]);
  const SparsePoly p3 = SparsePoly::from_multi_affine(family[2]);
  const SparsePoly lhs = sos - p3;
  const SparsePoly rhs = p1 * compose(cofactor1, sigma) + p2 * compose(cofactor2, sigma);
  return lhs == rhs;
}

}  // namespace symvar
