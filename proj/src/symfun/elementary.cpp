#include "symvar/symfun.hpp"

#include <stdexcept>

namespace symvar {

namespace {

// X_m * p, where p does not mention X_m.
MultiAffinePoly times_variable(const MultiAffinePoly& p, unsigned m) {
  std::vector<std::pair<VarMask, Rational>> out;
  out.reserve(p.terms().size());
  for (const auto& [s, c] : p.terms()) out.emplace_back(s | var_bit(m), c);
  return MultiAffinePoly::from_terms(p.n_vars(), out);
}

}  // namespace

std::vector<MultiAffinePoly> elementary_table(unsigned max_l, unsigned n) {
  // row[l] holds sigma_{l,m} embedded in n variables, for the current m.
  std::vector<MultiAffinePoly> row(max_l + 1, MultiAffinePoly(n));
  row[0] = MultiAffinePoly::constant(n, 1);
  for (unsigned m = 1; m <= n; ++m) {
    for (unsigned l = std::min(max_l, m); l >= 1; --l) row[l] = times_variable(row[l - 1], m) + row[l];
  }
  return row;
}

MultiAffinePoly elementary(int l, unsigned n) {
  if (l < -1) throw std::invalid_argument("elementary symmetric index must be >= -1");
  if (l == -1 || static_cast<unsigned>(l) > n) return MultiAffinePoly(n);
  return elementary_table(static_cast<unsigned>(l), n)[static_cast<unsigned>(l)];
}

std::vector<Rational> elementary_values(std::span<const Rational> x, unsigned max_l) {
  std::vector<Rational> e(max_l + 1, 0);
  e[0] = 1;
  for (std::size_t m = 0; m < x.size(); ++m)
    for (unsigned l = std::min<unsigned>(max_l, static_cast<unsigned>(m + 1)); l >= 1; --l) e[l] += x[m] * e[l - 1];
  return e;
}

SparsePoly power_sum(unsigned l, unsigned n) {
  if (l < 1) throw std::invalid_argument("power sum index must be >= 1");
  std::vector<std::pair<Exponents, Rational>> terms;
  for (unsigned i = 0; i < n; ++i) {
    Exponents e(n, 0);
    e[i] = l;
    terms.emplace_back(std::move(e), Rational(1));
  }
  return SparsePoly::from_terms(n, terms);
}

MultiAffinePoly sharpness_poly(unsigned d) {
  if (d < 1 || d > MultiAffinePoly::kMaxVars) throw std::invalid_argument("sharpness degree must be in 1..64");
  return MultiAffinePoly::from_terms(d, {{full_mask(d), Rational(1)}, {0, Rational(-1)}});
}

std::array<MultiAffinePoly, 3> example3_family(unsigned k, unsigned n) {
  if (n < k) throw std::invalid_argument("example3 family needs n >= k");
  const auto sigma = elementary_table(4, n);
  const Rational kk = k;
  const Rational c2 = kk * (kk - 1) / 2;
  const Rational c3 = kk * (kk - 1) * (kk - 1) * (kk - 2) / 2;
  const auto one = MultiAffinePoly::constant(n, 1);
  return {sigma[1] - kk * one,
          sigma[2] - c2 * one,
          (4 * kk - 6) * sigma[3] - Rational(4) * sigma[4] - c3 * one};
}

}  // namespace symvar
