#include <doctest.h>

#include <random>

#include "symvar/poly_json.hpp"
#include "symvar/symfun.hpp"
#include "test_util.hpp"

using namespace symvar;

namespace {

// sigma_l(x) straight from the definition: sum over l-subsets.
Rational sigma_brute(unsigned l, const std::vector<Rational>& x) {
  Rational s = 0;
  const unsigned n = static_cast<unsigned>(x.size());
  for (VarMask m = 0; m < (VarMask{1} << n); ++m) {
    if (static_cast<unsigned>(std::popcount(m)) != l) continue;
    Rational prod = 1;
    for (unsigned i = 0; i < n; ++i)
      if (m >> i & 1) prod *= x[i];
    s += prod;
  }
  return s;
}

}  // namespace

TEST_CASE("elementary symmetric polynomials") {
  CHECK(elementary(-1, 3).is_zero());
  CHECK(elementary(0, 3) == MultiAffinePoly::constant(3, 1));
  CHECK(elementary(4, 3).is_zero());
  for (unsigned n = 1; n <= 7; ++n)
    for (unsigned l = 0; l <= n; ++l) {
      const auto s = elementary(static_cast<int>(l), n);
      CHECK(s.terms().size() == binomial(n, l));
      CHECK(is_symmetric(s));
      for (const auto& [m, c] : s.terms()) {
        CHECK(static_cast<unsigned>(std::popcount(m)) == l);
        CHECK(c == 1);
      }
    }
  const auto table = elementary_table(3, 5);
  REQUIRE(table.size() == 4);
  for (unsigned l = 0; l <= 3; ++l) CHECK(table[l] == elementary(static_cast<int>(l), 5));
}

TEST_CASE("elementary values match subset sums") {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 20; ++trial) {
    const auto x = testutil::random_point(rng, 1 + trial % 6);
    const auto v = elementary_values(x, 7);
    REQUIRE(v.size() == 8);
    for (unsigned l = 0; l <= 7; ++l) CHECK(v[l] == sigma_brute(l, x));
  }
}

TEST_CASE("Newton identities hold exactly") {
  for (unsigned l = 1; l <= 4; ++l)
    for (unsigned n = 1; n <= 6; ++n) CHECK(verify_newton_identity(l, n));
  CHECK(power_sum(3, 2) == SparsePoly::from_terms(2, {{{3, 0}, 1}, {{0, 3}, 1}}));
}

TEST_CASE("sum-of-squares identity for the three-polynomial family") {
  for (unsigned k = 1; k <= 3; ++k)
    for (unsigned n = k; n <= 5; ++n) CHECK(sos_identity_check(k, n));
  CHECK_THROWS_AS(sos_identity_check(2, kSymbolicBudget + 1), std::length_error);
}

TEST_CASE("example family coefficients") {
  const auto fam = example3_family(2, 4);
  CHECK(fam[0] == elementary(1, 4) - MultiAffinePoly::constant(4, 2));
  CHECK(fam[1] == elementary(2, 4) - MultiAffinePoly::constant(4, 1));
  CHECK(fam[2] == Rational(2) * elementary(3, 4) - Rational(4) * elementary(4, 4));
  CHECK_THROWS(example3_family(5, 4));
}

TEST_CASE("diagonal restriction matches direct substitution") {
  // oracle: evaluate phi_n(f) at x + t*1 for several t and compare with the restricted polynomial
  std::mt19937_64 rng(23);
  for (unsigned n = 1; n <= 6; ++n)
    for (int trial = 0; trial < 6; ++trial) {
      SigmaCombination f;
      const unsigned d = std::min(n, 1u + trial % 4);
      for (unsigned i = 0; i <= d; ++i) f.coeffs.push_back(testutil::small_rational(rng));
      if (f.coeffs.back() == 0) f.coeffs.back() = 1;
      auto x = testutil::random_point(rng, n);
      Rational mean = 0;
      for (const auto& v : x) mean += v;
      mean /= n;
      for (auto& v : x) v -= mean;
      const auto r = diagonal_restriction(f, n, x);
      CHECK(r.poly.degree() <= static_cast<int>(d));
      const auto p = materialize(f, n);
      for (int t = -3; t <= 3; ++t) {
        std::vector<Rational> y = x;
        for (auto& v : y) v += t;
        CHECK(r.poly(t) == evaluate(p, y));
      }
    }
  const SigmaCombination f{{-1, 0, 1}};
  const std::vector<Rational> off{1, 0, 0};
  CHECK_THROWS(diagonal_restriction(f, 3, off));
}

TEST_CASE("shift formula agrees with subset expansion") {
  // sigma_l(x + t1) expanded from the subset definition, coefficient of t^(l-j) = C(n-j, l-j) sigma_j(x)
  std::mt19937_64 rng(29);
  for (unsigned n = 1; n <= 6; ++n)
    for (unsigned l = 0; l <= std::min(4u, n); ++l) {
      auto x = testutil::random_point(rng, n);
      for (int t = -2; t <= 2; ++t) {
        std::vector<Rational> y = x;
        for (auto& v : y) v += t;
        Rational rhs = 0;
        Rational tp = 1;
        for (unsigned j = l + 1; j-- > 0;) {
          rhs += Rational(binomial(n - j, l - j)) * sigma_brute(j, x) * tp;
          tp *= t;
        }
        CHECK(sigma_brute(l, y) == rhs);
      }
    }
}

TEST_CASE("truncation drops the last variable") {
  const SigmaCombination f{{1, 2, -1, 3}};
  for (unsigned n = 2; n <= 6; ++n) CHECK(truncate_last(materialize(f, n)) == materialize(f, n - 1).embed(n - 1));
  CHECK(truncate_last(materialize(f, 4)).n_vars() == 3);
}

TEST_CASE("family parsing and sigma JSON") {
  const auto s = parse_family("sharpness:4");
  CHECK(s.kind == FamilySpec::Kind::sharpness);
  CHECK(s.parameter == 4);
  const auto e = parse_family("example3:2");
  CHECK(e.kind == FamilySpec::Kind::example3);
  const auto g = parse_family("sigma:-1,0,1");
  CHECK(g.kind == FamilySpec::Kind::sigma);
  CHECK(g.sigma.degree() == 2);
  CHECK(SigmaCombination{{0, 0}}.degree() == -1);
  CHECK_THROWS(parse_family("sharpness:0"));
  CHECK_THROWS(parse_family("cubes:3"));
  CHECK_THROWS(parse_sigma_coeffs("1,,2"));
  CHECK(sigma_combination_from_json(to_json(g.sigma)) == g.sigma);
  CHECK(sharpness_poly(3) == MultiAffinePoly::from_terms(3, {{0b111, 1}, {0, -1}}));
}
