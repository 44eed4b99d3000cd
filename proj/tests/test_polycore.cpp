#include <doctest.h>

#include <bit>
#include <random>

#include "symvar/box.hpp"
#include "symvar/multi_affine.hpp"
#include "symvar/poly_json.hpp"
#include "symvar/rational.hpp"
#include "symvar/sparse_poly.hpp"
#include "symvar/univariate.hpp"
#include "test_util.hpp"

using namespace symvar;

TEST_CASE("rational parsing") {
  CHECK(parse_rational("3") == 3);
  CHECK(parse_rational("-7/21") == Rational(-1, 3));
  CHECK(parse_rational("-0.25") == Rational(-1, 4));
  CHECK(parse_rational("1.5") == Rational(3, 2));
  CHECK(to_string(make_rational(6, 4)) == "3/2");
  CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("abc"), std::invalid_argument);
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(3, 5) == 0);
  CHECK(factorial(10) == 3628800);
}

TEST_CASE("box validation") {
  CHECK_THROWS_AS(Box({{1, 0}}), std::invalid_argument);
  const Box b = Box::cube(3, -2, 2);
  CHECK(b.dim() == 3);
  CHECK(b.is_symmetric());
  CHECK_FALSE(Box({{-1, 1}, {0, 1}}).is_symmetric());
  CHECK(b.contains({0, 2, -2}));
  CHECK_FALSE(b.contains({0, 3, 0}));
}

TEST_CASE("multi-affine construction normalizes") {
  const auto p = MultiAffinePoly::from_terms(3, {{0b011, 2}, {0b011, -2}, {0b100, 1}, {0, 0}});
  CHECK(p.terms().size() == 1);
  CHECK(p.coeff(0b100) == 1);
  CHECK(p.degree() == 1u);
  CHECK_FALSE(MultiAffinePoly(4).degree().has_value());
  CHECK(MultiAffinePoly::constant(2, 5).degree() == 0u);
  CHECK_THROWS(MultiAffinePoly::from_terms(2, {{0b100, 1}}));
  CHECK_THROWS(MultiAffinePoly::variable(2, 3));
  const auto x1 = MultiAffinePoly::variable(2, 1), x2 = MultiAffinePoly::variable(2, 2);
  const auto q = product_disjoint(x1, x2) - MultiAffinePoly::constant(2, 1);
  const std::vector<Rational> at{2, Rational(1, 2)};
  CHECK(evaluate(q, at) == 0);
  CHECK_THROWS(product_disjoint(x1, x1));
}

TEST_CASE("decompose and specialize agree with evaluation") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    const unsigned n = 2 + trial % 5;
    const auto p = testutil::random_multi_affine(rng, n, n, 6);
    const auto x = testutil::random_point(rng, n);
    for (unsigned i = 1; i <= n; ++i) {
      const auto [q, r] = decompose(p, i);
      CHECK((q.support() & var_bit(i)) == 0);
      CHECK((r.support() & var_bit(i)) == 0);
      CHECK(product_disjoint(MultiAffinePoly::variable(n, i), q) + r == p);
      // specialize X_i = x_i, then evaluate at the remaining coordinates
      std::vector<Rational> rest;
      for (unsigned j = 1; j <= n; ++j)
        if (j != i) rest.push_back(x[j - 1]);
      CHECK(evaluate(specialize(p, i, x[i - 1]), rest) == evaluate(p, x));
    }
  }
}

TEST_CASE("box range is attained at vertices and bounds interior samples") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 30; ++trial) {
    const unsigned n = 1 + trial % 4;
    const auto p = testutil::random_multi_affine(rng, n, n, 5);
    std::vector<Interval> axes;
    for (unsigned i = 0; i < n; ++i) {
      Rational a = testutil::small_rational(rng), b = testutil::small_rational(rng);
      if (b < a) std::swap(a, b);
      axes.push_back({a, b});
    }
    const Box box(axes);
    const Range r = box_range(p, box);
    // brute-force vertex oracle
    Rational lo, hi;
    for (unsigned v = 0; v < (1u << n); ++v) {
      std::vector<Rational> x(n);
      for (unsigned i = 0; i < n; ++i) x[i] = (v >> i & 1) ? axes[i].hi : axes[i].lo;
      const Rational y = evaluate(p, x);
      if (v == 0 || y < lo) lo = y;
      if (v == 0 || y > hi) hi = y;
    }
    CHECK(r.min == lo);
    CHECK(r.max == hi);
    std::uniform_int_distribution<int> frac(0, 8);
    for (int s = 0; s < 20; ++s) {
      std::vector<Rational> x(n);
      for (unsigned i = 0; i < n; ++i) x[i] = axes[i].lo + axes[i].width() * make_rational(frac(rng), 8);
      const Rational y = evaluate(p, x);
      CHECK(r.min <= y);
      CHECK(y <= r.max);
    }
  }
}

TEST_CASE("symmetry test agrees with explicit transpositions") {
  std::mt19937_64 rng(5);
  auto by_swaps = [](const MultiAffinePoly& p) {
    for (unsigned i = 1; i < p.n_vars(); ++i)
      if (swap_variables(p, i, i + 1) != p) return false;
    return true;
  };
  for (int trial = 0; trial < 60; ++trial) {
    const unsigned n = 1 + trial % 5;
    MultiAffinePoly p = testutil::random_multi_affine(rng, n, n, trial % 3 + 1);
    if (trial % 2 == 0) {
      // symmetrize by summing coefficient classes
      std::vector<std::pair<VarMask, Rational>> t;
      for (VarMask m = 0; m < (VarMask{1} << n); ++m) t.emplace_back(m, Rational(std::popcount(m) % 3 - 1));
      p = MultiAffinePoly::from_terms(n, t);
    }
    CHECK(is_symmetric(p) == by_swaps(p));
  }
}

TEST_CASE("multi-affine product matches sparse multiplication") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 20; ++trial) {
    const auto a = testutil::random_multi_affine(rng, 3, 3, 3).embed(6);
    auto b3 = testutil::random_multi_affine(rng, 3, 3, 3);
    // move b onto X4..X6
    std::vector<std::pair<VarMask, Rational>> shifted;
    for (const auto& [m, c] : b3.terms()) shifted.emplace_back(m << 3, c);
    const auto b = MultiAffinePoly::from_terms(6, shifted);
    CHECK(SparsePoly::from_multi_affine(product_disjoint(a, b)) ==
          SparsePoly::from_multi_affine(a) * SparsePoly::from_multi_affine(b));
  }
}

TEST_CASE("sparse polynomial algebra") {
  const auto x = SparsePoly::variable(2, 1), y = SparsePoly::variable(2, 2);
  const auto one = SparsePoly::constant(2, 1);
  const auto p = (x + y).pow(3);
  CHECK(p.coeff({2, 1}) == 3);
  CHECK(p.total_degree() == 3);
  CHECK(SparsePoly(2).total_degree() == -1);
  CHECK(p.degree_in(2) == 3);
  // substitute y = x - 1
  const auto s = substitute(p, 2, x - one);
  CHECK(s == (Rational(2) * x - one).pow(3));
  const std::vector<Rational> pt{2, 5};
  CHECK(evaluate(p, pt) == 343);
  std::vector<SparsePoly> images{y, x};
  CHECK(compose(x * y.pow(2), images) == x.pow(2) * y);

  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    const auto q = SparsePoly::from_multi_affine(testutil::random_multi_affine(rng, 2, 2, 3));
    const auto r = q * q + x;
    const Rational c = testutil::small_rational(rng);
    const auto [quot, rem] = divide_linear(r, 1, c);
    CHECK(rem.degree_in(1) == 0);
    CHECK((x - Rational(c) * one) * quot + rem == r);
  }
}

TEST_CASE("univariate division and gcd") {
  const auto a = UnivariatePoly::linear_factor(1) * UnivariatePoly::linear_factor(2) * UnivariatePoly::linear_factor(2);
  CHECK(a.degree() == 3);
  CHECK(a(2) == 0);
  CHECK(a(0) == -4);
  const auto [q, r] = divrem(a, UnivariatePoly::linear_factor(1));
  CHECK(r.is_zero());
  CHECK(q == UnivariatePoly::linear_factor(2) * UnivariatePoly::linear_factor(2));
  CHECK(gcd(a, a.derivative()) == UnivariatePoly::linear_factor(2));
  CHECK(UnivariatePoly({0, 0, 0}).is_zero());
  CHECK(UnivariatePoly::monomial(3, 2).derivative() == UnivariatePoly::monomial(6, 1));
}

TEST_CASE("polynomial JSON round trip") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 10; ++trial) {
    const auto p = testutil::random_multi_affine(rng, 4, 3, 4);
    const auto j = to_json(p);
    CHECK_FALSE(is_sparse_json(j));
    CHECK(multi_affine_from_json(j) == p);
    const auto s = SparsePoly::from_multi_affine(p).pow(2);
    CHECK(is_sparse_json(to_json(s)));
    CHECK(sparse_from_json(to_json(s)) == s);
  }
  CHECK_THROWS(multi_affine_from_json(nlohmann::json::parse(R"({"n":2,"terms":[{"vars":[3],"coeff":"1"}]})")));
}
