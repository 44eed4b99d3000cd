#include <doctest.h>

#include <random>
#include <set>

#include "symvar/bounds.hpp"
#include "symvar/grid.hpp"
#include "symvar/report.hpp"
#include "symvar/sturm.hpp"
#include "symvar/symmetric.hpp"
#include "symvar/union_find.hpp"
#include "test_util.hpp"

using namespace symvar;

namespace {

MultiAffinePoly poly(unsigned n, std::vector<std::pair<VarMask, Rational>> t) {
  return MultiAffinePoly::from_terms(n, t);
}

UnivariatePoly from_roots(const std::vector<Rational>& roots) {
  UnivariatePoly p = UnivariatePoly::constant(1);
  for (const auto& r : roots) p = p * UnivariatePoly::linear_factor(r);
  return p;
}

}  // namespace

TEST_CASE("disjoint sets") {
  DisjointSets s(6);
  CHECK(s.set_count() == 6);
  s.unite(0, 1);
  s.unite(2, 3);
  s.unite(1, 3);
  s.unite(0, 2);
  CHECK(s.set_count() == 3);
  CHECK(s.find(3) == s.find(0));
  CHECK(s.root(4) != s.root(5));
}

TEST_CASE("bounds") {
  const auto b = bounds(4, 10);
  CHECK(b.hypersurface == 8);
  CHECK(b.complement == 16);
  CHECK(b.betti_sum == BigInt(4) * BigInt(40353607));  // 4 * 7^9
  CHECK(to_json(b) == nlohmann::json::parse(R"({"ccez":8,"ccdz":16,"optm":161414428})"));
  CHECK(bounds(1, 5).betti_sum == 1);
  CHECK_THROWS(bounds(0, 3));
}

TEST_CASE("report JSON round trip") {
  ComponentReport r;
  r.count = 3;
  r.certified = Certification::sample_certified;
  r.trail = {{8, 4}, {16, 3}};
  r.bound_context = bounds(3, 5);
  r.seed = 42;
  r.samples = SampleSummary{10, 1, {{3, 9}}};
  r.notes = {"note"};
  const auto back = report_from_json(to_json(r));
  CHECK(back.count == 3);
  CHECK(back.certified == Certification::sample_certified);
  CHECK(back.trail == r.trail);
  CHECK(back.seed == r.seed);
  REQUIRE(back.samples);
  CHECK(back.samples->root_counts == r.samples->root_counts);
  CHECK(to_json(back) == to_json(r));
  for (auto c : {Certification::exact_empty, Certification::sample_certified, Certification::resolution_converged,
                 Certification::upper_structure_only})
    CHECK(certification_from_string(to_string(c)) == c);
}

TEST_CASE("cell marking agrees with exact cell ranges") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 12; ++trial) {
    const unsigned n = 1 + trial % 3;
    const auto p = testutil::random_multi_affine(rng, n, n, 4);
    const Box box = Box::cube(n, Rational(-3, 2), 2);
    const unsigned res = 5;
    const auto zc = zero_cells(p, box, res);
    const auto sc = sign_cells(p, box, res);
    for (std::uint64_t c = 0; c < zc.cell_count(); ++c) {
      const Range r = box_range(p, zc.cell_box(c));
      CHECK(zc.marked(c) == r.brackets_zero());
      const int expect = sign(r.min) > 0 ? 1 : (sign(r.max) < 0 ? -1 : 0);
      CHECK(sc.label(c) == expect);
    }
  }
}

TEST_CASE("cell complex geometry") {
  const Box box({{0, 1}, {-2, 2}});
  CellComplex cx(box, 4, std::vector<std::int8_t>(16, 1));
  CHECK(cx.component_count() == 1);
  const std::vector<unsigned> at{1, 3};
  const auto idx = cx.index(at);
  CHECK(cx.coords(idx) == at);
  CHECK(cx.extent(idx, 0) == Interval{Rational(1, 4), Rational(1, 2)});
  CHECK(cx.extent(idx, 1) == Interval{1, 2});
  // a checkerboard has no face-adjacent pairs
  std::vector<std::int8_t> board(16);
  for (unsigned c = 0; c < 16; ++c) board[c] = ((c % 4 + c / 4) % 2) ? 1 : 0;
  CHECK(CellComplex(box, 4, board).component_count() == 8);
  CHECK_THROWS(CellComplex(box, 4, std::vector<std::int8_t>(15, 0)));
}

TEST_CASE("sharpness polynomials reach 2^(d-1) components") {
  auto two = grid_components(sharpness_poly(2), Box::cube(2, -2, 2), 16);
  CHECK(two.count == 2);
  CHECK(two.certified == Certification::resolution_converged);
  auto three = grid_components(sharpness_poly(3), Box::cube(3, -2, 2), 32);
  CHECK(three.count == 4);
  REQUIRE(three.bound_context);
  CHECK(three.bound_context->hypersurface == 4);
}

TEST_CASE("grid edge cases") {
  // constant nonzero: exact-empty
  const auto empty = grid_components(MultiAffinePoly::constant(2, 1), Box::cube(2, -1, 1), 4);
  CHECK(empty.count == 0);
  CHECK(empty.certified == Certification::exact_empty);
  // X1 X2 on [-1,1]^2: the two axes cross, one component
  CHECK(grid_components(poly(2, {{0b11, 1}}), Box::cube(2, -1, 1), 8).count == 1);
  CHECK_THROWS_AS(grid_components(sharpness_poly(2), Box::cube(3, -1, 1), 4), std::invalid_argument);
  GridOptions tiny;
  tiny.cell_budget = 100;
  CHECK_THROWS_AS(grid_components(sharpness_poly(2), Box::cube(2, -1, 1), 16, tiny), std::invalid_argument);
  // budget hit before convergence
  tiny.cell_budget = 64;
  const auto capped = grid_components(sharpness_poly(2), Box::cube(2, -2, 2), 8, tiny);
  CHECK(capped.certified == Certification::upper_structure_only);
}

TEST_CASE("threaded marking matches serial marking") {
  std::mt19937_64 rng(37);
  const auto p = testutil::random_multi_affine(rng, 3, 3, 6);
  GridOptions four;
  four.threads = 4;
  const Box box = Box::cube(3, -2, 2);
  const auto a = zero_cells(p, box, 24), b = zero_cells(p, box, 24, four);
  for (std::uint64_t c = 0; c < a.cell_count(); ++c) CHECK(a.marked(c) == b.marked(c));
  CHECK(a.component_count() == b.component_count());
}

TEST_CASE("large coefficients take the exact fallback path") {
  // 2^70 X1 X2 - 2^70 behaves like the sharpness polynomial
  const Rational big = Rational(BigInt(1) << 70);
  const auto p = poly(2, {{0b11, big}, {0, -big}});
  CHECK(grid_components(p, Box::cube(2, -2, 2), 16).count == 2);
  const Rational tiny = Rational(1, BigInt(1) << 70);
  CHECK(grid_components(poly(2, {{0b11, tiny}, {0, -tiny}}), Box::cube(2, -2, 2), 16).count == 2);
}

TEST_CASE("complement components") {
  const auto r = complement_components(poly(4, {{0b1111, 1}}), Box::cube(4, -1, 1), 8);
  CHECK(r.count == 16);
  CHECK(complement_components(poly(2, {{0b11, 1}}), Box::cube(2, -1, 1), 8).count == 4);
  CHECK(complement_components(sharpness_poly(2), Box::cube(2, -2, 2), 8).count == 3);
}

TEST_CASE("component bounds never fire on random multi-affine inputs") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 50; ++trial) {
    const unsigned n = 1 + trial % 4;
    const auto p = testutil::random_multi_affine(rng, n, std::min(n, 4u), 3 + trial % 4);
    const unsigned res = n == 4 ? 8 : 16;
    CHECK_NOTHROW(grid_components(p, Box::cube(n, -3, 3), res));
    CHECK_NOTHROW(complement_components(p, Box::cube(n, -3, 3), res));
  }
}

TEST_CASE("refinement never loses marked regions") {
  // every marked cell at resolution 2r lies inside a marked cell at resolution r
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 6; ++trial) {
    const auto p = testutil::random_multi_affine(rng, 2, 2, 4);
    const Box box = Box::cube(2, -2, 2);
    const auto coarse = zero_cells(p, box, 8), fine = zero_cells(p, box, 16);
    for (std::uint64_t c = 0; c < fine.cell_count(); ++c) {
      if (!fine.marked(c)) continue;
      auto xy = fine.coords(c);
      for (auto& v : xy) v /= 2;
      CHECK(coarse.marked(coarse.index(xy)));
    }
  }
}

TEST_CASE("general polynomials through interval enclosures") {
  for (unsigned n : {2u, 3u}) {
    SparsePoly p = SparsePoly::constant(n, -static_cast<long>(n));
    for (unsigned i = 1; i <= n; ++i) p = p + SparsePoly::variable(n, i).pow(2);
    const auto r = grid_components_general(p, Box::cube(n, -1, 1), 8);
    CHECK(r.count == (1 << n));
    CHECK(r.certified == Certification::resolution_converged);
  }
  // circle inside the box: one component
  const auto x = SparsePoly::variable(2, 1), y = SparsePoly::variable(2, 2);
  const auto circle = x.pow(2) + y.pow(2) - SparsePoly::constant(2, 1);
  CHECK(grid_components_general(circle, Box::cube(2, -2, 2), 16).count == 1);
  // interval enclosure contains the exact range
  const auto cells = interval_cells(circle, Box::cube(2, -2, 2), 8);
  const auto exact = zero_cells(poly(2, {}), Box::cube(2, -2, 2), 8);  // every cell marked
  CHECK(cells.marked_count() <= exact.marked_count());
  CHECK(cells.marked_count() > 0);
}

TEST_CASE("system clusters") {
  const auto p = sharpness_poly(2);
  const std::vector<MultiAffinePoly> single{p};
  const auto s = grid_components_system(single, Box::cube(2, -2, 2), 16);
  CHECK(s.count == grid_components(p, Box::cube(2, -2, 2), 16).count);
  CHECK(s.certified == Certification::upper_structure_only);
  // X1 = 0 and X1 = 1 never meet; cells touching both vanish once cells are narrower than 1
  const std::vector<MultiAffinePoly> inconsistent{poly(1, {{1, 1}}), poly(1, {{1, 1}, {0, -1}})};
  const auto none = system_cells(inconsistent, Box::cube(1, -1, 2), 6);
  CHECK(none.marked_count() == 0);
  CHECK(system_cells(inconsistent, Box::cube(1, -1, 2), 3).marked_count() == 1);
  // the k = 1 family in four variables separates into its four points
  const auto fam = example3_family(1, 4);
  const auto four = grid_components_system(fam, Box::cube(4, Rational(-1, 2), Rational(3, 2)), 32);
  CHECK(four.trail.front().second == 4);
}

TEST_CASE("Boolean slice points") {
  CHECK(boolean_slice_points(2, 5).size() == 10);
  CHECK(boolean_slice_points(1, 4).size() == 4);
  CHECK(boolean_slice_points(3, 6).size() == 20);
  CHECK(boolean_slice_points(0, 3) == std::vector<std::vector<Rational>>{{0, 0, 0}});
  for (const auto& pt : boolean_slice_points(2, 5)) {
    int ones = 0;
    for (const auto& v : pt) ones += v == 1;
    CHECK(ones == 2);
  }
}

TEST_CASE("Sturm counts on constructed roots") {
  std::mt19937_64 rng(47);
  for (int trial = 0; trial < 40; ++trial) {
    std::set<Rational> distinct;
    std::vector<Rational> roots;
    const int k = 1 + trial % 5;
    for (int i = 0; i < k; ++i) {
      roots.push_back(testutil::small_rational(rng));
      distinct.insert(roots.back());
    }
    // times a positive quadratic t^2 + c, c > 0
    const Rational c = Rational(1 + trial % 3, 2);
    const auto p = from_roots(roots) * UnivariatePoly({c, 0, 1});
    CHECK(sturm_count(p) == distinct.size());
    const Interval window{-1, 1};
    unsigned inside = 0;
    for (const auto& r : distinct) inside += window.contains(r);
    CHECK(sturm_count(p, window) == inside);
    CHECK(is_squarefree(p) == (distinct.size() == roots.size()));
  }
  // endpoint roots count in the closed interval
  CHECK(sturm_count(from_roots({-1, 0, 1}), Interval{-1, 1}) == 3);
  CHECK(sturm_count(from_roots({-1, 0, 1}), Interval{0, 0}) == 1);
  CHECK(sturm_count(UnivariatePoly({1, 0, 1})) == 0);
  CHECK_THROWS(sturm_count(UnivariatePoly{}));
}

TEST_CASE("discriminants vanish exactly at repeated roots") {
  std::mt19937_64 rng(53);
  for (int trial = 0; trial < 40; ++trial) {
    const int deg = 2 + trial % 2;
    std::vector<Rational> roots;
    for (int i = 0; i < deg; ++i) roots.push_back(Rational(static_cast<int>(rng() % 5) - 2));
    const auto p = Rational(1 + trial % 3) * from_roots(roots);
    const bool repeated = gcd(p, p.derivative()).degree() > 0;
    CHECK((discriminant(p) == 0) == repeated);
  }
  CHECK(discriminant(UnivariatePoly({1, 0, 1})) == -4);  // t^2 + 1
  CHECK_THROWS(discriminant(from_roots({1, 2, 3, 4})));
}

TEST_CASE("sampled symmetric root counts") {
  const SigmaCombination quad{{-1, 0, 1}}, cubic{{0, -1, 0, 1}};
  for (unsigned n = 3; n <= 8; ++n) {
    const auto a = symmetric_b0(quad, n, 200);
    CHECK(a.count == 2);
    CHECK(a.certified == Certification::sample_certified);
    CHECK(a.samples->degenerate == 0);
    CHECK(symmetric_b0(cubic, n, 200).count == 3);
  }
  // determinism: same seed, same report
  CHECK(to_json(symmetric_b0(cubic, 6, 100, 9)) == to_json(symmetric_b0(cubic, 6, 100, 9)));
  CHECK_THROWS(symmetric_b0(quad, 2, 10));
  CHECK_THROWS(symmetric_b0(SigmaCombination{{1}}, 4, 10));
  // sigma_1 = 0 is a hyperplane transverse to every diagonal line
  CHECK(symmetric_b0(SigmaCombination{{0, 1}}, 5, 50).count == 1);
}

TEST_CASE("balanced random points") {
  std::mt19937_64 rng(kDefaultSeed);
  for (int i = 0; i < 20; ++i) {
    const auto x = random_balanced_point(5, rng);
    Rational s = 0;
    for (const auto& v : x) {
      s += v;
      CHECK(v.get_den() == 1);
    }
    CHECK(s == 0);
  }
}

TEST_CASE("stabilization scans") {
  const auto scan = stabilization_scan(SigmaCombination{{0, -1, 0, 1}}, 3, 10, 200);
  CHECK(scan.monotone_from == 5);
  REQUIRE(scan.stabilized_value);
  CHECK(*scan.stabilized_value == 3);
  CHECK(scan.rows.front().first == 3);
  CHECK(scan.rows.back().first == 10);
}

TEST_CASE("orbit, hyperplane and auxiliary checks") {
  CHECK(orbit_stability_check(materialize(SigmaCombination{{-1, 0, 1}}, 4), Box::cube(4, -3, 3), 12));
  CHECK(hyperplane_cut_check(SigmaCombination{{-1, 0, 1}}, 4, 16));
  CHECK_THROWS(orbit_stability_check(sharpness_poly(2) + MultiAffinePoly::variable(2, 1), Box::cube(2, -1, 1), 4));
  for (unsigned n = 3; n <= 6; ++n) CHECK(aux_inequality_check(n, 500));
}
