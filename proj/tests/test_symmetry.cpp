#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <functional>

#include "geodex/errors.hpp"
#include "geodex/families.hpp"
#include "geodex/metrics.hpp"
#include "geodex/symmetry.hpp"

using namespace geodex;

namespace {

errc code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return errc::internal;
}

// Adjacent transpositions (i i+1) on {0..n-1}.
std::vector<Perm> symmetric_group_gens(std::uint32_t n) {
  std::vector<Perm> gens;
  for (std::uint32_t i = 0; i + 1 < n; ++i) {
    Perm p = perm_identity(n);
    std::swap(p[i], p[i + 1]);
    gens.push_back(std::move(p));
  }
  return gens;
}

Bigint order_of(const FamilyResult& F) { return schreier_sims(F.gens.perms, F.graph.n).order; }

void check_lagrange(const OrbitReport& R, const Bigint& order) {
  std::uint64_t sum = 0;
  for (std::uint64_t s : R.orbit_sizes) {
    CHECK(order % s == 0);
    sum += s;
  }
  CHECK(sum == R.total);
  CHECK(R.representatives.size() == R.orbit_sizes.size());
}

std::vector<std::size_t> orbit_counts(const TransitivityReport& R) {
  std::vector<std::size_t> out;
  for (const auto& L : R.levels) out.push_back(L.orbit_count());
  return out;
}

// A geodesic-transitive instance must also be distance-transitive, and both
// reports must satisfy Lagrange against the generated group order.
void check_gt_instance(const FamilyResult& F) {
  const auto gt = check_geodesic_transitive(F.graph, F.gens.perms);
  CHECK(gt.verdict);
  CHECK(gt.note.empty());
  const auto dt = check_distance_transitive(F.graph, F.gens.perms);
  CHECK(dt.verdict);
  const Bigint order = order_of(F);
  for (const auto& L : gt.levels) check_lagrange(L, order);
  for (const auto& L : dt.levels) check_lagrange(L, order);
}

}  // namespace

TEST_CASE("stabilizer chains and group orders") {
  const auto S5 = schreier_sims(symmetric_group_gens(5), 5);
  CHECK(S5.order == 120);
  Bigint product = 1;
  for (std::uint64_t t : S5.transversal_sizes) product *= t;
  CHECK(S5.order == product);
  for (const Perm& g : S5.strong_gens) CHECK(bsgs_contains(S5, g));

  const auto trivial = schreier_sims({}, 6);
  CHECK(trivial.order == 1);
  CHECK(trivial.base.empty());
  CHECK(bsgs_contains(trivial, perm_identity(6)));
  CHECK_FALSE(bsgs_contains(trivial, Perm{1, 0, 2, 3, 4, 5}));

  const auto identity_only = schreier_sims({perm_identity(4)}, 4);
  CHECK(identity_only.order == 1);

  const auto C3 = schreier_sims({Perm{1, 2, 0}}, 3);
  CHECK(C3.order == 3);
  CHECK(bsgs_contains(C3, Perm{2, 0, 1}));
  CHECK_FALSE(bsgs_contains(C3, Perm{1, 0, 2}));

  // S5 fixing the last of six points: membership separates the fixed point.
  std::vector<Perm> embedded;
  for (const Perm& g : symmetric_group_gens(5)) {
    Perm p = g;
    p.push_back(5);
    embedded.push_back(std::move(p));
  }
  const auto S5in6 = schreier_sims(embedded, 6);
  CHECK(S5in6.order == 120);
  CHECK(bsgs_contains(S5in6, Perm{1, 0, 2, 3, 4, 5}));
  CHECK_FALSE(bsgs_contains(S5in6, Perm{0, 1, 2, 3, 5, 4}));
}

TEST_CASE("orders of classical point actions") {
  const auto sp42 = build_polar_grassmann(space_make_q(SpaceKind::symplectic, 2, 2), 1);
  CHECK(sp42.graph.n == 15);
  CHECK(order_of(sp42) == 720);

  const auto sp43 = build_polar_grassmann(space_make_q(SpaceKind::symplectic, 2, 3), 1);
  CHECK(sp43.graph.n == 40);
  CHECK(order_of(sp43) == 25920);

  const auto sp62 = build_polar_grassmann(space_make_q(SpaceKind::symplectic, 3, 2), 2);
  CHECK(sp62.graph.n == 315);
  CHECK(order_of(sp62) == 1451520);
}

TEST_CASE("orders of family generator groups") {
  CHECK(order_of(build_johnson(5, 2)) == 120);
  CHECK(order_of(build_hamming(3, 2)) == 48);
  CHECK(order_of(build_hamming(4, 2)) == 384);
  CHECK(order_of(build_cycle(6)) == 12);
  CHECK(order_of(build_incidence_design(3, 2)) == 336);
  CHECK(order_of(build_doubled_odd(3)) == 240);
  CHECK(order_of(build_dual_polar(space_make_q(SpaceKind::symplectic, 2, 2))) == 720);
  CHECK(order_of(build_alternating_forms(4, 2)) == 1290240);
}

TEST_CASE("schreier sims input validation") {
  CHECK(code_of([] { schreier_sims({Perm{0, 0, 1}}, 3); }) == errc::not_permutation);
  CHECK(code_of([] { schreier_sims({Perm{1, 0}}, 3); }) == errc::not_permutation);
  const auto S3 = schreier_sims(symmetric_group_gens(3), 3);
  CHECK(code_of([&] { bsgs_contains(S3, Perm{1, 0}); }) == errc::not_permutation);
}

TEST_CASE("orbit partitions of tuple sets") {
  const auto one = orbits_on_tuples({perm_identity(3)}, {{1}}, "singleton");
  CHECK(one.orbit_count() == 1);
  CHECK(one.total == 1);
  CHECK(one.orbit_sizes == std::vector<std::uint64_t>{1});
  CHECK(one.representatives[0] == Tuple{1});
  CHECK(one.object_class == "singleton");

  const auto cube = build_hamming(3, 2);
  const auto T = bfs_all(cube.graph);
  std::vector<Tuple> antipodal;
  for (std::uint32_t u = 0; u < cube.graph.n; ++u)
    for (std::uint32_t v = 0; v < cube.graph.n; ++v)
      if (T.at(u, v) == 3) antipodal.push_back({u, v});
  CHECK(antipodal.size() == 8);
  const auto R = orbits_on_tuples(cube.gens.perms, antipodal, "antipodal pairs");
  CHECK(R.orbit_count() == 1);
  CHECK(R.orbit_sizes == std::vector<std::uint64_t>{8});
  check_lagrange(R, order_of(cube));

  // Without any generators each tuple is its own orbit.
  const auto frozen = orbits_on_tuples({}, antipodal, "antipodal pairs");
  CHECK(frozen.orbit_count() == 8);
}

TEST_CASE("tuple orbit input validation") {
  CHECK(code_of([] { orbits_on_tuples({}, {{0, 1}, {2}}, "x"); }) == errc::bad_params);
  CHECK(code_of([] { orbits_on_tuples({}, {{0}, {0}}, "x"); }) == errc::not_distinct);
  CHECK(code_of([] { orbits_on_tuples({perm_identity(2)}, {{5}}, "x"); }) == errc::bad_params);
  CHECK(code_of([] { orbits_on_tuples({Perm{1, 2, 3, 0}}, {{0, 1}}, "x"); }) == errc::internal);
  const auto empty = orbits_on_tuples({perm_identity(2)}, {}, "x");
  CHECK(empty.total == 0);
  CHECK(empty.orbit_count() == 0);
}

TEST_CASE("distance transitivity verdicts") {
  const auto johnson = build_johnson(5, 2);
  const auto dt = check_distance_transitive(johnson.graph, johnson.gens.perms);
  CHECK(dt.verdict);
  CHECK(dt.levels.size() == 3);
  CHECK(dt.levels[0].total == 10);
  CHECK(dt.levels[1].total == 60);
  CHECK(dt.levels[2].total == 30);
  CHECK(dt.levels[1].object_class == "pairs at distance 1");

  const auto c6 = build_cycle(6);
  CHECK(check_distance_transitive(c6.graph, c6.gens.perms).verdict);

  const auto pg = build_polar_grassmann(space_make_q(SpaceKind::symplectic, 3, 2), 2);
  const auto hedged = check_distance_transitive(pg.graph, pg.gens.perms);
  CHECK_FALSE(hedged.verdict);
  CHECK(orbit_counts(hedged) == std::vector<std::size_t>{1, 1, 2, 1});
  CHECK(hedged.note == "more than one orbit at levels 2; the verdict is relative to the "
                       "generated group, which may be a proper subgroup of the full "
                       "automorphism group");
}

TEST_CASE("geodesic transitivity verdicts") {
  const auto cube = build_hamming(3, 2);
  const auto gt = check_geodesic_transitive(cube.graph, cube.gens.perms);
  CHECK(gt.verdict);
  CHECK(gt.levels.size() == 4);
  const auto census = geodesic_census(cube.graph);
  for (std::size_t len = 0; len < gt.levels.size(); ++len)
    CHECK(census[len] == gt.levels[len].total);
  CHECK(gt.levels[3].object_class == "geodesics of length 3");

  const auto dp = build_dual_polar(space_make_q(SpaceKind::symplectic, 2, 2));
  CHECK(check_geodesic_transitive(dp.graph, dp.gens.perms).verdict);

  const auto pg = build_polar_grassmann(space_make_q(SpaceKind::symplectic, 3, 2), 2);
  const auto split = check_geodesic_transitive(pg.graph, pg.gens.perms);
  CHECK_FALSE(split.verdict);
  CHECK(orbit_counts(split) == std::vector<std::size_t>{1, 1, 2, 1});
  CHECK(split.levels[2].total == 68040);
  CHECK(split.levels[2].orbit_sizes.size() == 2);
  check_lagrange(split.levels[2], 1451520);
}

TEST_CASE("geodesic transitivity across the family roster") {
  check_gt_instance(build_johnson(5, 2));
  check_gt_instance(build_odd(3));
  check_gt_instance(build_doubled_odd(3));
  check_gt_instance(build_folded_johnson(3));
  check_gt_instance(build_hamming(4, 3));
  check_gt_instance(build_cycle(6));
  check_gt_instance(build_grassmann(4, 2, 2));
  check_gt_instance(build_doubled_grassmann(2, 2));
  check_gt_instance(build_incidence_design(3, 2));
  check_gt_instance(build_incidence_opposites(4, 2));
  check_gt_instance(build_incidence_opposites(3, 2));
  check_gt_instance(build_dual_polar(space_make_q(SpaceKind::symplectic, 2, 3)));
  check_gt_instance(build_bilinear_forms(2, 2, 2));
  check_gt_instance(build_bilinear_forms(2, 3, 2));
  check_gt_instance(build_alternating_forms(4, 2));
  check_gt_instance(build_hermitian_forms(2, 2));
}

TEST_CASE("halved and folded quotients stay geodesic transitive") {
  const auto do3 = build_doubled_odd(3);
  const auto folded_do3 = folded(do3.graph, do3.gens);
  CHECK(is_isomorphic(folded_do3.graph, build_odd(3).graph));
  CHECK(check_geodesic_transitive(folded_do3.graph, folded_do3.gens.perms).verdict);

  const auto halved_do3 = halved(do3.graph, do3.gens, HalfPart::plus);
  CHECK(is_isomorphic(halved_do3.graph, build_johnson(5, 2).graph));
  CHECK(check_geodesic_transitive(halved_do3.graph, halved_do3.gens.perms).verdict);

  const auto h42 = build_hamming(4, 2);
  const auto folded_h42 = folded(h42.graph, h42.gens);
  CHECK(folded_h42.graph.n == 8);
  CHECK(check_geodesic_transitive(folded_h42.graph, folded_h42.gens.perms).verdict);

  const auto j42 = build_johnson(4, 2);
  const auto folded_j42 = folded(j42.graph, j42.gens);
  CHECK(folded_j42.graph.n == 3);
  CHECK(check_geodesic_transitive(folded_j42.graph, folded_j42.gens.perms).verdict);
}

TEST_CASE("arc orbits") {
  const auto c6 = build_cycle(6);
  const auto two = orbits_on_arcs(c6.graph, c6.gens.perms, 2);
  CHECK(two.orbit_count() == 1);
  CHECK(two.total == 12);
  CHECK(two.object_class == "2-arcs");

  const auto heawood = build_incidence_design(3, 2);
  const auto four = orbits_on_arcs(heawood.graph, heawood.gens.perms, 4);
  CHECK(four.orbit_count() == 1);
  CHECK(four.total == 336);
  check_lagrange(four, order_of(heawood));

  const auto petersen = build_odd(3);
  const auto three = orbits_on_arcs(petersen.graph, petersen.gens.perms, 3);
  CHECK(three.orbit_count() == 1);
  CHECK(three.total == 120);

  CHECK(code_of([&] { orbits_on_arcs(c6.graph, c6.gens.perms, 0); }) == errc::bad_params);
}

TEST_CASE("stabilizer generators") {
  const auto gens = symmetric_group_gens(5);
  const auto stab = stabilizer_generators(gens, 5, 0);
  for (const Perm& h : stab) CHECK(h[0] == 0);
  CHECK(schreier_sims(stab, 5).order == 24);

  const auto capped = stabilizer_generators(gens, 5, 0, 2);
  CHECK(capped.size() == 2);

  CHECK(code_of([&] { stabilizer_generators(gens, 5, 9); }) == errc::bad_params);
}

TEST_CASE("group primitivity matches the metric classification") {
  const auto expect = [](const FamilyResult& F, bool primitive_group, PrimitivityClass metric) {
    CHECK(group_primitive(F.gens.perms, F.graph.n) == primitive_group);
    CHECK(primitivity(F.graph) == metric);
  };
  expect(build_johnson(5, 2), true, PrimitivityClass::primitive);
  expect(build_cycle(5), true, PrimitivityClass::primitive);
  expect(build_hamming(2, 3), true, PrimitivityClass::primitive);
  expect(build_hamming(4, 2), false, PrimitivityClass::both);
  expect(build_doubled_odd(3), false, PrimitivityClass::both);
  expect(build_cycle(6), false, PrimitivityClass::both);
  expect(build_johnson(4, 2), false, PrimitivityClass::antipodal);
  expect(build_incidence_design(3, 2), false, PrimitivityClass::bipartite);

  CHECK(code_of([] { group_primitive({perm_identity(3)}, 3); }) == errc::bad_params);
}

TEST_CASE("divisibility screen") {
  CHECK(divisibility_screen(6, 720));
  CHECK_FALSE(divisibility_screen(Bigint(31046400), Bigint(88704000)));
  CHECK_FALSE(divisibility_screen(Bigint(362880), Bigint(241920)));
  const Bigint patterson_count = Bigint(22880) * 280 * 243 * 144 * 10;
  const Bigint patterson_aut = Bigint(16384) * 2187 * 25 * 7 * 11 * 13;
  CHECK_FALSE(divisibility_screen(patterson_count, patterson_aut));
  CHECK(code_of([] { divisibility_screen(0, 10); }) == errc::bad_params);
}

TEST_CASE("census screens") {
  const auto R = census_screens(13);
  CHECK(R.all_ruled_out);
  CHECK(R.entries.size() == 14);
  for (const auto& e : R.entries) CHECK_FALSE(e.divides);

  const auto& q9_point = R.entries[4];
  CHECK(q9_point.label == "q=9: (q+1) | 4f");
  CHECK(q9_point.divisor == 10);
  CHECK(q9_point.dividend == 8);
  const auto& q9_line = R.entries[5];
  CHECK(q9_line.divisor == 82);
  CHECK(q9_line.dividend == 80);

  const auto wide = census_screens(30);
  CHECK(wide.all_ruled_out);
  CHECK(wide.entries.size() == 26);

  CHECK(code_of([] { census_screens(4); }) == errc::bad_params);
}
