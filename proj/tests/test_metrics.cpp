#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <cstdint>
#include <functional>
#include <string>
#include <variant>
#include <vector>

#include "doctest.h"
#include "geodex/errors.hpp"
#include "geodex/families.hpp"
#include "geodex/metrics.hpp"
#include "geodex/subspace.hpp"

using namespace geodex;

namespace {

using U64s = std::vector<std::uint64_t>;
using Verts = std::vector<std::uint32_t>;

errc code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return errc::internal;
}

IntersectionArray array_of(DRGResult r) {
  REQUIRE(std::holds_alternative<IntersectionArray>(r));
  return std::get<IntersectionArray>(std::move(r));
}

U64s c_of(const Graph& G) { return array_of(intersection_array(G)).c; }

// First vertex at the given distance from x.
std::uint32_t far_vertex(const Graph& G, std::uint32_t x, std::uint32_t d) {
  const auto dist = graph_bfs(G, x);
  for (std::uint32_t v = 0; v < G.n; ++v)
    if (dist[v] == d) return v;
  REQUIRE(false);
  return 0;
}

void check_bijection(const Graph& G, const std::string& spec_text, std::uint32_t x,
                     std::uint32_t d, const Bigint& want) {
  const FamilySpec spec = parse_family_spec(spec_text);
  const BijectionReport r = bijection_check(G, spec, x, far_vertex(G, x, d));
  CHECK(r.passed);
  CHECK(r.flag_count == want);
  CHECK(r.geodesic_count == want);
  CHECK(r.expected == want);
  CHECK(r.images_distinct);
  CHECK(r.images_valid);
  CHECK(r.counts_match);
  CHECK(r.counterexample.empty());
}

Graph path3() {
  GraphBuilder builder({"Path", "n=3"}, {"a", "b", "c"});
  builder.add_edge(0, 1);
  builder.add_edge(1, 2);
  return builder.finish();
}

}  // namespace

TEST_CASE("distance tables and diameters") {
  const Graph cube = build_hamming(3, 2).graph;
  const DistanceTable T = bfs_all(cube);
  CHECK(T.diameter == 3);
  CHECK(T.at(cube.index_of("0,0,0"), cube.index_of("1,1,1")) == 3);
  CHECK(T.at(0, 0) == 0);
  CHECK(T.at(3, 5) == T.at(5, 3));

  CHECK(bfs_all(build_johnson(5, 2).graph).diameter == 2);
  CHECK(bfs_all(build_doubled_odd(3).graph).diameter == 5);
  const Graph PG = build_polar_grassmann(space_make_q(SpaceKind::symplectic, 3, 2), 2).graph;
  CHECK(bfs_all(PG).diameter == 3);
}

TEST_CASE("intersection arrays of classical graphs") {
  const IntersectionArray J = array_of(intersection_array(build_johnson(5, 2).graph));
  CHECK(J.b == U64s{6, 2});
  CHECK(J.c == U64s{1, 4});

  const IntersectionArray J63 = array_of(intersection_array(build_johnson(6, 3).graph));
  CHECK(J63.b == U64s{9, 4, 1});
  CHECK(J63.c == U64s{1, 4, 9});

  const IntersectionArray DO = array_of(intersection_array(build_doubled_odd(3).graph));
  CHECK(DO.b == U64s{3, 2, 2, 1, 1});
  CHECK(DO.c == U64s{1, 1, 2, 2, 3});

  const IntersectionArray H43 = array_of(intersection_array(build_hamming(4, 3).graph));
  CHECK(H43.b == U64s{8, 6, 4, 2});
  CHECK(H43.c == U64s{1, 2, 3, 4});

  const IntersectionArray G422 = array_of(intersection_array(build_grassmann(4, 2, 2).graph));
  CHECK(G422.b == U64s{18, 8});
  CHECK(G422.c == U64s{1, 9});

  const IntersectionArray C5 = array_of(intersection_array(build_cycle(5).graph));
  CHECK(C5.b == U64s{2, 1});
  CHECK(C5.c == U64s{1, 1});

  const IntersectionArray K4 = array_of(intersection_array(build_johnson(4, 1).graph));
  CHECK(K4.b == U64s{3});
  CHECK(K4.c == U64s{1});
}

TEST_CASE("c-sequences match their closed forms across families") {
  CHECK(c_of(build_doubled_grassmann(2, 2).graph) == U64s{1, 1, 3});
  CHECK(c_of(build_doubled_grassmann(3, 2).graph) == U64s{1, 1, 3, 3, 7});
  CHECK(c_of(build_grassmann(5, 2, 2).graph) == U64s{1, 9});
  CHECK(c_of(build_dual_polar(space_make_q(SpaceKind::symplectic, 2, 2)).graph) == U64s{1, 3});
  CHECK(c_of(build_dual_polar(space_make_q(SpaceKind::symplectic, 2, 3)).graph) == U64s{1, 4});
  CHECK(c_of(build_dual_polar(space_make_q(SpaceKind::symplectic, 3, 2)).graph) == U64s{1, 3, 7});
  CHECK(c_of(build_incidence_opposites(3, 2).graph) == U64s{1, 1, 1, 2});
  CHECK(c_of(build_incidence_opposites(4, 2).graph) == U64s{1, 2, 3, 4});
  CHECK(c_of(build_bilinear_forms(2, 3, 2).graph) == U64s{1, 6});
  CHECK(c_of(build_alternating_forms(4, 2).graph) == U64s{1, 20});
  CHECK(c_of(build_alternating_forms(5, 2).graph) == U64s{1, 20});
  CHECK(c_of(build_hermitian_forms(2, 2).graph) == U64s{1, 2});
}

TEST_CASE("graphs that are not distance-regular produce a witness") {
  const Graph PG = build_polar_grassmann(space_make_q(SpaceKind::symplectic, 3, 2), 2).graph;
  const DRGResult r = intersection_array(PG);
  REQUIRE(std::holds_alternative<NotDRGWitness>(r));
  const auto& w = std::get<NotDRGWitness>(r);
  CHECK(w.count1 != w.count2);
  CHECK(w.describe().find("at distance") != std::string::npos);

  const DRGResult rp = intersection_array(path3());
  REQUIRE(std::holds_alternative<NotDRGWitness>(rp));
  const auto& wp = std::get<NotDRGWitness>(rp);
  CHECK(wp.kind == 'b');
  CHECK(wp.distance == 1);
}

TEST_CASE("geodesic enumeration is exact, valid and ordered") {
  const Graph cube = build_hamming(3, 2).graph;
  const std::uint32_t x = cube.index_of("0,0,0");
  const std::uint32_t y = cube.index_of("1,1,1");
  const auto geos = geodesics(cube, x, y);
  REQUIRE(geos.size() == 6);
  for (const auto& g : geos) {
    CHECK(g.length() == 3);
    CHECK(is_geodesic(cube, g.vertices));
  }
  CHECK(geos.front().vertices == Verts{x, cube.index_of("0,0,1"), cube.index_of("0,1,1"), y});
  CHECK(geos.back().vertices == Verts{x, cube.index_of("1,0,0"), cube.index_of("1,1,0"), y});

  const auto loop = geodesics(cube, 5, 5);
  REQUIRE(loop.size() == 1);
  CHECK(loop.front().vertices == Verts{5});
  CHECK(loop.front().length() == 0);

  const Graph DO = build_doubled_odd(3).graph;
  const std::uint32_t a = DO.index_of("1,2");
  CHECK(geodesics(DO, a, far_vertex(DO, a, 5)).size() == 12);
}

TEST_CASE("geodesic validity checks") {
  const Graph cube = build_hamming(3, 2).graph;
  CHECK(is_geodesic(cube, {0}));
  CHECK(is_geodesic(cube, {1, 0, 2}));
  CHECK_FALSE(is_geodesic(cube, {}));
  CHECK_FALSE(is_geodesic(cube, {0, cube.index_of("0,1,1")}));
  CHECK_FALSE(is_geodesic(cube, {0, 1, 0}));
  CHECK_FALSE(is_geodesic(cube, {0, 1, cube.index_of("0,0,0")}));
  CHECK_FALSE(is_geodesic(cube, {0, 99}));
}

TEST_CASE("ordered geodesic census") {
  const auto cube_counts = geodesic_census(build_hamming(3, 2).graph);
  REQUIRE(cube_counts.size() == 4);
  CHECK(cube_counts[0] == 8);
  CHECK(cube_counts[1] == 24);
  CHECK(cube_counts[2] == 48);
  CHECK(cube_counts[3] == 48);

  const auto j_counts = geodesic_census(build_johnson(5, 2).graph);
  REQUIRE(j_counts.size() == 3);
  CHECK(j_counts[0] == 10);
  CHECK(j_counts[1] == 60);
  CHECK(j_counts[2] == 120);

  const auto c_counts = geodesic_census(build_cycle(5).graph);
  REQUIRE(c_counts.size() == 3);
  CHECK(c_counts[0] == 5);
  CHECK(c_counts[1] == 10);
  CHECK(c_counts[2] == 10);

  const Graph PG = build_polar_grassmann(space_make_q(SpaceKind::symplectic, 3, 2), 2).graph;
  const auto pg_counts = geodesic_census(PG);
  REQUIRE(pg_counts.size() == 4);
  CHECK(pg_counts[0] == 315);
  CHECK(pg_counts[1] == 315 * 18);
}

TEST_CASE("antipodal geodesic counts match the intersection-array product") {
  CHECK(antipodal_geodesic_count(build_johnson(5, 2).graph) == 4);
  CHECK(antipodal_geodesic_count(build_grassmann(4, 2, 2).graph) == 9);
  CHECK(antipodal_geodesic_count(build_dual_polar(space_make_q(SpaceKind::symplectic, 2, 2)).graph) == 3);
  CHECK(antipodal_geodesic_count(build_hamming(3, 2).graph) == 6);
  CHECK(antipodal_geodesic_count(build_hamming(4, 2).graph) == 24);
  CHECK(antipodal_geodesic_count(build_doubled_odd(3).graph) == 12);

  const Graph PG = build_polar_grassmann(space_make_q(SpaceKind::symplectic, 3, 2), 2).graph;
  CHECK(code_of([&] { antipodal_geodesic_count(PG); }) == errc::not_distance_regular);
}

TEST_CASE("primitivity classification") {
  CHECK(primitivity(build_johnson(5, 2).graph) == PrimitivityClass::primitive);
  CHECK(primitivity(build_odd(3).graph) == PrimitivityClass::primitive);
  CHECK(primitivity(build_hamming(2, 3).graph) == PrimitivityClass::primitive);
  CHECK(primitivity(build_johnson(4, 1).graph) == PrimitivityClass::primitive);
  CHECK(primitivity(build_cycle(5).graph) == PrimitivityClass::primitive);

  CHECK(primitivity(build_hamming(4, 2).graph) == PrimitivityClass::both);
  CHECK(primitivity(build_doubled_odd(3).graph) == PrimitivityClass::both);
  CHECK(primitivity(build_cycle(6).graph) == PrimitivityClass::both);

  CHECK(primitivity(build_johnson(4, 2).graph) == PrimitivityClass::antipodal);
  CHECK(primitivity(build_doubled_grassmann(2, 2).graph) == PrimitivityClass::bipartite);

  CHECK(std::string(primitivity_class_name(PrimitivityClass::primitive)) == "primitive");
  CHECK(std::string(primitivity_class_name(PrimitivityClass::bipartite)) == "bipartite");
  CHECK(std::string(primitivity_class_name(PrimitivityClass::antipodal)) == "antipodal");
  CHECK(std::string(primitivity_class_name(PrimitivityClass::both)) == "both");
}

TEST_CASE("flag maps on hand-built set-family flags") {
  const Graph J = build_johnson(5, 2).graph;
  const FamilySpec jspec = parse_family_spec("Johnson(5,2)");
  const std::uint32_t jx = J.index_of("1,2");
  const std::uint32_t jy = J.index_of("3,4");
  Flag jf;
  jf.set_chain_x = {{1}};
  jf.set_chain_y = {{3}};
  CHECK(flag_to_geodesic(J, jspec, jx, jy, jf).vertices == Verts{jx, J.index_of("1,3"), jy});
  jf.set_chain_x = {{2}};
  jf.set_chain_y = {{4}};
  CHECK(flag_to_geodesic(J, jspec, jx, jy, jf).vertices == Verts{jx, J.index_of("2,4"), jy});

  const Graph H = build_hamming(3, 2).graph;
  const std::uint32_t hx = H.index_of("0,0,0");
  const std::uint32_t hy = H.index_of("1,1,1");
  Flag hf;
  hf.set_chain_y = {{0}, {0, 1}, {0, 1, 2}};
  const Geodesic hg = flag_to_geodesic(H, parse_family_spec("Hamming(3,2)"), hx, hy, hf);
  CHECK(hg.vertices == Verts{hx, H.index_of("1,0,0"), H.index_of("1,1,0"), hy});
}

TEST_CASE("flag maps on dual polar and Hermitian hand-built flags") {
  const Graph DP = build_dual_polar(space_make_q(SpaceKind::symplectic, 2, 2)).graph;
  const FamilySpec dspec = parse_family_spec("DualPolar(Sp(4,2))");
  const std::uint32_t dy = far_vertex(DP, 0, 2);
  const auto dflags = enumerate_flags(DP, dspec, 0, dy);
  REQUIRE(dflags.size() == 3);
  for (const auto& fl : dflags) {
    CHECK(fl.sub_chain_x.empty());
    CHECK(fl.sub_chain_y.size() == 1);
    const Geodesic g = flag_to_geodesic(DP, dspec, 0, dy, fl);
    CHECK(g.length() == 2);
    CHECK(is_geodesic(DP, g.vertices));
  }

  const Graph HF = build_hermitian_forms(2, 2).graph;
  const FamilySpec hspec = parse_family_spec("HermitianForms(2,2)");
  const FieldPtr F4 = Field::make(2, 2);
  const std::uint32_t hx = HF.index_of("0,0;0,0");
  const std::uint32_t hy = HF.index_of("1,0;0,1");
  Flag fl;
  fl.sub_chain_x = {span_of_vectors(F4, 2, {{1, 0}})};
  const Geodesic g = flag_to_geodesic(HF, hspec, hx, hy, fl);
  CHECK(g.vertices == Verts{hx, HF.index_of("0,0;0,1"), hy});
  CHECK(is_geodesic(HF, g.vertices));
}

TEST_CASE("flag map input validation") {
  const Graph J = build_johnson(5, 2).graph;
  const FamilySpec jspec = parse_family_spec("Johnson(5,2)");
  const std::uint32_t jx = J.index_of("1,2");
  const std::uint32_t jy = J.index_of("3,4");

  CHECK(code_of([&] { flag_to_geodesic(J, jspec, jx, J.adj[jx][0], Flag{}); }) ==
        errc::bad_distance);
  CHECK(code_of([&] { enumerate_flags(J, jspec, jx, J.adj[jx][0]); }) == errc::bad_distance);
  CHECK(code_of([&] { flag_to_geodesic(J, parse_family_spec("Johnson(6,2)"), jx, jy, Flag{}); }) ==
        errc::bad_params);
  CHECK(code_of([&] { flag_to_geodesic(J, jspec, jx, jy, Flag{}); }) == errc::bad_flag);

  Flag outside;
  outside.set_chain_x = {{3}};
  outside.set_chain_y = {{3}};
  CHECK(code_of([&] { flag_to_geodesic(J, jspec, jx, jy, outside); }) == errc::bad_flag);

  const Graph O = build_odd(3).graph;
  CHECK(code_of([&] {
          flag_to_geodesic(O, parse_family_spec("Odd(3)"), 0, far_vertex(O, 0, 2), Flag{});
        }) == errc::bad_params);

  const Graph H = build_hamming(3, 2).graph;
  Flag subs;
  subs.set_chain_y = {{0}, {0, 1}, {0, 1, 2}};
  subs.sub_chain_x = {zero_subspace(Field::make(2, 1), 1)};
  CHECK(code_of([&] {
          flag_to_geodesic(H, parse_family_spec("Hamming(3,2)"), 0, 7, subs);
        }) == errc::bad_flag);

  const Graph DO = build_doubled_odd(3).graph;
  std::uint32_t big = DO.n;
  for (std::uint32_t v = 0; v < DO.n; ++v)
    if (std::count(DO.labels[v].begin(), DO.labels[v].end(), ',') == 2) {
      big = v;
      break;
    }
  REQUIRE(big < DO.n);
  CHECK(code_of([&] {
          flag_to_geodesic(DO, parse_family_spec("DoubledOdd(3)"), big, far_vertex(DO, big, 5),
                           Flag{});
        }) == errc::bad_flag);

  const Graph HF = build_hermitian_forms(2, 2).graph;
  Flag degenerate;
  degenerate.sub_chain_x = {span_of_vectors(Field::make(2, 2), 2, {{1, 1}})};
  CHECK(code_of([&] {
          flag_to_geodesic(HF, parse_family_spec("HermitianForms(2,2)"), HF.index_of("0,0;0,0"),
                           HF.index_of("1,0;0,1"), degenerate);
        }) == errc::bad_flag);
}

TEST_CASE("flag-to-geodesic bijection: set families") {
  const Graph J52 = build_johnson(5, 2).graph;
  check_bijection(J52, "Johnson(5,2)", J52.index_of("1,2"), 2, 4);
  const Graph J63 = build_johnson(6, 3).graph;
  check_bijection(J63, "Johnson(6,3)", J63.index_of("1,2,3"), 3, 36);
  const Graph DO = build_doubled_odd(3).graph;
  check_bijection(DO, "DoubledOdd(3)", DO.index_of("1,2"), 5, 12);
  const Graph H32 = build_hamming(3, 2).graph;
  check_bijection(H32, "Hamming(3,2)", 0, 3, 6);
  const Graph H43 = build_hamming(4, 3).graph;
  check_bijection(H43, "Hamming(4,3)", 0, 4, 24);
}

TEST_CASE("flag-to-geodesic bijection: subspace families") {
  check_bijection(build_grassmann(4, 2, 2).graph, "Grassmann(4,2,2)", 0, 2, 9);
  check_bijection(build_grassmann(5, 2, 2).graph, "Grassmann(5,2,2)", 0, 2, 9);
  check_bijection(build_dual_polar(space_make_q(SpaceKind::symplectic, 2, 2)).graph,
                  "DualPolar(Sp(4,2))", 0, 2, 3);
  check_bijection(build_dual_polar(space_make_q(SpaceKind::symplectic, 2, 3)).graph,
                  "DualPolar(Sp(4,3))", 0, 2, 4);
  check_bijection(build_dual_polar(space_make_q(SpaceKind::symplectic, 3, 2)).graph,
                  "DualPolar(Sp(6,2))", 0, 3, 21);

  const Graph IO4 = build_incidence_opposites(4, 2).graph;
  REQUIRE(IO4.labels[0].rfind("p:", 0) == 0);
  check_bijection(IO4, "IncidenceOpposites(4,2)", 0, 4, 24);
  const Graph IO3 = build_incidence_opposites(3, 2).graph;
  REQUIRE(IO3.labels[0].rfind("p:", 0) == 0);
  check_bijection(IO3, "IncidenceOpposites(3,2)", 0, 4, 2);
}

TEST_CASE("flag-to-geodesic bijection: forms families") {
  check_bijection(build_bilinear_forms(2, 2, 2).graph, "BilinearForms(2,2,2)", 0, 2, 6);
  check_bijection(build_bilinear_forms(2, 3, 2).graph, "BilinearForms(2,3,2)", 0, 2, 6);
  check_bijection(build_bilinear_forms(3, 3, 2).graph, "BilinearForms(3,3,2)", 0, 3, 168);
  check_bijection(build_alternating_forms(4, 2).graph, "AlternatingForms(4,2)", 0, 2, 20);
  check_bijection(build_alternating_forms(5, 2).graph, "AlternatingForms(5,2)", 0, 2, 20);
  check_bijection(build_hermitian_forms(2, 2).graph, "HermitianForms(2,2)", 0, 2, 2);
}

TEST_CASE("bijection check requires a distance-regular graph") {
  const Graph PG = build_polar_grassmann(space_make_q(SpaceKind::symplectic, 3, 2), 2).graph;
  CHECK(code_of([&] {
          bijection_check(PG, parse_family_spec("PolarGrassmann(Sp(6,2),2)"), 0,
                          far_vertex(PG, 0, 3));
        }) == errc::not_distance_regular);
}
