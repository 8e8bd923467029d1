// Distance structure of a graph: BFS tables, intersection arrays, geodesic
// enumeration and counting, and the constructive flag-to-geodesic maps with
// their bijection checker.
#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "geodex/bigint.hpp"
#include "geodex/families.hpp"
#include "geodex/graph.hpp"
#include "geodex/subspace.hpp"

namespace geodex {

struct DistanceTable {
  std::vector<std::vector<std::uint32_t>> dist;  // dist[u][v]
  std::uint32_t diameter = 0;

  std::uint32_t at(std::uint32_t u, std::uint32_t v) const { return dist[u][v]; }
};

DistanceTable bfs_all(const Graph& G);

struct IntersectionArray {
  std::vector<std::uint64_t> b;  // b_0 .. b_{delta-1}
  std::vector<std::uint64_t> c;  // c_1 .. c_delta
};

// Two ordered pairs at the same distance with different forward or backward
// neighbor counts, disproving distance-regularity.
struct NotDRGWitness {
  std::uint32_t distance = 0;
  char kind = 'c';  // 'c' or 'b'
  std::uint32_t u1 = 0, v1 = 0, u2 = 0, v2 = 0;
  std::uint64_t count1 = 0, count2 = 0;

  std::string describe() const;
};

using DRGResult = std::variant<IntersectionArray, NotDRGWitness>;

DRGResult intersection_array(const Graph& G, const DistanceTable& T);
DRGResult intersection_array(const Graph& G);

struct Geodesic {
  std::vector<std::uint32_t> vertices;

  std::uint32_t length() const { return static_cast<std::uint32_t>(vertices.size()) - 1; }
};

bool is_geodesic(const Graph& G, const std::vector<std::uint32_t>& vertices);

// All geodesics from x to y, ordered lexicographically by vertex sequence.
std::vector<Geodesic> geodesics(const Graph& G, std::uint32_t x, std::uint32_t y);

// Ordered geodesic counts per length, index 0 holding the vertex count. For
// a distance-regular graph the result is checked against v * b_0...b_{i-1}.
std::vector<Bigint> geodesic_census(const Graph& G);

// Geodesic count between one antipodal pair of a distance-regular graph,
// checked against the product c_1 c_2 ... c_delta.
Bigint antipodal_geodesic_count(const Graph& G);

enum class PrimitivityClass { primitive, bipartite, antipodal, both };

const char* primitivity_class_name(PrimitivityClass c);

// Classifies by connectivity of the distance powers: bipartite when the
// distance-2 graph falls apart, antipodal when the diameter-distance graph is
// a disjoint union of at least two cliques, one of size two or more.
PrimitivityClass primitivity(const Graph& G);

// Flag data for the constructive geodesic maps, in each family's native
// terms. Chains are listed innermost first; see flag_to_geodesic for the
// shape expected per family.
struct Flag {
  std::vector<std::vector<std::uint32_t>> set_chain_x;  // subsets, sorted elements
  std::vector<std::vector<std::uint32_t>> set_chain_y;
  std::vector<Subspace> sub_chain_x;
  std::vector<Subspace> sub_chain_y;
};

// Maps a flag pair to the geodesic it determines between the antipodal
// vertices x and y. Supported families and flag shapes:
//   Johnson          set_chain_x: sizes k-1..1 under X; set_chain_y: 1..k-1 under Y
//   DoubledOdd       x on the small side; set_chain_x: k-2..1; set_chain_y: 1..k-1
//   Hamming          set_chain_y: position sets, sizes 1..k, last = all positions
//   Grassmann        sub_chain_x: dims k-1..1 under X; sub_chain_y: dims 1..k-1
//   DualPolar        sub_chain_y: dims 1..omega-1 under Y (the X side is forced)
//   IncidenceOpposites  x, y points; sub_chain_x = {U}, sub_chain_y = {<u>}
//   BilinearForms    sub_chain_x: U_{m-1}..U_1 (dims m-1..1); sub_chain_y: their
//                    complements, increasing dims 1..m-1
//   AlternatingForms sub_chain_x: nondegenerate chain, dims 2,4,..,2(floor(k/2)-1),
//                    inside the fixed complement of the radical of Y-X
//   HermitianForms   sub_chain_x: nondegenerate chain, dims 1..k-1
Geodesic flag_to_geodesic(const Graph& G, const FamilySpec& spec, std::uint32_t x,
                          std::uint32_t y, const Flag& flag);

// All valid flags for the pair (x, y), in a deterministic order.
std::vector<Flag> enumerate_flags(const Graph& G, const FamilySpec& spec, std::uint32_t x,
                                  std::uint32_t y);

struct BijectionReport {
  Bigint flag_count = 0;
  Bigint geodesic_count = 0;
  Bigint expected = 0;  // product of the c_i
  bool images_distinct = false;
  bool images_valid = false;
  bool counts_match = false;
  bool passed = false;
  std::string counterexample;  // empty when passed
};

// Enumerates every flag for the antipodal pair, maps each through
// flag_to_geodesic, and compares against the brute-force geodesic list and
// the intersection-array product.
BijectionReport bijection_check(const Graph& G, const FamilySpec& spec, std::uint32_t x,
                                std::uint32_t y);

}  // namespace geodex
