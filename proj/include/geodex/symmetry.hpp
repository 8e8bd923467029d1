// Permutation group machinery: stabilizer chains with group orders, orbit
// partitions of tuple sets, distance- and geodesic-transitivity checks,
// arc orbits, and the divisibility screens that rule out overly symmetric
// candidate graphs.
#pragma once

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "geodex/bigint.hpp"
#include "geodex/graph.hpp"
#include "geodex/perm.hpp"

namespace geodex {

// One level of a stabilizer chain: the point it stabilizes, the generators
// of the current stabilizer, and a transversal mapping beta to each point of
// its orbit. The orbit is kept in discovery order so rebuilds are repeatable.
struct BSGSLevel {
  std::uint32_t beta = 0;
  std::vector<Perm> gens;
  std::vector<std::uint32_t> orbit;
  std::unordered_map<std::uint32_t, Perm> transversal;
};

// Base and strong generating set for the group generated by the input
// permutations. The order is the product of the transversal sizes.
struct BSGS {
  std::uint32_t degree = 0;
  std::vector<std::uint32_t> base;
  std::vector<Perm> strong_gens;
  std::vector<BSGSLevel> levels;
  std::vector<std::uint64_t> transversal_sizes;
  Bigint order = 1;
};

// Deterministic Schreier-Sims. Accepts any list of permutations of
// {0..n-1}; identity generators are ignored.
BSGS schreier_sims(const std::vector<Perm>& gens, std::uint32_t n);

// Membership by sifting through the stabilizer chain.
bool bsgs_contains(const BSGS& B, const Perm& p);

using Tuple = std::vector<std::uint32_t>;

// Partition of a tuple set into orbits. Representatives are the
// lexicographically least tuple of each orbit, and orbits are listed in
// order of their representatives.
struct OrbitReport {
  std::string object_class;
  std::uint64_t total = 0;
  std::vector<std::uint64_t> orbit_sizes;
  std::vector<Tuple> representatives;

  std::size_t orbit_count() const { return orbit_sizes.size(); }
};

// Orbits of the generated group acting coordinate-wise on a tuple set. The
// set must be invariant under the action; all tuples must share one length.
OrbitReport orbits_on_tuples(const std::vector<Perm>& gens,
                             const std::vector<Tuple>& tuples,
                             const std::string& object_class);

// Per-level orbit reports for a transitivity check. Level i holds the
// ordered pairs at distance i, or the geodesics of length i. The verdict is
// relative to the group generated by the supplied permutations; when it is
// false the note points at the levels that split.
struct TransitivityReport {
  bool verdict = false;
  std::vector<OrbitReport> levels;
  std::string note;
};

// One orbit of ordered pairs at every distance 0..diameter.
TransitivityReport check_distance_transitive(const Graph& G, const std::vector<Perm>& gens);

// One orbit of geodesics at every length 0..diameter. Level 0 is vertex
// transitivity.
TransitivityReport check_geodesic_transitive(const Graph& G, const std::vector<Perm>& gens);

// Orbits on s-arcs: walks of length s that never reverse the previous step.
OrbitReport orbits_on_arcs(const Graph& G, const std::vector<Perm>& gens, std::uint32_t s);

// Generators of the stabilizer of a point, read off the Schreier generators
// of the point's orbit. The list is deduplicated and capped.
std::vector<Perm> stabilizer_generators(const std::vector<Perm>& gens, std::uint32_t n,
                                        std::uint32_t point, std::size_t cap = 10000);

// Whether the generated group acts primitively on {0..n-1}. The group must
// be transitive; block systems are detected by congruence closure seeded
// from stabilizer orbit representatives.
bool group_primitive(const std::vector<Perm>& gens, std::uint32_t n);

// Whether the ordered geodesic count divides the group order. A transitive
// action on the geodesics forces divisibility, so a failure rules the
// symmetry out.
bool divisibility_screen(const Bigint& geodesic_count, const Bigint& order);

// One divisibility condition from the census: a symmetric candidate would
// need divisor | dividend, and `divides` records whether it holds.
struct ScreenEntry {
  std::string label;
  Bigint divisor = 0;
  Bigint dividend = 0;
  bool divides = false;
};

// Arithmetic screens over all odd prime powers 3 < q <= q_max, plus the
// four sporadic candidates screened by their geodesic counts.
struct ScreenReport {
  std::vector<ScreenEntry> entries;
  bool all_ruled_out = true;
};

ScreenReport census_screens(std::uint32_t q_max);

}  // namespace geodex
