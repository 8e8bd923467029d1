// Geodesic geometry of the polar Grassmann graph on singular k-subspaces
// of a formed space, for k strictly below the Witt index: the opposite-pair
// test, the closed-form distance, canonical geodesic normal forms with
// their cross pairing, type vectors with their orbit counts, Bell-number
// oracles, orbit fingerprints, and the constructive witness that these
// graphs are never distance-regular for 1 < k < omega.
#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "geodex/bigint.hpp"
#include "geodex/formed_space.hpp"
#include "geodex/subspace.hpp"

namespace geodex {

// Four subspaces that coincide exactly when X and Y are opposite: the meet,
// the part of each vertex orthogonal to the other, and the radical of the
// sum. The verdict is their equality.
struct OppositeReport {
  bool verdict = false;
  Subspace meet;            // X /\ Y
  Subspace x_perp_meet_y;   // perp(X) /\ Y
  Subspace x_meet_y_perp;   // X /\ perp(Y)
  Subspace sum_radical;     // perp(X+Y) /\ (X+Y)
};

// Decides oppositeness by comparing the four witness subspaces; on spaces
// with at most 10^4 vectors the verdict is cross-checked by exhausting the
// defining condition (every y in Y \ X pairs nontrivially with some x in X).
OppositeReport is_opposite(const FormedSpace& W, const Subspace& X, const Subspace& Y);

// Graph distance between two vertices of the polar Grassmann graph on
// singular k-subspaces: k - dim(X /\ Y), plus one when the pair is opposite.
// X = Y gives 0.
std::uint32_t pg_distance(const FormedSpace& W, std::uint32_t k, const Subspace& X,
                          const Subspace& Y);

enum class NormalCase { nonopposite, opposite };

const char* normal_case_name(NormalCase c);

// Canonical bases for a geodesic X_0, ..., X_l. The w vectors span the meet
// of the two ends and lie in every vertex. In the nonopposite case (length
// l = m) basis_x holds x_1..x_m, basis_y holds y_1..y_m, and
//   X_i = < x_1..x_{m-i}, y_{m-i+1}..y_m, w >.
// In the opposite case (length l = m+1) basis_x holds x_0..x_m where x_0
// lies in every vertex except the ends, and
//   X_0 = < x_1..x_m, w >,   X_l = < y_1..y_m, w >,
//   X_{1+i} = < x_0, x_1..x_{m-i-1}, y_{m-i+1}..y_m, w >  for 0 <= i < l-1.
// All cross values B(x_i, y_j) vanish except those recorded by the pairing,
// which are 1. Pairing keys and values are 1-based positions into x_1..x_m
// and y_1..y_m; the nonopposite pairing is a partial injection with every
// key strictly above its value, the opposite pairing is the identity.
struct NormalForm {
  NormalCase kind = NormalCase::nonopposite;
  std::vector<std::vector<Fel>> basis_w;
  std::vector<std::vector<Fel>> basis_x;
  std::vector<std::vector<Fel>> basis_y;
  std::map<std::uint32_t, std::uint32_t> pairing;
};

// Normalizes a geodesic, given as its vertex subspaces in path order. The
// bases are extracted from the chains of intersections with the two ends,
// then reduced within the allowed moves (each x_i may absorb earlier x's,
// each y_i later y's, either may be scaled) until the cross values form the
// pairing pattern. Deterministic: pivots are the first nonzero cross value
// scanning right to left. The result reconstructs the input exactly.
NormalForm pg_geodesic_normalize(const FormedSpace& W, const std::vector<Subspace>& L);

// Rebuilds the vertex sequence of a normal form.
std::vector<Subspace> pg_reconstruct(const FormedSpace& W, const NormalForm& nf);

// Type vector of a geodesic with non-opposite ends: entry i (1-based) is
// dim(X_m /\ perp(X_{m-i})) - dim(X_m /\ X_{m-i}). Starts at 1, each step
// stays or rises by one, and no entry exceeds omega - k.
using TypeVector = std::vector<std::uint32_t>;

TypeVector type_of(const FormedSpace& W, const std::vector<Subspace>& L);

// Number of geodesic orbits sharing the given type: (t_1 ... t_m) / t_m!,
// always an exact integer.
Bigint c_tau(const TypeVector& t);

// All type vectors of length m with entries capped at cap, in lexicographic
// order.
std::vector<TypeVector> enumerate_types(std::uint32_t m, std::uint32_t cap);

// Orbit count of length-m geodesics with non-opposite ends: the sum of
// c_tau over all types of length m capped at omega - k. Equals bell(m)
// whenever m <= omega - k.
Bigint nonopposite_orbit_count(std::uint32_t m, std::uint32_t omega, std::uint32_t k);

// Bell number: partitions of an m-set, via the Bell triangle.
Bigint bell(std::uint32_t m);

// Partitions of an m-set into at most max_blocks blocks, by direct
// recursion over element placements; the independent oracle for
// nonopposite_orbit_count.
Bigint partition_oracle(std::uint32_t m, std::uint32_t max_blocks);

// Isometry-invariant matrix over all vertex pairs of a geodesic: entry
// (i, j) is dim(X_i /\ perp(X_j)) - dim(X_i /\ X_j). Geodesics in the same
// orbit of the isometry group have equal fingerprints.
std::vector<std::vector<std::uint32_t>> orbit_fingerprint(const FormedSpace& W,
                                                          const std::vector<Subspace>& L);

// Predicted number of geodesic orbits per length 1..k+1: the nonopposite
// count for length 1, the nonopposite count plus the single opposite orbit
// for lengths 2..k, and exactly one orbit at the diameter k+1.
std::vector<Bigint> predicted_orbit_profile(const FormedSpace& W, std::uint32_t k);

// Two vertices at distance 2 from a common base with different forward
// degrees: every neighbor of `bounded` stays within distance 2 of the base,
// while `spreading` has the neighbor `escape` at distance 3. Such a pair
// rules out distance-regularity.
struct NeighborhoodContrast {
  Subspace base;
  Subspace bounded;
  Subspace spreading;
  Subspace escape;
};

// Builds the contrast from the standard frame (base = first k frame x's,
// the others swap in frame y's) and verifies every claimed distance,
// including the scan over all neighbors of `bounded`. Needs 1 < k < omega;
// at k = 1 and k = omega the graph is distance-regular and the request is
// rejected.
NeighborhoodContrast not_drg_witness(const FormedSpace& W, std::uint32_t k);

}  // namespace geodex
