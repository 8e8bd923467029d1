// Constructors for the graph families of the distance-transitive census,
// each returned with a verified generating set of automorphisms, plus the
// halved / folded / bipartite-double / distance-power / line-graph operators.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "geodex/formed_space.hpp"
#include "geodex/graph.hpp"
#include "geodex/perm.hpp"

namespace geodex {

struct GeneratorSet {
  std::vector<Perm> perms;
  std::vector<std::string> provenance;  // one tag per permutation
  std::vector<std::string> notes;       // omissions and caveats
};

struct FamilyResult {
  Graph graph;
  GeneratorSet gens;
};

// Checks degree, bijectivity and edge preservation of every permutation;
// a violation is a construction bug and raises errc::internal.
void verify_generators(const Graph& G, const GeneratorSet& gens);

// Subsets of {1..n}.
FamilyResult build_johnson(std::uint32_t n, std::uint32_t k);
FamilyResult build_odd(std::uint32_t k);
FamilyResult build_doubled_odd(std::uint32_t k);
FamilyResult build_folded_johnson(std::uint32_t k);

// Tuples and cycles.
FamilyResult build_hamming(std::uint32_t k, std::uint32_t m);
FamilyResult build_cycle(std::uint32_t k);

// Subspaces of GF(q)^n.
FamilyResult build_grassmann(std::uint32_t n, std::uint32_t k, std::uint32_t q);
FamilyResult build_doubled_grassmann(std::uint32_t k, std::uint32_t q);
FamilyResult build_incidence_design(std::uint32_t n, std::uint32_t q);
FamilyResult build_incidence_opposites(std::uint32_t n, std::uint32_t q);

// Singular subspaces of a formed space.
FamilyResult build_dual_polar(const FormedSpace& W);
FamilyResult build_half_dual_polar(const FormedSpace& W);
FamilyResult build_polar_grassmann(const FormedSpace& W, std::uint32_t k);
FamilyResult build_symplectic_quadrangle_incidence(std::uint32_t q);

// Matrix spaces with rank-metric adjacency.
FamilyResult build_bilinear_forms(std::uint32_t m, std::uint32_t k, std::uint32_t q);
FamilyResult build_alternating_forms(std::uint32_t k, std::uint32_t q);
FamilyResult build_hermitian_forms(std::uint32_t k, std::uint32_t r);

// Text form "Family(arg,...)", e.g. "Johnson(7,3)", "DualPolar(Sp(6,2))",
// "PolarGrassmann(O+(6,3),2)". Nested parentheses group space arguments.
struct FamilySpec {
  std::string family;
  std::vector<std::string> args;
};

FamilySpec parse_family_spec(const std::string& text);
FormedSpace parse_space(const std::string& text);  // "Sp(4,2)", "O-(6,3)", "U(5,4)", ...
FamilyResult build(const FamilySpec& spec);
const std::vector<std::string>& family_names();

enum class HalfPart { plus, minus };

// Distance-2 graph on one color class of a bipartite graph. The plus part is
// the one containing vertex 0.
Graph halved(const Graph& G, HalfPart part);
FamilyResult halved(const Graph& G, const GeneratorSet& gens, HalfPart part);

// Quotient by antipodal classes (components of the distance-diameter graph,
// which must be cliques).
Graph folded(const Graph& G);
FamilyResult folded(const Graph& G, const GeneratorSet& gens);

Graph bipartite_double(const Graph& G);
FamilyResult bipartite_double(const Graph& G, const GeneratorSet& gens);

// Same vertex set, adjacency at distance exactly i. The result may fall
// apart; components are returned in order of their least original vertex.
struct DistancePower {
  std::vector<Graph> components;
  bool connected() const { return components.size() == 1; }
};
DistancePower distance_power(const Graph& G, std::uint32_t i);

Graph line_graph(const Graph& G);

}  // namespace geodex
