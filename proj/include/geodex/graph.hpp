// Finite simple connected graphs with canonical vertex labels. Adjacency is
// kept as sorted neighbor lists, plus packed bitset rows at small sizes so
// adjacency tests are O(1) where the census actually runs.
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "geodex/perm.hpp"

namespace geodex {

inline constexpr std::uint32_t kGraphVertexBound = 100000;
inline constexpr std::uint32_t kGraphBitsetLimit = 16384;
inline constexpr std::uint32_t kUnreached = 0xffffffffu;

struct GraphMeta {
  std::string family;
  std::string params;
};

struct Graph {
  std::uint32_t n = 0;
  std::vector<std::string> labels;
  std::vector<std::vector<std::uint32_t>> adj;
  GraphMeta meta;

  // Packed rows, present only when n <= kGraphBitsetLimit.
  std::vector<std::uint64_t> bits;
  std::uint32_t words_per_row = 0;

  bool adjacent(std::uint32_t u, std::uint32_t v) const;
  std::uint32_t degree(std::uint32_t u) const { return static_cast<std::uint32_t>(adj[u].size()); }
  std::uint64_t edge_count() const;
  std::uint32_t index_of(const std::string& label) const;  // linear scan
};

// Collects edges, then checks the Graph invariants: no loops, vertex count
// within bound, and connectivity.
class GraphBuilder {
public:
  GraphBuilder(GraphMeta meta, std::vector<std::string> labels);
  void add_edge(std::uint32_t u, std::uint32_t v);
  Graph finish();

private:
  GraphMeta meta_;
  std::vector<std::string> labels_;
  std::vector<std::vector<std::uint32_t>> adj_;
  bool finished_ = false;
};

// Distances from src, kUnreached where no path exists.
std::vector<std::uint32_t> graph_bfs(const Graph& G, std::uint32_t src);

// Two-coloring with side[0] = 0; returns false on an odd cycle.
bool graph_bipartition(const Graph& G, std::vector<std::uint8_t>& side);

// Backtracking isomorphism test for small graphs (n <= 2048 guard).
bool is_isomorphic(const Graph& A, const Graph& B);

// An automorphism exchanging the two color classes of a connected bipartite
// graph, if one exists. Used for incidence graphs of self-dual geometries.
std::optional<Perm> bipart_swapping_automorphism(const Graph& G);

// True when p maps every edge to an edge (and, being a bijection, non-edges
// to non-edges).
bool preserves_adjacency(const Graph& G, const Perm& p);

// Exchange formats: JSON per the documented schema, and the "GDX1" packed
// binary layout. Readers re-validate all Graph invariants.
std::string graph_to_json(const Graph& G);
Graph graph_from_json(const std::string& text);
void write_graph_json(const Graph& G, const std::string& path);
Graph read_graph_json(const std::string& path);
void write_graph_binary(const Graph& G, const std::string& path);
Graph read_graph_binary(const std::string& path);

}  // namespace geodex
