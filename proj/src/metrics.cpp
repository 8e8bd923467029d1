#include "geodex/metrics.hpp"

#include <algorithm>
#include <string>
#include <variant>
#include <vector>

#include "geodex/errors.hpp"

namespace geodex {

DistanceTable bfs_all(const Graph& G) {
  DistanceTable T;
  T.dist.resize(G.n);
  for (std::uint32_t u = 0; u < G.n; ++u) {
    T.dist[u] = graph_bfs(G, u);
    for (std::uint32_t d : T.dist[u]) {
      require(d != kUnreached, errc::disconnected, "graph is not connected");
      T.diameter = std::max(T.diameter, d);
    }
  }
  return T;
}

std::string NotDRGWitness::describe() const {
  return std::string("pairs (") + std::to_string(u1) + "," + std::to_string(v1) + ") and (" +
         std::to_string(u2) + "," + std::to_string(v2) + ") at distance " +
         std::to_string(distance) + " have " + std::to_string(count1) + " vs " +
         std::to_string(count2) + " neighbors of kind " + kind;
}

DRGResult intersection_array(const Graph& G, const DistanceTable& T) {
  const std::uint32_t delta = T.diameter;
  IntersectionArray A;
  A.b.assign(delta, 0);
  A.c.assign(delta, 0);
  // Reference pair per distance, to report against on a mismatch.
  std::vector<std::pair<std::uint32_t, std::uint32_t>> ref(delta + 1, {0, 0});
  std::vector<bool> seen(delta + 1, false);

  for (std::uint32_t u = 0; u < G.n; ++u)
    for (std::uint32_t v = 0; v < G.n; ++v) {
      const std::uint32_t d = T.dist[u][v];
      if (d == 0) continue;
      std::uint64_t c = 0, b = 0;
      for (std::uint32_t w : G.adj[v]) {
        if (T.dist[u][w] + 1 == d) ++c;
        if (T.dist[u][w] == d + 1) ++b;
      }
      if (!seen[d]) {
        seen[d] = true;
        ref[d] = {u, v};
        A.c[d - 1] = c;
        if (d < delta) A.b[d] = b;
      } else {
        if (A.c[d - 1] != c)
          return NotDRGWitness{d, 'c', ref[d].first, ref[d].second, u, v, A.c[d - 1], c};
        const std::uint64_t want_b = d < delta ? A.b[d] : 0;
        if (want_b != b)
          return NotDRGWitness{d, 'b', ref[d].first, ref[d].second, u, v, want_b, b};
      }
    }

  // b_0 is the valency; regularity is part of distance-regularity.
  if (delta > 0) {
    A.b[0] = G.degree(0);
    for (std::uint32_t u = 1; u < G.n; ++u)
      if (G.degree(u) != A.b[0]) return NotDRGWitness{0, 'b', 0, 0, u, u, A.b[0], G.degree(u)};
  }
  return A;
}

DRGResult intersection_array(const Graph& G) { return intersection_array(G, bfs_all(G)); }

bool is_geodesic(const Graph& G, const std::vector<std::uint32_t>& vertices) {
  if (vertices.empty()) return false;
  for (std::uint32_t v : vertices)
    if (v >= G.n) return false;
  const auto dist = graph_bfs(G, vertices[0]);
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    if (dist[vertices[i]] != i) return false;
    if (i + 1 < vertices.size() && !G.adjacent(vertices[i], vertices[i + 1])) return false;
  }
  return true;
}

std::vector<Geodesic> geodesics(const Graph& G, std::uint32_t x, std::uint32_t y) {
  require(x < G.n && y < G.n, errc::bad_params, "vertex index out of range");
  const auto dist = graph_bfs(G, x);
  const std::uint32_t d = dist[y];

  std::vector<Geodesic> out;
  std::vector<std::uint32_t> path{x};
  // Depth-first over the BFS layering from x, keeping only edges that stay on
  // some geodesic to y (d(x,w) + d(w,y) = d). Neighbor lists are sorted, so
  // the output order is lexicographic.
  const auto dist_y = graph_bfs(G, y);
  auto walk = [&](auto&& self, std::uint32_t v) -> void {
    if (v == y) {
      out.push_back({path});
      return;
    }
    for (std::uint32_t w : G.adj[v]) {
      if (dist[w] != dist[v] + 1 || dist[w] + dist_y[w] != d) continue;
      path.push_back(w);
      self(self, w);
      path.pop_back();
    }
  };
  walk(walk, x);
  return out;
}

std::vector<Bigint> geodesic_census(const Graph& G) {
  const DistanceTable T = bfs_all(G);
  std::vector<Bigint> counts(T.diameter + 1, Bigint(0));
  counts[0] = G.n;

  // Per source, count geodesic extensions layer by layer: every geodesic of
  // length i ending at v extends along each edge from v into layer i+1.
  for (std::uint32_t u = 0; u < G.n; ++u) {
    const auto& dist = T.dist[u];
    std::vector<Bigint> ways(G.n, Bigint(0));
    std::vector<std::vector<std::uint32_t>> layers(T.diameter + 1);
    for (std::uint32_t v = 0; v < G.n; ++v) layers[dist[v]].push_back(v);
    ways[u] = 1;
    for (std::uint32_t i = 1; i <= T.diameter; ++i) {
      for (std::uint32_t v : layers[i])
        for (std::uint32_t w : G.adj[v])
          if (dist[w] + 1 == i) ways[v] += ways[w];
      for (std::uint32_t v : layers[i]) counts[i] += ways[v];
    }
  }

  const DRGResult drg = intersection_array(G, T);
  if (const auto* A = std::get_if<IntersectionArray>(&drg)) {
    Bigint expect = G.n;
    for (std::uint32_t i = 1; i <= T.diameter; ++i) {
      expect *= A->b[i - 1];
      require(counts[i] == expect, errc::internal,
              "geodesic census disagrees with v*b0..b_{i-1} on a distance-regular graph");
    }
  }
  return counts;
}

Bigint antipodal_geodesic_count(const Graph& G) {
  const DistanceTable T = bfs_all(G);
  const DRGResult drg = intersection_array(G, T);
  const auto* A = std::get_if<IntersectionArray>(&drg);
  if (!A)
    fail(errc::not_distance_regular,
         "antipodal geodesic counting needs a distance-regular graph: " +
             std::get<NotDRGWitness>(drg).describe());

  std::uint32_t x = 0, y = 0;
  for (std::uint32_t v = 0; v < G.n; ++v)
    if (T.dist[0][v] == T.diameter) {
      y = v;
      break;
    }
  const Bigint brute = static_cast<std::uint64_t>(geodesics(G, x, y).size());
  Bigint expect = 1;
  for (std::uint64_t ci : A->c) expect *= ci;
  require(brute == expect, errc::internal,
          "antipodal geodesic count disagrees with the product of the c_i");
  return expect;
}

const char* primitivity_class_name(PrimitivityClass c) {
  switch (c) {
    case PrimitivityClass::primitive: return "primitive";
    case PrimitivityClass::bipartite: return "bipartite";
    case PrimitivityClass::antipodal: return "antipodal";
    case PrimitivityClass::both: return "both";
  }
  return "?";
}

namespace {

// Diameter-distance classes {u} + {v : d(u,v) = delta} must partition the
// vertices into at least two blocks, each block pairwise antipodal, with at
// least one block of size two or more.
bool is_antipodal(const Graph& G, const DistanceTable& T) {
  if (T.diameter == 0) return false;
  std::vector<std::vector<std::uint32_t>> far(G.n);
  for (std::uint32_t u = 0; u < G.n; ++u) {
    far[u].push_back(u);
    for (std::uint32_t v = 0; v < G.n; ++v)
      if (T.dist[u][v] == T.diameter) far[u].push_back(v);
    std::sort(far[u].begin(), far[u].end());
  }
  bool nontrivial_block = false;
  for (std::uint32_t u = 0; u < G.n; ++u) {
    for (std::uint32_t v : far[u])
      if (far[v] != far[u]) return false;
    if (far[u].size() > 1) nontrivial_block = true;
    if (far[u].size() == G.n) return false;  // a single class, e.g. a complete graph
  }
  return nontrivial_block;
}

}  // namespace

PrimitivityClass primitivity(const Graph& G) {
  const DistanceTable T = bfs_all(G);
  std::vector<std::uint8_t> side;
  const bool bip = graph_bipartition(G, side);
  const bool anti = is_antipodal(G, T);
  if (bip && anti) return PrimitivityClass::both;
  if (bip) return PrimitivityClass::bipartite;
  if (anti) return PrimitivityClass::antipodal;
  for (std::uint32_t i = 2; i <= T.diameter; ++i) {
    const DistancePower P = distance_power(G, i);
    require(P.connected(), errc::internal,
            "imprimitive graph is neither bipartite nor antipodal");
  }
  return PrimitivityClass::primitive;
}

}  // namespace geodex
