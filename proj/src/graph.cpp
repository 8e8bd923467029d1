#include "geodex/graph.hpp"

#include <algorithm>
#include <queue>
#include <set>

#include "geodex/errors.hpp"

namespace geodex {

bool Graph::adjacent(std::uint32_t u, std::uint32_t v) const {
  if (words_per_row) {
    const std::uint64_t word = bits[static_cast<std::size_t>(u) * words_per_row + (v >> 6)];
    return (word >> (v & 63)) & 1;
  }
  return std::binary_search(adj[u].begin(), adj[u].end(), v);
}

std::uint64_t Graph::edge_count() const {
  std::uint64_t twice = 0;
  for (const auto& row : adj) twice += row.size();
  return twice / 2;
}

std::uint32_t Graph::index_of(const std::string& label) const {
  for (std::uint32_t i = 0; i < n; ++i)
    if (labels[i] == label) return i;
  fail(errc::bad_params, "no vertex labelled '" + label + "'");
}

GraphBuilder::GraphBuilder(GraphMeta meta, std::vector<std::string> labels)
    : meta_(std::move(meta)), labels_(std::move(labels)) {
  require(!labels_.empty(), errc::bad_params, "graph needs at least one vertex");
  require(labels_.size() <= kGraphVertexBound, errc::too_large,
          "vertex count " + std::to_string(labels_.size()) + " exceeds bound " +
              std::to_string(kGraphVertexBound));
  std::set<std::string> distinct(labels_.begin(), labels_.end());
  require(distinct.size() == labels_.size(), errc::bad_params, "duplicate vertex label");
  adj_.resize(labels_.size());
}

void GraphBuilder::add_edge(std::uint32_t u, std::uint32_t v) {
  require(u < adj_.size() && v < adj_.size(), errc::bad_params, "edge endpoint out of range");
  require(u != v, errc::bad_params, "loop at vertex " + std::to_string(u));
  adj_[u].push_back(v);
  adj_[v].push_back(u);
}

Graph GraphBuilder::finish() {
  require(!finished_, errc::internal, "GraphBuilder reused");
  finished_ = true;

  Graph G;
  G.n = static_cast<std::uint32_t>(labels_.size());
  G.labels = std::move(labels_);
  G.meta = std::move(meta_);
  G.adj = std::move(adj_);
  for (auto& row : G.adj) {
    std::sort(row.begin(), row.end());
    row.erase(std::unique(row.begin(), row.end()), row.end());
  }

  if (G.n <= kGraphBitsetLimit) {
    G.words_per_row = (G.n + 63) / 64;
    G.bits.assign(static_cast<std::size_t>(G.n) * G.words_per_row, 0);
    for (std::uint32_t u = 0; u < G.n; ++u)
      for (std::uint32_t v : G.adj[u])
        G.bits[static_cast<std::size_t>(u) * G.words_per_row + (v >> 6)] |= 1ull << (v & 63);
  }

  const auto dist = graph_bfs(G, 0);
  for (std::uint32_t u = 0; u < G.n; ++u)
    require(dist[u] != kUnreached, errc::disconnected,
            G.meta.family + ": vertex '" + G.labels[u] + "' unreachable from '" + G.labels[0] + "'");
  return G;
}

std::vector<std::uint32_t> graph_bfs(const Graph& G, std::uint32_t src) {
  require(src < G.n, errc::bad_params, "BFS source out of range");
  std::vector<std::uint32_t> dist(G.n, kUnreached);
  std::queue<std::uint32_t> q;
  dist[src] = 0;
  q.push(src);
  while (!q.empty()) {
    const std::uint32_t u = q.front();
    q.pop();
    for (std::uint32_t v : G.adj[u])
      if (dist[v] == kUnreached) {
        dist[v] = dist[u] + 1;
        q.push(v);
      }
  }
  return dist;
}

bool graph_bipartition(const Graph& G, std::vector<std::uint8_t>& side) {
  side.assign(G.n, 2);
  std::queue<std::uint32_t> q;
  side[0] = 0;
  q.push(0);
  while (!q.empty()) {
    const std::uint32_t u = q.front();
    q.pop();
    for (std::uint32_t v : G.adj[u]) {
      if (side[v] == 2) {
        side[v] = static_cast<std::uint8_t>(1 - side[u]);
        q.push(v);
      } else if (side[v] == side[u]) {
        return false;
      }
    }
  }
  return true;
}

bool preserves_adjacency(const Graph& G, const Perm& p) {
  if (p.size() != G.n || !perm_valid(p)) return false;
  for (std::uint32_t u = 0; u < G.n; ++u)
    for (std::uint32_t v : G.adj[u])
      if (!G.adjacent(p[u], p[v])) return false;
  return true;
}

namespace {

// Backtracking vertex-map search between two connected graphs. Vertices of A
// are placed in BFS order so every new vertex is constrained by an already
// placed neighbor; a candidate must agree with all placed vertices on both
// edges and non-edges.
class MapSearch {
public:
  MapSearch(const Graph& A, const Graph& B) : A_(A), B_(B) {
    const auto dist = graph_bfs(A_, 0);
    for (std::uint32_t u = 0; u < A_.n; ++u) order_.push_back(u);
    std::stable_sort(order_.begin(), order_.end(),
                     [&](std::uint32_t x, std::uint32_t y) { return dist[x] < dist[y]; });
    map_.assign(A_.n, kUnreached);
    used_.assign(B_.n, false);
  }

  template <class Allowed>
  std::optional<Perm> run(const Allowed& allowed) {
    if (place(0, allowed)) return map_;
    return std::nullopt;
  }

private:
  template <class Allowed>
  bool place(std::size_t pos, const Allowed& allowed) {
    if (pos == order_.size()) return true;
    const std::uint32_t u = order_[pos];
    for (std::uint32_t w = 0; w < B_.n; ++w) {
      if (used_[w] || A_.degree(u) != B_.degree(w) || !allowed(u, w)) continue;
      bool ok = true;
      for (std::size_t k = 0; k < pos && ok; ++k) {
        const std::uint32_t x = order_[k];
        ok = A_.adjacent(u, x) == B_.adjacent(w, map_[x]);
      }
      if (!ok) continue;
      map_[u] = w;
      used_[w] = true;
      if (place(pos + 1, allowed)) return true;
      map_[u] = kUnreached;
      used_[w] = false;
    }
    return false;
  }

  const Graph& A_;
  const Graph& B_;
  std::vector<std::uint32_t> order_;
  Perm map_;
  std::vector<bool> used_;
};

}  // namespace

bool is_isomorphic(const Graph& A, const Graph& B) {
  require(A.n <= 2048 && B.n <= 2048, errc::too_large, "isomorphism search is for small graphs");
  if (A.n != B.n || A.edge_count() != B.edge_count()) return false;
  std::vector<std::uint32_t> da, db;
  for (std::uint32_t u = 0; u < A.n; ++u) da.push_back(A.degree(u));
  for (std::uint32_t u = 0; u < B.n; ++u) db.push_back(B.degree(u));
  std::sort(da.begin(), da.end());
  std::sort(db.begin(), db.end());
  if (da != db) return false;
  MapSearch search(A, B);
  return search.run([](std::uint32_t, std::uint32_t) { return true; }).has_value();
}

std::optional<Perm> bipart_swapping_automorphism(const Graph& G) {
  require(G.n <= 2048, errc::too_large, "duality search is for small graphs");
  std::vector<std::uint8_t> side;
  require(graph_bipartition(G, side), errc::not_bipartite, "duality search needs a bipartite graph");
  MapSearch search(G, G);
  return search.run([&](std::uint32_t u, std::uint32_t w) { return side[u] != side[w]; });
}

}  // namespace geodex
