// Halved, folded, bipartite-double, distance-power and line-graph operators,
// together with the induced generator bookkeeping: restrictions and
// projections are recomputed explicitly and re-verified, never assumed.
#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "geodex/errors.hpp"
#include "geodex/families.hpp"

namespace geodex {

namespace {

std::string derived_params(const Graph& G, const std::string& extra) {
  if (G.meta.params.empty()) return extra;
  if (extra.empty()) return G.meta.params;
  return G.meta.params + ";" + extra;
}

std::vector<std::vector<std::uint32_t>> all_pairs_distances(const Graph& G) {
  std::vector<std::vector<std::uint32_t>> dist(G.n);
  for (std::uint32_t u = 0; u < G.n; ++u) dist[u] = graph_bfs(G, u);
  return dist;
}

// Generators of the index-<=2 subgroup fixing each side of a bipartition,
// by Schreier's lemma with coset representatives {identity, t} where t is
// the first side-swapping generator.
std::vector<std::pair<Perm, std::string>> side_stabilizer_gens(const GeneratorSet& gens,
                                                               const std::vector<std::uint8_t>& side) {
  auto swaps = [&](const Perm& p) { return side[p[0]] != side[0]; };
  const Perm* t = nullptr;
  std::string t_tag;
  for (std::size_t i = 0; i < gens.perms.size(); ++i)
    if (swaps(gens.perms[i])) {
      t = &gens.perms[i];
      t_tag = gens.provenance[i];
      break;
    }

  std::vector<std::pair<Perm, std::string>> out;
  std::set<Perm> seen;
  auto push = [&](Perm p, const std::string& tag) {
    if (perm_is_identity(p) || !seen.insert(p).second) return;
    out.emplace_back(std::move(p), tag);
  };
  for (std::size_t i = 0; i < gens.perms.size(); ++i) {
    const Perm& g = gens.perms[i];
    const std::string& tag = gens.provenance[i];
    if (!t) {
      push(g, tag);
      continue;
    }
    const Perm t_inv = perm_inverse(*t);
    if (!swaps(g)) {
      push(g, tag);
      push(perm_compose(perm_compose(*t, g), t_inv), t_tag + "*" + tag + "*" + t_tag + "^-1");
    } else {
      push(perm_compose(g, t_inv), tag + "*" + t_tag + "^-1");
      push(perm_compose(*t, g), t_tag + "*" + tag);
    }
  }
  return out;
}

}  // namespace

void verify_generators(const Graph& G, const GeneratorSet& gens) {
  require(gens.perms.size() == gens.provenance.size(), errc::internal,
          "generator provenance out of step with permutation list");
  for (std::size_t i = 0; i < gens.perms.size(); ++i) {
    const Perm& p = gens.perms[i];
    require(p.size() == G.n && perm_valid(p), errc::internal,
            "generator '" + gens.provenance[i] + "' is not a permutation of the vertices");
    require(preserves_adjacency(G, p), errc::internal,
            "generator '" + gens.provenance[i] + "' does not preserve adjacency");
  }
}

FamilyResult halved(const Graph& G, const GeneratorSet& gens, HalfPart part) {
  std::vector<std::uint8_t> side;
  require(graph_bipartition(G, side), errc::not_bipartite, "halved needs a bipartite graph");
  const std::uint8_t want = part == HalfPart::plus ? 0 : 1;

  std::vector<std::uint32_t> to_new(G.n, kUnreached), to_old;
  std::vector<std::string> labels;
  for (std::uint32_t u = 0; u < G.n; ++u)
    if (side[u] == want) {
      to_new[u] = static_cast<std::uint32_t>(to_old.size());
      to_old.push_back(u);
      labels.push_back(G.labels[u]);
    }

  GraphMeta meta{"halved(" + G.meta.family + ")",
                 derived_params(G, part == HalfPart::plus ? "part=plus" : "part=minus")};
  GraphBuilder builder(meta, labels);
  for (std::uint32_t u : to_old)
    for (std::uint32_t x : G.adj[u])
      for (std::uint32_t w : G.adj[x])
        if (u < w) builder.add_edge(to_new[u], to_new[w]);

  FamilyResult out{builder.finish(), {}};
  for (auto& [whole, tag] : side_stabilizer_gens(gens, side)) {
    Perm p(to_old.size());
    for (std::uint32_t v = 0; v < to_old.size(); ++v) p[v] = to_new[whole[to_old[v]]];
    if (perm_is_identity(p)) continue;
    out.gens.perms.push_back(std::move(p));
    out.gens.provenance.push_back(tag);
  }
  out.gens.notes = gens.notes;
  verify_generators(out.graph, out.gens);
  return out;
}

Graph halved(const Graph& G, HalfPart part) { return halved(G, GeneratorSet{}, part).graph; }

FamilyResult folded(const Graph& G, const GeneratorSet& gens) {
  const auto dist = all_pairs_distances(G);
  std::uint32_t diam = 0;
  for (const auto& row : dist) diam = std::max(diam, *std::max_element(row.begin(), row.end()));

  // Antipodal classes: each vertex together with everything at distance
  // diam from it. These must coincide for all members of a class.
  std::vector<std::uint32_t> cls(G.n, kUnreached);
  std::vector<std::uint32_t> reps;
  std::vector<std::vector<std::uint32_t>> members;
  auto far_set = [&](std::uint32_t u) {
    std::vector<std::uint32_t> s{u};
    for (std::uint32_t v = 0; v < G.n; ++v)
      if (dist[u][v] == diam && v != u) s.push_back(v);
    std::sort(s.begin(), s.end());
    return s;
  };
  for (std::uint32_t u = 0; u < G.n; ++u) {
    if (cls[u] != kUnreached) continue;
    const auto block = far_set(u);
    for (std::uint32_t v : block) {
      require(cls[v] == kUnreached, errc::not_antipodal,
              G.meta.family + ": distance-" + std::to_string(diam) + " classes overlap");
      require(far_set(v) == block, errc::not_antipodal,
              G.meta.family + ": distance-" + std::to_string(diam) +
                  " graph is not a disjoint union of cliques");
      cls[v] = static_cast<std::uint32_t>(reps.size());
    }
    reps.push_back(u);
    members.push_back(block);
  }

  std::vector<std::string> labels;
  for (std::uint32_t r : reps) labels.push_back(G.labels[r]);
  GraphBuilder builder({"folded(" + G.meta.family + ")", G.meta.params}, labels);
  for (std::uint32_t u = 0; u < G.n; ++u)
    for (std::uint32_t v : G.adj[u])
      if (u < v && cls[u] != cls[v]) builder.add_edge(cls[u], cls[v]);

  FamilyResult out{builder.finish(), {}};
  std::set<Perm> seen;
  for (std::size_t i = 0; i < gens.perms.size(); ++i) {
    Perm p(reps.size());
    for (std::uint32_t c = 0; c < reps.size(); ++c) p[c] = cls[gens.perms[i][reps[c]]];
    if (perm_is_identity(p) || !seen.insert(p).second) continue;
    out.gens.perms.push_back(std::move(p));
    out.gens.provenance.push_back(gens.provenance[i]);
  }
  out.gens.notes = gens.notes;
  verify_generators(out.graph, out.gens);
  return out;
}

Graph folded(const Graph& G) { return folded(G, GeneratorSet{}).graph; }

FamilyResult bipartite_double(const Graph& G, const GeneratorSet& gens) {
  std::vector<std::string> labels;
  for (const auto& l : G.labels) labels.push_back(l + "|0");
  for (const auto& l : G.labels) labels.push_back(l + "|1");
  GraphBuilder builder({"bipartite_double(" + G.meta.family + ")", G.meta.params}, labels);
  for (std::uint32_t u = 0; u < G.n; ++u)
    for (std::uint32_t v : G.adj[u])
      if (u < v) {
        builder.add_edge(u, G.n + v);
        builder.add_edge(v, G.n + u);
      }

  FamilyResult out{builder.finish(), {}};
  for (std::size_t i = 0; i < gens.perms.size(); ++i) {
    Perm p(2 * G.n);
    for (std::uint32_t u = 0; u < G.n; ++u) {
      p[u] = gens.perms[i][u];
      p[G.n + u] = G.n + gens.perms[i][u];
    }
    out.gens.perms.push_back(std::move(p));
    out.gens.provenance.push_back(gens.provenance[i]);
  }
  Perm swap(2 * G.n);
  for (std::uint32_t u = 0; u < G.n; ++u) {
    swap[u] = G.n + u;
    swap[G.n + u] = u;
  }
  out.gens.perms.push_back(std::move(swap));
  out.gens.provenance.push_back("double swap");
  out.gens.notes = gens.notes;
  verify_generators(out.graph, out.gens);
  return out;
}

Graph bipartite_double(const Graph& G) { return bipartite_double(G, GeneratorSet{}).graph; }

DistancePower distance_power(const Graph& G, std::uint32_t i) {
  const auto dist = all_pairs_distances(G);
  std::uint32_t diam = 0;
  for (const auto& row : dist) diam = std::max(diam, *std::max_element(row.begin(), row.end()));
  require(i >= 1 && i <= diam, errc::bad_distance,
          "distance power " + std::to_string(i) + " is outside 1..diameter=" + std::to_string(diam));

  std::vector<std::vector<std::uint32_t>> rows(G.n);
  for (std::uint32_t u = 0; u < G.n; ++u)
    for (std::uint32_t v = 0; v < G.n; ++v)
      if (dist[u][v] == i) rows[u].push_back(v);

  // Components in order of least vertex.
  std::vector<std::uint32_t> comp(G.n, kUnreached);
  std::uint32_t comp_count = 0;
  for (std::uint32_t u = 0; u < G.n; ++u) {
    if (comp[u] != kUnreached) continue;
    std::vector<std::uint32_t> stack{u};
    comp[u] = comp_count;
    while (!stack.empty()) {
      const std::uint32_t x = stack.back();
      stack.pop_back();
      for (std::uint32_t y : rows[x])
        if (comp[y] == kUnreached) {
          comp[y] = comp_count;
          stack.push_back(y);
        }
    }
    ++comp_count;
  }

  DistancePower out;
  for (std::uint32_t c = 0; c < comp_count; ++c) {
    std::vector<std::uint32_t> to_old;
    std::vector<std::uint32_t> to_new(G.n, kUnreached);
    std::vector<std::string> labels;
    for (std::uint32_t u = 0; u < G.n; ++u)
      if (comp[u] == c) {
        to_new[u] = static_cast<std::uint32_t>(to_old.size());
        to_old.push_back(u);
        labels.push_back(G.labels[u]);
      }
    GraphBuilder builder({"distance_power(" + G.meta.family + ")",
                          derived_params(G, "i=" + std::to_string(i))},
                         labels);
    for (std::uint32_t u : to_old)
      for (std::uint32_t v : rows[u])
        if (u < v) builder.add_edge(to_new[u], to_new[v]);
    out.components.push_back(builder.finish());
  }
  return out;
}

Graph line_graph(const Graph& G) {
  std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
  std::vector<std::vector<std::uint32_t>> incident(G.n);
  for (std::uint32_t u = 0; u < G.n; ++u)
    for (std::uint32_t v : G.adj[u])
      if (u < v) {
        incident[u].push_back(static_cast<std::uint32_t>(edges.size()));
        incident[v].push_back(static_cast<std::uint32_t>(edges.size()));
        edges.emplace_back(u, v);
      }
  require(!edges.empty(), errc::bad_params, "line graph of an edgeless graph");

  std::vector<std::string> labels;
  for (auto [u, v] : edges) labels.push_back(G.labels[u] + "~" + G.labels[v]);
  GraphBuilder builder({"line_graph(" + G.meta.family + ")", G.meta.params}, labels);
  for (std::uint32_t u = 0; u < G.n; ++u)
    for (std::size_t a = 0; a < incident[u].size(); ++a)
      for (std::size_t b = a + 1; b < incident[u].size(); ++b)
        builder.add_edge(incident[u][a], incident[u][b]);
  return builder.finish();
}

}  // namespace geodex
