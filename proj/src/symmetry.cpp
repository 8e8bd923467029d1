#include "geodex/symmetry.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <set>
#include <utility>

#include "geodex/errors.hpp"
#include "geodex/metrics.hpp"

namespace geodex {

namespace {

constexpr std::uint64_t kTupleCap = 10000000;

void check_degree(const std::vector<Perm>& gens, std::uint32_t n) {
  for (const Perm& p : gens)
    require(p.size() == n && perm_valid(p), errc::not_permutation,
            "generator is not a permutation of degree " + std::to_string(n));
}

void check_automorphisms(const Graph& G, const std::vector<Perm>& gens) {
  check_degree(gens, G.n);
  for (const Perm& p : gens)
    require(preserves_adjacency(G, p), errc::bad_params,
            "generator is not an automorphism of the graph");
}

std::uint32_t first_moved(const Perm& p) {
  for (std::uint32_t i = 0; i < p.size(); ++i)
    if (p[i] != i) return i;
  fail(errc::internal, "identity has no moved point");
}

// Orbit of beta under the level generators, with a transversal element
// mapping beta to each orbit point. BFS in discovery order keeps rebuilds
// repeatable.
void rebuild_level(BSGSLevel& L, std::uint32_t n) {
  L.orbit.clear();
  L.transversal.clear();
  L.orbit.push_back(L.beta);
  L.transversal.emplace(L.beta, perm_identity(n));
  for (std::size_t head = 0; head < L.orbit.size(); ++head) {
    const std::uint32_t gamma = L.orbit[head];
    for (const Perm& s : L.gens) {
      const std::uint32_t delta = s[gamma];
      if (!L.transversal.count(delta)) {
        L.orbit.push_back(delta);
        L.transversal.emplace(delta, perm_compose(L.transversal.at(gamma), s));
      }
    }
  }
}

// Strips g through levels from..end. Returns the residue and the level at
// which stripping stopped; a residue of identity means membership.
std::pair<Perm, std::size_t> sift_from(const std::vector<BSGSLevel>& levels, Perm g,
                                       std::size_t from) {
  for (std::size_t j = from; j < levels.size(); ++j) {
    const BSGSLevel& L = levels[j];
    auto it = L.transversal.find(g[L.beta]);
    if (it == L.transversal.end()) return {std::move(g), j};
    g = perm_compose(g, perm_inverse(it->second));
  }
  return {std::move(g), levels.size()};
}

// Scans level i for a Schreier generator that fails to sift through the
// deeper levels. Returns the residue and its stick level.
std::optional<std::pair<Perm, std::size_t>> scan_level(const std::vector<BSGSLevel>& levels,
                                                       std::size_t i) {
  const BSGSLevel& L = levels[i];
  for (std::uint32_t gamma : L.orbit) {
    const Perm& u = L.transversal.at(gamma);
    for (const Perm& s : L.gens) {
      const Perm& u_img = L.transversal.at(s[gamma]);
      Perm g = perm_compose(perm_compose(u, s), perm_inverse(u_img));
      if (perm_is_identity(g)) continue;
      auto [h, j] = sift_from(levels, std::move(g), i + 1);
      if (!perm_is_identity(h)) return std::make_pair(std::move(h), j);
    }
  }
  return std::nullopt;
}

bool fixes_base_prefix(const Perm& g, const std::vector<std::uint32_t>& base, std::size_t count) {
  for (std::size_t l = 0; l < count; ++l)
    if (g[base[l]] != base[l]) return false;
  return true;
}

Tuple apply_to_tuple(const Perm& g, const Tuple& t) {
  Tuple img(t.size());
  for (std::size_t k = 0; k < t.size(); ++k) img[k] = g[t[k]];
  return img;
}

std::string join_levels(const std::vector<std::size_t>& split) {
  std::string s;
  for (std::size_t i = 0; i < split.size(); ++i) {
    if (i) s += ", ";
    s += std::to_string(split[i]);
  }
  return s;
}

TransitivityReport finish_report(std::vector<OrbitReport> levels) {
  TransitivityReport R;
  R.levels = std::move(levels);
  std::vector<std::size_t> split;
  for (std::size_t i = 0; i < R.levels.size(); ++i)
    if (R.levels[i].orbit_count() != 1) split.push_back(i);
  R.verdict = split.empty();
  if (!R.verdict)
    R.note = "more than one orbit at levels " + join_levels(split) +
             "; the verdict is relative to the generated group, which may be a proper "
             "subgroup of the full automorphism group";
  return R;
}

ScreenEntry make_entry(std::string label, Bigint divisor, Bigint dividend) {
  ScreenEntry e;
  e.label = std::move(label);
  e.divisor = std::move(divisor);
  e.dividend = std::move(dividend);
  e.divides = e.dividend % e.divisor == 0;
  return e;
}

}  // namespace

BSGS schreier_sims(const std::vector<Perm>& gens, std::uint32_t n) {
  check_degree(gens, n);

  BSGS B;
  B.degree = n;
  for (const Perm& g : gens)
    if (!perm_is_identity(g)) B.strong_gens.push_back(g);

  for (const Perm& g : B.strong_gens)
    if (fixes_base_prefix(g, B.base, B.base.size())) B.base.push_back(first_moved(g));
  B.levels.resize(B.base.size());
  for (std::size_t i = 0; i < B.levels.size(); ++i) {
    B.levels[i].beta = B.base[i];
    for (const Perm& g : B.strong_gens)
      if (fixes_base_prefix(g, B.base, i)) B.levels[i].gens.push_back(g);
    rebuild_level(B.levels[i], n);
  }

  for (std::ptrdiff_t i = static_cast<std::ptrdiff_t>(B.levels.size()) - 1; i >= 0;) {
    auto found = scan_level(B.levels, static_cast<std::size_t>(i));
    if (!found) {
      --i;
      continue;
    }
    Perm h = std::move(found->first);
    std::size_t j = found->second;
    if (j == B.levels.size()) {
      B.base.push_back(first_moved(h));
      B.levels.emplace_back();
      B.levels.back().beta = B.base.back();
    }
    B.strong_gens.push_back(h);
    for (std::size_t l = 0; l <= j; ++l)
      if (fixes_base_prefix(h, B.base, l)) B.levels[l].gens.push_back(h);
    for (std::size_t l = static_cast<std::size_t>(i) + 1; l <= j; ++l)
      rebuild_level(B.levels[l], n);
    i = static_cast<std::ptrdiff_t>(j);
  }

  B.order = 1;
  for (const BSGSLevel& L : B.levels) {
    B.transversal_sizes.push_back(L.orbit.size());
    B.order *= static_cast<std::uint64_t>(L.orbit.size());
  }
  return B;
}

bool bsgs_contains(const BSGS& B, const Perm& p) {
  require(p.size() == B.degree && perm_valid(p), errc::not_permutation,
          "query is not a permutation of degree " + std::to_string(B.degree));
  auto [residue, level] = sift_from(B.levels, p, 0);
  return level == B.levels.size() && perm_is_identity(residue);
}

OrbitReport orbits_on_tuples(const std::vector<Perm>& gens, const std::vector<Tuple>& tuples,
                             const std::string& object_class) {
  OrbitReport R;
  R.object_class = object_class;
  R.total = tuples.size();
  if (tuples.empty()) return R;

  const std::size_t arity = tuples[0].size();
  for (const Tuple& t : tuples)
    require(t.size() == arity, errc::bad_params, "tuples do not share one length");
  if (!gens.empty()) {
    const std::uint32_t n = static_cast<std::uint32_t>(gens[0].size());
    check_degree(gens, n);
    for (const Tuple& t : tuples)
      for (std::uint32_t v : t)
        require(v < n, errc::bad_params, "tuple entry exceeds the permutation degree");
  }

  std::vector<Tuple> sorted(tuples);
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 1; i < sorted.size(); ++i)
    require(sorted[i - 1] != sorted[i], errc::not_distinct, "tuple list contains duplicates");

  std::vector<char> visited(sorted.size(), 0);
  std::vector<std::size_t> stack;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (visited[i]) continue;
    visited[i] = 1;
    stack.assign(1, i);
    std::uint64_t size = 0;
    while (!stack.empty()) {
      const std::size_t idx = stack.back();
      stack.pop_back();
      ++size;
      for (const Perm& g : gens) {
        Tuple img = apply_to_tuple(g, sorted[idx]);
        auto it = std::lower_bound(sorted.begin(), sorted.end(), img);
        require(it != sorted.end() && *it == img, errc::internal,
                "tuple set is not invariant under the generators");
        const std::size_t k = static_cast<std::size_t>(it - sorted.begin());
        if (!visited[k]) {
          visited[k] = 1;
          stack.push_back(k);
        }
      }
    }
    R.orbit_sizes.push_back(size);
    R.representatives.push_back(sorted[i]);
  }
  return R;
}

TransitivityReport check_distance_transitive(const Graph& G, const std::vector<Perm>& gens) {
  check_automorphisms(G, gens);
  const DistanceTable T = bfs_all(G);
  std::vector<OrbitReport> levels;
  for (std::uint32_t d = 0; d <= T.diameter; ++d) {
    std::vector<Tuple> pairs;
    for (std::uint32_t u = 0; u < G.n; ++u)
      for (std::uint32_t v = 0; v < G.n; ++v)
        if (T.at(u, v) == d) pairs.push_back({u, v});
    levels.push_back(orbits_on_tuples(gens, pairs, "pairs at distance " + std::to_string(d)));
  }
  return finish_report(std::move(levels));
}

TransitivityReport check_geodesic_transitive(const Graph& G, const std::vector<Perm>& gens) {
  check_automorphisms(G, gens);
  const DistanceTable T = bfs_all(G);

  std::vector<std::vector<Tuple>> buckets(T.diameter + 1);
  std::uint64_t total = 0;
  for (std::uint32_t v = 0; v < G.n; ++v) buckets[0].push_back({v});
  total += G.n;

  Tuple path;
  for (std::uint32_t u = 0; u < G.n; ++u) {
    const std::vector<std::uint32_t>& dist = T.dist[u];
    path.assign(1, u);
    auto extend = [&](auto&& self, std::uint32_t w) -> void {
      for (std::uint32_t x : G.adj[w]) {
        if (dist[x] != dist[w] + 1) continue;
        path.push_back(x);
        require(++total <= kTupleCap, errc::too_large, "geodesic enumeration exceeds the cap");
        buckets[path.size() - 1].push_back(path);
        self(self, x);
        path.pop_back();
      }
    };
    extend(extend, u);
  }

  std::vector<OrbitReport> levels;
  for (std::uint32_t len = 0; len <= T.diameter; ++len)
    levels.push_back(
        orbits_on_tuples(gens, buckets[len], "geodesics of length " + std::to_string(len)));
  return finish_report(std::move(levels));
}

OrbitReport orbits_on_arcs(const Graph& G, const std::vector<Perm>& gens, std::uint32_t s) {
  require(s >= 1, errc::bad_params, "arc length must be at least 1");
  check_automorphisms(G, gens);

  std::vector<Tuple> arcs;
  std::uint64_t total = 0;
  Tuple walk;
  for (std::uint32_t v = 0; v < G.n; ++v) {
    walk.assign(1, v);
    auto extend = [&](auto&& self, std::uint32_t w) -> void {
      if (walk.size() == static_cast<std::size_t>(s) + 1) {
        require(++total <= kTupleCap, errc::too_large, "arc enumeration exceeds the cap");
        arcs.push_back(walk);
        return;
      }
      for (std::uint32_t x : G.adj[w]) {
        if (walk.size() >= 2 && x == walk[walk.size() - 2]) continue;
        walk.push_back(x);
        self(self, x);
        walk.pop_back();
      }
    };
    extend(extend, v);
  }
  return orbits_on_tuples(gens, arcs, std::to_string(s) + "-arcs");
}

std::vector<Perm> stabilizer_generators(const std::vector<Perm>& gens, std::uint32_t n,
                                        std::uint32_t point, std::size_t cap) {
  check_degree(gens, n);
  require(point < n, errc::bad_params, "stabilized point is out of range");

  BSGSLevel L;
  L.beta = point;
  L.gens = gens;
  rebuild_level(L, n);

  std::vector<Perm> out;
  std::set<Perm> seen;
  for (std::uint32_t gamma : L.orbit) {
    const Perm& u = L.transversal.at(gamma);
    for (const Perm& g : gens) {
      if (out.size() >= cap) return out;
      Perm h = perm_compose(perm_compose(u, g), perm_inverse(L.transversal.at(g[gamma])));
      if (perm_is_identity(h)) continue;
      if (seen.insert(h).second) out.push_back(std::move(h));
    }
  }
  return out;
}

bool group_primitive(const std::vector<Perm>& gens, std::uint32_t n) {
  check_degree(gens, n);
  require(n >= 1, errc::bad_params, "the point set is empty");

  std::vector<char> reached(n, 0);
  std::vector<std::uint32_t> orbit{0};
  reached[0] = 1;
  for (std::size_t head = 0; head < orbit.size(); ++head)
    for (const Perm& g : gens) {
      const std::uint32_t x = g[orbit[head]];
      if (!reached[x]) {
        reached[x] = 1;
        orbit.push_back(x);
      }
    }
  require(orbit.size() == n, errc::bad_params, "the group is not transitive on the points");

  const std::vector<Perm> stab = stabilizer_generators(gens, n, 0);
  std::vector<std::uint32_t> seed_class(n, kUnreached);
  for (std::uint32_t v = 0; v < n; ++v) {
    if (seed_class[v] != kUnreached) continue;
    seed_class[v] = v;
    std::vector<std::uint32_t> sub{v};
    for (std::size_t head = 0; head < sub.size(); ++head)
      for (const Perm& h : stab) {
        const std::uint32_t x = h[sub[head]];
        if (seed_class[x] == kUnreached) {
          seed_class[x] = v;
          sub.push_back(x);
        }
      }
  }

  std::vector<std::uint32_t> parent(n);
  std::vector<std::uint32_t> size_of(n);
  auto find = [&](std::uint32_t a) {
    while (parent[a] != a) {
      parent[a] = parent[parent[a]];
      a = parent[a];
    }
    return a;
  };
  for (std::uint32_t w = 1; w < n; ++w) {
    if (seed_class[w] != w) continue;
    std::iota(parent.begin(), parent.end(), 0);
    std::fill(size_of.begin(), size_of.end(), 1u);
    std::vector<std::pair<std::uint32_t, std::uint32_t>> queue;
    auto merge = [&](std::uint32_t a, std::uint32_t b) {
      a = find(a);
      b = find(b);
      if (a == b) return;
      if (size_of[a] < size_of[b]) std::swap(a, b);
      parent[b] = a;
      size_of[a] += size_of[b];
      queue.emplace_back(a, b);
    };
    merge(0, w);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const auto [a, b] = queue[head];
      for (const Perm& g : gens) merge(g[a], g[b]);
    }
    if (size_of[find(0)] < n) return false;
  }
  return true;
}

bool divisibility_screen(const Bigint& geodesic_count, const Bigint& order) {
  require(geodesic_count > 0 && order > 0, errc::bad_params, "counts must be positive");
  return order % geodesic_count == 0;
}

ScreenReport census_screens(std::uint32_t q_max) {
  require(q_max >= 5, errc::bad_params, "the screen needs q_max >= 5");
  ScreenReport R;

  for (std::uint32_t q = 5; q <= q_max; ++q) {
    if (q % 2 == 0) continue;
    std::uint32_t p = 3;
    while (p * p <= q && q % p != 0) p += 2;
    if (q % p != 0) p = q;
    std::uint32_t m = q, f = 0;
    while (m % p == 0) {
      m /= p;
      ++f;
    }
    if (m != 1) continue;

    const std::string tag = "q=" + std::to_string(q);
    R.entries.push_back(
        make_entry(tag + ": (q+1) | 4f", Bigint(q) + 1, Bigint(4) * f));
    R.entries.push_back(make_entry(tag + ": (q^2+1) | (q+1)*4f", Bigint(q) * q + 1,
                                   (Bigint(q) + 1) * 4 * f));
  }

  struct Sporadic {
    const char* label;
    std::uint64_t v;
    std::vector<std::uint64_t> b;
    Bigint aut;
  };
  const Sporadic sporadic[] = {
      {"v=352 {50,49,36; 1,14,50}", 352, {50, 49, 36}, Bigint(88704000)},
      {"v=280 {9,8,6,3; 1,1,3,8}", 280, {9, 8, 6, 3}, Bigint(280) * 32 * 27},
      {"v=22880 {280,243,144,10; 1,8,90,280}",
       22880,
       {280, 243, 144, 10},
       Bigint(16384) * 2187 * 25 * 7 * 11 * 13},
      {"v=2048 {22,21,20,16,6,2,1; 1,2,6,16,20,21,22}",
       2048,
       {22, 21, 20, 16, 6, 2, 1},
       Bigint(524288) * 9 * 5 * 7 * 11},
  };
  for (const Sporadic& S : sporadic) {
    Bigint count = S.v;
    for (std::uint64_t bi : S.b) count *= bi;
    R.entries.push_back(make_entry(std::string(S.label) + ": geodesic count | aut order",
                                   std::move(count), S.aut));
  }

  for (const ScreenEntry& e : R.entries)
    if (e.divides) R.all_ruled_out = false;
  return R;
}

}  // namespace geodex
