// Families whose vertices are subsets of {1..n} or tuples over a finite
// alphabet, plus cycles.
#include <algorithm>
#include <string>
#include <vector>

#include "geodex/bigint.hpp"
#include "geodex/errors.hpp"
#include "geodex/families.hpp"

namespace geodex {

namespace {

using Set = std::vector<std::uint32_t>;  // sorted, 1-based elements

Bigint binom(std::uint32_t n, std::uint32_t k) {
  if (k > n) return 0;
  Bigint r = 1;
  for (std::uint32_t i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

void check_vertex_bound(const Bigint& count, const std::string& what) {
  require(count <= Bigint(kGraphVertexBound), errc::too_large,
          what + " has more than " + std::to_string(kGraphVertexBound) + " vertices");
}

// All k-subsets of {1..n} in lexicographic order.
std::vector<Set> combinations(std::uint32_t n, std::uint32_t k) {
  std::vector<Set> out;
  if (k > n) return out;
  Set cur(k);
  for (std::uint32_t i = 0; i < k; ++i) cur[i] = i + 1;
  while (true) {
    out.push_back(cur);
    std::int64_t i = static_cast<std::int64_t>(k) - 1;
    while (i >= 0 && cur[i] == n - (k - 1 - i)) --i;
    if (i < 0) break;
    ++cur[i];
    for (std::uint32_t j = static_cast<std::uint32_t>(i) + 1; j < k; ++j) cur[j] = cur[j - 1] + 1;
  }
  return out;
}

std::string set_label(const Set& s) {
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(s[i]);
  }
  return out;
}

std::uint32_t set_index(const std::vector<Set>& sorted, const Set& s) {
  auto it = std::lower_bound(sorted.begin(), sorted.end(), s);
  require(it != sorted.end() && *it == s, errc::internal, "subset image is not a vertex");
  return static_cast<std::uint32_t>(it - sorted.begin());
}

Set apply_ground(const Set& s, const std::vector<std::uint32_t>& images) {
  Set t;
  t.reserve(s.size());
  for (std::uint32_t e : s) t.push_back(images[e - 1]);
  std::sort(t.begin(), t.end());
  return t;
}

// Images of 1..n under the transposition (i, i+1), 1 <= i < n.
std::vector<std::uint32_t> ground_transposition(std::uint32_t n, std::uint32_t i) {
  std::vector<std::uint32_t> g(n);
  for (std::uint32_t e = 1; e <= n; ++e) g[e - 1] = e;
  std::swap(g[i - 1], g[i]);
  return g;
}

}  // namespace

FamilyResult build_johnson(std::uint32_t n, std::uint32_t k) {
  require(k >= 1 && 2 * k <= n, errc::bad_params, "Johnson(n,k) needs 1 <= k <= n/2");
  check_vertex_bound(binom(n, k), "Johnson(" + std::to_string(n) + "," + std::to_string(k) + ")");

  const auto verts = combinations(n, k);
  std::vector<std::string> labels;
  for (const auto& s : verts) labels.push_back(set_label(s));
  GraphBuilder builder({"Johnson", "n=" + std::to_string(n) + ",k=" + std::to_string(k)}, labels);

  for (std::uint32_t i = 0; i < verts.size(); ++i) {
    const Set& X = verts[i];
    for (std::uint32_t x : X)
      for (std::uint32_t e = 1; e <= n; ++e) {
        if (std::binary_search(X.begin(), X.end(), e)) continue;
        Set Y = X;
        Y.erase(std::find(Y.begin(), Y.end(), x));
        Y.insert(std::lower_bound(Y.begin(), Y.end(), e), e);
        const std::uint32_t j = set_index(verts, Y);
        if (i < j) builder.add_edge(i, j);
      }
  }

  FamilyResult out{builder.finish(), {}};
  for (std::uint32_t i = 1; i < n; ++i) {
    const auto g = ground_transposition(n, i);
    Perm p(verts.size());
    for (std::uint32_t v = 0; v < verts.size(); ++v) p[v] = set_index(verts, apply_ground(verts[v], g));
    out.gens.perms.push_back(std::move(p));
    out.gens.provenance.push_back("transposition(" + std::to_string(i) + "," + std::to_string(i + 1) + ")");
  }
  verify_generators(out.graph, out.gens);
  return out;
}

FamilyResult build_odd(std::uint32_t k) {
  require(k >= 2, errc::bad_params, "Odd(k) needs k >= 2");
  const std::uint32_t n = 2 * k - 1;
  check_vertex_bound(binom(n, k - 1), "Odd(" + std::to_string(k) + ")");

  const auto verts = combinations(n, k - 1);
  std::vector<std::string> labels;
  for (const auto& s : verts) labels.push_back(set_label(s));
  GraphBuilder builder({"Odd", "k=" + std::to_string(k)}, labels);

  for (std::uint32_t i = 0; i < verts.size(); ++i) {
    Set comp;
    for (std::uint32_t e = 1; e <= n; ++e)
      if (!std::binary_search(verts[i].begin(), verts[i].end(), e)) comp.push_back(e);
    // Neighbors are the (k-1)-subsets of the k-element complement.
    for (std::uint32_t drop = 0; drop < comp.size(); ++drop) {
      Set Y = comp;
      Y.erase(Y.begin() + drop);
      const std::uint32_t j = set_index(verts, Y);
      if (i < j) builder.add_edge(i, j);
    }
  }

  FamilyResult out{builder.finish(), {}};
  for (std::uint32_t i = 1; i < n; ++i) {
    const auto g = ground_transposition(n, i);
    Perm p(verts.size());
    for (std::uint32_t v = 0; v < verts.size(); ++v) p[v] = set_index(verts, apply_ground(verts[v], g));
    out.gens.perms.push_back(std::move(p));
    out.gens.provenance.push_back("transposition(" + std::to_string(i) + "," + std::to_string(i + 1) + ")");
  }
  verify_generators(out.graph, out.gens);
  return out;
}

FamilyResult build_doubled_odd(std::uint32_t k) {
  require(k >= 3, errc::bad_params, "DoubledOdd(k) needs k >= 3, so that |ground| = 2k-1 >= 5");
  const std::uint32_t n = 2 * k - 1;
  check_vertex_bound(binom(n, k - 1) * 2, "DoubledOdd(" + std::to_string(k) + ")");

  const auto small = combinations(n, k - 1);
  const auto big = combinations(n, k);
  const auto offset = static_cast<std::uint32_t>(small.size());
  std::vector<std::string> labels;
  for (const auto& s : small) labels.push_back(set_label(s));
  for (const auto& s : big) labels.push_back(set_label(s));
  GraphBuilder builder({"DoubledOdd", "k=" + std::to_string(k)}, labels);

  for (std::uint32_t j = 0; j < big.size(); ++j)
    for (std::uint32_t drop = 0; drop < big[j].size(); ++drop) {
      Set X = big[j];
      X.erase(X.begin() + drop);
      builder.add_edge(set_index(small, X), offset + j);
    }

  FamilyResult out{builder.finish(), {}};
  const std::uint32_t total = out.graph.n;
  for (std::uint32_t i = 1; i < n; ++i) {
    const auto g = ground_transposition(n, i);
    Perm p(total);
    for (std::uint32_t v = 0; v < small.size(); ++v) p[v] = set_index(small, apply_ground(small[v], g));
    for (std::uint32_t v = 0; v < big.size(); ++v)
      p[offset + v] = offset + set_index(big, apply_ground(big[v], g));
    out.gens.perms.push_back(std::move(p));
    out.gens.provenance.push_back("transposition(" + std::to_string(i) + "," + std::to_string(i + 1) + ")");
  }
  {
    Perm p(total);
    for (std::uint32_t v = 0; v < total; ++v) {
      const Set& X = v < offset ? small[v] : big[v - offset];
      Set comp;
      for (std::uint32_t e = 1; e <= n; ++e)
        if (!std::binary_search(X.begin(), X.end(), e)) comp.push_back(e);
      p[v] = v < offset ? offset + set_index(big, comp) : set_index(small, comp);
    }
    out.gens.perms.push_back(std::move(p));
    out.gens.provenance.push_back("complementation");
  }
  verify_generators(out.graph, out.gens);
  return out;
}

FamilyResult build_folded_johnson(std::uint32_t k) {
  require(k >= 2, errc::bad_params, "FoldedJohnson(k) needs k >= 2");
  const auto base = build_johnson(2 * k, k);
  FamilyResult out = folded(base.graph, base.gens);
  out.graph.meta = {"FoldedJohnson", "k=" + std::to_string(k)};
  return out;
}

FamilyResult build_hamming(std::uint32_t k, std::uint32_t m) {
  require(k >= 1 && m >= 2, errc::bad_params, "Hamming(k,m) needs k >= 1 and m >= 2");
  std::uint64_t count = 1;
  for (std::uint32_t i = 0; i < k; ++i) {
    count *= m;
    require(count <= kGraphVertexBound, errc::too_large,
            "Hamming(" + std::to_string(k) + "," + std::to_string(m) + ") exceeds the vertex bound");
  }
  const auto n = static_cast<std::uint32_t>(count);

  // Vertex index is the base-m value of the tuple, coordinate 0 most
  // significant, which is exactly lexicographic order.
  std::vector<std::uint32_t> weight(k);
  weight[k - 1] = 1;
  for (std::uint32_t c = k - 1; c-- > 0;) weight[c] = weight[c + 1] * m;
  auto decode = [&](std::uint32_t idx) {
    std::vector<std::uint32_t> t(k);
    for (std::uint32_t c = 0; c < k; ++c) {
      t[c] = idx / weight[c];
      idx %= weight[c];
    }
    return t;
  };
  auto encode = [&](const std::vector<std::uint32_t>& t) {
    std::uint32_t idx = 0;
    for (std::uint32_t c = 0; c < k; ++c) idx += t[c] * weight[c];
    return idx;
  };

  std::vector<std::string> labels(n);
  for (std::uint32_t v = 0; v < n; ++v) {
    const auto t = decode(v);
    std::string s;
    for (std::uint32_t c = 0; c < k; ++c) {
      if (c) s += ",";
      s += std::to_string(t[c]);
    }
    labels[v] = s;
  }

  GraphBuilder builder({"Hamming", "k=" + std::to_string(k) + ",m=" + std::to_string(m)}, labels);
  for (std::uint32_t v = 0; v < n; ++v) {
    const auto t = decode(v);
    for (std::uint32_t c = 0; c < k; ++c)
      for (std::uint32_t a = 0; a < m; ++a) {
        if (a == t[c]) continue;
        const std::uint32_t u = v + (a - t[c]) * weight[c];
        if (v < u) builder.add_edge(v, u);
      }
  }

  FamilyResult out{builder.finish(), {}};
  for (std::uint32_t a = 0; a + 1 < m; ++a) {
    Perm p(n);
    for (std::uint32_t v = 0; v < n; ++v) {
      auto t = decode(v);
      if (t[0] == a)
        t[0] = a + 1;
      else if (t[0] == a + 1)
        t[0] = a;
      p[v] = encode(t);
    }
    out.gens.perms.push_back(std::move(p));
    out.gens.provenance.push_back("alphabet transposition (" + std::to_string(a) + "," +
                                  std::to_string(a + 1) + ") at coordinate 0");
  }
  for (std::uint32_t c = 0; c + 1 < k; ++c) {
    Perm p(n);
    for (std::uint32_t v = 0; v < n; ++v) {
      auto t = decode(v);
      std::swap(t[c], t[c + 1]);
      p[v] = encode(t);
    }
    out.gens.perms.push_back(std::move(p));
    out.gens.provenance.push_back("coordinate swap (" + std::to_string(c) + "," + std::to_string(c + 1) + ")");
  }
  verify_generators(out.graph, out.gens);
  return out;
}

FamilyResult build_cycle(std::uint32_t k) {
  require(k >= 3, errc::bad_params, "Cycle(k) needs k >= 3");
  require(k <= kGraphVertexBound, errc::too_large, "Cycle(k) exceeds the vertex bound");
  std::vector<std::string> labels(k);
  for (std::uint32_t i = 0; i < k; ++i) labels[i] = std::to_string(i);
  GraphBuilder builder({"Cycle", "k=" + std::to_string(k)}, labels);
  for (std::uint32_t i = 0; i < k; ++i) builder.add_edge(i, (i + 1) % k);

  FamilyResult out{builder.finish(), {}};
  Perm rot(k), refl(k);
  for (std::uint32_t i = 0; i < k; ++i) {
    rot[i] = (i + 1) % k;
    refl[i] = (k - i) % k;
  }
  out.gens.perms = {rot, refl};
  out.gens.provenance = {"rotation", "reflection"};
  verify_generators(out.graph, out.gens);
  return out;
}

}  // namespace geodex
