// Constructive flag-to-geodesic maps between antipodal vertex pairs, one per
// supported family, with an exhaustive bijection checker against brute-force
// geodesic enumeration.
#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "family_util.hpp"
#include "geodex/errors.hpp"
#include "geodex/formed_space.hpp"
#include "geodex/metrics.hpp"

namespace geodex {

using detail::split_prime_power;

namespace {

constexpr std::uint64_t kFlagCap = 10000000;

using Set = std::vector<std::uint32_t>;

Set parse_set(const std::string& label) {
  Set out;
  std::uint32_t cur = 0;
  bool any = false;
  for (char ch : label) {
    if (ch == ',') {
      out.push_back(cur);
      cur = 0;
      any = false;
    } else {
      require(ch >= '0' && ch <= '9', errc::internal, "vertex label is not a number list");
      cur = cur * 10 + static_cast<std::uint32_t>(ch - '0');
      any = true;
    }
  }
  require(any, errc::internal, "vertex label is not a number list");
  out.push_back(cur);
  return out;
}

std::string join_set(const Set& s) {
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(s[i]);
  }
  return out;
}

Set set_union(const Set& a, const Set& b) {
  Set out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

bool set_subset(const Set& inner, const Set& outer) {
  return std::includes(outer.begin(), outer.end(), inner.begin(), inner.end());
}

Mat mat_from_label(const FieldPtr& F, std::uint32_t rows, std::uint32_t cols,
                   const std::string& label) {
  Mat M(F, rows, cols);
  std::uint32_t r = 0, c = 0;
  Fel cur = 0;
  auto flush = [&] {
    require(r < rows && c < cols && cur < F->q(), errc::internal,
            "vertex label does not decode to a matrix of the expected shape");
    M.at(r, c) = cur;
    cur = 0;
    ++c;
  };
  for (char ch : label) {
    if (ch == ',') {
      flush();
    } else if (ch == ';') {
      flush();
      require(c == cols, errc::internal, "vertex label has a short matrix row");
      ++r;
      c = 0;
    } else {
      require(ch >= '0' && ch <= '9', errc::internal, "vertex label is not a matrix");
      cur = cur * 10 + static_cast<Fel>(ch - '0');
    }
  }
  flush();
  require(r == rows - 1 && c == cols, errc::internal,
          "vertex label does not decode to a matrix of the expected shape");
  return M;
}

Subspace sub_from_label(const FieldPtr& F, std::uint32_t ambient, const std::string& label) {
  if (label == "0") return zero_subspace(F, ambient);
  const auto rows = static_cast<std::uint32_t>(std::count(label.begin(), label.end(), ';') + 1);
  return span(mat_from_label(F, rows, ambient, label));
}

// Shared per-call context: decoded parameters and a label-to-index map.
struct MapContext {
  const Graph& G;
  const FamilySpec& spec;
  std::map<std::string, std::uint32_t> index;

  explicit MapContext(const Graph& g, const FamilySpec& s) : G(g), spec(s) {
    for (std::uint32_t v = 0; v < G.n; ++v) index[G.labels[v]] = v;
  }

  std::uint32_t vertex(const std::string& label) const {
    auto it = index.find(label);
    require(it != index.end(), errc::internal,
            "constructed geodesic vertex " + label + " is not a vertex of the graph");
    return it->second;
  }
};

std::uint32_t spec_num(const FamilySpec& spec, std::size_t i) {
  require(i < spec.args.size(), errc::bad_params,
          spec.family + " spec is missing argument " + std::to_string(i + 1));
  const std::string& s = spec.args[i];
  require(!s.empty(), errc::bad_params, spec.family + " spec has an empty argument");
  std::uint64_t value = 0;
  for (char ch : s) {
    require(ch >= '0' && ch <= '9', errc::bad_params,
            spec.family + " argument '" + s + "' is not a number");
    value = value * 10 + static_cast<std::uint64_t>(ch - '0');
    require(value <= 0xffffffffull, errc::bad_params, "argument '" + s + "' is out of range");
  }
  return static_cast<std::uint32_t>(value);
}

// The flag maps target antipodal pairs; the required distance is the family
// diameter determined by the spec parameters.
std::uint32_t family_diameter(const FamilySpec& spec) {
  const std::string& f = spec.family;
  if (f == "Johnson") return spec_num(spec, 1);
  if (f == "DoubledOdd") return 2 * spec_num(spec, 0) - 1;
  if (f == "Hamming") return spec_num(spec, 0);
  if (f == "Grassmann") return spec_num(spec, 1);
  if (f == "DualPolar") return parse_space(spec.args.empty() ? "" : spec.args[0]).omega;
  if (f == "IncidenceOpposites") return 4;
  if (f == "BilinearForms") return spec_num(spec, 0);
  if (f == "AlternatingForms") return spec_num(spec, 0) / 2;
  if (f == "HermitianForms") return spec_num(spec, 0);
  fail(errc::bad_params, "no constructive flag map for family " + f);
}

// Canonical metadata for the spec, compared against the graph so that a flag
// map is never applied to the wrong graph.
GraphMeta spec_meta(const FamilySpec& spec) {
  const std::string& f = spec.family;
  auto num = [&](std::size_t i) { return std::to_string(spec_num(spec, i)); };
  if (f == "Johnson") return {f, "n=" + num(0) + ",k=" + num(1)};
  if (f == "DoubledOdd") return {f, "k=" + num(0)};
  if (f == "Hamming") return {f, "k=" + num(0) + ",m=" + num(1)};
  if (f == "Grassmann") return {f, "n=" + num(0) + ",k=" + num(1) + ",q=" + num(2)};
  if (f == "DualPolar") {
    require(spec.args.size() == 1, errc::bad_params, "DualPolar takes one space argument");
    return {f, "space=" + parse_space(spec.args[0]).name()};
  }
  if (f == "IncidenceOpposites") return {f, "n=" + num(0) + ",q=" + num(1)};
  if (f == "BilinearForms") return {f, "m=" + num(0) + ",k=" + num(1) + ",q=" + num(2)};
  if (f == "AlternatingForms") return {f, "k=" + num(0) + ",q=" + num(1)};
  if (f == "HermitianForms") return {f, "k=" + num(0) + ",r=" + num(1)};
  fail(errc::bad_params, "no constructive flag map for family " + f);
}

void check_graph_matches(const Graph& G, const FamilySpec& spec) {
  const GraphMeta want = spec_meta(spec);
  require(G.meta.family == want.family && G.meta.params == want.params, errc::bad_params,
          "graph metadata (" + G.meta.family + ", " + G.meta.params +
              ") does not match the family spec (" + want.family + ", " + want.params + ")");
}

void check_antipodal(const Graph& G, const FamilySpec& spec, std::uint32_t x, std::uint32_t y) {
  require(x < G.n && y < G.n, errc::bad_params, "vertex index out of range");
  const std::uint32_t want = family_diameter(spec);
  const std::uint32_t have = graph_bfs(G, x)[y];
  require(have == want, errc::bad_distance,
          "flag maps need an antipodal pair: d(x,y) = " + std::to_string(have) + ", expected " +
              std::to_string(want));
}

void check_no_sets(const Flag& flag) {
  require(flag.set_chain_x.empty() && flag.set_chain_y.empty(), errc::bad_flag,
          "this family's flags carry no set chains");
}

void check_no_subs(const Flag& flag) {
  require(flag.sub_chain_x.empty() && flag.sub_chain_y.empty(), errc::bad_flag,
          "this family's flags carry no subspace chains");
}

// A chain of sets under `top`, listed by the given sizes, each containing the
// next when sizes decrease and the previous when sizes increase.
void check_set_chain(const std::vector<Set>& chain, const Set& top,
                     const std::vector<std::uint32_t>& sizes, const std::string& side) {
  require(chain.size() == sizes.size(), errc::bad_flag,
          side + " chain has " + std::to_string(chain.size()) + " sets, expected " +
              std::to_string(sizes.size()));
  for (std::size_t i = 0; i < chain.size(); ++i) {
    require(chain[i].size() == sizes[i], errc::bad_flag,
            side + " chain entry " + std::to_string(i) + " has the wrong size");
    require(std::is_sorted(chain[i].begin(), chain[i].end()) &&
                std::adjacent_find(chain[i].begin(), chain[i].end()) == chain[i].end(),
            errc::bad_flag, side + " chain entry " + std::to_string(i) + " is not a sorted set");
    require(set_subset(chain[i], top), errc::bad_flag,
            side + " chain entry " + std::to_string(i) + " is not contained in the end vertex");
    if (i + 1 < chain.size()) {
      const bool down = sizes[i + 1] < sizes[i];
      const Set& inner = down ? chain[i + 1] : chain[i];
      const Set& outer = down ? chain[i] : chain[i + 1];
      require(set_subset(inner, outer), errc::bad_flag, side + " chain is not nested");
    }
  }
}

void check_sub_chain(const std::vector<Subspace>& chain, const Subspace& top,
                     const std::vector<std::uint32_t>& dims, const std::string& side) {
  require(chain.size() == dims.size(), errc::bad_flag,
          side + " chain has " + std::to_string(chain.size()) + " subspaces, expected " +
              std::to_string(dims.size()));
  for (std::size_t i = 0; i < chain.size(); ++i) {
    require(chain[i].ambient() == top.ambient() && chain[i].field()->same(*top.field()),
            errc::bad_flag, side + " chain entry " + std::to_string(i) + " has the wrong ambient");
    require(chain[i].dim() == dims[i], errc::bad_flag,
            side + " chain entry " + std::to_string(i) + " has the wrong dimension");
    require(sub_contains(top, chain[i]), errc::bad_flag,
            side + " chain entry " + std::to_string(i) + " is not contained in the end vertex");
    if (i + 1 < chain.size()) {
      const bool down = dims[i + 1] < dims[i];
      const Subspace& inner = down ? chain[i + 1] : chain[i];
      const Subspace& outer = down ? chain[i] : chain[i + 1];
      require(sub_contains(outer, inner), errc::bad_flag, side + " chain is not nested");
    }
  }
}

std::vector<std::uint32_t> descending(std::uint32_t from, std::uint32_t to) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t s = from; s >= to && s > 0; --s) out.push_back(s);
  return out;
}

// Chains of sorted prefixes, sizes 1..upto, one per ordering of base. The
// orderings map to chains bijectively as long as upto + 1 >= |base|, since
// at most one element is left unplaced.
std::vector<std::vector<Set>> prefix_chains(const Set& base, std::size_t upto, bool down) {
  std::vector<std::vector<Set>> out;
  Set order = base;
  do {
    std::vector<Set> chain;
    for (std::size_t len = 1; len <= upto; ++len) {
      Set prefix(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(len));
      std::sort(prefix.begin(), prefix.end());
      chain.push_back(std::move(prefix));
    }
    if (down) std::reverse(chain.begin(), chain.end());
    out.push_back(std::move(chain));
  } while (std::next_permutation(order.begin(), order.end()));
  return out;
}

std::vector<std::uint32_t> ascending(std::uint32_t from, std::uint32_t to) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t s = from; s <= to; ++s) out.push_back(s);
  return out;
}

// Projection onto the row space of `image` along the row space of `along`,
// acting on row vectors from the right.
Mat projection_along(const Subspace& along, const Subspace& image) {
  const FieldPtr& F = along.field();
  const std::uint32_t n = along.ambient();
  Mat S = stack(along.basis, image.basis);
  require(S.rows == n && invertible(S), errc::internal,
          "projection blocks do not decompose the space");
  Mat D(F, n, n);
  for (std::uint32_t i = along.dim(); i < n; ++i) D.at(i, i) = 1;
  return mat_mul(inverse(S), mat_mul(D, S));
}

// ---- Johnson ----

Geodesic johnson_map(const MapContext& ctx, std::uint32_t x, std::uint32_t y, const Flag& flag) {
  const std::uint32_t k = spec_num(ctx.spec, 1);
  const Set X = parse_set(ctx.G.labels[x]);
  const Set Y = parse_set(ctx.G.labels[y]);
  check_no_subs(flag);
  check_set_chain(flag.set_chain_x, X, descending(k - 1, 1), "x-side");
  check_set_chain(flag.set_chain_y, Y, ascending(1, k - 1), "y-side");

  Geodesic out;
  out.vertices.push_back(x);
  for (std::uint32_t i = 1; i < k; ++i)
    out.vertices.push_back(ctx.vertex(join_set(set_union(flag.set_chain_x[i - 1],
                                                         flag.set_chain_y[i - 1]))));
  out.vertices.push_back(y);
  return out;
}

std::vector<Flag> johnson_flags(const MapContext& ctx, std::uint32_t x, std::uint32_t y) {
  const Set X = parse_set(ctx.G.labels[x]);
  const Set Y = parse_set(ctx.G.labels[y]);

  std::vector<Flag> out;
  for (const auto& cx : prefix_chains(X, X.size() - 1, true))
    for (const auto& cy : prefix_chains(Y, Y.size() - 1, false)) {
      require(out.size() < kFlagCap, errc::too_large, "flag enumeration exceeds the cap");
      Flag f;
      f.set_chain_x = cx;
      f.set_chain_y = cy;
      out.push_back(std::move(f));
    }
  return out;
}

// ---- DoubledOdd ----

Geodesic doubled_odd_map(const MapContext& ctx, std::uint32_t x, std::uint32_t y,
                         const Flag& flag) {
  const std::uint32_t k = spec_num(ctx.spec, 0);
  const Set X = parse_set(ctx.G.labels[x]);
  const Set Y = parse_set(ctx.G.labels[y]);
  require(X.size() == k - 1, errc::bad_flag,
          "the start vertex must lie on the (k-1)-set side");
  check_no_subs(flag);
  check_set_chain(flag.set_chain_x, X, descending(k - 2, 1), "x-side");
  check_set_chain(flag.set_chain_y, Y, ascending(1, k - 1), "y-side");

  Geodesic out;
  out.vertices.push_back(x);
  for (std::uint32_t j = 1; j < k; ++j) {
    const Set& Yj = flag.set_chain_y[j - 1];
    const Set& upper = j == 1 ? X : flag.set_chain_x[j - 2];  // X_{k-j}, with X_{k-1} = X
    out.vertices.push_back(ctx.vertex(join_set(set_union(upper, Yj))));
    if (j < k - 1)
      out.vertices.push_back(ctx.vertex(join_set(set_union(flag.set_chain_x[j - 1], Yj))));
    else
      out.vertices.push_back(ctx.vertex(join_set(Yj)));
  }
  out.vertices.push_back(y);
  return out;
}

std::vector<Flag> doubled_odd_flags(const MapContext& ctx, std::uint32_t x, std::uint32_t y) {
  const Set X = parse_set(ctx.G.labels[x]);
  const Set Y = parse_set(ctx.G.labels[y]);
  require(X.size() + 1 == Y.size(), errc::bad_flag,
          "the start vertex must lie on the (k-1)-set side");

  std::vector<Flag> out;
  for (const auto& cx : prefix_chains(X, X.size() - 1, true))
    for (const auto& cy : prefix_chains(Y, Y.size() - 1, false)) {
      require(out.size() < kFlagCap, errc::too_large, "flag enumeration exceeds the cap");
      Flag f;
      f.set_chain_x = cx;
      f.set_chain_y = cy;
      out.push_back(std::move(f));
    }
  return out;
}

// ---- Hamming ----

Geodesic hamming_map(const MapContext& ctx, std::uint32_t x, std::uint32_t y, const Flag& flag) {
  const std::uint32_t k = spec_num(ctx.spec, 0);
  const Set X = parse_set(ctx.G.labels[x]);
  const Set Y = parse_set(ctx.G.labels[y]);
  check_no_subs(flag);
  require(flag.set_chain_x.empty(), errc::bad_flag, "Hamming flags use only the y-side chain");
  Set all;
  for (std::uint32_t pos = 0; pos < k; ++pos) all.push_back(pos);
  check_set_chain(flag.set_chain_y, all, ascending(1, k), "position");

  Geodesic out;
  out.vertices.push_back(x);
  for (std::uint32_t i = 1; i <= k; ++i) {
    Set t = X;
    for (std::uint32_t pos : flag.set_chain_y[i - 1]) t[pos] = Y[pos];
    out.vertices.push_back(ctx.vertex(join_set(t)));
  }
  require(out.vertices.back() == y, errc::internal, "position chain does not end at y");
  return out;
}

std::vector<Flag> hamming_flags(const MapContext& ctx, std::uint32_t, std::uint32_t) {
  const std::uint32_t k = spec_num(ctx.spec, 0);
  Set all;
  for (std::uint32_t pos = 0; pos < k; ++pos) all.push_back(pos);

  std::vector<Flag> out;
  for (auto& chain : prefix_chains(all, k, false)) {
    require(out.size() < kFlagCap, errc::too_large, "flag enumeration exceeds the cap");
    Flag f;
    f.set_chain_y = std::move(chain);
    out.push_back(std::move(f));
  }
  return out;
}

// ---- Grassmann ----

Geodesic grassmann_map(const MapContext& ctx, std::uint32_t x, std::uint32_t y, const Flag& flag) {
  const std::uint32_t n = spec_num(ctx.spec, 0);
  const std::uint32_t k = spec_num(ctx.spec, 1);
  const auto [p, f] = split_prime_power(spec_num(ctx.spec, 2));
  const FieldPtr F = Field::make(p, f);
  const Subspace X = sub_from_label(F, n, ctx.G.labels[x]);
  const Subspace Y = sub_from_label(F, n, ctx.G.labels[y]);
  check_no_sets(flag);
  check_sub_chain(flag.sub_chain_x, X, descending(k - 1, 1), "x-side");
  check_sub_chain(flag.sub_chain_y, Y, ascending(1, k - 1), "y-side");

  Geodesic out;
  out.vertices.push_back(x);
  for (std::uint32_t i = 1; i < k; ++i)
    out.vertices.push_back(
        ctx.vertex(sub_label(sub_sum(flag.sub_chain_x[i - 1], flag.sub_chain_y[i - 1]))));
  out.vertices.push_back(y);
  return out;
}

std::vector<std::vector<Subspace>> proper_flags(const Subspace& top, bool down) {
  std::vector<std::vector<Subspace>> out;
  for (auto& chain : maximal_flags_of(top)) {
    chain.pop_back();
    if (down) std::reverse(chain.begin(), chain.end());
    out.push_back(std::move(chain));
  }
  return out;
}

std::vector<Flag> grassmann_flags(const MapContext& ctx, std::uint32_t x, std::uint32_t y) {
  const std::uint32_t n = spec_num(ctx.spec, 0);
  const auto [p, f] = split_prime_power(spec_num(ctx.spec, 2));
  const FieldPtr F = Field::make(p, f);
  const Subspace X = sub_from_label(F, n, ctx.G.labels[x]);
  const Subspace Y = sub_from_label(F, n, ctx.G.labels[y]);

  std::vector<Flag> out;
  for (const auto& cx : proper_flags(X, true))
    for (const auto& cy : proper_flags(Y, false)) {
      require(out.size() < kFlagCap, errc::too_large, "flag enumeration exceeds the cap");
      Flag fl;
      fl.sub_chain_x = cx;
      fl.sub_chain_y = cy;
      out.push_back(std::move(fl));
    }
  return out;
}

// ---- DualPolar ----

Geodesic dual_polar_map(const MapContext& ctx, std::uint32_t x, std::uint32_t y,
                        const Flag& flag) {
  const FormedSpace W = parse_space(ctx.spec.args[0]);
  const std::uint32_t w = W.omega;
  const Subspace X = sub_from_label(W.F, W.dim, ctx.G.labels[x]);
  const Subspace Y = sub_from_label(W.F, W.dim, ctx.G.labels[y]);
  check_no_sets(flag);
  require(flag.sub_chain_x.empty(), errc::bad_flag,
          "DualPolar flags use only the y-side chain; the x side is forced by perps");
  check_sub_chain(flag.sub_chain_y, Y, ascending(1, w - 1), "y-side");

  Geodesic out;
  out.vertices.push_back(x);
  for (std::uint32_t i = 1; i < w; ++i) {
    const Subspace& Yi = flag.sub_chain_y[i - 1];
    const Subspace Xpart = sub_intersect(perp(W, Yi), X);  // X_{w-i}
    out.vertices.push_back(ctx.vertex(sub_label(sub_sum(Xpart, Yi))));
  }
  out.vertices.push_back(y);
  return out;
}

std::vector<Flag> dual_polar_flags(const MapContext& ctx, std::uint32_t, std::uint32_t y) {
  const FormedSpace W = parse_space(ctx.spec.args[0]);
  const Subspace Y = sub_from_label(W.F, W.dim, ctx.G.labels[y]);

  std::vector<Flag> out;
  for (auto& chain : proper_flags(Y, false)) {
    require(out.size() < kFlagCap, errc::too_large, "flag enumeration exceeds the cap");
    Flag fl;
    fl.sub_chain_y = std::move(chain);
    out.push_back(std::move(fl));
  }
  return out;
}

// ---- IncidenceOpposites ----

struct OppositesContext {
  FieldPtr F;
  std::uint32_t n = 0;
  Subspace H;            // the fixed hyperplane <e_0 .. e_{n-2}>
  Subspace X, Y, XY;     // the antipodal points and their span
};

OppositesContext opposites_context(const MapContext& ctx, std::uint32_t x, std::uint32_t y) {
  OppositesContext oc;
  oc.n = spec_num(ctx.spec, 0);
  const auto [p, f] = split_prime_power(spec_num(ctx.spec, 1));
  oc.F = Field::make(p, f);
  Mat h_rows(oc.F, oc.n - 1, oc.n);
  for (std::uint32_t i = 0; i < oc.n - 1; ++i) h_rows.at(i, i) = 1;
  oc.H = span(h_rows);

  const std::string& lx = ctx.G.labels[x];
  const std::string& ly = ctx.G.labels[y];
  require(lx.rfind("p:", 0) == 0 && ly.rfind("p:", 0) == 0, errc::bad_params,
          "the opposites flag map is defined for antipodal point pairs");
  oc.X = sub_from_label(oc.F, oc.n, lx.substr(2));
  oc.Y = sub_from_label(oc.F, oc.n, ly.substr(2));
  oc.XY = sub_sum(oc.X, oc.Y);
  return oc;
}

Geodesic opposites_map(const MapContext& ctx, std::uint32_t x, std::uint32_t y, const Flag& flag) {
  const OppositesContext oc = opposites_context(ctx, x, y);
  check_no_sets(flag);
  require(flag.sub_chain_x.size() == 1 && flag.sub_chain_y.size() == 1, errc::bad_flag,
          "opposites flags are a pair (U, <u>)");
  const Subspace& U = flag.sub_chain_x[0];
  const Subspace& P = flag.sub_chain_y[0];
  require(U.ambient() == oc.n && U.field()->same(*oc.F) && U.dim() == oc.n - 2, errc::bad_flag,
          "U must be an (n-2)-subspace of the ambient space");
  require(sub_intersect(U, oc.XY).dim() == 0, errc::bad_flag,
          "U must be a complement of the span of the two end points");
  require(!sub_contains(oc.H, U), errc::bad_flag, "U must not lie in the fixed hyperplane");
  require(P.ambient() == oc.n && P.field()->same(*oc.F) && P.dim() == 1, errc::bad_flag,
          "<u> must be a point");
  require(sub_contains(U, P), errc::bad_flag, "<u> must lie in U");
  require(!sub_contains(oc.H, P), errc::bad_flag,
          "<u> must not lie in the fixed hyperplane");

  Geodesic out;
  out.vertices.push_back(x);
  out.vertices.push_back(ctx.vertex("h:" + sub_label(sub_sum(oc.X, U))));
  out.vertices.push_back(ctx.vertex("p:" + sub_label(P)));
  out.vertices.push_back(ctx.vertex("h:" + sub_label(sub_sum(oc.Y, U))));
  out.vertices.push_back(y);
  return out;
}

std::vector<Flag> opposites_flags(const MapContext& ctx, std::uint32_t x, std::uint32_t y) {
  const OppositesContext oc = opposites_context(ctx, x, y);

  std::vector<Flag> out;
  for (const auto& U : enumerate_subspaces(oc.F, oc.n, oc.n - 2)) {
    if (sub_intersect(U, oc.XY).dim() != 0) continue;
    if (sub_contains(oc.H, U)) continue;
    for (const auto& P : enumerate_subspaces_of(U, 1)) {
      if (sub_contains(oc.H, P)) continue;
      require(out.size() < kFlagCap, errc::too_large, "flag enumeration exceeds the cap");
      Flag fl;
      fl.sub_chain_x = {U};
      fl.sub_chain_y = {P};
      out.push_back(std::move(fl));
    }
  }
  return out;
}

// ---- Forms graphs ----

struct FormsContext {
  FieldPtr F;
  std::uint32_t rows = 0, cols = 0;
  Mat X, Y, Z;  // end matrices and their difference
};

FormsContext forms_context(const MapContext& ctx, std::uint32_t x, std::uint32_t y,
                           std::uint32_t rows, std::uint32_t cols, const FieldPtr& F) {
  FormsContext fc;
  fc.F = F;
  fc.rows = rows;
  fc.cols = cols;
  fc.X = mat_from_label(F, rows, cols, ctx.G.labels[x]);
  fc.Y = mat_from_label(F, rows, cols, ctx.G.labels[y]);
  fc.Z = mat_sub(fc.Y, fc.X);
  return fc;
}

Geodesic bilinear_map(const MapContext& ctx, std::uint32_t x, std::uint32_t y, const Flag& flag) {
  const std::uint32_t m = spec_num(ctx.spec, 0);
  const std::uint32_t k = spec_num(ctx.spec, 1);
  const auto [p, f] = split_prime_power(spec_num(ctx.spec, 2));
  const FieldPtr F = Field::make(p, f);
  const FormsContext fc = forms_context(ctx, x, y, m, k, F);
  check_no_sets(flag);

  const Subspace domain = full_space(F, m);
  check_sub_chain(flag.sub_chain_x, domain, descending(m - 1, 1), "null-space");
  check_sub_chain(flag.sub_chain_y, domain, ascending(1, m - 1), "complement");
  for (std::size_t t = 0; t + 1 < static_cast<std::size_t>(m); ++t) {
    const Subspace& Ui = flag.sub_chain_x[t];
    const Subspace& Ubar = flag.sub_chain_y[t];
    require(Ui.dim() + Ubar.dim() == m && sub_intersect(Ui, Ubar).dim() == 0, errc::bad_flag,
            "complement chain entry " + std::to_string(t) + " does not complement its null space");
  }

  Geodesic out;
  out.vertices.push_back(x);
  for (std::uint32_t j = 1; j < m; ++j) {
    const Mat P = projection_along(flag.sub_chain_x[j - 1], flag.sub_chain_y[j - 1]);
    out.vertices.push_back(ctx.vertex(mat_to_string(mat_add(fc.X, mat_mul(P, fc.Z)))));
  }
  out.vertices.push_back(y);
  return out;
}

std::vector<Flag> bilinear_flags(const MapContext& ctx, std::uint32_t, std::uint32_t) {
  const std::uint32_t m = spec_num(ctx.spec, 0);
  const auto [p, f] = split_prime_power(spec_num(ctx.spec, 2));
  const FieldPtr F = Field::make(p, f);
  const Subspace domain = full_space(F, m);

  std::vector<Flag> out;
  for (const auto& cx : proper_flags(domain, true)) {
    // cx lists U_{m-1} .. U_1; complement chains are built from the largest
    // complement downward, each step inside the previous complement.
    std::vector<Subspace> cbar(cx.size());
    auto extend = [&](auto&& self, std::size_t t) -> void {
      // t indexes cx from the small end: choose the complement of U_{t+1}.
      if (t == cx.size()) {
        require(out.size() < kFlagCap, errc::too_large, "flag enumeration exceeds the cap");
        Flag fl;
        fl.sub_chain_x = cx;
        fl.sub_chain_y = cbar;
        out.push_back(std::move(fl));
        return;
      }
      const Subspace& Ui = cx[cx.size() - 1 - t];  // U_{t+1}
      const Subspace& inside = t == 0 ? domain : cbar[cbar.size() - t];
      for (const auto& C : enumerate_subspaces_of(inside, m - 1 - static_cast<std::uint32_t>(t)))
        if (sub_intersect(C, Ui).dim() == 0) {
          cbar[cbar.size() - 1 - t] = C;
          self(self, t + 1);
        }
    };
    extend(extend, 0);
  }
  return out;
}

// Nondegeneracy of the restriction of the (possibly twisted) form Z to U.
bool restriction_nondegenerate(const Mat& Z, const Subspace& U, std::uint32_t sigma_power) {
  const Mat& B = U.basis;
  Mat right = transpose(B);
  if (sigma_power) {
    const FieldPtr F = Z.F;
    right = transpose(map_entries(B, [&](Fel a) { return F->frobenius(a, sigma_power); }));
  }
  return U.dim() == 0 || invertible(mat_mul(mat_mul(B, Z), right));
}

// Perp of U with respect to the form Z (twisted by sigma for Hermitian Z),
// inside the whole coordinate space.
Subspace form_perp(const Mat& Z, const Subspace& U, std::uint32_t sigma_power) {
  Mat K = kernel(mat_mul(U.basis, Z));
  if (sigma_power) {
    const FieldPtr F = Z.F;
    K = map_entries(K, [&](Fel a) { return F->frobenius(a, sigma_power); });
  }
  return span(K);
}

// Shared geodesic construction for alternating and Hermitian forms: position
// j is null on chain[m-j-1] (+ the radical) and agrees with Y on its perp.
Geodesic restriction_map(const MapContext& ctx, const FormsContext& fc, std::uint32_t x,
                         std::uint32_t y, const std::vector<Subspace>& chain,
                         const Subspace& radical, const Subspace& complement,
                         std::uint32_t sigma_power) {
  Geodesic out;
  out.vertices.push_back(x);
  for (std::size_t j = 1; j <= chain.size(); ++j) {
    const Subspace& Vi = chain[chain.size() - j];
    require(restriction_nondegenerate(fc.Z, Vi, sigma_power), errc::bad_flag,
            "the difference form is degenerate on a chain entry");
    const Subspace Wi = sub_intersect(form_perp(fc.Z, Vi, sigma_power), complement);
    const Mat Pi = projection_along(sub_sum(Vi, radical), Wi);
    Mat right = transpose(Pi);
    if (sigma_power) {
      const FieldPtr F = fc.F;
      right = transpose(map_entries(Pi, [&](Fel a) { return F->frobenius(a, sigma_power); }));
    }
    out.vertices.push_back(
        ctx.vertex(mat_to_string(mat_add(fc.X, mat_mul(mat_mul(Pi, fc.Z), right)))));
  }
  out.vertices.push_back(y);
  return out;
}

// The fixed complement of the radical: standard basis vectors away from the
// radical's pivot columns.
Subspace radical_complement(const Subspace& radical, std::uint32_t k) {
  const FieldPtr& F = radical.field();
  std::vector<bool> pivot(k, false);
  for (std::uint32_t r = 0; r < radical.dim(); ++r)
    for (std::uint32_t c = 0; c < k; ++c)
      if (radical.basis.at(r, c) != 0) {
        pivot[c] = true;
        break;
      }
  Mat rows(F, k - radical.dim(), k);
  std::uint32_t at = 0;
  for (std::uint32_t c = 0; c < k; ++c)
    if (!pivot[c]) rows.at(at++, c) = 1;
  require(at == rows.rows, errc::internal, "radical pivot count mismatch");
  return span(rows);
}

Geodesic alternating_map(const MapContext& ctx, std::uint32_t x, std::uint32_t y,
                         const Flag& flag) {
  const std::uint32_t k = spec_num(ctx.spec, 0);
  const std::uint32_t m = k / 2;
  const auto [p, f] = split_prime_power(spec_num(ctx.spec, 1));
  const FieldPtr F = Field::make(p, f);
  const FormsContext fc = forms_context(ctx, x, y, k, k, F);
  check_no_sets(flag);
  require(flag.sub_chain_y.empty(), errc::bad_flag,
          "alternating flags are one nondegenerate chain");

  const Subspace radical = span(kernel(fc.Z));
  require(radical.dim() == k - 2 * m, errc::internal,
          "antipodal difference has the wrong radical");
  const Subspace complement =
      radical.dim() == 0 ? full_space(F, k) : radical_complement(radical, k);
  std::vector<std::uint32_t> dims;
  for (std::uint32_t i = 1; i < m; ++i) dims.push_back(2 * i);
  check_sub_chain(flag.sub_chain_x, complement, dims, "nondegenerate");

  return restriction_map(ctx, fc, x, y, flag.sub_chain_x, radical, complement, 0);
}

Geodesic hermitian_map(const MapContext& ctx, std::uint32_t x, std::uint32_t y, const Flag& flag) {
  const std::uint32_t k = spec_num(ctx.spec, 0);
  const auto [p, half] = split_prime_power(spec_num(ctx.spec, 1));
  const FieldPtr F = Field::make(p, 2 * half);
  const FormsContext fc = forms_context(ctx, x, y, k, k, F);
  check_no_sets(flag);
  require(flag.sub_chain_y.empty(), errc::bad_flag,
          "Hermitian flags are one nondegenerate chain");

  const Subspace complement = full_space(F, k);
  check_sub_chain(flag.sub_chain_x, complement, ascending(1, k - 1), "nondegenerate");

  return restriction_map(ctx, fc, x, y, flag.sub_chain_x, zero_subspace(F, k), complement, half);
}

// Chains of nondegenerate subspaces of the given dimensions inside `inside`.
std::vector<Flag> nondegenerate_chain_flags(const Mat& Z, const Subspace& inside,
                                            const std::vector<std::uint32_t>& dims,
                                            std::uint32_t sigma_power) {
  std::vector<Flag> out;
  std::vector<Subspace> chain;
  auto extend = [&](auto&& self, std::size_t t) -> void {
    if (t == dims.size()) {
      require(out.size() < kFlagCap, errc::too_large, "flag enumeration exceeds the cap");
      Flag fl;
      fl.sub_chain_x = chain;
      out.push_back(std::move(fl));
      return;
    }
    for (const auto& C : enumerate_subspaces_of(inside, dims[t])) {
      if (t > 0 && !sub_contains(C, chain.back())) continue;
      if (!restriction_nondegenerate(Z, C, sigma_power)) continue;
      chain.push_back(C);
      self(self, t + 1);
      chain.pop_back();
    }
  };
  extend(extend, 0);
  return out;
}

std::vector<Flag> alternating_flags(const MapContext& ctx, std::uint32_t x, std::uint32_t y) {
  const std::uint32_t k = spec_num(ctx.spec, 0);
  const std::uint32_t m = k / 2;
  const auto [p, f] = split_prime_power(spec_num(ctx.spec, 1));
  const FieldPtr F = Field::make(p, f);
  const FormsContext fc = forms_context(ctx, x, y, k, k, F);

  const Subspace radical = span(kernel(fc.Z));
  const Subspace complement =
      radical.dim() == 0 ? full_space(F, k) : radical_complement(radical, k);
  std::vector<std::uint32_t> dims;
  for (std::uint32_t i = 1; i < m; ++i) dims.push_back(2 * i);
  return nondegenerate_chain_flags(fc.Z, complement, dims, 0);
}

std::vector<Flag> hermitian_flags(const MapContext& ctx, std::uint32_t x, std::uint32_t y) {
  const std::uint32_t k = spec_num(ctx.spec, 0);
  const auto [p, half] = split_prime_power(spec_num(ctx.spec, 1));
  const FieldPtr F = Field::make(p, 2 * half);
  const FormsContext fc = forms_context(ctx, x, y, k, k, F);
  std::vector<std::uint32_t> dims;
  for (std::uint32_t i = 1; i < k; ++i) dims.push_back(i);
  return nondegenerate_chain_flags(fc.Z, full_space(F, k), dims, half);
}

}  // namespace

Geodesic flag_to_geodesic(const Graph& G, const FamilySpec& spec, std::uint32_t x,
                          std::uint32_t y, const Flag& flag) {
  check_graph_matches(G, spec);
  check_antipodal(G, spec, x, y);
  const MapContext ctx(G, spec);
  const std::string& f = spec.family;
  if (f == "Johnson") return johnson_map(ctx, x, y, flag);
  if (f == "DoubledOdd") return doubled_odd_map(ctx, x, y, flag);
  if (f == "Hamming") return hamming_map(ctx, x, y, flag);
  if (f == "Grassmann") return grassmann_map(ctx, x, y, flag);
  if (f == "DualPolar") return dual_polar_map(ctx, x, y, flag);
  if (f == "IncidenceOpposites") return opposites_map(ctx, x, y, flag);
  if (f == "BilinearForms") return bilinear_map(ctx, x, y, flag);
  if (f == "AlternatingForms") return alternating_map(ctx, x, y, flag);
  if (f == "HermitianForms") return hermitian_map(ctx, x, y, flag);
  fail(errc::bad_params, "no constructive flag map for family " + f);
}

std::vector<Flag> enumerate_flags(const Graph& G, const FamilySpec& spec, std::uint32_t x,
                                  std::uint32_t y) {
  check_graph_matches(G, spec);
  check_antipodal(G, spec, x, y);
  const MapContext ctx(G, spec);
  const std::string& f = spec.family;
  if (f == "Johnson") return johnson_flags(ctx, x, y);
  if (f == "DoubledOdd") return doubled_odd_flags(ctx, x, y);
  if (f == "Hamming") return hamming_flags(ctx, x, y);
  if (f == "Grassmann") return grassmann_flags(ctx, x, y);
  if (f == "DualPolar") return dual_polar_flags(ctx, x, y);
  if (f == "IncidenceOpposites") return opposites_flags(ctx, x, y);
  if (f == "BilinearForms") return bilinear_flags(ctx, x, y);
  if (f == "AlternatingForms") return alternating_flags(ctx, x, y);
  if (f == "HermitianForms") return hermitian_flags(ctx, x, y);
  fail(errc::bad_params, "no constructive flag map for family " + f);
}

BijectionReport bijection_check(const Graph& G, const FamilySpec& spec, std::uint32_t x,
                                std::uint32_t y) {
  const DRGResult drg = intersection_array(G);
  const auto* A = std::get_if<IntersectionArray>(&drg);
  if (!A)
    fail(errc::not_distance_regular,
         "bijection check needs a distance-regular graph: " +
             std::get<NotDRGWitness>(drg).describe());

  BijectionReport report;
  report.expected = 1;
  for (std::uint64_t ci : A->c) report.expected *= ci;
  require(report.expected <= Bigint(kFlagCap), errc::too_large,
          "expected geodesic count exceeds the bijection-check cap");

  const std::vector<Flag> flags = enumerate_flags(G, spec, x, y);
  report.flag_count = flags.size();

  const std::uint32_t d = graph_bfs(G, x)[y];
  std::set<std::vector<std::uint32_t>> images;
  report.images_valid = true;
  for (std::size_t i = 0; i < flags.size(); ++i) {
    const Geodesic geo = flag_to_geodesic(G, spec, x, y, flags[i]);
    const bool valid = geo.vertices.size() == d + 1 && geo.vertices.front() == x &&
                       geo.vertices.back() == y && is_geodesic(G, geo.vertices);
    if (!valid && report.images_valid) {
      report.images_valid = false;
      report.counterexample = "flag " + std::to_string(i) + " maps to a non-geodesic";
    }
    images.insert(geo.vertices);
  }
  report.images_distinct = images.size() == flags.size();
  if (!report.images_distinct && report.counterexample.empty())
    report.counterexample = "two flags map to the same geodesic";

  report.geodesic_count = geodesics(G, x, y).size();
  report.counts_match =
      report.flag_count == report.expected && report.geodesic_count == report.expected;
  if (!report.counts_match && report.counterexample.empty())
    report.counterexample = "flag, geodesic and intersection-array counts disagree";

  report.passed = report.images_valid && report.images_distinct && report.counts_match;
  if (report.passed) report.counterexample.clear();
  return report;
}

}  // namespace geodex
