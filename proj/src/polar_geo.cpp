#include "geodex/polar_geo.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "geodex/errors.hpp"

namespace geodex {

namespace {

constexpr std::uint64_t kExhaustBound = 10000;

std::vector<Fel> scaled(const FieldPtr& F, std::vector<Fel> v, Fel c) {
  for (Fel& e : v) e = F->mul(c, e);
  return v;
}

// u + c*v.
std::vector<Fel> add_scaled(const FieldPtr& F, std::vector<Fel> u, const std::vector<Fel>& v,
                            Fel c) {
  for (std::size_t i = 0; i < u.size(); ++i) u[i] = F->add(u[i], F->mul(c, v[i]));
  return u;
}

Subspace make_span(const FormedSpace& W, const std::vector<std::vector<Fel>>& vecs) {
  return span_of_vectors(W.F, W.dim, vecs);
}

std::vector<std::vector<Fel>> basis_rows(const Subspace& S) {
  std::vector<std::vector<Fel>> rows;
  for (std::uint32_t r = 0; r < S.dim(); ++r) rows.push_back(S.basis.row(r));
  return rows;
}

// First basis row of A outside B. A must exceed B, or the caller's
// dimension bookkeeping is broken.
std::vector<Fel> complement_row(const Subspace& A, const Subspace& B) {
  for (std::uint32_t r = 0; r < A.dim(); ++r) {
    std::vector<Fel> v = A.basis.row(r);
    if (!sub_member(B, v)) return v;
  }
  fail(errc::internal, "no basis vector of the larger space escapes the smaller one");
}

// Invokes fn on every nonzero vector of the row space of `basis`; stops
// early when fn returns false. Returns whether the scan ran to completion.
bool scan_vectors(const FieldPtr& F, const Mat& basis,
                  const std::function<bool(const std::vector<Fel>&)>& fn) {
  const std::uint32_t d = basis.rows;
  const std::uint64_t q = F->q();
  std::uint64_t count = 1;
  for (std::uint32_t i = 0; i < d; ++i) count *= q;
  std::vector<Fel> v(basis.cols, 0);
  for (std::uint64_t t = 1; t < count; ++t) {
    std::fill(v.begin(), v.end(), 0);
    std::uint64_t rem = t;
    for (std::uint32_t r = 0; r < d; ++r) {
      Fel c = static_cast<Fel>(rem % q);
      rem /= q;
      if (c == 0) continue;
      for (std::uint32_t j = 0; j < basis.cols; ++j)
        v[j] = F->add(v[j], F->mul(c, basis.at(r, j)));
    }
    if (!fn(v)) return false;
  }
  return true;
}

std::uint64_t space_vector_count(const FormedSpace& W) {
  std::uint64_t total = 1;
  for (std::uint32_t i = 0; i < W.dim; ++i) {
    total *= W.F->q();
    if (total > kExhaustBound) return total;
  }
  return total;
}

void check_vertex_pair(const FormedSpace& W, const Subspace& X, const Subspace& Y) {
  require(X.ambient() == W.dim && Y.ambient() == W.dim, errc::ambient_mismatch,
          "the subspaces must live in the formed space");
  require(X.dim() == Y.dim(), errc::bad_params, "the opposite test compares equal dimensions");
}

// Path validity for the graph on singular k-subspaces: every vertex
// singular of one dimension k < omega, consecutive vertices adjacent, and
// the length equal to the distance between the ends. Returns k.
std::uint32_t validate_geodesic(const FormedSpace& W, const std::vector<Subspace>& L) {
  require(!L.empty(), errc::not_a_geodesic, "a geodesic needs at least one vertex");
  const std::uint32_t k = L[0].dim();
  require(k >= 1, errc::not_a_geodesic, "vertices must have positive dimension");
  for (const Subspace& S : L) {
    require(S.ambient() == W.dim, errc::ambient_mismatch,
            "every vertex must live in the formed space");
    require(S.dim() == k, errc::not_a_geodesic, "all vertices must share one dimension");
  }
  require(k < W.omega, errc::maximal_not_allowed,
          "the geodesic calculus applies below the Witt index");
  for (const Subspace& S : L)
    require(is_singular(W, S), errc::not_a_geodesic, "every vertex must be singular");
  for (std::size_t i = 0; i + 1 < L.size(); ++i) {
    bool adjacent = sub_intersect(L[i], L[i + 1]).dim() == k - 1 &&
                    is_singular(W, sub_sum(L[i], L[i + 1]));
    require(adjacent, errc::not_a_geodesic, "consecutive vertices must be adjacent");
  }
  require(pg_distance(W, k, L.front(), L.back()) == L.size() - 1, errc::not_a_geodesic,
          "the length must equal the distance between the ends");
  return k;
}

struct EndBases {
  std::vector<std::vector<Fel>> w, x, y;
};

// Adapted bases for a geodesic with non-opposite ends: w spans the meet of
// the ends, x_j is the direction the start loses at step m-j+1, y_j the
// direction the end gains there, so that every vertex is
// < x_1..x_{m-i}, y_{m-i+1}..y_m, w >. The dimension chain of the
// intersections with the two ends is forced by geodesy.
EndBases extract_end_bases(const std::vector<Subspace>& L) {
  const std::uint32_t m = static_cast<std::uint32_t>(L.size()) - 1;
  const std::uint32_t k = L[0].dim();
  EndBases eb;
  eb.w = basis_rows(sub_intersect(L[0], L[m]));
  require(eb.w.size() == k - m, errc::internal, "non-opposite ends meet in dimension k - m");
  std::vector<Subspace> A(m + 1), B(m + 1);
  for (std::uint32_t i = 0; i <= m; ++i) {
    A[i] = sub_intersect(L[0], L[i]);
    B[i] = sub_intersect(L[m], L[i]);
    require(A[i].dim() == k - i && B[i].dim() == k - m + i, errc::internal,
            "geodesy forces the dimensions of the end intersections");
  }
  for (std::uint32_t j = 1; j <= m; ++j) {
    eb.x.push_back(complement_row(A[m - j], A[m - j + 1]));
    eb.y.push_back(complement_row(B[m - j + 1], B[m - j]));
  }
  return eb;
}

// Reduction for the non-opposite case. Cross values B(x_i, y_j) vanish for
// i <= j; the moves below clear the rest down to a partial permutation
// pattern. Rows are processed in ascending i because the filtration only
// lets x_i absorb earlier x's, making reduced earlier rows the elimination
// tools; the pivot is the first nonzero scanning right to left, so the
// remaining entries sit left of it and can be cleared by adding the later
// column y_pivot to earlier y's. Returns the pairing.
std::map<std::uint32_t, std::uint32_t> reduce_nonopposite(const FormedSpace& W,
                                                          std::vector<std::vector<Fel>>& xs,
                                                          std::vector<std::vector<Fel>>& ys) {
  const FieldPtr& F = W.F;
  const std::size_t m = xs.size();
  std::vector<std::vector<Fel>> C(m, std::vector<Fel>(m, 0));
  for (std::size_t r = 0; r < m; ++r)
    for (std::size_t c = 0; c < m; ++c) {
      C[r][c] = W.form(xs[r], ys[c]);
      if (r <= c)
        require(C[r][c] == 0, errc::internal,
                "crossing values of a geodesic vanish on and above the diagonal");
    }
  std::vector<std::ptrdiff_t> pivot_of_row(m, -1), row_of_col(m, -1);
  for (std::size_t r = 1; r < m; ++r) {
    for (std::size_t j = 1; j < r; ++j) {
      if (pivot_of_row[j] < 0) continue;
      Fel c = C[r][static_cast<std::size_t>(pivot_of_row[j])];
      if (c == 0) continue;
      xs[r] = add_scaled(F, std::move(xs[r]), xs[j], F->neg(c));
      for (std::size_t t = 0; t < m; ++t) C[r][t] = F->sub(C[r][t], F->mul(c, C[j][t]));
    }
    std::ptrdiff_t pivot = -1;
    for (std::ptrdiff_t k = static_cast<std::ptrdiff_t>(r) - 1; k >= 0; --k)
      if (row_of_col[k] < 0 && C[r][static_cast<std::size_t>(k)] != 0) {
        pivot = k;
        break;
      }
    if (pivot < 0) continue;
    const std::size_t p = static_cast<std::size_t>(pivot);
    Fel lam = F->inv(C[r][p]);
    xs[r] = scaled(F, std::move(xs[r]), lam);
    for (std::size_t t = 0; t < m; ++t) C[r][t] = F->mul(lam, C[r][t]);
    for (std::ptrdiff_t k = pivot - 1; k >= 0; --k) {
      const std::size_t kk = static_cast<std::size_t>(k);
      Fel c = C[r][kk];
      if (c == 0) continue;
      ys[kk] = add_scaled(F, std::move(ys[kk]), ys[p], F->neg(W.sigma(c)));
      for (std::size_t t = 0; t < m; ++t) C[t][kk] = F->sub(C[t][kk], F->mul(c, C[t][p]));
    }
    pivot_of_row[r] = pivot;
    row_of_col[p] = static_cast<std::ptrdiff_t>(r);
  }
  std::map<std::uint32_t, std::uint32_t> pairing;
  for (std::size_t r = 0; r < m; ++r)
    for (std::size_t c = 0; c < m; ++c) {
      Fel want = pivot_of_row[r] == static_cast<std::ptrdiff_t>(c) ? 1 : 0;
      require(W.form(xs[r], ys[c]) == want, errc::internal,
              "reduced cross values must form the pairing pattern");
    }
  for (std::size_t r = 0; r < m; ++r)
    if (pivot_of_row[r] >= 0)
      pairing[static_cast<std::uint32_t>(r) + 1] =
          static_cast<std::uint32_t>(pivot_of_row[r]) + 1;
  return pairing;
}

// Reduction for the opposite case: with the upper cross values zero,
// oppositeness forces each B(x_i, y_i) to be nonzero once every later row
// is reduced, so the sweep runs i = m down to 1, scales the diagonal to 1
// and clears the row to its left by adding y_i to earlier y's.
void reduce_opposite(const FormedSpace& W, std::vector<std::vector<Fel>>& xs,
                     std::vector<std::vector<Fel>>& ys) {
  const FieldPtr& F = W.F;
  const std::size_t m = ys.size();
  std::vector<std::vector<Fel>> D(m + 1, std::vector<Fel>(m, 0));
  for (std::size_t r = 0; r <= m; ++r)
    for (std::size_t c = 0; c < m; ++c) {
      D[r][c] = W.form(xs[r], ys[c]);
      if (r <= c)
        require(D[r][c] == 0, errc::internal,
                "crossing values of a geodesic vanish on and above the diagonal");
    }
  for (std::size_t i = m; i >= 1; --i) {
    Fel b = D[i][i - 1];
    require(b != 0, errc::internal, "opposite ends force nonzero diagonal pairings");
    Fel lam = F->inv(b);
    xs[i] = scaled(F, std::move(xs[i]), lam);
    for (std::size_t t = 0; t < m; ++t) D[i][t] = F->mul(lam, D[i][t]);
    for (std::ptrdiff_t k = static_cast<std::ptrdiff_t>(i) - 2; k >= 0; --k) {
      const std::size_t kk = static_cast<std::size_t>(k);
      Fel c = D[i][kk];
      if (c == 0) continue;
      ys[kk] = add_scaled(F, std::move(ys[kk]), ys[i - 1], F->neg(W.sigma(c)));
      for (std::size_t r = 0; r <= m; ++r) D[r][kk] = F->sub(D[r][kk], F->mul(c, D[r][i - 1]));
    }
  }
  for (std::size_t r = 0; r <= m; ++r)
    for (std::size_t c = 0; c < m; ++c) {
      Fel want = r == c + 1 ? 1 : 0;
      require(W.form(xs[r], ys[c]) == want, errc::internal,
              "reduced cross values must form the identity pairing");
    }
}

}  // namespace

OppositeReport is_opposite(const FormedSpace& W, const Subspace& X, const Subspace& Y) {
  check_vertex_pair(W, X, Y);
  require(!(X == Y), errc::not_distinct, "the opposite test needs two distinct subspaces");
  const std::uint32_t k = X.dim();
  require(k < W.omega, errc::maximal_not_allowed,
          "the opposite test applies below the Witt index");
  require(is_singular(W, X) && is_singular(W, Y), errc::not_singular,
          "the opposite test needs singular subspaces");

  OppositeReport rep;
  rep.meet = sub_intersect(X, Y);
  rep.x_perp_meet_y = sub_intersect(perp(W, X), Y);
  rep.x_meet_y_perp = sub_intersect(X, perp(W, Y));
  Subspace sum = sub_sum(X, Y);
  rep.sum_radical = sub_intersect(perp(W, sum), sum);
  rep.verdict = rep.meet == rep.x_perp_meet_y && rep.meet == rep.x_meet_y_perp &&
                rep.meet == rep.sum_radical;

  if (space_vector_count(W) <= kExhaustBound) {
    bool every_y_hit = scan_vectors(W.F, Y.basis, [&](const std::vector<Fel>& y) {
      if (sub_member(X, y)) return true;
      bool hit = !scan_vectors(W.F, X.basis,
                               [&](const std::vector<Fel>& x) { return W.form(x, y) == 0; });
      return hit;
    });
    require(every_y_hit == rep.verdict, errc::internal, "the opposite criteria disagree");
  }
  return rep;
}

std::uint32_t pg_distance(const FormedSpace& W, std::uint32_t k, const Subspace& X,
                          const Subspace& Y) {
  check_vertex_pair(W, X, Y);
  require(X.dim() == k, errc::bad_params, "pg_distance compares k-dimensional subspaces");
  require(k >= 1, errc::bad_params, "pg_distance needs positive dimension");
  require(k < W.omega, errc::maximal_not_allowed,
          "the distance formula applies below the Witt index");
  require(is_singular(W, X) && is_singular(W, Y), errc::not_singular,
          "pg_distance needs singular subspaces");
  if (X == Y) return 0;
  OppositeReport rep = is_opposite(W, X, Y);
  return k - rep.meet.dim() + (rep.verdict ? 1 : 0);
}

const char* normal_case_name(NormalCase c) {
  return c == NormalCase::nonopposite ? "nonopposite" : "opposite";
}

NormalForm pg_geodesic_normalize(const FormedSpace& W, const std::vector<Subspace>& L) {
  const std::uint32_t k = validate_geodesic(W, L);
  NormalForm nf;
  if (L.size() == 1) {
    nf.basis_w = basis_rows(L[0]);
    return nf;
  }
  const std::size_t l = L.size() - 1;
  if (!is_opposite(W, L.front(), L.back()).verdict) {
    EndBases eb = extract_end_bases(L);
    nf.kind = NormalCase::nonopposite;
    nf.pairing = reduce_nonopposite(W, eb.x, eb.y);
    nf.basis_w = std::move(eb.w);
    nf.basis_x = std::move(eb.x);
    nf.basis_y = std::move(eb.y);
  } else {
    const std::uint32_t m = static_cast<std::uint32_t>(l) - 1;
    Subspace end_meet = sub_intersect(L[0], L[l]);
    require(end_meet == sub_intersect(L[1], L[l]), errc::internal,
            "the first step of an opposite-ended geodesic keeps the meet with the far end");
    require(!is_opposite(W, L[1], L[l]).verdict, errc::internal,
            "the tail of an opposite-ended geodesic has non-opposite ends");
    std::vector<Subspace> tail(L.begin() + 1, L.end());
    EndBases eb = extract_end_bases(tail);
    // eb.x adapts L[1]; entry t is x_t of the opposite form, with x_0 the
    // direction the second vertex holds outside the first.
    Subspace front_meet = sub_intersect(L[0], L[1]);
    for (std::uint32_t j = 1; j < m; ++j) {
      bool adjusted = false;
      for (Fel c = 0; c < W.F->q() && !adjusted; ++c) {
        std::vector<Fel> cand = add_scaled(W.F, eb.x[j], eb.x[0], c);
        if (sub_member(front_meet, cand)) {
          eb.x[j] = std::move(cand);
          adjusted = true;
        }
      }
      require(adjusted, errc::internal,
              "middle x vectors reach the first vertex after absorbing x_0");
    }
    eb.x.push_back(complement_row(L[0], front_meet));
    nf.kind = NormalCase::opposite;
    reduce_opposite(W, eb.x, eb.y);
    for (std::uint32_t i = 1; i <= m; ++i) nf.pairing[i] = i;
    nf.basis_w = std::move(eb.w);
    nf.basis_x = std::move(eb.x);
    nf.basis_y = std::move(eb.y);
  }
  require(pg_reconstruct(W, nf) == L, errc::internal,
          "the normal form must reconstruct its geodesic");
  std::uint32_t expect_k = static_cast<std::uint32_t>(nf.basis_w.size() + nf.basis_y.size());
  require(expect_k == k, errc::internal, "the normal form must carry k basis vectors per end");
  return nf;
}

std::vector<Subspace> pg_reconstruct(const FormedSpace& W, const NormalForm& nf) {
  const std::size_t m = nf.basis_y.size();
  for (const auto* part : {&nf.basis_w, &nf.basis_x, &nf.basis_y})
    for (const auto& v : *part)
      require(v.size() == W.dim, errc::ambient_mismatch,
              "normal form vectors must live in the formed space");
  const std::size_t expected_x = nf.kind == NormalCase::nonopposite ? m : m + 1;
  require(nf.basis_x.size() == expected_x, errc::bad_params,
          "the x and y bases of a normal form must pair up");
  const std::uint32_t k = static_cast<std::uint32_t>(nf.basis_w.size() + m);
  require(k >= 1, errc::bad_params, "a normal form spans positive dimension");

  // Vertex i holds the surviving prefix of x's and the acquired suffix of
  // y's; in the opposite case x_0 joins every vertex except the two ends.
  auto build = [&](std::size_t x_begin, std::size_t x_count, std::size_t y_count) {
    std::vector<std::vector<Fel>> vecs;
    for (std::size_t t = 0; t < x_count; ++t) vecs.push_back(nf.basis_x[x_begin + t]);
    for (std::size_t t = m - y_count; t < m; ++t) vecs.push_back(nf.basis_y[t]);
    for (const auto& w : nf.basis_w) vecs.push_back(w);
    Subspace S = make_span(W, vecs);
    require(S.dim() == k, errc::bad_params, "normal form bases must be independent");
    return S;
  };

  std::vector<Subspace> out;
  if (nf.kind == NormalCase::nonopposite) {
    for (std::size_t i = 0; i <= m; ++i) out.push_back(build(0, m - i, i));
  } else {
    require(m >= 1, errc::bad_params, "an opposite normal form has positive length");
    out.push_back(build(1, m, 0));
    for (std::size_t i = 0; i + 1 <= m; ++i) out.push_back(build(0, m - i, i));
    out.push_back(build(1, 0, m));
  }
  return out;
}

TypeVector type_of(const FormedSpace& W, const std::vector<Subspace>& L) {
  validate_geodesic(W, L);
  const std::uint32_t m = static_cast<std::uint32_t>(L.size()) - 1;
  if (m == 0) return {};
  require(!is_opposite(W, L.front(), L.back()).verdict, errc::opposite_ends,
          "type vectors are defined for non-opposite ends");
  TypeVector t(m, 0);
  for (std::uint32_t i = 1; i <= m; ++i) {
    std::uint32_t inner = sub_intersect(L[m], L[m - i]).dim();
    std::uint32_t outer = sub_intersect(L[m], perp(W, L[m - i])).dim();
    t[i - 1] = outer - inner;
  }
  require(t[0] == 1, errc::internal, "type vectors start at 1");
  for (std::uint32_t i = 1; i < m; ++i)
    require(t[i] == t[i - 1] || t[i] == t[i - 1] + 1, errc::internal,
            "type entries step by 0 or 1");
  require(t[m - 1] <= W.omega - L[0].dim(), errc::internal,
          "type entries are capped by omega - k");
  return t;
}

Bigint c_tau(const TypeVector& t) {
  require(!t.empty() && t[0] == 1, errc::bad_type, "a type vector starts at 1");
  for (std::size_t i = 1; i < t.size(); ++i)
    require(t[i] == t[i - 1] || t[i] == t[i - 1] + 1, errc::bad_type,
            "type entries step by 0 or 1");
  Bigint num = 1;
  for (std::uint32_t e : t) num *= e;
  Bigint den = 1;
  for (std::uint32_t e = 2; e <= t.back(); ++e) den *= e;
  require(num % den == 0, errc::internal, "type products divide by the final factorial");
  return num / den;
}

std::vector<TypeVector> enumerate_types(std::uint32_t m, std::uint32_t cap) {
  require(m >= 1 && cap >= 1, errc::bad_params, "type enumeration needs m >= 1 and cap >= 1");
  std::vector<TypeVector> out;
  TypeVector cur{1};
  auto rec = [&](auto&& self) -> void {
    if (cur.size() == m) {
      out.push_back(cur);
      return;
    }
    for (std::uint32_t step = 0; step <= 1; ++step) {
      std::uint32_t next = cur.back() + step;
      if (next > cap) continue;
      cur.push_back(next);
      self(self);
      cur.pop_back();
    }
  };
  rec(rec);
  return out;
}

Bigint nonopposite_orbit_count(std::uint32_t m, std::uint32_t omega, std::uint32_t k) {
  require(m >= 1 && m <= k && k < omega, errc::bad_params,
          "orbit counting needs 1 <= m <= k < omega");
  Bigint total = 0;
  for (const TypeVector& t : enumerate_types(m, omega - k)) total += c_tau(t);
  return total;
}

Bigint bell(std::uint32_t m) {
  require(m >= 1, errc::bad_params, "Bell numbers start at m = 1");
  std::vector<Bigint> row{1};
  for (std::uint32_t n = 2; n <= m; ++n) {
    std::vector<Bigint> next{row.back()};
    for (const Bigint& e : row) next.push_back(next.back() + e);
    row = std::move(next);
  }
  return row.back();
}

Bigint partition_oracle(std::uint32_t m, std::uint32_t max_blocks) {
  require(m >= 1, errc::bad_params, "the partition oracle needs m >= 1");
  // f(e, u): placements of the remaining e elements with u blocks open.
  std::vector<std::vector<Bigint>> f(m + 1, std::vector<Bigint>(max_blocks + 1, 0));
  for (std::uint32_t u = 0; u <= max_blocks; ++u) f[0][u] = 1;
  for (std::uint32_t e = 1; e <= m; ++e)
    for (std::uint32_t u = 0; u <= max_blocks; ++u) {
      f[e][u] = u * f[e - 1][u];
      if (u < max_blocks) f[e][u] += f[e - 1][u + 1];
    }
  return f[m][0];
}

std::vector<std::vector<std::uint32_t>> orbit_fingerprint(const FormedSpace& W,
                                                          const std::vector<Subspace>& L) {
  validate_geodesic(W, L);
  const std::size_t n = L.size();
  std::vector<Subspace> perps;
  for (const Subspace& S : L) perps.push_back(perp(W, S));
  std::vector<std::vector<std::uint32_t>> d(n, std::vector<std::uint32_t>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      d[i][j] = sub_intersect(L[i], perps[j]).dim() - sub_intersect(L[i], L[j]).dim();
  return d;
}

std::vector<Bigint> predicted_orbit_profile(const FormedSpace& W, std::uint32_t k) {
  require(k >= 1 && k < W.omega, errc::bad_params,
          "the orbit profile needs 1 <= k < omega");
  std::vector<Bigint> out;
  for (std::uint32_t m = 1; m <= k; ++m)
    out.push_back(nonopposite_orbit_count(m, W.omega, k) + (m >= 2 ? 1 : 0));
  out.push_back(1);
  return out;
}

NeighborhoodContrast not_drg_witness(const FormedSpace& W, std::uint32_t k) {
  require(k > 1 && k < W.omega, errc::bad_params,
          "the contrast exists for 1 < k < omega; the boundary graphs are distance-regular");
  PolarFrame fr = standard_frame(W);
  auto frame_span = [&](std::uint32_t x_count, const std::vector<std::uint32_t>& y_picks) {
    std::vector<std::vector<Fel>> vecs;
    for (std::uint32_t i = 0; i < x_count; ++i) vecs.push_back(fr.x[i]);
    for (std::uint32_t i : y_picks) vecs.push_back(fr.y[i]);
    Subspace S = make_span(W, vecs);
    require(S.dim() == k && is_singular(W, S), errc::internal,
            "frame vectors span singular k-subspaces");
    return S;
  };
  NeighborhoodContrast out;
  out.base = frame_span(k, {});
  out.bounded = frame_span(k - 1, {k - 1});
  out.spreading = frame_span(k - 2, {k - 1, k});
  out.escape = frame_span(k - 2, {k - 2, k - 1});

  require(pg_distance(W, k, out.base, out.bounded) == 2, errc::internal,
          "the bounded vertex sits at distance 2");
  require(pg_distance(W, k, out.base, out.spreading) == 2, errc::internal,
          "the spreading vertex sits at distance 2");
  require(sub_intersect(out.spreading, out.escape).dim() == k - 1 &&
              is_singular(W, sub_sum(out.spreading, out.escape)),
          errc::internal, "the escape vertex neighbors the spreading vertex");
  require(pg_distance(W, k, out.base, out.escape) == 3, errc::internal,
          "the escape vertex sits at distance 3");

  // Every neighbor of the bounded vertex must stay within distance 2 of the
  // base. Neighbors arise from singular points of its perp outside it.
  const auto points = enumerate_singular(W, 1);
  std::set<Subspace> extensions;
  for (const Subspace& P : points) {
    std::vector<Fel> u = P.basis.row(0);
    if (sub_member(out.bounded, u)) continue;
    bool orth = true;
    for (std::uint32_t r = 0; r < k && orth; ++r)
      orth = W.form(out.bounded.basis.row(r), u) == 0;
    if (!orth) continue;
    std::vector<std::vector<Fel>> vecs = basis_rows(out.bounded);
    vecs.push_back(u);
    Subspace Z = make_span(W, vecs);
    require(Z.dim() == k + 1 && is_singular(W, Z), errc::internal,
            "orthogonal singular points extend the bounded vertex");
    extensions.insert(std::move(Z));
  }
  for (const Subspace& Z : extensions)
    for (const Subspace& nb : enumerate_subspaces_of(Z, k)) {
      if (nb == out.bounded) continue;
      require(pg_distance(W, k, out.base, nb) <= 2, errc::internal,
              "every neighbor of the bounded vertex stays within distance 2");
    }
  return out;
}

}  // namespace geodex
