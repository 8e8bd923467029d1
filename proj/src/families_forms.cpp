// Forms graphs: matrix spaces where adjacency is a small rank of the
// difference. Vertices are stored as flat row-major entry vectors in
// lexicographic order; neighbors are reached by adding the appropriate
// rank-one or rank-two difference matrices.
#include <algorithm>
#include <string>
#include <vector>

#include "family_util.hpp"
#include "geodex/errors.hpp"
#include "geodex/families.hpp"

namespace geodex {

using detail::gl_generators;
using detail::split_prime_power;

namespace {

using Flat = std::vector<Fel>;

std::uint32_t flat_index(const std::vector<Flat>& sorted, const Flat& v) {
  auto it = std::lower_bound(sorted.begin(), sorted.end(), v);
  require(it != sorted.end() && *it == v, errc::internal, "matrix image is not a vertex");
  return static_cast<std::uint32_t>(it - sorted.begin());
}

Flat flat_add(const FieldPtr& F, const Flat& a, const Flat& b) {
  Flat c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = F->add(a[i], b[i]);
  return c;
}

// Nonzero vectors of F^m with first nonzero entry 1, one per projective
// point, in a deterministic order.
std::vector<Flat> projective_reps(const FieldPtr& F, std::uint32_t m) {
  std::vector<Flat> out;
  for (std::uint32_t lead = 0; lead < m; ++lead) {
    Flat v(m, 0);
    v[lead] = 1;
    const std::uint32_t tail = m - lead - 1;
    std::vector<Fel> free(tail, 0);
    while (true) {
      for (std::uint32_t i = 0; i < tail; ++i) v[lead + 1 + i] = free[i];
      out.push_back(v);
      std::uint32_t pos = tail;
      while (pos > 0 && free[pos - 1] + 1 == F->q()) free[--pos] = 0;
      if (pos == 0) break;
      ++free[pos - 1];
    }
  }
  return out;
}

std::uint64_t checked_power(std::uint64_t base, std::uint32_t exp, const std::string& what) {
  std::uint64_t v = 1;
  for (std::uint32_t i = 0; i < exp; ++i) {
    v *= base;
    require(v <= kGraphVertexBound, errc::too_large,
            what + " has more than " + std::to_string(kGraphVertexBound) + " vertices");
  }
  return v;
}

std::string form_label(const FieldPtr& F, std::uint32_t rows, std::uint32_t cols, const Flat& v) {
  return mat_to_string(Mat(F, rows, cols, v));
}

}  // namespace

FamilyResult build_bilinear_forms(std::uint32_t m, std::uint32_t k, std::uint32_t q) {
  require(m >= 1 && m <= k, errc::bad_params, "BilinearForms(m,k,q) needs 1 <= m <= k");
  const auto [p, f] = split_prime_power(q);
  const std::string what =
      "BilinearForms(" + std::to_string(m) + "," + std::to_string(k) + "," + std::to_string(q) + ")";
  checked_power(q, m * k, what);
  const FieldPtr F = Field::make(p, f);

  std::vector<Flat> verts;
  {
    Flat cur(static_cast<std::size_t>(m) * k, 0);
    while (true) {
      verts.push_back(cur);
      std::size_t pos = cur.size();
      while (pos > 0 && cur[pos - 1] + 1 == q) cur[--pos] = 0;
      if (pos == 0) break;
      ++cur[pos - 1];
    }
  }
  std::vector<std::string> labels;
  for (const auto& v : verts) labels.push_back(form_label(F, m, k, v));
  GraphBuilder builder({"BilinearForms", "m=" + std::to_string(m) + ",k=" + std::to_string(k) +
                                             ",q=" + std::to_string(q)},
                       labels);

  // Rank-one differences u^T v, one per (projective u, nonzero v).
  std::vector<Flat> rank_one;
  for (const auto& u : projective_reps(F, m))
    for (const auto& v : projective_reps(F, k))
      for (Fel c = 1; c < q; ++c) {
        Flat R(static_cast<std::size_t>(m) * k);
        for (std::uint32_t i = 0; i < m; ++i)
          for (std::uint32_t j = 0; j < k; ++j)
            R[static_cast<std::size_t>(i) * k + j] = F->mul(u[i], F->mul(c, v[j]));
        rank_one.push_back(std::move(R));
      }
  for (std::uint32_t i = 0; i < verts.size(); ++i)
    for (const auto& R : rank_one) {
      const std::uint32_t j = flat_index(verts, flat_add(F, verts[i], R));
      if (i < j) builder.add_edge(i, j);
    }

  FamilyResult out{builder.finish(), {}};
  auto add_perm = [&](const std::string& tag, auto&& image) {
    Perm perm(verts.size());
    for (std::uint32_t i = 0; i < verts.size(); ++i) perm[i] = flat_index(verts, image(verts[i]));
    out.gens.perms.push_back(std::move(perm));
    out.gens.provenance.push_back(tag);
  };

  for (std::uint32_t r = 0; r < m; ++r)
    for (std::uint32_t s = 0; s < k; ++s)
      for (std::uint32_t j = 0; j < f; ++j) {
        Flat T(static_cast<std::size_t>(m) * k, 0);
        T[static_cast<std::size_t>(r) * k + s] = F->pow(F->primitive(), j);
        add_perm("translation eps^" + std::to_string(j) + "*E(" + std::to_string(r) + "," +
                     std::to_string(s) + ")",
                 [&](const Flat& X) { return flat_add(F, X, T); });
      }
  for (const auto& g : gl_generators(F, m)) {
    if (g.frob) continue;
    add_perm("left " + g.tag,
             [&](const Flat& X) { return mat_mul(g.M, Mat(F, m, k, X)).a; });
  }
  for (const auto& g : gl_generators(F, k)) {
    if (g.frob) continue;
    add_perm("right " + g.tag,
             [&](const Flat& X) { return mat_mul(Mat(F, m, k, X), g.M).a; });
  }
  if (f > 1)
    add_perm("frobenius", [&](const Flat& X) {
      Flat Y(X.size());
      for (std::size_t i = 0; i < X.size(); ++i) Y[i] = F->frobenius(X[i]);
      return Y;
    });
  verify_generators(out.graph, out.gens);
  return out;
}

FamilyResult build_alternating_forms(std::uint32_t k, std::uint32_t q) {
  require(k >= 2, errc::bad_params, "AlternatingForms(k,q) needs k >= 2");
  const auto [p, f] = split_prime_power(q);
  const std::string what = "AlternatingForms(" + std::to_string(k) + "," + std::to_string(q) + ")";
  checked_power(q, k * (k - 1) / 2, what);
  const FieldPtr F = Field::make(p, f);

  // Odometer over the strictly upper entries in row-major order coincides
  // with lexicographic order of the full entry vector.
  std::vector<std::pair<std::uint32_t, std::uint32_t>> upper;
  for (std::uint32_t i = 0; i < k; ++i)
    for (std::uint32_t j = i + 1; j < k; ++j) upper.emplace_back(i, j);
  auto fill = [&](const std::vector<Fel>& vals) {
    Flat X(static_cast<std::size_t>(k) * k, 0);
    for (std::size_t t = 0; t < upper.size(); ++t) {
      const auto [i, j] = upper[t];
      X[static_cast<std::size_t>(i) * k + j] = vals[t];
      X[static_cast<std::size_t>(j) * k + i] = F->neg(vals[t]);
    }
    return X;
  };
  std::vector<Flat> verts;
  {
    std::vector<Fel> vals(upper.size(), 0);
    while (true) {
      verts.push_back(fill(vals));
      std::size_t pos = vals.size();
      while (pos > 0 && vals[pos - 1] + 1 == q) vals[--pos] = 0;
      if (pos == 0) break;
      ++vals[pos - 1];
    }
  }
  std::vector<std::string> labels;
  for (const auto& v : verts) labels.push_back(form_label(F, k, k, v));
  GraphBuilder builder({"AlternatingForms", "k=" + std::to_string(k) + ",q=" + std::to_string(q)},
                       labels);

  // Rank-two alternating differences: one scalar multiple family per
  // 2-subspace of the row space.
  std::vector<Flat> rank_two;
  for (const auto& S : enumerate_subspaces(F, k, 2)) {
    const auto a = S.basis.row(0);
    const auto b = S.basis.row(1);
    Flat R0(static_cast<std::size_t>(k) * k, 0);
    for (std::uint32_t i = 0; i < k; ++i)
      for (std::uint32_t j = 0; j < k; ++j)
        R0[static_cast<std::size_t>(i) * k + j] =
            F->sub(F->mul(a[i], b[j]), F->mul(b[i], a[j]));
    for (Fel c = 1; c < q; ++c) {
      Flat R(R0.size());
      for (std::size_t t = 0; t < R0.size(); ++t) R[t] = F->mul(c, R0[t]);
      rank_two.push_back(std::move(R));
    }
  }
  for (std::uint32_t i = 0; i < verts.size(); ++i)
    for (const auto& R : rank_two) {
      const std::uint32_t j = flat_index(verts, flat_add(F, verts[i], R));
      if (i < j) builder.add_edge(i, j);
    }

  FamilyResult out{builder.finish(), {}};
  auto add_perm = [&](const std::string& tag, auto&& image) {
    Perm perm(verts.size());
    for (std::uint32_t i = 0; i < verts.size(); ++i) perm[i] = flat_index(verts, image(verts[i]));
    out.gens.perms.push_back(std::move(perm));
    out.gens.provenance.push_back(tag);
  };

  for (const auto& [r, s] : upper)
    for (std::uint32_t j = 0; j < f; ++j) {
      const Fel c = F->pow(F->primitive(), j);
      Flat T(static_cast<std::size_t>(k) * k, 0);
      T[static_cast<std::size_t>(r) * k + s] = c;
      T[static_cast<std::size_t>(s) * k + r] = F->neg(c);
      add_perm("translation eps^" + std::to_string(j) + "*(E(" + std::to_string(r) + "," +
                   std::to_string(s) + ")-E(" + std::to_string(s) + "," + std::to_string(r) + "))",
               [&](const Flat& X) { return flat_add(F, X, T); });
    }
  for (const auto& g : gl_generators(F, k)) {
    if (g.frob) continue;
    add_perm("congruence " + g.tag, [&](const Flat& X) {
      return mat_mul(mat_mul(g.M, Mat(F, k, k, X)), transpose(g.M)).a;
    });
  }
  if (f > 1)
    add_perm("frobenius", [&](const Flat& X) {
      Flat Y(X.size());
      for (std::size_t i = 0; i < X.size(); ++i) Y[i] = F->frobenius(X[i]);
      return Y;
    });
  verify_generators(out.graph, out.gens);
  return out;
}

FamilyResult build_hermitian_forms(std::uint32_t k, std::uint32_t r) {
  require(k >= 1, errc::bad_params, "HermitianForms(k,r) needs k >= 1");
  const auto [p, half_f] = split_prime_power(r);
  const std::string what = "HermitianForms(" + std::to_string(k) + "," + std::to_string(r) + ")";
  checked_power(r, k * k, what);
  const FieldPtr F = Field::make(p, 2 * half_f);
  auto sigma = [&](Fel x) { return F->frobenius(x, half_f); };

  std::vector<Fel> subfield;
  for (Fel x = 0; x < F->q(); ++x)
    if (sigma(x) == x) subfield.push_back(x);
  require(subfield.size() == r, errc::internal, "fixed field of the involution has wrong size");

  // Free entries: diagonal in the fixed field, strict upper triangle in the
  // big field; the lower triangle is forced.
  std::vector<std::pair<std::uint32_t, std::uint32_t>> upper;
  for (std::uint32_t i = 0; i < k; ++i)
    for (std::uint32_t j = i + 1; j < k; ++j) upper.emplace_back(i, j);
  std::vector<Flat> verts;
  {
    std::vector<std::uint32_t> diag_sel(k, 0);
    std::vector<Fel> up(upper.size(), 0);
    while (true) {
      Flat X(static_cast<std::size_t>(k) * k, 0);
      for (std::uint32_t i = 0; i < k; ++i)
        X[static_cast<std::size_t>(i) * k + i] = subfield[diag_sel[i]];
      for (std::size_t t = 0; t < upper.size(); ++t) {
        const auto [i, j] = upper[t];
        X[static_cast<std::size_t>(i) * k + j] = up[t];
        X[static_cast<std::size_t>(j) * k + i] = sigma(up[t]);
      }
      verts.push_back(std::move(X));
      std::size_t pos = up.size();
      while (pos > 0 && up[pos - 1] + 1 == F->q()) up[--pos] = 0;
      if (pos > 0) {
        ++up[pos - 1];
        continue;
      }
      std::size_t d = k;
      while (d > 0 && diag_sel[d - 1] + 1 == r) diag_sel[--d] = 0;
      if (d == 0) break;
      ++diag_sel[d - 1];
    }
  }
  std::sort(verts.begin(), verts.end());
  std::vector<std::string> labels;
  for (const auto& v : verts) labels.push_back(form_label(F, k, k, v));
  GraphBuilder builder({"HermitianForms", "k=" + std::to_string(k) + ",r=" + std::to_string(r)},
                       labels);

  // Rank-one differences: lambda * sigma(u)^T u with u projective over the
  // big field and lambda in the fixed field.
  std::vector<Flat> rank_one;
  for (const auto& u : projective_reps(F, k))
    for (Fel lam : subfield) {
      if (lam == 0) continue;
      Flat R(static_cast<std::size_t>(k) * k);
      for (std::uint32_t i = 0; i < k; ++i)
        for (std::uint32_t j = 0; j < k; ++j)
          R[static_cast<std::size_t>(i) * k + j] = F->mul(lam, F->mul(sigma(u[i]), u[j]));
      rank_one.push_back(std::move(R));
    }
  for (std::uint32_t i = 0; i < verts.size(); ++i)
    for (const auto& R : rank_one) {
      const std::uint32_t j = flat_index(verts, flat_add(F, verts[i], R));
      if (i < j) builder.add_edge(i, j);
    }

  FamilyResult out{builder.finish(), {}};
  auto add_perm = [&](const std::string& tag, auto&& image) {
    Perm perm(verts.size());
    for (std::uint32_t i = 0; i < verts.size(); ++i) perm[i] = flat_index(verts, image(verts[i]));
    out.gens.perms.push_back(std::move(perm));
    out.gens.provenance.push_back(tag);
  };

  // Additive generators of the Hermitian matrix space.
  const Fel kappa = F->pow(F->primitive(), r + 1);  // generates the fixed field
  for (std::uint32_t i = 0; i < k; ++i)
    for (std::uint32_t j = 0; j < half_f; ++j) {
      Flat T(static_cast<std::size_t>(k) * k, 0);
      T[static_cast<std::size_t>(i) * k + i] = F->pow(kappa, j);
      add_perm("translation kappa^" + std::to_string(j) + "*E(" + std::to_string(i) + "," +
                   std::to_string(i) + ")",
               [&](const Flat& X) { return flat_add(F, X, T); });
    }
  for (const auto& [i, j] : upper)
    for (std::uint32_t b = 0; b < 2 * half_f; ++b) {
      const Fel lam = F->pow(F->primitive(), b);
      Flat T(static_cast<std::size_t>(k) * k, 0);
      T[static_cast<std::size_t>(i) * k + j] = lam;
      T[static_cast<std::size_t>(j) * k + i] = sigma(lam);
      add_perm("translation eps^" + std::to_string(b) + "*E(" + std::to_string(i) + "," +
                   std::to_string(j) + ")+conj",
               [&](const Flat& X) { return flat_add(F, X, T); });
    }
  for (const auto& g : gl_generators(F, k)) {
    if (g.frob) continue;
    const Mat sig_t = transpose(map_entries(g.M, [&](Fel x) { return sigma(x); }));
    add_perm("congruence " + g.tag, [&](const Flat& X) {
      return mat_mul(mat_mul(g.M, Mat(F, k, k, X)), sig_t).a;
    });
  }
  add_perm("frobenius", [&](const Flat& X) {
    Flat Y(X.size());
    for (std::size_t i = 0; i < X.size(); ++i) Y[i] = F->frobenius(X[i]);
    return Y;
  });
  verify_generators(out.graph, out.gens);
  return out;
}

}  // namespace geodex
