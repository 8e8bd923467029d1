#include "geodex/formed_space.hpp"

#include <algorithm>
#include <unordered_set>

#include "geodex/errors.hpp"

namespace geodex {

const char* space_kind_name(SpaceKind k) {
  switch (k) {
    case SpaceKind::symplectic: return "symplectic";
    case SpaceKind::orthogonal_odd: return "orthogonal_odd";
    case SpaceKind::orthogonal_plus: return "orthogonal_plus";
    case SpaceKind::orthogonal_minus: return "orthogonal_minus";
    case SpaceKind::unitary_odd: return "unitary_odd";
    case SpaceKind::unitary_even: return "unitary_even";
  }
  return "?";
}

SpaceKind space_kind_from_name(const std::string& s) {
  if (s == "symplectic") return SpaceKind::symplectic;
  if (s == "orthogonal_odd") return SpaceKind::orthogonal_odd;
  if (s == "orthogonal_plus") return SpaceKind::orthogonal_plus;
  if (s == "orthogonal_minus") return SpaceKind::orthogonal_minus;
  if (s == "unitary_odd") return SpaceKind::unitary_odd;
  if (s == "unitary_even") return SpaceKind::unitary_even;
  fail(errc::bad_params, "unknown space kind '" + s + "'");
}

Fel FormedSpace::form(const std::vector<Fel>& u, const std::vector<Fel>& v) const {
  require(u.size() == dim && v.size() == dim, errc::ambient_mismatch,
          "form arguments must have length " + std::to_string(dim));
  Fel acc = 0;
  for (std::uint32_t i = 0; i < dim; ++i) {
    if (u[i] == 0) continue;
    Fel row = 0;
    for (std::uint32_t j = 0; j < dim; ++j) {
      Fel g = gram.at(i, j);
      if (g == 0 || v[j] == 0) continue;
      row = F->add(row, F->mul(g, sigma(v[j])));
    }
    acc = F->add(acc, F->mul(u[i], row));
  }
  return acc;
}

Fel FormedSpace::quad_value(const std::vector<Fel>& v) const {
  require(is_orthogonal(), errc::bad_params, "quadratic values only exist on orthogonal spaces");
  return F->div(form(v, v), 2 % F->p());
}

std::string FormedSpace::name() const {
  std::string head;
  switch (kind) {
    case SpaceKind::symplectic: head = "Sp"; break;
    case SpaceKind::orthogonal_odd: head = "O"; break;
    case SpaceKind::orthogonal_plus: head = "O+"; break;
    case SpaceKind::orthogonal_minus: head = "O-"; break;
    case SpaceKind::unitary_odd:
    case SpaceKind::unitary_even: head = "U"; break;
  }
  return head + "(" + std::to_string(dim) + "," + std::to_string(F->q()) + ")";
}

FormedSpace space_make(SpaceKind kind, std::uint32_t omega, std::uint32_t p, std::uint32_t f) {
  require(omega >= 1, errc::bad_params, "Witt index must be at least 1");
  FormedSpace W;
  W.kind = kind;
  W.omega = omega;
  bool orth = kind == SpaceKind::orthogonal_odd || kind == SpaceKind::orthogonal_plus ||
              kind == SpaceKind::orthogonal_minus;
  bool unit = kind == SpaceKind::unitary_odd || kind == SpaceKind::unitary_even;
  if (orth)
    require(p != 2, errc::unsupported_characteristic,
            "orthogonal spaces are only supported in odd characteristic");
  if (unit) {
    require(f % 2 == 0, errc::not_a_square,
            "unitary spaces need a square field size, got exponent " + std::to_string(f));
    W.sigma_power = f / 2;
  }
  W.F = Field::make(p, f);
  const FieldPtr& F = W.F;

  std::uint32_t tail = 0;
  switch (kind) {
    case SpaceKind::symplectic:
    case SpaceKind::orthogonal_plus:
    case SpaceKind::unitary_even: tail = 0; break;
    case SpaceKind::orthogonal_odd:
    case SpaceKind::unitary_odd: tail = 1; break;
    case SpaceKind::orthogonal_minus: tail = 2; break;
  }
  std::uint32_t n = 2 * omega + tail;
  W.dim = n;
  W.gram = Mat(F, n, n);
  Fel one = 1;
  for (std::uint32_t i = 0; i < omega; ++i) {
    W.gram.at(i, omega + i) = one;
    W.gram.at(omega + i, i) = kind == SpaceKind::symplectic ? F->neg(one) : one;
  }
  if (tail >= 1) W.gram.at(2 * omega, 2 * omega) = one;
  if (tail == 2) W.gram.at(2 * omega + 1, 2 * omega + 1) = F->neg(F->nonsquare());

  if (orth) {
    W.quad.resize(n);
    Fel half = F->inv(2 % p);
    for (std::uint32_t i = 0; i < n; ++i) W.quad[i] = F->mul(W.gram.at(i, i), half);
  }
  check_frame(W, standard_frame(W));
  return W;
}

FormedSpace space_make_q(SpaceKind kind, std::uint32_t omega, std::uint32_t q) {
  require(q >= 2, errc::bad_params, "field size must be at least 2");
  std::uint32_t p = q;
  for (std::uint32_t d = 2; d * d <= q; ++d)
    if (q % d == 0) {
      p = d;
      break;
    }
  std::uint32_t f = 0, m = q;
  while (m > 1) {
    require(m % p == 0, errc::not_prime, std::to_string(q) + " is not a prime power");
    m /= p;
    ++f;
  }
  return space_make(kind, omega, p, f);
}

Subspace perp(const FormedSpace& W, const Subspace& U) {
  require(U.ambient() == W.dim, errc::ambient_mismatch, "perp of a subspace of the wrong ambient");
  if (U.dim() == 0) return full_space(W.F, W.dim);
  Mat M = mat_mul(U.basis, W.gram);
  Mat K = kernel(M);
  if (W.sigma_power) {
    const FieldPtr& F = W.F;
    std::uint32_t r = W.sigma_power;
    K = map_entries(K, [&](Fel a) { return F->frobenius(a, r); });
  }
  return span(K);
}

bool vector_singular(const FormedSpace& W, const std::vector<Fel>& v) {
  if (W.form(v, v) != 0) return false;
  if (W.is_orthogonal() && W.quad_value(v) != 0) return false;
  return true;
}

bool is_singular(const FormedSpace& W, const Subspace& U) {
  require(U.ambient() == W.dim, errc::ambient_mismatch,
          "singularity test on a subspace of the wrong ambient");
  std::uint32_t k = U.dim();
  for (std::uint32_t i = 0; i < k; ++i) {
    std::vector<Fel> u = U.basis.row(i);
    if (!vector_singular(W, u)) return false;
    for (std::uint32_t j = i + 1; j < k; ++j)
      if (W.form(u, U.basis.row(j)) != 0) return false;
  }
  return true;
}

namespace {

// Projective representatives (first nonzero coordinate 1) of the nonzero
// vectors of a space of dimension d over F, in lexicographic code order.
std::vector<std::vector<Fel>> projective_points(const FieldPtr& F, std::uint32_t d,
                                                std::uint64_t max_vectors) {
  std::uint64_t total = 1;
  for (std::uint32_t i = 0; i < d; ++i) {
    total *= F->q();
    require(total <= max_vectors, errc::too_large,
            "point enumeration over " + std::to_string(d) + " coordinates exceeds the cap");
  }
  std::vector<std::vector<Fel>> pts;
  std::vector<Fel> v(d, 0);
  for (std::uint64_t code = 1; code < total; ++code) {
    std::uint64_t c = code;
    for (std::uint32_t i = d; i-- > 0;) {
      v[i] = static_cast<Fel>(c % F->q());
      c /= F->q();
    }
    std::uint32_t lead = 0;
    while (v[lead] == 0) ++lead;
    if (v[lead] != 1) continue;
    pts.push_back(v);
  }
  return pts;
}

}  // namespace

std::vector<Subspace> enumerate_singular(const FormedSpace& W, std::uint32_t k,
                                         std::uint64_t max_vectors) {
  require(k <= W.omega, errc::bad_params,
          "no singular subspaces of dimension above the Witt index");
  std::vector<Subspace> layer{zero_subspace(W.F, W.dim)};
  if (k == 0) return layer;

  for (std::uint32_t level = 1; level <= k; ++level) {
    std::unordered_set<Subspace, SubspaceHash> next;
    for (const Subspace& S : layer) {
      Subspace P = perp(W, S);
      for (const auto& coords : projective_points(W.F, P.dim(), max_vectors)) {
        std::vector<Fel> u = row_apply(coords, P.basis);
        if (!vector_singular(W, u)) continue;
        if (sub_member(S, u)) continue;
        Mat ext = stack(S.basis, Mat(W.F, 1, W.dim, u));
        next.insert(span(ext));
      }
    }
    layer.assign(next.begin(), next.end());
  }
  std::sort(layer.begin(), layer.end());
  return layer;
}

PolarFrame standard_frame(const FormedSpace& W) {
  PolarFrame fr;
  for (std::uint32_t i = 0; i < W.omega; ++i) {
    std::vector<Fel> x(W.dim, 0), y(W.dim, 0);
    x[i] = 1;
    y[W.omega + i] = 1;
    fr.x.push_back(x);
    fr.y.push_back(y);
  }
  return fr;
}

void check_frame(const FormedSpace& W, const PolarFrame& fr) {
  std::uint32_t w = W.omega;
  require(fr.x.size() == w && fr.y.size() == w, errc::bad_params,
          "frame must hold one hyperbolic pair per unit of Witt index");
  for (std::uint32_t i = 0; i < w; ++i) {
    require(vector_singular(W, fr.x[i]) && vector_singular(W, fr.y[i]), errc::not_singular,
            "frame vectors must be singular");
    for (std::uint32_t j = 0; j < w; ++j) {
      require(W.form(fr.x[i], fr.x[j]) == 0, errc::bad_params, "frame x vectors must be pairwise orthogonal");
      require(W.form(fr.y[i], fr.y[j]) == 0, errc::bad_params, "frame y vectors must be pairwise orthogonal");
      Fel want = i == j ? 1 : 0;
      require(W.form(fr.x[i], fr.y[j]) == want, errc::bad_params,
              "frame cross pairings must be the identity pattern");
    }
  }
}

PolarFrame hyperbolic_extend(const FormedSpace& W, const Subspace& X,
                             const std::vector<Subspace>& flag_Y) {
  const FieldPtr& F = W.F;
  std::uint32_t w = W.omega;
  require(X.ambient() == W.dim, errc::ambient_mismatch, "X lives in the wrong ambient space");
  require(X.dim() == w && is_singular(W, X), errc::bad_params,
          "X must be a maximal singular subspace");
  require(flag_Y.size() == w, errc::bad_flag,
          "the flag must list one subspace per dimension 1.." + std::to_string(w));
  for (std::uint32_t i = 0; i < w; ++i) {
    require(flag_Y[i].ambient() == W.dim && flag_Y[i].dim() == i + 1, errc::bad_flag,
            "flag member " + std::to_string(i + 1) + " has the wrong dimension");
    if (i > 0)
      require(sub_contains(flag_Y[i], flag_Y[i - 1]), errc::bad_flag,
              "flag members must form a chain");
  }
  const Subspace& Y = flag_Y.back();
  require(is_singular(W, Y), errc::bad_params, "Y must be a maximal singular subspace");
  require(sub_intersect(X, Y).dim() == 0, errc::bad_params,
          "X and Y must intersect trivially");

  // Chain X_i = perp(Y_{w-i}) /\ X, with X_w = X. Nondegeneracy of the
  // pairing between X and Y forces dim X_i = i.
  std::vector<Subspace> chain_X(w + 1);
  chain_X[w] = X;
  for (std::uint32_t i = 1; i < w; ++i) {
    chain_X[i] = sub_intersect(perp(W, flag_Y[w - i - 1]), X);
    require(chain_X[i].dim() == i, errc::internal, "perp chain has an unexpected dimension");
  }

  auto pick_new = [&](const Subspace& big, const Subspace& small) {
    for (std::uint32_t r = 0; r < big.dim(); ++r) {
      std::vector<Fel> v = big.basis.row(r);
      if (!sub_member(small, v)) return v;
    }
    fail(errc::internal, "no basis vector leaves the smaller subspace");
  };

  PolarFrame fr;
  fr.x.assign(w, {});
  fr.y.assign(w, {});
  Subspace prev_Y = zero_subspace(F, W.dim);
  for (std::uint32_t i = 0; i < w; ++i) {
    fr.y[i] = pick_new(flag_Y[i], prev_Y);
    prev_Y = flag_Y[i];
  }

  for (std::uint32_t i = w; i-- > 0;) {
    // x_{i+1} starts in X_{w-i} off X_{w-i-1}, then loses its pairings with
    // the later y's and is scaled to pair to 1 with y_{i+1}.
    std::vector<Fel> x =
        pick_new(chain_X[w - i], i + 1 < w ? chain_X[w - i - 1] : zero_subspace(F, W.dim));
    for (std::uint32_t k = i + 1; k < w; ++k) {
      Fel c = W.form(x, fr.y[k]);
      if (c == 0) continue;
      for (std::uint32_t t = 0; t < W.dim; ++t) x[t] = F->sub(x[t], F->mul(c, fr.x[k][t]));
    }
    Fel c0 = W.form(x, fr.y[i]);
    require(c0 != 0, errc::internal, "frame vector pairs to zero with its partner");
    Fel s = F->inv(c0);
    for (std::uint32_t t = 0; t < W.dim; ++t) x[t] = F->mul(s, x[t]);
    fr.x[i] = x;
  }

  check_frame(W, fr);
  for (std::uint32_t i = 1; i <= w; ++i) {
    Mat xm(F, i, W.dim);
    Mat ym(F, i, W.dim);
    for (std::uint32_t r = 0; r < i; ++r)
      for (std::uint32_t t = 0; t < W.dim; ++t) {
        xm.at(r, t) = fr.x[w - 1 - r][t];
        ym.at(r, t) = fr.y[r][t];
      }
    require(span(xm) == chain_X[i], errc::internal, "frame x vectors drift off the perp chain");
    require(span(ym) == flag_Y[i - 1], errc::internal, "frame y vectors drift off the flag");
  }
  return fr;
}

bool preserves_form(const FormedSpace& W, const Isometry& g) {
  const FieldPtr& F = W.F;
  if (g.matrix.rows != W.dim || g.matrix.cols != W.dim || !F->same(*g.matrix.F)) return false;
  for (std::uint32_t i = 0; i < W.dim; ++i)
    for (std::uint32_t j = 0; j < W.dim; ++j) {
      Fel lhs = W.form(g.matrix.row(i), g.matrix.row(j));
      Fel rhs = F->frobenius(W.gram.at(i, j), g.frob);
      if (lhs != rhs) return false;
    }
  return true;
}

std::vector<Fel> apply_isometry_vec(const FormedSpace& W, const Isometry& g, std::vector<Fel> v) {
  if (g.frob)
    for (Fel& a : v) a = W.F->frobenius(a, g.frob);
  return row_apply(v, g.matrix);
}

Subspace apply_isometry(const FormedSpace& W, const Isometry& g, const Subspace& S) {
  require(S.ambient() == W.dim, errc::ambient_mismatch, "isometry applied in the wrong ambient");
  Mat M = S.basis;
  if (g.frob) {
    std::uint32_t r = g.frob;
    M = map_entries(M, [&](Fel a) { return W.F->frobenius(a, r); });
  }
  return span(mat_mul(M, g.matrix));
}

namespace {

// I + lambda * (G sigma(u)^T) u, the transvection along u with parameter
// lambda. Preserves the form when u is isotropic and lambda + sigma(lambda)
// vanishes (always true for symplectic spaces, where sigma is trivial and
// the two conditions are automatic).
Mat transvection_matrix(const FormedSpace& W, const std::vector<Fel>& u, Fel lambda) {
  const FieldPtr& F = W.F;
  std::uint32_t n = W.dim;
  std::vector<Fel> col(n, 0);
  for (std::uint32_t i = 0; i < n; ++i) {
    Fel acc = 0;
    for (std::uint32_t j = 0; j < n; ++j)
      acc = F->add(acc, F->mul(W.gram.at(i, j), W.sigma_power ? W.F->frobenius(u[j], W.sigma_power) : u[j]));
    col[i] = acc;
  }
  Mat M = Mat::identity(F, n);
  for (std::uint32_t i = 0; i < n; ++i) {
    if (col[i] == 0) continue;
    Fel li = F->mul(lambda, col[i]);
    for (std::uint32_t j = 0; j < n; ++j)
      if (u[j] != 0) M.at(i, j) = F->add(M.at(i, j), F->mul(li, u[j]));
  }
  return M;
}

}  // namespace

IsometryGenerators isometry_generators(const FormedSpace& W) {
  const FieldPtr& F = W.F;
  IsometryGenerators out;
  auto points = projective_points(F, W.dim, 1ull << 24);

  if (W.kind == SpaceKind::symplectic) {
    for (const auto& u : points)
      for (Fel lambda = 1; lambda < F->q(); ++lambda)
        out.gens.push_back({transvection_matrix(W, u, lambda), 0, "transvection"});
  } else if (W.is_orthogonal()) {
    Fel two = 2 % F->p();
    for (const auto& u : points) {
      Fel c = W.form(u, u);
      if (c == 0) continue;
      // v -> v - (2 B(v,u)/B(u,u)) u, the reflection in u.
      out.gens.push_back({transvection_matrix(W, u, F->neg(F->div(two, c))), 0, "reflection"});
    }
  } else {
    // lambda in the sigma-trace-zero line, nonzero.
    std::vector<Fel> params;
    for (Fel l = 1; l < F->q(); ++l)
      if (F->add(l, W.sigma(l)) == 0) params.push_back(l);
    for (const auto& u : points) {
      if (!vector_singular(W, u)) continue;
      for (Fel l : params)
        out.gens.push_back({transvection_matrix(W, u, l), 0, "unitary transvection"});
    }
    Fel alpha = F->primitive();
    Mat D = Mat::identity(F, W.dim);
    D.at(0, 0) = alpha;
    D.at(W.omega, W.omega) = F->inv(W.sigma(alpha));
    out.gens.push_back({std::move(D), 0, "torus"});
  }

  if (F->f() > 1) {
    Mat fg = map_entries(W.gram, [&](Fel a) { return F->frobenius(a, 1); });
    if (fg == W.gram)
      out.gens.push_back({Mat::identity(F, W.dim), 1, "frobenius"});
    else
      out.notes.push_back("frobenius omitted: it does not fix the Gram matrix");
  }

  for (const Isometry& g : out.gens)
    require(preserves_form(W, g), errc::internal,
            std::string("generator fails the form check: ") + g.provenance);
  return out;
}

}  // namespace geodex
