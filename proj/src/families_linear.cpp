// Families built from the subspace lattice of GF(q)^n: Grassmann graphs,
// their doubles, and the two incidence constructions on points and
// hyperplanes.
#include <string>
#include <unordered_map>
#include <vector>

#include "family_util.hpp"
#include "geodex/errors.hpp"
#include "geodex/families.hpp"

namespace geodex {

using detail::apply_linear;
using detail::check_vertex_bound;
using detail::gl_generators;
using detail::split_prime_power;
using detail::sub_find;
using detail::sub_index;

namespace {

// Permutation induced on a two-part vertex list (either part may be empty)
// by a semilinear map, with an optional twist sending part A into part B.
struct SubspaceVertices {
  std::vector<Subspace> a, b;
  std::uint32_t size() const { return static_cast<std::uint32_t>(a.size() + b.size()); }
  std::uint32_t offset() const { return static_cast<std::uint32_t>(a.size()); }
};

Perm straight_perm(const SubspaceVertices& V, const detail::LinearGen& g) {
  Perm p(V.size());
  for (std::uint32_t i = 0; i < V.a.size(); ++i) p[i] = sub_index(V.a, apply_linear(g, V.a[i]));
  for (std::uint32_t i = 0; i < V.b.size(); ++i)
    p[V.offset() + i] = V.offset() + sub_index(V.b, apply_linear(g, V.b[i]));
  return p;
}

// Perp with respect to the bilinear form with Gram matrix J (identity when
// J has no rows).
Subspace perp_by_gram(const Subspace& U, const Mat& J) {
  if (J.rows == 0) return span(kernel(U.basis));
  return span(kernel(mat_mul(U.basis, J)));
}

Perm duality_perm(const SubspaceVertices& V, const Mat& J) {
  Perm p(V.size());
  for (std::uint32_t i = 0; i < V.a.size(); ++i)
    p[i] = V.offset() + sub_index(V.b, perp_by_gram(V.a[i], J));
  for (std::uint32_t i = 0; i < V.b.size(); ++i)
    p[V.offset() + i] = sub_index(V.a, perp_by_gram(V.b[i], J));
  return p;
}

}  // namespace

FamilyResult build_grassmann(std::uint32_t n, std::uint32_t k, std::uint32_t q) {
  require(k >= 1 && 2 * k <= n, errc::bad_params, "Grassmann(n,k,q) needs 1 <= k <= n/2");
  const auto [p, f] = split_prime_power(q);
  const std::string what = "Grassmann(" + std::to_string(n) + "," + std::to_string(k) + "," + std::to_string(q) + ")";
  check_vertex_bound(gaussian_binomial(n, k, q), what);
  const FieldPtr F = Field::make(p, f);

  const auto verts = enumerate_subspaces(F, n, k);
  std::vector<std::string> labels;
  for (const auto& S : verts) labels.push_back(sub_label(S));
  GraphBuilder builder({"Grassmann", "n=" + std::to_string(n) + ",k=" + std::to_string(k) +
                                         ",q=" + std::to_string(q)},
                       labels);

  // Two k-spaces meet in dimension k-1 exactly when they share a (k-1)-space,
  // and then they share exactly one, so bucketing by hyperplanes-of-vertices
  // enumerates each edge once.
  std::unordered_map<Subspace, std::vector<std::uint32_t>, SubspaceHash> buckets;
  for (std::uint32_t i = 0; i < verts.size(); ++i)
    for (const auto& H : enumerate_subspaces_of(verts[i], k - 1)) buckets[H].push_back(i);
  for (const auto& [H, members] : buckets)
    for (std::size_t x = 0; x < members.size(); ++x)
      for (std::size_t y = x + 1; y < members.size(); ++y) builder.add_edge(members[x], members[y]);

  FamilyResult out{builder.finish(), {}};
  SubspaceVertices V{verts, {}};
  for (const auto& g : gl_generators(F, n)) {
    out.gens.perms.push_back(straight_perm(V, g));
    out.gens.provenance.push_back(g.tag);
  }
  verify_generators(out.graph, out.gens);
  return out;
}

FamilyResult build_doubled_grassmann(std::uint32_t k, std::uint32_t q) {
  require(k >= 2, errc::bad_params, "DoubledGrassmann(k,q) needs k >= 2");
  const std::uint32_t n = 2 * k - 1;
  const auto [p, f] = split_prime_power(q);
  const std::string what = "DoubledGrassmann(" + std::to_string(k) + "," + std::to_string(q) + ")";
  check_vertex_bound(gaussian_binomial(n, k - 1, q) * 2, what);
  const FieldPtr F = Field::make(p, f);

  SubspaceVertices V{enumerate_subspaces(F, n, k - 1), enumerate_subspaces(F, n, k)};
  std::vector<std::string> labels;
  for (const auto& S : V.a) labels.push_back(sub_label(S));
  for (const auto& S : V.b) labels.push_back(sub_label(S));
  GraphBuilder builder({"DoubledGrassmann", "k=" + std::to_string(k) + ",q=" + std::to_string(q)}, labels);

  for (std::uint32_t j = 0; j < V.b.size(); ++j)
    for (const auto& H : enumerate_subspaces_of(V.b[j], k - 1))
      builder.add_edge(sub_index(V.a, H), V.offset() + j);

  FamilyResult out{builder.finish(), {}};
  for (const auto& g : gl_generators(F, n)) {
    out.gens.perms.push_back(straight_perm(V, g));
    out.gens.provenance.push_back(g.tag);
  }
  out.gens.perms.push_back(duality_perm(V, Mat()));
  out.gens.provenance.push_back("duality (dot-product perp)");
  verify_generators(out.graph, out.gens);
  return out;
}

FamilyResult build_incidence_design(std::uint32_t n, std::uint32_t q) {
  require(n >= 3, errc::bad_params, "IncidenceDesign(n,q) needs n >= 3");
  const auto [p, f] = split_prime_power(q);
  const std::string what = "IncidenceDesign(" + std::to_string(n) + "," + std::to_string(q) + ")";
  check_vertex_bound(gaussian_binomial(n, 1, q) * 2, what);
  const FieldPtr F = Field::make(p, f);

  SubspaceVertices V{enumerate_subspaces(F, n, 1), enumerate_subspaces(F, n, n - 1)};
  std::vector<std::string> labels;
  for (const auto& S : V.a) labels.push_back("p:" + sub_label(S));
  for (const auto& S : V.b) labels.push_back("h:" + sub_label(S));
  GraphBuilder builder({"IncidenceDesign", "n=" + std::to_string(n) + ",q=" + std::to_string(q)}, labels);

  for (std::uint32_t j = 0; j < V.b.size(); ++j)
    for (const auto& P : enumerate_subspaces_of(V.b[j], 1))
      builder.add_edge(sub_index(V.a, P), V.offset() + j);

  FamilyResult out{builder.finish(), {}};
  for (const auto& g : gl_generators(F, n)) {
    out.gens.perms.push_back(straight_perm(V, g));
    out.gens.provenance.push_back(g.tag);
  }
  out.gens.perms.push_back(duality_perm(V, Mat()));
  out.gens.provenance.push_back("duality (dot-product perp)");
  verify_generators(out.graph, out.gens);
  return out;
}

FamilyResult build_incidence_opposites(std::uint32_t n, std::uint32_t q) {
  require(n >= 3, errc::bad_params, "IncidenceOpposites(n,q) needs n >= 3");
  const auto [p, f] = split_prime_power(q);
  const std::string what = "IncidenceOpposites(" + std::to_string(n) + "," + std::to_string(q) + ")";
  const FieldPtr F = Field::make(p, f);

  // The fixed incident pair: w = <e_0> and the hyperplane H spanned by all
  // but the last coordinate vector. Vertices are the points outside H and
  // the hyperplanes missing w.
  std::vector<Fel> e0(n, 0);
  e0[0] = 1;
  Mat h_rows(F, n - 1, n);
  for (std::uint32_t i = 0; i < n - 1; ++i) h_rows.at(i, i) = 1;
  const Subspace H = span(h_rows);

  SubspaceVertices V;
  for (const auto& P : enumerate_subspaces(F, n, 1))
    if (!sub_contains(H, P)) V.a.push_back(P);
  for (const auto& K : enumerate_subspaces(F, n, n - 1))
    if (!sub_member(K, e0)) V.b.push_back(K);
  check_vertex_bound(Bigint(V.a.size()) + Bigint(V.b.size()), what);

  std::vector<std::string> labels;
  for (const auto& S : V.a) labels.push_back("p:" + sub_label(S));
  for (const auto& S : V.b) labels.push_back("h:" + sub_label(S));
  GraphBuilder builder({"IncidenceOpposites", "n=" + std::to_string(n) + ",q=" + std::to_string(q)},
                       labels);

  for (std::uint32_t j = 0; j < V.b.size(); ++j)
    for (const auto& P : enumerate_subspaces_of(V.b[j], 1)) {
      const std::uint32_t i = sub_find(V.a, P);
      if (i != kUnreached) builder.add_edge(i, V.offset() + j);
    }

  FamilyResult out{builder.finish(), {}};

  // The stabilizer of the pair (w, H) in GammaL(n,q): shears fixing both,
  // the diagonal torus, the field automorphism, and a duality given by the
  // perp of the antidiagonal form, which exchanges w and H.
  std::vector<detail::LinearGen> gens;
  for (std::uint32_t i = 1; i < n; ++i)
    for (std::uint32_t j = 0; j + 1 < n; ++j) {
      if (i == j) continue;
      Mat M = Mat::identity(F, n);
      M.at(i, j) = 1;
      gens.push_back({std::move(M), 0, "shear E(" + std::to_string(i) + "," + std::to_string(j) + ")"});
    }
  if (q > 2)
    for (std::uint32_t pos : {0u, 1u, n - 1}) {
      Mat M = Mat::identity(F, n);
      M.at(pos, pos) = F->primitive();
      gens.push_back({std::move(M), 0, "torus at " + std::to_string(pos)});
    }
  if (f > 1) gens.push_back({Mat::identity(F, n), 1, "frobenius"});

  for (const auto& g : gens) {
    out.gens.perms.push_back(straight_perm(V, g));
    out.gens.provenance.push_back(g.tag);
  }

  Mat J(F, n, n);
  for (std::uint32_t i = 0; i < n; ++i) J.at(i, n - 1 - i) = 1;
  out.gens.perms.push_back(duality_perm(V, J));
  out.gens.provenance.push_back("duality (antidiagonal perp)");
  verify_generators(out.graph, out.gens);
  return out;
}

}  // namespace geodex
