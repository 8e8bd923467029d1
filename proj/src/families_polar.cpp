// Families living on singular subspaces of a formed space: dual polar
// graphs, their halves, polar Grassmannians, and the incidence graph of the
// symplectic generalized quadrangle.
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "family_util.hpp"
#include "geodex/errors.hpp"
#include "geodex/families.hpp"

namespace geodex {

using detail::split_prime_power;
using detail::sub_index;

namespace {

GeneratorSet isometry_perms(const FormedSpace& W, const std::vector<Subspace>& verts) {
  const auto raw = isometry_generators(W);
  GeneratorSet out;
  for (const auto& g : raw.gens) {
    Perm p(verts.size());
    for (std::uint32_t i = 0; i < verts.size(); ++i)
      p[i] = sub_index(verts, apply_isometry(W, g, verts[i]));
    out.perms.push_back(std::move(p));
    out.provenance.push_back(g.provenance);
  }
  out.notes = raw.notes;
  return out;
}

FamilyResult maximal_singular_graph(const FormedSpace& W, GraphMeta meta) {
  const auto verts = enumerate_singular(W, W.omega);
  require(verts.size() <= kGraphVertexBound, errc::too_large,
          meta.family + " exceeds the vertex bound");
  std::vector<std::string> labels;
  for (const auto& S : verts) labels.push_back(sub_label(S));
  GraphBuilder builder(meta, labels);

  // Maximals adjacent exactly when they share a next-to-maximal subspace,
  // and then exactly one, so each edge shows up in exactly one bucket.
  std::unordered_map<Subspace, std::vector<std::uint32_t>, SubspaceHash> buckets;
  for (std::uint32_t i = 0; i < verts.size(); ++i)
    for (const auto& H : enumerate_subspaces_of(verts[i], W.omega - 1)) buckets[H].push_back(i);
  for (const auto& [H, members] : buckets)
    for (std::size_t x = 0; x < members.size(); ++x)
      for (std::size_t y = x + 1; y < members.size(); ++y) builder.add_edge(members[x], members[y]);

  FamilyResult out{builder.finish(), isometry_perms(W, verts)};
  verify_generators(out.graph, out.gens);
  return out;
}

}  // namespace

FamilyResult build_dual_polar(const FormedSpace& W) {
  return maximal_singular_graph(W, {"DualPolar", "space=" + W.name()});
}

FamilyResult build_half_dual_polar(const FormedSpace& W) {
  require(W.kind == SpaceKind::orthogonal_plus, errc::bad_params,
          "HalfDualPolar is defined for hyperbolic orthogonal spaces");
  const auto base = build_dual_polar(W);
  FamilyResult out = halved(base.graph, base.gens, HalfPart::plus);
  out.graph.meta = {"HalfDualPolar", "space=" + W.name()};
  return out;
}

FamilyResult build_polar_grassmann(const FormedSpace& W, std::uint32_t k) {
  require(k >= 1 && k <= W.omega, errc::bad_params,
          "PolarGrassmann(space,k) needs 1 <= k <= omega");
  GraphMeta meta{"PolarGrassmann", "space=" + W.name() + ",k=" + std::to_string(k)};
  if (k == W.omega) return maximal_singular_graph(W, meta);

  const auto verts = enumerate_singular(W, k);
  require(verts.size() <= kGraphVertexBound, errc::too_large, meta.family + " exceeds the vertex bound");
  std::vector<std::string> labels;
  for (const auto& S : verts) labels.push_back(sub_label(S));
  GraphBuilder builder(meta, labels);

  // Neighbors of X are the other k-spaces inside singular (k+1)-spaces
  // Z >= X; such Z arise from singular points of perp(X) outside X.
  const auto points = enumerate_singular(W, 1);
  std::vector<std::vector<Fel>> point_vecs;
  for (const auto& P : points) point_vecs.push_back(P.basis.row(0));

  for (std::uint32_t i = 0; i < verts.size(); ++i) {
    const Subspace& X = verts[i];
    std::unordered_set<Subspace, SubspaceHash> exts;
    for (const auto& u : point_vecs) {
      bool orth = true;
      for (std::uint32_t r = 0; r < k && orth; ++r) orth = W.form(X.basis.row(r), u) == 0;
      if (!orth) continue;
      Mat rows(W.F, k + 1, W.dim);
      for (std::uint32_t r = 0; r < k; ++r)
        for (std::uint32_t c = 0; c < W.dim; ++c) rows.at(r, c) = X.basis.at(r, c);
      for (std::uint32_t c = 0; c < W.dim; ++c) rows.at(k, c) = u[c];
      Subspace Z = span(std::move(rows));
      if (Z.dim() != k + 1) continue;
      require(is_singular(W, Z), errc::internal, "extension of a singular subspace lost isotropy");
      exts.insert(std::move(Z));
    }
    for (const auto& Z : exts)
      for (const auto& Y : enumerate_subspaces_of(Z, k)) {
        const std::uint32_t j = sub_index(verts, Y);
        if (i < j) builder.add_edge(i, j);
      }
  }

  FamilyResult out{builder.finish(), isometry_perms(W, verts)};
  verify_generators(out.graph, out.gens);
  return out;
}

FamilyResult build_symplectic_quadrangle_incidence(std::uint32_t q) {
  const auto [p, f] = split_prime_power(q);
  require(p == 2, errc::bad_params,
          "SymplecticQuadrangleIncidence(q) needs q even, where the quadrangle is self-dual");
  const FormedSpace W = space_make(SpaceKind::symplectic, 2, p, f);

  const auto points = enumerate_singular(W, 1);
  const auto lines = enumerate_singular(W, 2);
  const auto offset = static_cast<std::uint32_t>(points.size());
  require(points.size() + lines.size() <= kGraphVertexBound, errc::too_large,
          "SymplecticQuadrangleIncidence exceeds the vertex bound");

  std::vector<std::string> labels;
  for (const auto& P : points) labels.push_back("p:" + sub_label(P));
  for (const auto& L : lines) labels.push_back("l:" + sub_label(L));
  GraphBuilder builder({"SymplecticQuadrangleIncidence", "q=" + std::to_string(q)}, labels);
  for (std::uint32_t j = 0; j < lines.size(); ++j)
    for (const auto& P : enumerate_subspaces_of(lines[j], 1))
      builder.add_edge(sub_index(points, P), offset + j);

  FamilyResult out{builder.finish(), {}};
  const auto raw = isometry_generators(W);
  for (const auto& g : raw.gens) {
    Perm perm(out.graph.n);
    for (std::uint32_t i = 0; i < points.size(); ++i)
      perm[i] = sub_index(points, apply_isometry(W, g, points[i]));
    for (std::uint32_t j = 0; j < lines.size(); ++j)
      perm[offset + j] = offset + sub_index(lines, apply_isometry(W, g, lines[j]));
    out.gens.perms.push_back(std::move(perm));
    out.gens.provenance.push_back(g.provenance);
  }
  out.gens.notes = raw.notes;

  if (q <= 4) {
    const auto duality = bipart_swapping_automorphism(out.graph);
    require(duality.has_value(), errc::internal, "self-dual quadrangle admits no duality");
    out.gens.perms.push_back(*duality);
    out.gens.provenance.push_back("duality (searched)");
  } else {
    out.gens.notes.push_back("duality omitted: the search is only run for q <= 4");
  }
  verify_generators(out.graph, out.gens);
  return out;
}

}  // namespace geodex
