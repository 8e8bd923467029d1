// Vector spaces carrying a nondegenerate reflexive form: symplectic,
// orthogonal (odd characteristic) and unitary, each with a standard Gram
// matrix laid out as omega hyperbolic pairs followed by an anisotropic
// tail. Provides perp, singular-subspace tests and enumeration, polar
// frames, and generating sets of isometries.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "geodex/subspace.hpp"

namespace geodex {

enum class SpaceKind {
  symplectic,       // Sp(2w, q)
  orthogonal_odd,   // O(2w+1, q), q odd
  orthogonal_plus,  // O+(2w, q), q odd
  orthogonal_minus, // O-(2w+2, q), q odd
  unitary_odd,      // U(2w+1) over GF(q), q square
  unitary_even,     // U(2w) over GF(q), q square
};

const char* space_kind_name(SpaceKind k);
SpaceKind space_kind_from_name(const std::string& s);

struct FormedSpace {
  SpaceKind kind;
  std::uint32_t omega = 0;  // Witt index
  FieldPtr F;
  std::uint32_t dim = 0;
  Mat gram;
  std::uint32_t sigma_power = 0;  // f/2 for unitary kinds, else 0
  std::vector<Fel> quad;          // Q(e_i) for orthogonal kinds, else empty

  Fel sigma(Fel a) const { return sigma_power ? F->frobenius(a, sigma_power) : a; }
  Fel form(const std::vector<Fel>& u, const std::vector<Fel>& v) const;
  // Q(v) = B(v,v)/2; orthogonal kinds only.
  Fel quad_value(const std::vector<Fel>& v) const;
  bool is_orthogonal() const {
    return kind == SpaceKind::orthogonal_odd || kind == SpaceKind::orthogonal_plus ||
           kind == SpaceKind::orthogonal_minus;
  }
  bool is_unitary() const {
    return kind == SpaceKind::unitary_odd || kind == SpaceKind::unitary_even;
  }
  std::string name() const;
};

FormedSpace space_make(SpaceKind kind, std::uint32_t omega, std::uint32_t p, std::uint32_t f);
// Convenience form taking the field size q = p^f.
FormedSpace space_make_q(SpaceKind kind, std::uint32_t omega, std::uint32_t q);

Subspace perp(const FormedSpace& W, const Subspace& U);
bool is_singular(const FormedSpace& W, const Subspace& U);
bool vector_singular(const FormedSpace& W, const std::vector<Fel>& v);

// All singular k-subspaces, sorted; k=0 gives the zero space.
std::vector<Subspace> enumerate_singular(const FormedSpace& W, std::uint32_t k,
                                         std::uint64_t max_vectors = 1ull << 24);

// Hyperbolic pair basis x_1..x_w, y_1..y_w: B(x_i, y_i) = 1, all other
// pairings among frame vectors zero.
struct PolarFrame {
  std::vector<std::vector<Fel>> x, y;
};

PolarFrame standard_frame(const FormedSpace& W);
void check_frame(const FormedSpace& W, const PolarFrame& fr);

// Given maximal singular X and a maximal flag Y_1 < ... < Y_w = Y of a
// maximal singular Y with X /\ Y = 0, produce a polar frame with
// Y_i = <y_1..y_i> and perp(Y_{w-i}) /\ X = <x_w..x_{w-i+1}>.
PolarFrame hyperbolic_extend(const FormedSpace& W, const Subspace& X,
                             const std::vector<Subspace>& flag_Y);

// A linear or semilinear map v -> frobenius^frob(v) * matrix.
struct Isometry {
  Mat matrix;
  std::uint32_t frob = 0;
  std::string provenance;
};

bool preserves_form(const FormedSpace& W, const Isometry& g);
std::vector<Fel> apply_isometry_vec(const FormedSpace& W, const Isometry& g, std::vector<Fel> v);
Subspace apply_isometry(const FormedSpace& W, const Isometry& g, const Subspace& S);

struct IsometryGenerators {
  std::vector<Isometry> gens;
  std::vector<std::string> notes;
};

// Transvections (symplectic, unitary) or reflections (orthogonal), plus a
// torus generator for unitary kinds and the Frobenius map whenever it fixes
// the Gram matrix entry-wise.
IsometryGenerators isometry_generators(const FormedSpace& W);

}  // namespace geodex
