// Internal helpers shared by the family constructors: prime-power splitting,
// canonical subspace indexing, and GL(n,q) generator lists.
#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "geodex/bigint.hpp"
#include "geodex/matrix.hpp"
#include "geodex/subspace.hpp"

namespace geodex::detail {

// q = p^f with p prime; errc::not_prime otherwise.
std::pair<std::uint32_t, std::uint32_t> split_prime_power(std::uint32_t q);

void check_vertex_bound(const Bigint& count, const std::string& what);

// Position in a sorted subspace list; errc::internal when absent.
std::uint32_t sub_index(const std::vector<Subspace>& sorted, const Subspace& S);
// Same, but kUnreached when absent.
std::uint32_t sub_find(const std::vector<Subspace>& sorted, const Subspace& S);

// A semilinear map v -> frobenius^frob(v) * M.
struct LinearGen {
  Mat M;
  std::uint32_t frob = 0;
  std::string tag;
};

Subspace apply_linear(const LinearGen& g, const Subspace& S);

// Shears E(i,j), a torus scaling when q > 2, and the field automorphism
// when f > 1. These generate GammaL(n,q).
std::vector<LinearGen> gl_generators(const FieldPtr& F, std::uint32_t n);

}  // namespace geodex::detail
