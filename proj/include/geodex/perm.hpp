// Permutations of {0..n-1} stored as image vectors. Shared by the graph
// operators (induced generators) and the symmetry module.
#pragma once

#include <cstdint>
#include <vector>

namespace geodex {

using Perm = std::vector<std::uint32_t>;

Perm perm_identity(std::uint32_t n);
bool perm_valid(const Perm& p);
bool perm_is_identity(const Perm& p);

// Image-vector composition: (a * b)[i] = b[a[i]], i.e. a acts first.
Perm perm_compose(const Perm& a, const Perm& b);
Perm perm_inverse(const Perm& p);

}  // namespace geodex
