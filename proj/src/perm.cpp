#include "geodex/perm.hpp"

#include "geodex/errors.hpp"

namespace geodex {

Perm perm_identity(std::uint32_t n) {
  Perm p(n);
  for (std::uint32_t i = 0; i < n; ++i) p[i] = i;
  return p;
}

bool perm_valid(const Perm& p) {
  std::vector<bool> seen(p.size(), false);
  for (std::uint32_t x : p) {
    if (x >= p.size() || seen[x]) return false;
    seen[x] = true;
  }
  return true;
}

bool perm_is_identity(const Perm& p) {
  for (std::uint32_t i = 0; i < p.size(); ++i)
    if (p[i] != i) return false;
  return true;
}

Perm perm_compose(const Perm& a, const Perm& b) {
  require(a.size() == b.size(), errc::bad_params, "composing permutations of different degree");
  Perm c(a.size());
  for (std::uint32_t i = 0; i < a.size(); ++i) c[i] = b[a[i]];
  return c;
}

Perm perm_inverse(const Perm& p) {
  Perm q(p.size());
  for (std::uint32_t i = 0; i < p.size(); ++i) q[p[i]] = i;
  return q;
}

}  // namespace geodex
