#include "family_util.hpp"

#include <algorithm>

#include "geodex/errors.hpp"
#include "geodex/graph.hpp"

namespace geodex::detail {

std::pair<std::uint32_t, std::uint32_t> split_prime_power(std::uint32_t q) {
  require(q >= 2, errc::bad_params, "field size must be at least 2");
  std::uint32_t p = q;  // smallest divisor, prime by minimality
  for (std::uint32_t d = 2; static_cast<std::uint64_t>(d) * d <= q; ++d)
    if (q % d == 0) {
      p = d;
      break;
    }
  std::uint32_t f = 0, rest = q;
  while (rest % p == 0) {
    rest /= p;
    ++f;
  }
  require(rest == 1, errc::not_prime, std::to_string(q) + " is not a prime power");
  return {p, f};
}

void check_vertex_bound(const Bigint& count, const std::string& what) {
  require(count <= Bigint(kGraphVertexBound), errc::too_large,
          what + " has more than " + std::to_string(kGraphVertexBound) + " vertices");
}

std::uint32_t sub_index(const std::vector<Subspace>& sorted, const Subspace& S) {
  const std::uint32_t i = sub_find(sorted, S);
  require(i != kUnreached, errc::internal, "subspace image is not a vertex");
  return i;
}

std::uint32_t sub_find(const std::vector<Subspace>& sorted, const Subspace& S) {
  auto it = std::lower_bound(sorted.begin(), sorted.end(), S);
  if (it == sorted.end() || !(*it == S)) return kUnreached;
  return static_cast<std::uint32_t>(it - sorted.begin());
}

Subspace apply_linear(const LinearGen& g, const Subspace& S) {
  Mat B = S.basis;
  if (g.frob) {
    const FieldPtr& F = B.F;
    const std::uint32_t r = g.frob;
    B = map_entries(B, [&F, r](Fel x) { return F->frobenius(x, r); });
  }
  return span(mat_mul(B, g.M));
}

std::vector<LinearGen> gl_generators(const FieldPtr& F, std::uint32_t n) {
  std::vector<LinearGen> gens;
  for (std::uint32_t i = 0; i < n; ++i)
    for (std::uint32_t j = 0; j < n; ++j) {
      if (i == j) continue;
      Mat M = Mat::identity(F, n);
      M.at(i, j) = 1;
      gens.push_back({std::move(M), 0, "shear E(" + std::to_string(i) + "," + std::to_string(j) + ")"});
    }
  if (F->q() > 2) {
    Mat M = Mat::identity(F, n);
    M.at(0, 0) = F->primitive();
    gens.push_back({std::move(M), 0, "torus"});
  }
  if (F->f() > 1) gens.push_back({Mat::identity(F, n), 1, "frobenius"});
  return gens;
}

}  // namespace geodex::detail
