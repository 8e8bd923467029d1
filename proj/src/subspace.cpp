#include "geodex/subspace.hpp"

#include <algorithm>
#include <cmath>

namespace geodex {

bool Subspace::operator<(const Subspace& o) const {
  if (basis.cols != o.basis.cols) return basis.cols < o.basis.cols;
  if (basis.rows != o.basis.rows) return basis.rows < o.basis.rows;
  return basis.a < o.basis.a;
}

Subspace span(Mat rows) {
  std::uint32_t r = rref(rows);
  Mat basis(rows.F, r, rows.cols);
  std::copy(rows.a.begin(), rows.a.begin() + static_cast<std::size_t>(r) * rows.cols, basis.a.begin());
  return Subspace{std::move(basis)};
}

Subspace zero_subspace(FieldPtr F, std::uint32_t ambient) {
  return Subspace{Mat(std::move(F), 0, ambient)};
}

Subspace full_space(FieldPtr F, std::uint32_t ambient) {
  return Subspace{Mat::identity(std::move(F), ambient)};
}

Subspace span_of_vectors(FieldPtr F, std::uint32_t ambient, const std::vector<std::vector<Fel>>& vecs) {
  Mat m(std::move(F), static_cast<std::uint32_t>(vecs.size()), ambient);
  for (std::uint32_t i = 0; i < vecs.size(); ++i) {
    require(vecs[i].size() == ambient, errc::ambient_mismatch, "vector length mismatch");
    for (std::uint32_t j = 0; j < ambient; ++j) m.at(i, j) = vecs[i][j];
  }
  return span(std::move(m));
}

Subspace sub_sum(const Subspace& A, const Subspace& B) {
  require(A.ambient() == B.ambient(), errc::ambient_mismatch, "subspace sum in different ambients");
  return span(stack(A.basis, B.basis));
}

Subspace sub_intersect(const Subspace& A, const Subspace& B) {
  require(A.ambient() == B.ambient(), errc::ambient_mismatch, "subspace intersection in different ambients");
  std::uint32_t n = A.ambient();
  // Zassenhaus: rows [A | A] and [B | 0]; after elimination the rows whose
  // left half vanished carry an intersection basis in the right half.
  Mat Z(A.basis.F, A.dim() + B.dim(), 2 * n);
  for (std::uint32_t i = 0; i < A.dim(); ++i)
    for (std::uint32_t j = 0; j < n; ++j) {
      Z.at(i, j) = A.basis.at(i, j);
      Z.at(i, n + j) = A.basis.at(i, j);
    }
  for (std::uint32_t i = 0; i < B.dim(); ++i)
    for (std::uint32_t j = 0; j < n; ++j) Z.at(A.dim() + i, j) = B.basis.at(i, j);
  std::uint32_t r = rref(Z);
  std::vector<std::vector<Fel>> rows;
  for (std::uint32_t i = 0; i < r; ++i) {
    bool left_zero = true;
    for (std::uint32_t j = 0; j < n && left_zero; ++j)
      if (Z.at(i, j)) left_zero = false;
    if (!left_zero) continue;
    std::vector<Fel> v(n);
    for (std::uint32_t j = 0; j < n; ++j) v[j] = Z.at(i, n + j);
    rows.push_back(std::move(v));
  }
  return span_of_vectors(A.basis.F, n, rows);
}

bool sub_contains(const Subspace& A, const Subspace& B) {
  require(A.ambient() == B.ambient(), errc::ambient_mismatch, "containment in different ambients");
  if (B.dim() > A.dim()) return false;
  return rank(stack(A.basis, B.basis)) == A.dim();
}

bool sub_member(const Subspace& A, const std::vector<Fel>& v) {
  Mat m(A.basis.F, 1, A.ambient());
  require(v.size() == A.ambient(), errc::ambient_mismatch, "vector length mismatch");
  for (std::uint32_t j = 0; j < A.ambient(); ++j) m.at(0, j) = v[j];
  return rank(stack(A.basis, m)) == A.dim();
}

std::uint32_t quotient_dim(const Subspace& A, const Subspace& B) {
  return sub_sum(A, B).dim() - B.dim();
}

std::string sub_label(const Subspace& S) {
  if (S.dim() == 0) return "0";
  return mat_to_string(S.basis);
}

std::size_t sub_hash(const Subspace& S) {
  std::size_t h = 1469598103934665603ull ^ S.basis.cols;
  for (Fel x : S.basis.a) {
    h ^= x + 0x9e3779b97f4a7c15ull;
    h *= 1099511628211ull;
  }
  return h;
}

Bigint gaussian_binomial(std::uint32_t n, std::uint32_t m, std::uint32_t q) {
  require(q >= 2, errc::bad_params, "gaussian binomial needs q >= 2");
  require(m <= n, errc::bad_params, "gaussian binomial needs 0 <= m <= n");
  Bigint num = 1, den = 1, Q = q;
  for (std::uint32_t i = 0; i < m; ++i) {
    Bigint qn = 1, qd = 1;
    for (std::uint32_t j = 0; j < n - i; ++j) qn *= Q;
    for (std::uint32_t j = 0; j < i + 1; ++j) qd *= Q;
    num *= qn - 1;
    den *= qd - 1;
  }
  return num / den;
}

std::vector<Subspace> enumerate_subspaces(const FieldPtr& F, std::uint32_t n, std::uint32_t k,
                                          std::uint64_t max_vectors) {
  require(k <= n, errc::bad_params, "subspace dimension exceeds ambient dimension");
  double logcount = n * std::log2(static_cast<double>(F->q()));
  require(logcount <= std::log2(static_cast<double>(max_vectors)) + 1e-9, errc::too_large,
          "ambient space too large to enumerate");
  std::vector<Subspace> out;
  if (k == 0) {
    out.push_back(zero_subspace(F, n));
    return out;
  }
  // Enumerate RREF matrices directly: choose pivot columns, then run through
  // all assignments of the free entries.
  std::vector<std::uint32_t> pivots(k);
  for (std::uint32_t i = 0; i < k; ++i) pivots[i] = i;
  std::uint32_t q = F->q();
  while (true) {
    std::vector<std::pair<std::uint32_t, std::uint32_t>> free_cells;
    std::vector<bool> is_pivot(n, false);
    for (auto c : pivots) is_pivot[c] = true;
    for (std::uint32_t i = 0; i < k; ++i)
      for (std::uint32_t j = pivots[i] + 1; j < n; ++j)
        if (!is_pivot[j]) free_cells.push_back({i, j});
    std::vector<Fel> vals(free_cells.size(), 0);
    while (true) {
      Mat basis(F, k, n);
      for (std::uint32_t i = 0; i < k; ++i) basis.at(i, pivots[i]) = 1;
      for (std::size_t t = 0; t < free_cells.size(); ++t)
        basis.at(free_cells[t].first, free_cells[t].second) = vals[t];
      out.push_back(Subspace{std::move(basis)});
      std::size_t t = 0;
      while (t < vals.size() && vals[t] + 1 == q) vals[t++] = 0;
      if (t == vals.size()) break;
      ++vals[t];
    }
    // Next pivot combination in lexicographic order.
    std::int64_t i = k - 1;
    while (i >= 0 && pivots[i] == n - k + i) --i;
    if (i < 0) break;
    ++pivots[i];
    for (std::uint32_t j = i + 1; j < k; ++j) pivots[j] = pivots[j - 1] + 1;
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Subspace> enumerate_subspaces_of(const Subspace& U, std::uint32_t k) {
  require(k <= U.dim(), errc::bad_params, "flag dimension exceeds subspace dimension");
  std::vector<Subspace> out;
  for (const Subspace& C : enumerate_subspaces(U.field(), U.dim(), k))
    out.push_back(span(mat_mul(C.basis, U.basis)));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<Subspace>> maximal_flags_of(const Subspace& U) {
  std::vector<std::vector<Subspace>> out;
  if (U.dim() <= 1) {
    out.push_back({U});
    return out;
  }
  for (const Subspace& H : enumerate_subspaces_of(U, U.dim() - 1))
    for (auto& chain : maximal_flags_of(H)) {
      chain.push_back(U);
      out.push_back(std::move(chain));
    }
  return out;
}

}  // namespace geodex
