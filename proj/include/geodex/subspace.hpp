// Subspaces of GF(q)^n held in reduced row echelon form. The RREF basis is
// a canonical representative, so equality, ordering and hashing reduce to
// entry-wise comparison of the basis matrix.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "geodex/bigint.hpp"
#include "geodex/matrix.hpp"

namespace geodex {

struct Subspace {
  Mat basis;  // RREF, no zero rows

  std::uint32_t dim() const { return basis.rows; }
  std::uint32_t ambient() const { return basis.cols; }
  const FieldPtr& field() const { return basis.F; }

  bool operator==(const Subspace& o) const { return basis == o.basis; }
  bool operator<(const Subspace& o) const;
};

// Canonicalize the row space of the given matrix.
Subspace span(Mat rows);
Subspace zero_subspace(FieldPtr F, std::uint32_t ambient);
Subspace full_space(FieldPtr F, std::uint32_t ambient);
Subspace span_of_vectors(FieldPtr F, std::uint32_t ambient, const std::vector<std::vector<Fel>>& vecs);

Subspace sub_sum(const Subspace& A, const Subspace& B);
// Zassenhaus intersection.
Subspace sub_intersect(const Subspace& A, const Subspace& B);
bool sub_contains(const Subspace& A, const Subspace& B);  // B <= A
bool sub_member(const Subspace& A, const std::vector<Fel>& v);
// dim((A+B)/B) = dim A - dim(A/\B)
std::uint32_t quotient_dim(const Subspace& A, const Subspace& B);

std::string sub_label(const Subspace& S);
std::size_t sub_hash(const Subspace& S);

struct SubspaceHash {
  std::size_t operator()(const Subspace& S) const { return sub_hash(S); }
};

// Number of m-subspaces of an n-space over GF(q).
Bigint gaussian_binomial(std::uint32_t n, std::uint32_t m, std::uint32_t q);

// All k-subspaces of GF(q)^n in increasing lexicographic basis order.
// Guarded by q^n <= max_vectors.
std::vector<Subspace> enumerate_subspaces(const FieldPtr& F, std::uint32_t n, std::uint32_t k,
                                          std::uint64_t max_vectors = 1ull << 24);

// All k-subspaces of the given space (coordinates mapped through its basis).
std::vector<Subspace> enumerate_subspaces_of(const Subspace& U, std::uint32_t k);

// Maximal chains U = C_k > C_{k-1} > ... > C_1, returned as vectors
// (C_1, ..., C_k); deterministic order.
std::vector<std::vector<Subspace>> maximal_flags_of(const Subspace& U);

}  // namespace geodex
