#include "geodex/matrix.hpp"

#include <algorithm>

namespace geodex {

namespace {

void check_field(const Mat& A, const Mat& B) {
  require(A.F && B.F && A.F->same(*B.F), errc::ambient_mismatch, "matrices over different fields");
}

}  // namespace

Mat Mat::identity(FieldPtr F, std::uint32_t n) {
  Mat I(std::move(F), n, n);
  for (std::uint32_t i = 0; i < n; ++i) I.at(i, i) = 1;
  return I;
}

Mat mat_mul(const Mat& A, const Mat& B) {
  check_field(A, B);
  require(A.cols == B.rows, errc::ambient_mismatch, "matrix product shape mismatch");
  const Field& F = *A.F;
  Mat C(A.F, A.rows, B.cols);
  for (std::uint32_t i = 0; i < A.rows; ++i)
    for (std::uint32_t k = 0; k < A.cols; ++k) {
      Fel aik = A.at(i, k);
      if (aik == 0) continue;
      for (std::uint32_t j = 0; j < B.cols; ++j) {
        Fel b = B.at(k, j);
        if (b) C.at(i, j) = F.add(C.at(i, j), F.mul(aik, b));
      }
    }
  return C;
}

Mat mat_add(const Mat& A, const Mat& B) {
  check_field(A, B);
  require(A.rows == B.rows && A.cols == B.cols, errc::ambient_mismatch, "matrix sum shape mismatch");
  Mat C(A.F, A.rows, A.cols);
  for (std::size_t i = 0; i < A.a.size(); ++i) C.a[i] = A.F->add(A.a[i], B.a[i]);
  return C;
}

Mat mat_sub(const Mat& A, const Mat& B) {
  check_field(A, B);
  require(A.rows == B.rows && A.cols == B.cols, errc::ambient_mismatch, "matrix difference shape mismatch");
  Mat C(A.F, A.rows, A.cols);
  for (std::size_t i = 0; i < A.a.size(); ++i) C.a[i] = A.F->sub(A.a[i], B.a[i]);
  return C;
}

Mat transpose(const Mat& A) {
  Mat T(A.F, A.cols, A.rows);
  for (std::uint32_t i = 0; i < A.rows; ++i)
    for (std::uint32_t j = 0; j < A.cols; ++j) T.at(j, i) = A.at(i, j);
  return T;
}

Mat stack(const Mat& A, const Mat& B) {
  check_field(A, B);
  require(A.cols == B.cols, errc::ambient_mismatch, "stacked matrices need equal width");
  Mat C(A.F, A.rows + B.rows, A.cols);
  std::copy(A.a.begin(), A.a.end(), C.a.begin());
  std::copy(B.a.begin(), B.a.end(), C.a.begin() + A.a.size());
  return C;
}

Mat map_entries(const Mat& A, const std::function<Fel(Fel)>& fn) {
  Mat C(A.F, A.rows, A.cols);
  for (std::size_t i = 0; i < A.a.size(); ++i) C.a[i] = fn(A.a[i]);
  return C;
}

std::vector<Fel> row_apply(const std::vector<Fel>& v, const Mat& A) {
  require(v.size() == A.rows, errc::ambient_mismatch, "row-vector length mismatch");
  const Field& F = *A.F;
  std::vector<Fel> out(A.cols, 0);
  for (std::uint32_t k = 0; k < A.rows; ++k) {
    if (v[k] == 0) continue;
    for (std::uint32_t j = 0; j < A.cols; ++j) {
      Fel b = A.at(k, j);
      if (b) out[j] = F.add(out[j], F.mul(v[k], b));
    }
  }
  return out;
}

std::uint32_t rref(Mat& A) {
  const Field& F = *A.F;
  std::uint32_t r = 0;
  for (std::uint32_t c = 0; c < A.cols && r < A.rows; ++c) {
    std::uint32_t pivot = r;
    while (pivot < A.rows && A.at(pivot, c) == 0) ++pivot;
    if (pivot == A.rows) continue;
    if (pivot != r)
      for (std::uint32_t j = 0; j < A.cols; ++j) std::swap(A.at(pivot, j), A.at(r, j));
    Fel s = F.inv(A.at(r, c));
    if (s != 1)
      for (std::uint32_t j = c; j < A.cols; ++j) A.at(r, j) = F.mul(A.at(r, j), s);
    for (std::uint32_t i = 0; i < A.rows; ++i) {
      if (i == r) continue;
      Fel t = A.at(i, c);
      if (t == 0) continue;
      for (std::uint32_t j = c; j < A.cols; ++j)
        A.at(i, j) = F.sub(A.at(i, j), F.mul(t, A.at(r, j)));
    }
    ++r;
  }
  return r;
}

std::uint32_t rank(Mat A) { return rref(A); }

std::uint32_t mat_rank_of_difference(const Mat& A, const Mat& B) { return rank(mat_sub(A, B)); }

Mat kernel(const Mat& A) {
  Mat R = A;
  std::uint32_t r = rref(R);
  std::vector<std::uint32_t> pivot_col;
  std::vector<bool> is_pivot(A.cols, false);
  for (std::uint32_t i = 0, c = 0; i < r; ++i) {
    while (R.at(i, c) == 0) ++c;
    pivot_col.push_back(c);
    is_pivot[c] = true;
  }
  Mat K(A.F, A.cols - r, A.cols);
  std::uint32_t row = 0;
  for (std::uint32_t free = 0; free < A.cols; ++free) {
    if (is_pivot[free]) continue;
    K.at(row, free) = 1;
    for (std::uint32_t i = 0; i < r; ++i)
      K.at(row, pivot_col[i]) = A.F->neg(R.at(i, free));
    ++row;
  }
  rref(K);
  return K;
}

bool invertible(const Mat& A) { return A.rows == A.cols && rank(A) == A.rows; }

Mat inverse(const Mat& A) {
  require(A.rows == A.cols, errc::bad_params, "inverse of a non-square matrix");
  Mat aug(A.F, A.rows, 2 * A.cols);
  for (std::uint32_t i = 0; i < A.rows; ++i) {
    for (std::uint32_t j = 0; j < A.cols; ++j) aug.at(i, j) = A.at(i, j);
    aug.at(i, A.cols + i) = 1;
  }
  std::uint32_t r = rref(aug);
  require(r == A.rows, errc::bad_params, "matrix is singular");
  Mat inv(A.F, A.rows, A.cols);
  for (std::uint32_t i = 0; i < A.rows; ++i)
    for (std::uint32_t j = 0; j < A.cols; ++j) inv.at(i, j) = aug.at(i, A.cols + j);
  return inv;
}

std::string mat_to_string(const Mat& A) {
  std::string s;
  for (std::uint32_t i = 0; i < A.rows; ++i) {
    if (i) s += ";";
    for (std::uint32_t j = 0; j < A.cols; ++j) {
      if (j) s += ",";
      s += std::to_string(A.at(i, j));
    }
  }
  return s;
}

}  // namespace geodex
