// Dense row-major matrices over a shared finite field. Vectors are rows;
// maps act on the right (v -> v*M).
#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "geodex/field.hpp"

namespace geodex {

struct Mat {
  FieldPtr F;
  std::uint32_t rows = 0, cols = 0;
  std::vector<Fel> a;

  Mat() = default;
  Mat(FieldPtr field, std::uint32_t r, std::uint32_t c)
      : F(std::move(field)), rows(r), cols(c), a(static_cast<std::size_t>(r) * c, 0) {}
  Mat(FieldPtr field, std::uint32_t r, std::uint32_t c, std::vector<Fel> data)
      : F(std::move(field)), rows(r), cols(c), a(std::move(data)) {}

  Fel& at(std::uint32_t r, std::uint32_t c) { return a[static_cast<std::size_t>(r) * cols + c]; }
  Fel at(std::uint32_t r, std::uint32_t c) const { return a[static_cast<std::size_t>(r) * cols + c]; }
  std::vector<Fel> row(std::uint32_t r) const {
    return std::vector<Fel>(a.begin() + static_cast<std::size_t>(r) * cols,
                            a.begin() + static_cast<std::size_t>(r + 1) * cols);
  }

  static Mat identity(FieldPtr F, std::uint32_t n);

  bool operator==(const Mat& o) const { return rows == o.rows && cols == o.cols && a == o.a; }
};

Mat mat_mul(const Mat& A, const Mat& B);
Mat mat_add(const Mat& A, const Mat& B);
Mat mat_sub(const Mat& A, const Mat& B);
Mat transpose(const Mat& A);
// Rows of A followed by rows of B.
Mat stack(const Mat& A, const Mat& B);
Mat map_entries(const Mat& A, const std::function<Fel(Fel)>& fn);
// Multiply row vector v (length A.rows) by A.
std::vector<Fel> row_apply(const std::vector<Fel>& v, const Mat& A);

// In-place reduced row echelon form with normalized pivots; returns rank.
std::uint32_t rref(Mat& A);
std::uint32_t rank(Mat A);
std::uint32_t mat_rank_of_difference(const Mat& A, const Mat& B);
// Basis of the right null space {x : A*x^T = 0}, as RREF rows.
Mat kernel(const Mat& A);
bool invertible(const Mat& A);
Mat inverse(const Mat& A);

std::string mat_to_string(const Mat& A);

}  // namespace geodex
