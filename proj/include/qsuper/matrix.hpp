#pragma once

#include <vector>

#include "qsuper/scalar.hpp"

namespace qsuper {

using SVec = std::vector<Scalar>;

// Dense row-major matrix over Q(v).
struct SMat {
  int rows = 0, cols = 0;
  std::vector<Scalar> a;

  SMat() = default;
  SMat(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c) {}
  static SMat identity(int n);

  Scalar& operator()(int i, int j) { return a[static_cast<std::size_t>(i) * cols + j]; }
  const Scalar& operator()(int i, int j) const { return a[static_cast<std::size_t>(i) * cols + j]; }
  bool empty() const { return rows == 0 || cols == 0; }
  bool is_zero() const;
  SVec column(int j) const;
  SVec row(int i) const;

  friend SMat operator*(const SMat& x, const SMat& y);
  friend SMat operator+(const SMat& x, const SMat& y);
  friend SMat operator-(const SMat& x, const SMat& y);
  friend bool operator==(const SMat& x, const SMat& y) {
    return x.rows == y.rows && x.cols == y.cols && x.a == y.a;
  }
  SMat scaled(const Scalar& s) const;
  SMat transpose() const;
};

SVec apply(const SMat& m, const SVec& v);
// Row vector times matrix.
SVec apply_left(const SVec& v, const SMat& m);
bool is_zero(const SVec& v);

// Pivot rows and columns from exact Gaussian elimination: the submatrix on
// (rows, cols) is invertible and its size is the rank.
struct RankProfile {
  std::vector<int> rows, cols;
  int rank() const { return static_cast<int>(rows.size()); }
};
RankProfile rank_profile(const SMat& m);

// Throws std::domain_error when singular.
SMat inverse(const SMat& m);
SMat submatrix(const SMat& m, const std::vector<int>& rows, const std::vector<int>& cols);

}  // namespace qsuper
