#include "qsuper/matrix.hpp"

#include <stdexcept>

namespace qsuper {

SMat SMat::identity(int n) {
  SMat m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = Scalar(1);
  return m;
}

bool SMat::is_zero() const {
  for (auto& x : a)
    if (!x.is_zero()) return false;
  return true;
}

SVec SMat::column(int j) const {
  SVec v(rows);
  for (int i = 0; i < rows; ++i) v[i] = (*this)(i, j);
  return v;
}

SVec SMat::row(int i) const { return SVec(a.begin() + static_cast<long>(i) * cols, a.begin() + static_cast<long>(i + 1) * cols); }

SMat operator*(const SMat& x, const SMat& y) {
  if (x.cols != y.rows) throw std::invalid_argument("matrix shape mismatch");
  SMat r(x.rows, y.cols);
  for (int i = 0; i < x.rows; ++i)
    for (int k = 0; k < x.cols; ++k) {
      const Scalar& e = x(i, k);
      if (e.is_zero()) continue;
      for (int j = 0; j < y.cols; ++j)
        if (!y(k, j).is_zero()) r(i, j) += e * y(k, j);
    }
  return r;
}

SMat operator+(const SMat& x, const SMat& y) {
  SMat r = x;
  for (std::size_t i = 0; i < r.a.size(); ++i) r.a[i] += y.a[i];
  return r;
}

SMat operator-(const SMat& x, const SMat& y) {
  SMat r = x;
  for (std::size_t i = 0; i < r.a.size(); ++i) r.a[i] -= y.a[i];
  return r;
}

SMat SMat::scaled(const Scalar& s) const {
  SMat r = *this;
  for (auto& e : r.a) e *= s;
  return r;
}

SMat SMat::transpose() const {
  SMat r(cols, rows);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) r(j, i) = (*this)(i, j);
  return r;
}

SVec apply(const SMat& m, const SVec& v) {
  SVec r(m.rows);
  for (int j = 0; j < m.cols; ++j) {
    if (v[j].is_zero()) continue;
    for (int i = 0; i < m.rows; ++i)
      if (!m(i, j).is_zero()) r[i] += m(i, j) * v[j];
  }
  return r;
}

SVec apply_left(const SVec& v, const SMat& m) {
  SVec r(m.cols);
  for (int i = 0; i < m.rows; ++i) {
    if (v[i].is_zero()) continue;
    for (int j = 0; j < m.cols; ++j)
      if (!m(i, j).is_zero()) r[j] += v[i] * m(i, j);
  }
  return r;
}

bool is_zero(const SVec& v) {
  for (auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

namespace {

// Cost proxy for pivot choice: prefer short numerators and denominators.
std::size_t weight_of(const Scalar& s) { return s.num().size() + s.den().size(); }

}  // namespace

RankProfile rank_profile(const SMat& m0) {
  SMat m = m0;
  std::vector<int> perm(m.rows);
  for (int i = 0; i < m.rows; ++i) perm[i] = i;
  RankProfile rp;
  int row = 0;
  for (int c = 0; c < m.cols && row < m.rows; ++c) {
    int best = -1;
    for (int r = row; r < m.rows; ++r) {
      if (m(r, c).is_zero()) continue;
      if (best < 0 || perm[r] < perm[best]) best = r;
    }
    if (best < 0) continue;
    if (best != row) {
      for (int j = 0; j < m.cols; ++j) std::swap(m(best, j), m(row, j));
      std::swap(perm[best], perm[row]);
    }
    Scalar inv = m(row, c).inverse();
    for (int r = row + 1; r < m.rows; ++r) {
      if (m(r, c).is_zero()) continue;
      Scalar f = m(r, c) * inv;
      for (int j = c; j < m.cols; ++j)
        if (!m(row, j).is_zero()) m(r, j) -= f * m(row, j);
    }
    rp.rows.push_back(perm[row]);
    rp.cols.push_back(c);
    ++row;
  }
  return rp;
}

SMat inverse(const SMat& m0) {
  if (m0.rows != m0.cols) throw std::invalid_argument("inverse of non-square matrix");
  const int n = m0.rows;
  SMat m = m0, inv = SMat::identity(n);
  for (int c = 0; c < n; ++c) {
    int best = -1;
    for (int r = c; r < n; ++r) {
      if (m(r, c).is_zero()) continue;
      if (best < 0 || weight_of(m(r, c)) < weight_of(m(best, c))) best = r;
    }
    if (best < 0) throw std::domain_error("singular matrix");
    if (best != c)
      for (int j = 0; j < n; ++j) {
        std::swap(m(best, j), m(c, j));
        std::swap(inv(best, j), inv(c, j));
      }
    Scalar p = m(c, c).inverse();
    for (int j = 0; j < n; ++j) {
      if (!m(c, j).is_zero()) m(c, j) *= p;
      if (!inv(c, j).is_zero()) inv(c, j) *= p;
    }
    for (int r = 0; r < n; ++r) {
      if (r == c || m(r, c).is_zero()) continue;
      Scalar f = m(r, c);
      for (int j = 0; j < n; ++j) {
        if (!m(c, j).is_zero()) m(r, j) -= f * m(c, j);
        if (!inv(c, j).is_zero()) inv(r, j) -= f * inv(c, j);
      }
    }
  }
  return inv;
}

SMat submatrix(const SMat& m, const std::vector<int>& rows, const std::vector<int>& cols) {
  SMat r(static_cast<int>(rows.size()), static_cast<int>(cols.size()));
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j) r(static_cast<int>(i), static_cast<int>(j)) = m(rows[i], cols[j]);
  return r;
}

}  // namespace qsuper
