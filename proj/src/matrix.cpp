#include "orbimirror/matrix.hpp"

#include <stdexcept>
#include <utility>

namespace orbimirror {

namespace {

void require_square(const RationalMatrix& m, const char* what) {
  if (m.rows() != m.cols()) throw std::invalid_argument(std::string(what) + ": matrix is not square");
}

}  // namespace

RationalMatrix RationalMatrix::identity(std::size_t size) {
  RationalMatrix out(size, size);
  for (std::size_t i = 0; i < size; ++i) out(i, i) = 1;
  return out;
}

RationalMatrix RationalMatrix::diagonal(const std::vector<Rational>& entries) {
  RationalMatrix out(entries.size(), entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) out(i, i) = entries[i];
  return out;
}

RationalMatrix RationalMatrix::transpose() const {
  RationalMatrix out(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) out(c, r) = (*this)(r, c);
  return out;
}

RationalMatrix RationalMatrix::operator*(const RationalMatrix& rhs) const {
  if (cols_ != rhs.rows_) throw std::invalid_argument("matrix product: shape mismatch");
  RationalMatrix out(rows_, rhs.cols_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Rational& a = (*this)(r, k);
      if (sgn(a) == 0) continue;
      for (std::size_t c = 0; c < rhs.cols_; ++c)
        if (sgn(rhs(k, c)) != 0) out(r, c) += a * rhs(k, c);
    }
  return out;
}

RationalMatrix RationalMatrix::operator+(const RationalMatrix& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw std::invalid_argument("matrix sum: shape mismatch");
  RationalMatrix out(*this);
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] += rhs.data_[i];
  return out;
}

RationalMatrix RationalMatrix::operator-(const RationalMatrix& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw std::invalid_argument("matrix difference: shape mismatch");
  RationalMatrix out(*this);
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] -= rhs.data_[i];
  return out;
}

RationalMatrix RationalMatrix::scaled(const Rational& factor) const {
  RationalMatrix out(*this);
  for (auto& x : out.data_) x *= factor;
  return out;
}

bool RationalMatrix::operator==(const RationalMatrix& rhs) const {
  return rows_ == rhs.rows_ && cols_ == rhs.cols_ && data_ == rhs.data_;
}

bool RationalMatrix::is_symmetric() const {
  if (rows_ != cols_) return false;
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = r + 1; c < cols_; ++c)
      if ((*this)(r, c) != (*this)(c, r)) return false;
  return true;
}

Rational RationalMatrix::determinant() const {
  require_square(*this, "determinant");
  RationalMatrix m(*this);
  const std::size_t n = rows_;
  Rational det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && sgn(m(pivot, col)) == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != col) {
      for (std::size_t c = 0; c < n; ++c) std::swap(m(pivot, c), m(col, c));
      det = -det;
    }
    det *= m(col, col);
    for (std::size_t r = col + 1; r < n; ++r) {
      if (sgn(m(r, col)) == 0) continue;
      Rational factor = m(r, col) / m(col, col);
      for (std::size_t c = col; c < n; ++c) m(r, c) -= factor * m(col, c);
    }
  }
  return det;
}

RationalMatrix RationalMatrix::inverse() const {
  require_square(*this, "inverse");
  const std::size_t n = rows_;
  RationalMatrix m(*this);
  RationalMatrix inv = identity(n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && sgn(m(pivot, col)) == 0) ++pivot;
    if (pivot == n) throw std::domain_error("inverse: matrix is singular");
    if (pivot != col)
      for (std::size_t c = 0; c < n; ++c) {
        std::swap(m(pivot, c), m(col, c));
        std::swap(inv(pivot, c), inv(col, c));
      }
    Rational scale = 1 / Rational(m(col, col));
    for (std::size_t c = 0; c < n; ++c) {
      m(col, c) *= scale;
      inv(col, c) *= scale;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || sgn(m(r, col)) == 0) continue;
      Rational factor = m(r, col);
      for (std::size_t c = 0; c < n; ++c) {
        m(r, c) -= factor * m(col, c);
        inv(r, c) -= factor * inv(col, c);
      }
    }
  }
  return inv;
}

std::vector<Rational> RationalMatrix::characteristic_polynomial() const {
  require_square(*this, "characteristic_polynomial");
  const std::size_t n = rows_;
  RationalMatrix h(*this);

  // Reduce to upper Hessenberg form by similarity transforms.
  for (std::size_t m = 1; m + 1 < n; ++m) {
    std::size_t i = m;
    while (i < n && sgn(h(i, m - 1)) == 0) ++i;
    if (i == n) continue;
    if (i != m) {
      for (std::size_t c = 0; c < n; ++c) std::swap(h(i, c), h(m, c));
      for (std::size_t r = 0; r < n; ++r) std::swap(h(r, i), h(r, m));
    }
    for (std::size_t r = m + 1; r < n; ++r) {
      if (sgn(h(r, m - 1)) == 0) continue;
      Rational u = h(r, m - 1) / h(m, m - 1);
      for (std::size_t c = 0; c < n; ++c) h(r, c) -= u * h(m, c);
      for (std::size_t rr = 0; rr < n; ++rr) h(rr, m) += u * h(rr, r);
    }
  }

  // p[k] is the characteristic polynomial of the leading k×k block.
  std::vector<std::vector<Rational>> p(n + 1);
  p[0] = {Rational(1)};
  for (std::size_t k = 1; k <= n; ++k) {
    std::vector<Rational> next(k + 1);
    const Rational& diag = h(k - 1, k - 1);
    for (std::size_t d = 0; d < k; ++d) {
      next[d + 1] += p[k - 1][d];
      next[d] -= diag * p[k - 1][d];
    }
    Rational sub = 1;
    for (std::size_t i = k - 1; i >= 1; --i) {
      sub *= h(i, i - 1);
      if (sgn(sub) == 0) break;
      Rational t = sub * h(i - 1, k - 1);
      if (sgn(t) != 0)
        for (std::size_t d = 0; d < p[i - 1].size(); ++d) next[d] -= t * p[i - 1][d];
    }
    p[k] = std::move(next);
  }
  return p[n];
}

}  // namespace orbimirror
