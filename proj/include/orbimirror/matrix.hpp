#pragma once

#include <cstddef>
#include <vector>

#include "orbimirror/rational.hpp"

namespace orbimirror {

/// Dense row-major matrix over the rationals.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static RationalMatrix identity(std::size_t size);
  static RationalMatrix diagonal(const std::vector<Rational>& entries);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  RationalMatrix transpose() const;
  RationalMatrix operator*(const RationalMatrix& rhs) const;
  RationalMatrix operator+(const RationalMatrix& rhs) const;
  RationalMatrix operator-(const RationalMatrix& rhs) const;
  RationalMatrix scaled(const Rational& factor) const;

  bool operator==(const RationalMatrix& rhs) const;

  bool is_symmetric() const;
  Rational determinant() const;
  /// Throws std::domain_error if singular.
  RationalMatrix inverse() const;

  /// Coefficients c_0..c_size of det(X·Id − M), lowest degree first (monic).
  /// Computed by Hessenberg reduction followed by the usual recurrence.
  std::vector<Rational> characteristic_polynomial() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

}  // namespace orbimirror
