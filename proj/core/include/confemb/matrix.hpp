#pragma once

#include <cstddef>
#include <vector>

#include "confemb/rational.hpp"

namespace confemb {

/// Dense row-major matrix of exact rationals.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols);
  explicit RationalMatrix(std::vector<RationalVector> rows);

  static RationalMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  RationalVector row(std::size_t r) const;
  RationalMatrix transposed() const;
  RationalVector apply(const RationalVector& v) const;

  friend RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);
  friend bool operator==(const RationalMatrix& a, const RationalMatrix& b);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

/// Reduced row echelon form; `pivots` receives the pivot column of each
/// nonzero row, in order.
RationalMatrix rref(RationalMatrix m, std::vector<std::size_t>* pivots = nullptr);

std::size_t rank(const RationalMatrix& m);

/// Basis of {z : m z = 0}. One vector per free column, free columns taken in
/// ascending order; each vector is scaled so its first nonzero entry is 1.
std::vector<RationalVector> null_space(const RationalMatrix& m);

/// Throws std::domain_error for singular or non-square input.
RationalMatrix inverse(const RationalMatrix& m);

Rational determinant(const RationalMatrix& m);

/// Leading principal minors det(m[0..k, 0..k]) for k = 1..n.
std::vector<Rational> leading_minors(const RationalMatrix& m);

/// Solves m x = b when the system is consistent; returns false otherwise.
/// Free variables are set to zero.
bool solve(const RationalMatrix& m, const RationalVector& b, RationalVector& x);

}  // namespace confemb
