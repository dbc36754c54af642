#pragma once

#include <optional>
#include <vector>

#include "lgmk/exactalg.hpp"

namespace lgmk {

/// Dense row-major matrix over the rationals.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}
  static RationalMatrix from_rows(const std::vector<std::vector<Rational>>& rows);
  static RationalMatrix from_int_rows(const std::vector<std::vector<int>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rational& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  RationalMatrix transpose() const;

  /// Reduced row echelon form in place; returns the pivot columns.
  std::vector<std::size_t> rref();

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Rational> a_;
};

std::size_t rank(RationalMatrix m);
Rational determinant(RationalMatrix m);

/// Basis of {v : M v = 0}, one vector per free column.
std::vector<std::vector<Rational>> nullspace(RationalMatrix m);

/// Some solution of M x = b, or nullopt when inconsistent.
std::optional<std::vector<Rational>> solve(const RationalMatrix& m, const std::vector<Rational>& b);

/// Scales v to a primitive integer vector whose first nonzero entry is positive.
std::vector<Integer> primitive_integer(const std::vector<Rational>& v);

}  // namespace lgmk
