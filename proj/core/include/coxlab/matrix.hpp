#pragma once

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <string>
#include <vector>

#include "coxlab/rational.hpp"

namespace coxlab {

// Dense exact-rational matrix, row-major. Zero-sized dimensions are legal and
// behave as expected under multiplication (an r x 0 times 0 x c product is
// the r x c zero matrix).
class Matrix {
 public:
  Matrix() : rows_(0), cols_(0) {}
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  Matrix(std::initializer_list<std::initializer_list<long>> rows);

  static Matrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  Matrix transpose() const;
  Matrix operator-() const;
  bool is_zero() const;
  bool is_identity() const;
  bool is_upper_triangular() const;
  bool is_unit_upper_triangular() const;

  std::vector<Rational> diagonal() const;

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const Rational& s, const Matrix& a);
  friend bool operator==(const Matrix& a, const Matrix& b);
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

  void swap_rows(std::size_t a, std::size_t b);

  // Matrix text format: first line "rows cols", then row-major entries as
  // integers or "a/b" fractions. parse/format round-trip bit-exactly.
  static Matrix parse(std::istream& in);
  static Matrix parse(const std::string& text);
  std::string format() const;

  // Aligned human-readable rendering, one row per line.
  std::string pretty() const;

 private:
  std::size_t rows_, cols_;
  std::vector<Rational> data_;
};

std::ostream& operator<<(std::ostream& os, const Matrix& m);

}  // namespace coxlab
