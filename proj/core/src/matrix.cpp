#include "coxlab/matrix.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>

#include "coxlab/error.hpp"

namespace coxlab {

Matrix::Matrix(std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ ? rows.begin()->size() : 0;
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) fail(errc::dimension_mismatch, "ragged initializer");
    for (long v : r) data_.emplace_back(v);
  }
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Rational(1);
  return m;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

Matrix Matrix::operator-() const {
  Matrix r(rows_, cols_);
  for (std::size_t k = 0; k < data_.size(); ++k) r.data_[k] = -data_[k];
  return r;
}

bool Matrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Rational& x) { return x.is_zero(); });
}

bool Matrix::is_identity() const {
  if (!is_square()) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if ((*this)(i, j) != Rational(i == j ? 1 : 0)) return false;
  return true;
}

bool Matrix::is_upper_triangular() const {
  if (!is_square()) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (!(*this)(i, j).is_zero()) return false;
  return true;
}

bool Matrix::is_unit_upper_triangular() const {
  if (!is_upper_triangular()) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    if (!(*this)(i, i).is_one()) return false;
  return true;
}

std::vector<Rational> Matrix::diagonal() const {
  std::vector<Rational> d(std::min(rows_, cols_));
  for (std::size_t i = 0; i < d.size(); ++i) d[i] = (*this)(i, i);
  return d;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) fail(errc::dimension_mismatch, "matrix product");
  Matrix c(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Rational& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        if (!b(k, j).is_zero()) c(i, j) += aik * b(k, j);
      }
    }
  return c;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) fail(errc::dimension_mismatch, "matrix sum");
  Matrix c(a.rows_, a.cols_);
  for (std::size_t k = 0; k < a.data_.size(); ++k) c.data_[k] = a.data_[k] + b.data_[k];
  return c;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) fail(errc::dimension_mismatch, "matrix difference");
  Matrix c(a.rows_, a.cols_);
  for (std::size_t k = 0; k < a.data_.size(); ++k) c.data_[k] = a.data_[k] - b.data_[k];
  return c;
}

Matrix operator*(const Rational& s, const Matrix& a) {
  Matrix c(a.rows_, a.cols_);
  for (std::size_t k = 0; k < a.data_.size(); ++k) c.data_[k] = s * a.data_[k];
  return c;
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

void Matrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
}

Matrix Matrix::parse(std::istream& in) {
  long long rows = -1, cols = -1;
  if (!(in >> rows >> cols) || rows < 0 || cols < 0) {
    fail(errc::parse_error, "matrix header must be 'rows cols'");
  }
  Matrix m(static_cast<std::size_t>(rows), static_cast<std::size_t>(cols));
  for (std::size_t i = 0; i < m.rows_; ++i)
    for (std::size_t j = 0; j < m.cols_; ++j) {
      std::string tok;
      if (!(in >> tok)) fail(errc::parse_error, "matrix ends early");
      m(i, j) = Rational::parse(tok);
    }
  return m;
}

Matrix Matrix::parse(const std::string& text) {
  std::istringstream in(text);
  return parse(in);
}

std::string Matrix::format() const {
  std::ostringstream out;
  out << rows_ << ' ' << cols_ << '\n';
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) {
      if (j) out << ' ';
      out << (*this)(i, j);
    }
    out << '\n';
  }
  return out.str();
}

std::string Matrix::pretty() const {
  std::vector<std::size_t> width(cols_, 0);
  std::vector<std::string> cells(rows_ * cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) {
      cells[i * cols_ + j] = (*this)(i, j).str();
      width[j] = std::max(width[j], cells[i * cols_ + j].size());
    }
  std::ostringstream out;
  for (std::size_t i = 0; i < rows_; ++i) {
    out << '[';
    for (std::size_t j = 0; j < cols_; ++j) {
      const std::string& s = cells[i * cols_ + j];
      if (j) out << ' ';
      out << std::string(width[j] - s.size(), ' ') << s;
    }
    out << "]\n";
  }
  return out.str();
}

std::ostream& operator<<(std::ostream& os, const Matrix& m) { return os << m.pretty(); }

}  // namespace coxlab
