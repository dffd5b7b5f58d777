#include "coxlab/permutation.hpp"

#include <numeric>
#include <sstream>

#include "coxlab/error.hpp"

namespace coxlab {

Permutation::Permutation(std::vector<std::size_t> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t v : images_) {
    if (v >= images_.size() || seen[v]) fail(errc::invalid_parameter, "not a bijection");
    seen[v] = true;
  }
}

Permutation Permutation::identity(std::size_t n) {
  std::vector<std::size_t> img(n);
  std::iota(img.begin(), img.end(), std::size_t{0});
  return Permutation(std::move(img));
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i) return false;
  return true;
}

Permutation Permutation::inverse() const {
  std::vector<std::size_t> inv(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) inv[images_[i]] = i;
  return Permutation(std::move(inv));
}

Permutation Permutation::compose(const Permutation& inner) const {
  if (size() != inner.size()) fail(errc::dimension_mismatch, "permutation compose");
  std::vector<std::size_t> img(size());
  for (std::size_t i = 0; i < size(); ++i) img[i] = images_[inner(i)];
  return Permutation(std::move(img));
}

int Permutation::sign() const {
  std::vector<bool> seen(size(), false);
  int sign = 1;
  for (std::size_t i = 0; i < size(); ++i) {
    if (seen[i]) continue;
    std::size_t len = 0;
    for (std::size_t j = i; !seen[j]; j = images_[j]) {
      seen[j] = true;
      ++len;
    }
    if (len % 2 == 0) sign = -sign;
  }
  return sign;
}

Matrix Permutation::matrix() const {
  Matrix m(size(), size());
  for (std::size_t i = 0; i < size(); ++i) m(i, images_[i]) = Rational(1);
  return m;
}

Permutation Permutation::from_matrix(const Matrix& m) {
  if (!m.is_square()) fail(errc::not_a_permutation_matrix, "matrix is not square");
  const std::size_t n = m.rows();
  std::vector<std::size_t> img(n, n);
  std::vector<bool> col_used(n, false);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const Rational& v = m(i, j);
      if (v.is_zero()) continue;
      if (!v.is_one() || img[i] != n) {
        fail(errc::not_a_permutation_matrix, "row " + std::to_string(i + 1));
      }
      img[i] = j;
    }
    if (img[i] == n || col_used[img[i]]) {
      fail(errc::not_a_permutation_matrix, "row " + std::to_string(i + 1));
    }
    col_used[img[i]] = true;
  }
  return Permutation(std::move(img));
}

std::vector<std::size_t> Permutation::one_line_1based() const {
  std::vector<std::size_t> out(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) out[i] = images_[i] + 1;
  return out;
}

std::string Permutation::one_line_str() const {
  std::ostringstream out;
  out << '(';
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (i) out << ' ';
    out << images_[i] + 1;
  }
  out << ')';
  return out.str();
}

std::string Permutation::cycle_str() const {
  std::ostringstream out;
  std::vector<bool> seen(size(), false);
  bool any = false;
  for (std::size_t i = 0; i < size(); ++i) {
    if (seen[i] || images_[i] == i) {
      seen[i] = true;
      continue;
    }
    out << '(';
    bool first = true;
    for (std::size_t j = i; !seen[j]; j = images_[j]) {
      seen[j] = true;
      if (!first) out << ' ';
      out << j + 1;
      first = false;
    }
    out << ')';
    any = true;
  }
  if (!any) out << "()";
  return out.str();
}

}  // namespace coxlab
