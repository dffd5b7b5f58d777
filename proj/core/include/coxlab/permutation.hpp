#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "coxlab/matrix.hpp"

namespace coxlab {

// Permutation of {0..n-1} in one-line notation; 0-based internally, 1-based
// in all user-facing output. Matrix convention: matrix()[i][sigma(i)] = 1.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<std::size_t> images);

  static Permutation identity(std::size_t n);

  std::size_t size() const { return images_.size(); }
  std::size_t operator()(std::size_t i) const { return images_[i]; }
  const std::vector<std::size_t>& images() const { return images_; }

  bool is_identity() const;
  Permutation inverse() const;
  // (a.compose(b))(i) = a(b(i))
  Permutation compose(const Permutation& inner) const;
  int sign() const;

  Matrix matrix() const;
  static Permutation from_matrix(const Matrix& m);  // rejects non 0/1 permutation matrices

  std::vector<std::size_t> one_line_1based() const;
  std::string one_line_str() const;  // e.g. "(4 3 2 1)"
  std::string cycle_str() const;     // e.g. "(1 4)(2 3)", fixed points omitted, "()" for id

  friend bool operator==(const Permutation& a, const Permutation& b) {
    return a.images_ == b.images_;
  }
  friend bool operator!=(const Permutation& a, const Permutation& b) { return !(a == b); }

 private:
  std::vector<std::size_t> images_;
};

}  // namespace coxlab
