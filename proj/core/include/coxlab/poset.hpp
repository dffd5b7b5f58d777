#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "coxlab/matrix.hpp"

namespace coxlab {

inline constexpr std::size_t kPosetSizeGuard = 64;

// Finite poset. Elements are indexed 0..n-1 in label order; the comparability
// relation is the reflexive-transitive closure of the input pairs, covers are
// its transitive reduction, and the stored linear extension is deterministic
// (repeatedly pick the minimal available element, ties by input label order).
class Poset {
 public:
  Poset() = default;  // the empty poset; build real ones with from_relations

  // pairs are (smaller, larger) relations; redundant pairs are reduced.
  // Throws duplicate-label, cycle-detected, unknown-element and
  // size-guard-exceeded (when more than max_elements labels are given).
  static Poset from_relations(std::vector<std::string> labels,
                              const std::vector<std::pair<std::string, std::string>>& pairs,
                              std::size_t max_elements = kPosetSizeGuard);

  std::size_t size() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(std::size_t i) const { return labels_[i]; }
  std::size_t index(const std::string& label) const;  // throws unknown-element

  bool le(std::size_t a, std::size_t b) const { return leq_[a * size() + b]; }
  bool lt(std::size_t a, std::size_t b) const { return a != b && le(a, b); }
  bool comparable(std::size_t a, std::size_t b) const { return le(a, b) || le(b, a); }

  // Transitive reduction, sorted by (smaller index, larger index).
  const std::vector<std::pair<std::size_t, std::size_t>>& covers() const { return covers_; }
  std::vector<std::size_t> upper_covers(std::size_t x) const;
  std::vector<std::size_t> lower_covers(std::size_t x) const;

  // position -> element index
  const std::vector<std::size_t>& linext() const { return linext_; }
  // element index -> position
  std::size_t position(std::size_t x) const { return pos_[x]; }

  std::vector<std::size_t> up_set(std::size_t x) const;    // { y : x <= y }
  std::vector<std::size_t> down_set(std::size_t x) const;  // { y : y <= x }
  std::vector<std::size_t> minimal_elements() const;
  std::vector<std::size_t> maximal_elements() const;
  std::optional<std::size_t> bottom() const;
  std::optional<std::size_t> top() const;
  bool is_bounded() const { return bottom() && top(); }

  friend bool operator==(const Poset& a, const Poset& b) {
    return a.labels_ == b.labels_ && a.leq_ == b.leq_;
  }
  friend bool operator!=(const Poset& a, const Poset& b) { return !(a == b); }

  // Text format: "elements a b c ..." then one "cover x y" line per relation;
  // '#' starts a comment. JSON format: {"elements":[...],"covers":[[x,y],...]}.
  // Both parse to identical Poset values.
  static Poset parse_text(std::istream& in);
  static Poset parse_json(const std::string& text);
  static Poset parse_file(const std::string& path);  // dispatches on leading '{'
  std::string to_text() const;
  std::string to_json() const;  // canonical: keys sorted, covers sorted lexicographically

 private:

  std::vector<std::string> labels_;
  std::vector<bool> leq_;  // row-major n*n
  std::vector<std::pair<std::size_t, std::size_t>> covers_;
  std::vector<std::size_t> linext_;
  std::vector<std::size_t> pos_;
};

// zeta[i][j] = 1 iff linext[i] <= linext[j]; upper unitriangular.
Matrix zeta_matrix(const Poset& p);
// Exact inverse of the zeta matrix.
Matrix mobius_matrix(const Poset& p);

}  // namespace coxlab
