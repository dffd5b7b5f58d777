#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "coxlab/homology.hpp"
#include "coxlab/lattice.hpp"
#include "coxlab/linalg.hpp"
#include "coxlab/matrix.hpp"
#include "coxlab/permutation.hpp"
#include "coxlab/poset.hpp"

namespace coxlab {

// How to order the simple modules when forming Cartan/Coxeter matrices.
struct OrderingChoice {
  enum class Kind { linext, admissible, explicit_order };

  Kind kind = Kind::linext;
  std::vector<std::size_t> sequence;  // explicit_order: position -> element index

  static OrderingChoice linext() { return {Kind::linext, {}}; }
  static OrderingChoice admissible() { return {Kind::admissible, {}}; }
  static OrderingChoice explicit_order(std::vector<std::size_t> seq) {
    return {Kind::explicit_order, std::move(seq)};
  }
};

// position -> element index; throws invalid-parameter for a bad explicit
// sequence. Admissible orderings consult the engine for grades.
std::vector<std::size_t> resolve_ordering(const OrderingChoice& choice, HomologyEngine& engine);

// Elements sorted by non-increasing grade, ties by linear-extension position.
OrderingChoice admissible_ordering(HomologyEngine& engine);
OrderingChoice admissible_ordering(const Poset& p);

// cartan[i][j] = 1 iff order[j] <= order[i]: lower unitriangular under a
// linear extension; row i records the composition series of P(order[i]).
Matrix cartan_matrix(const Poset& p, const std::vector<std::size_t>& order);
Matrix cartan_matrix(const Poset& p);  // linear-extension ordering

// -cartan^T * cartan^{-1}, exact.
Matrix coxeter_matrix(const Poset& p, const std::vector<std::size_t>& order);
Matrix coxeter_matrix(const Poset& p);

// Leftmost-nonzero-column permutation when the Coxeter matrix is in PU form,
// otherwise the Bruhat permutation; the two agree whenever PU form holds.
Permutation coxeter_permutation(const Poset& p, const std::vector<std::size_t>& order);

// has_pu_form of the Coxeter matrix under the linear-extension ordering;
// equals is_distributive on every lattice.
bool distributive_via_coxeter(const LatticeStructure& l);

struct TheoremReport {
  std::size_t elements = 0;
  bool auslander_gorenstein = false;
  bool is_lattice = false;
  bool distributive = false;

  // Evaluated on the Coxeter matrix under the admissible ordering.
  bool pu_form = false;
  bool u2_diag_pm1 = false;
  std::optional<bool> permanent_pm1;        // absent when the size guard bites
  std::optional<Rational> permanent_value;
  std::optional<bool> lambda_grade_identity;  // lambda(grade_perm(i)) == i for all i

  // Under the linear-extension ordering, distributive lattices only.
  std::optional<bool> rowmotion_identity;  // lambda(row(x)) == x for all x

  // Assertions that fail; meaningful as theorem violations only when
  // auslander_gorenstein (resp. distributive) holds.
  std::vector<std::string> failed;
  bool ok() const { return failed.empty(); }
};

TheoremReport verify_main_theorems(const Poset& p,
                                   std::size_t max_permanent_n = kPermanentSizeGuard);

struct ProbeRow {
  std::string name;
  std::size_t elements = 0;
  bool auslander_gorenstein = false;
  bool pu_form = false;  // linear-extension ordering
  bool agree = false;
  std::optional<Rational> permanent_value;  // filled when a guard is supplied and met
};

struct ProbeReport {
  std::vector<ProbeRow> rows;
  std::size_t agreements = 0;
  std::vector<std::string> counterexamples;
  bool all_agree() const { return counterexamples.empty(); }
};

// Evidence gathering for the open question "Auslander regular iff U1 = id"
// over a corpus of bounded posets; never asserts the conjecture. Throws
// invalid-parameter on an unbounded corpus member. Permanents are reported
// when permanent_guard is given and the member is small enough.
ProbeReport question_probe(const std::vector<std::pair<std::string, Poset>>& corpus,
                           std::optional<std::size_t> permanent_guard = std::nullopt);

struct BijectionReport {
  Poset poset;
  std::vector<std::size_t> ordering;  // position -> element index
  Matrix cartan;
  Matrix coxeter;
  BruhatFactorisation bruhat_data;
  bool pu_form = false;
  std::optional<Rational> permanent_value;
  HomologicalProfile profile;
  bool is_lattice = false;
  bool distributive = false;
  // Permutations act on the report's ordering positions.
  std::optional<Permutation> grade_ar;
  std::optional<Permutation> grade_corollary;
  Permutation coxeter_perm;
  std::optional<Permutation> rowmotion_perm;
  // Coincidence flags, recomputed from the data above.
  std::optional<bool> ar_eq_corollary;
  std::optional<bool> grade_eq_rowmotion;
  std::optional<bool> coxeter_matches_grade;  // lambda(grade_perm(i)) == i
};

BijectionReport bijection_report(const Poset& p, const OrderingChoice& choice,
                                 std::size_t max_permanent_n = kPermanentSizeGuard);

}  // namespace coxlab
