#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <set>
#include <vector>

#include "coxlab/permutation.hpp"
#include "coxlab/poset.hpp"
#include "coxlab/representation.hpp"
#include "coxlab/resolution.hpp"

namespace coxlab {

// Per-simple homological data of the incidence algebra, plus the global
// Gorenstein verdicts. All dimensions are finite here: incidence algebras
// have finite global dimension.
struct HomologicalProfile {
  std::vector<std::size_t> grade;            // grade of S(x)
  std::vector<std::size_t> cograde;          // cograde of S(x)
  std::vector<std::size_t> pdim_injective;   // pdim I(x)
  std::vector<std::size_t> idim_projective;  // idim P(x)
  std::vector<std::size_t> pdim_simple;      // pdim S(x)
  std::vector<bool> perfect;                 // grade S(x) == pdim S(x)
  std::size_t gldim = 0;
  // Largest n for which the algebra is verified n-Gorenstein; the coresolution
  // of the regular module ends, so idim(A) + 1 means n-Gorenstein for all n.
  std::size_t gorenstein_level = 0;
  bool is_auslander_gorenstein = false;
  bool is_diagonal = false;  // meaningful only when is_auslander_gorenstein
  std::set<std::size_t> dominant_numbers;
};

// Memoises the handful of resolutions everything else is read off from: the
// injective coresolution of the regular module, the projective resolution of
// the cogenerator, and the per-element resolutions.
class HomologyEngine {
 public:
  explicit HomologyEngine(PosetPtr p);

  const Poset& poset() const { return *p_; }
  const PosetPtr& poset_ptr() const { return p_; }

  const Resolution& regular_coresolution();
  const Resolution& cogenerator_resolution();
  const Resolution& injective_resolution(std::size_t x);     // of I(x)
  const Resolution& projective_coresolution(std::size_t x);  // of P(x)
  const Resolution& simple_resolution(std::size_t x);        // of S(x)

  std::size_t grade(std::size_t x);
  std::size_t cograde(std::size_t x);
  std::size_t pdim_injective(std::size_t x);
  std::size_t idim_projective(std::size_t x);
  std::size_t pdim_simple(std::size_t x);
  std::size_t gldim();

  // pdim of coresolution term i of the regular module (max over summands).
  std::size_t term_pdim(std::size_t i);

  bool is_n_gorenstein(std::size_t n);
  std::size_t gorenstein_level();
  // Checks grade S(x) == pdim I(x) for all x and cross-checks the direct
  // definition pdim I^i <= i; throws internal-inconsistency if they disagree.
  bool is_auslander_gorenstein();

  std::set<std::size_t> dominant_numbers();
  std::vector<std::size_t> perfect_simples();
  bool is_diagonal();  // throws not-auslander-gorenstein otherwise

  // x -> y where P(y) is the final term of the minimal projective resolution
  // of I(x); requires that term to be indecomposable (last-term-decomposable
  // otherwise, which refutes the Auslander-Gorenstein hypothesis).
  Permutation grade_permutation_ar();
  // x -> the unique y with idim P(y) == grade S(x) and I(x) occurring in the
  // coresolution of P(y); not-unique when the hypothesis fails.
  Permutation grade_permutation_corollary();

  HomologicalProfile profile();

 private:
  PosetPtr p_;
  std::optional<Resolution> regular_, cogen_;
  std::vector<std::optional<Resolution>> inj_res_, proj_cores_, simple_res_;
};

// One-shot conveniences matching the engine accessors.
std::size_t grade(const Poset& p, std::size_t x);
std::size_t cograde(const Poset& p, std::size_t x);
std::size_t gldim(const Poset& p);
bool is_n_gorenstein(const Poset& p, std::size_t n);
bool is_auslander_gorenstein(const Poset& p);
std::set<std::size_t> dominant_numbers(const Poset& p);
std::vector<std::size_t> perfect_simples(const Poset& p);
bool is_diagonal(const Poset& p);
Permutation grade_permutation_ar(const Poset& p);
Permutation grade_permutation_corollary(const Poset& p);
HomologicalProfile homological_profile(const Poset& p);

}  // namespace coxlab
