#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "coxlab/representation.hpp"

namespace coxlab {

// Minimal projective resolution or injective coresolution. terms[d][x] counts
// the copies of P(x) (resp. I(x)) in degree d. In full form the terms and
// differentials are retained; the summary form keeps only the multiplicity
// vectors.
struct Resolution {
  enum class Kind { projective, injective };

  Kind kind = Kind::projective;
  RepPtr module;
  std::vector<std::vector<std::size_t>> terms;
  // Retained only when built with keep_morphisms: term representations, the
  // augmentation (term 0 <-> module) and differentials d_i between degrees
  // i and i-1 (projective: term_i -> term_{i-1}; injective: term_{i-1} -> term_i).
  std::vector<RepPtr> term_reps;
  std::optional<Morphism> augmentation;
  std::vector<Morphism> differentials;

  std::size_t length() const { return terms.empty() ? 0 : terms.size() - 1; }
  bool occurs(std::size_t x, std::size_t degree) const {
    return degree < terms.size() && terms[degree][x] > 0;
  }
};

// Iterated projective cover / kernel until the syzygy vanishes. max_len
// defaults to the element count, a safe bound for incidence algebras;
// exceeding it throws length-exceeded (an internal bug, not a user error).
Resolution min_projective_resolution(const RepPtr& m,
                                     std::optional<std::size_t> max_len = std::nullopt,
                                     bool keep_morphisms = true);

// Iterated injective envelope / cokernel until the cosyzygy vanishes.
Resolution min_injective_coresolution(const RepPtr& m,
                                      std::optional<std::size_t> max_len = std::nullopt,
                                      bool keep_morphisms = true);

std::size_t pdim(const RepPtr& m);
std::size_t idim(const RepPtr& m);

}  // namespace coxlab
