#include "coxlab/resolution.hpp"

#include "coxlab/error.hpp"

namespace coxlab {

Resolution min_projective_resolution(const RepPtr& m, std::optional<std::size_t> max_len,
                                     bool keep_morphisms) {
  if (m->is_zero()) fail(errc::invalid_parameter, "resolution of the zero module");
  const std::size_t limit = max_len.value_or(m->base().size());
  Resolution res;
  res.kind = Resolution::Kind::projective;
  res.module = m;
  RepPtr current = m;
  std::optional<Morphism> prev_inclusion;  // current syzygy -> previous term
  for (std::size_t degree = 0;; ++degree) {
    if (degree > limit) {
      fail(errc::length_exceeded, "projective resolution longer than " + std::to_string(limit));
    }
    auto cover = projective_cover(current);
    res.terms.push_back(cover.multiplicities);
    if (keep_morphisms) {
      res.term_reps.push_back(cover.epi.source());
      if (degree == 0) {
        res.augmentation = cover.epi;
      } else {
        res.differentials.push_back(compose(*prev_inclusion, cover.epi));
      }
    }
    auto ker = kernel(cover.epi);
    if (ker.rep->is_zero()) break;
    prev_inclusion = std::move(ker.inclusion);
    current = ker.rep;
  }
  return res;
}

Resolution min_injective_coresolution(const RepPtr& m, std::optional<std::size_t> max_len,
                                      bool keep_morphisms) {
  if (m->is_zero()) fail(errc::invalid_parameter, "coresolution of the zero module");
  const std::size_t limit = max_len.value_or(m->base().size());
  Resolution res;
  res.kind = Resolution::Kind::injective;
  res.module = m;
  RepPtr current = m;
  std::optional<Morphism> prev_projection;  // previous term -> current cosyzygy
  for (std::size_t degree = 0;; ++degree) {
    if (degree > limit) {
      fail(errc::length_exceeded, "injective coresolution longer than " + std::to_string(limit));
    }
    auto envelope = injective_envelope(current);
    res.terms.push_back(envelope.multiplicities);
    if (keep_morphisms) {
      res.term_reps.push_back(envelope.mono.target());
      if (degree == 0) {
        res.augmentation = envelope.mono;
      } else {
        res.differentials.push_back(compose(envelope.mono, *prev_projection));
      }
    }
    auto coker = cokernel(envelope.mono);
    if (coker.rep->is_zero()) break;
    prev_projection = std::move(coker.projection);
    current = coker.rep;
  }
  return res;
}

std::size_t pdim(const RepPtr& m) {
  return min_projective_resolution(m, std::nullopt, /*keep_morphisms=*/false).length();
}

std::size_t idim(const RepPtr& m) {
  return min_injective_coresolution(m, std::nullopt, /*keep_morphisms=*/false).length();
}

}  // namespace coxlab
