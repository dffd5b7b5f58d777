#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <vector>

#include "coxlab/matrix.hpp"
#include "coxlab/poset.hpp"

namespace coxlab {

using PosetPtr = std::shared_ptr<const Poset>;

// Functorial module over the incidence algebra of a poset: one space per
// element and one matrix per comparable pair x <= y, mapping coordinates of
// the space at x to the space at y (matrices act on column vectors from the
// left). The map at (x, x) is the identity and maps compose functorially.
class Representation {
 public:
  Representation(PosetPtr base, std::vector<std::size_t> dims);

  const PosetPtr& base_ptr() const { return base_; }
  const Poset& base() const { return *base_; }
  std::size_t dim(std::size_t x) const { return dims_[x]; }
  const std::vector<std::size_t>& dims() const { return dims_; }
  std::size_t total_dim() const;
  bool is_zero() const { return total_dim() == 0; }

  const Matrix& map(std::size_t x, std::size_t y) const;
  void set_map(std::size_t x, std::size_t y, Matrix m);

  // Checks identity maps, map shapes, and full functoriality; throws
  // internal-inconsistency on violation.
  void validate() const;

  // Debug dump: per element "x: dim", per pair "x<=y:" followed by the matrix
  // text format.
  std::string dump() const;

 private:
  PosetPtr base_;
  std::vector<std::size_t> dims_;
  std::vector<Matrix> maps_;  // indexed x * n + y for comparable pairs
};

using RepPtr = std::shared_ptr<const Representation>;

// Pointwise maps commuting with the two structures.
class Morphism {
 public:
  Morphism(RepPtr source, RepPtr target, std::vector<Matrix> components);

  const RepPtr& source() const { return source_; }
  const RepPtr& target() const { return target_; }
  const Matrix& component(std::size_t x) const { return components_[x]; }

  bool is_zero() const;
  std::size_t rank_at(std::size_t x) const;

  // Commuting-squares check; throws internal-inconsistency on violation.
  void validate() const;

  friend Morphism compose(const Morphism& outer, const Morphism& inner);

 private:
  RepPtr source_, target_;
  std::vector<Matrix> components_;
};

// Indecomposable constructors and the two distinguished sums. S(x) lives at x
// only; P(x) is the up-set of x with identity maps; I(x) the down-set.
RepPtr simple(PosetPtr p, std::size_t x);
RepPtr projective(PosetPtr p, std::size_t x);
RepPtr injective(PosetPtr p, std::size_t x);
RepPtr regular_module(PosetPtr p);  // sum of all P(x), in element order
RepPtr cogenerator(PosetPtr p);     // sum of all I(x), in element order

struct SumResult {
  RepPtr rep;
  // block offsets per summand per element (summand -> element -> column start)
  std::vector<std::vector<std::size_t>> offsets;
};
SumResult direct_sum(PosetPtr p, const std::vector<RepPtr>& parts);

// Per-element subspace data: dimension plus a basis, stored as a matrix whose
// columns are the basis vectors in the ambient space at that element.
struct SubspaceData {
  std::vector<std::size_t> dims;
  std::vector<Matrix> basis;
};

// radical at y = span of the images of map(x, y) over all x < y.
SubspaceData radical(const Representation& m);
// socle at x = intersection of the kernels of map(x, y) over all y > x.
SubspaceData socle(const Representation& m);
// top = m / radical; the basis columns are coset representatives.
SubspaceData top(const Representation& m);

std::vector<std::size_t> dim_vector(const Representation& m);

struct CoverResult {
  std::vector<std::size_t> multiplicities;  // copies of P(x) per element x
  Morphism epi;                             // cover -> m, onto, iso on tops
};
CoverResult projective_cover(const RepPtr& m);

struct EnvelopeResult {
  std::vector<std::size_t> multiplicities;  // copies of I(x) per element x
  Morphism mono;                            // m -> envelope, injective, iso on socles
};
EnvelopeResult injective_envelope(const RepPtr& m);

struct KernelResult {
  RepPtr rep;
  Morphism inclusion;  // rep -> source
};
KernelResult kernel(const Morphism& f);

struct CokernelResult {
  RepPtr rep;
  Morphism projection;  // target -> rep
};
CokernelResult cokernel(const Morphism& f);

}  // namespace coxlab
