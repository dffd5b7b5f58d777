#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "coxlab/matrix.hpp"
#include "coxlab/permutation.hpp"
#include "coxlab/poset.hpp"

namespace coxlab {

// A poset together with total meet/join tables and its global extremes.
struct LatticeStructure {
  Poset base;
  std::vector<std::size_t> meet;  // n*n row-major, element indices
  std::vector<std::size_t> join;
  std::size_t bottom = 0;
  std::size_t top = 0;

  std::size_t size() const { return base.size(); }
  std::size_t meet_of(std::size_t x, std::size_t y) const { return meet[x * size() + y]; }
  std::size_t join_of(std::size_t x, std::size_t y) const { return join[x * size() + y]; }
};

// Pair with no greatest lower bound (meet_failed) or least upper bound.
struct LatticeFailure {
  std::size_t x = 0, y = 0;
  bool meet_failed = false;
};

// Builds the meet/join tables, or returns the witness pair lacking a bound.
std::variant<LatticeStructure, LatticeFailure> lattice_structure(const Poset& p);

// As above but throws not-a-lattice with the witness in the message.
LatticeStructure require_lattice(const Poset& p);

struct DistributivityResult {
  bool distributive = false;
  // witness triple (x, y, z) with x /\ (y \/ z) != (x /\ y) \/ (x /\ z)
  std::optional<std::array<std::size_t, 3>> witness;
};

DistributivityResult is_distributive(const LatticeStructure& l);

// Elements with exactly one lower / upper cover. The bottom is never
// join-irreducible and the top never meet-irreducible.
std::vector<std::size_t> join_irreducibles(const LatticeStructure& l);
std::vector<std::size_t> meet_irreducibles(const LatticeStructure& l);

// Down-closed subset of a poset, stored as a membership mask.
struct OrderIdeal {
  std::vector<bool> members;

  std::size_t count() const;
  bool contains(std::size_t x) const { return members[x]; }
  friend bool operator==(const OrderIdeal& a, const OrderIdeal& b) = default;
};

bool is_order_ideal(const Poset& p, const std::vector<bool>& members);
// Ideal generated by the given elements (down-closure).
OrderIdeal generated_ideal(const Poset& p, const std::vector<std::size_t>& gens);
// All order ideals; aborts with size-guard-exceeded past max_count.
std::vector<OrderIdeal> all_order_ideals(const Poset& p, std::size_t max_count);

inline constexpr std::size_t kBirkhoffIdealGuard = 4096;

// The lattice J(q) of order ideals of q, ordered by inclusion. Elements are
// labelled "{a,b,...}" with members listed in q's label order and sorted by
// (cardinality, member indices), which is a linear extension of inclusion.
LatticeStructure birkhoff(const Poset& q, std::size_t max_ideals = kBirkhoffIdealGuard);

// Rowmotion on a distributive lattice: identify x with the order ideal of
// join-irreducibles below it; the image is the element whose ideal is
// generated by the minimal elements of the complement. Throws
// not-distributive.
std::size_t rowmotion(const LatticeStructure& l, std::size_t x);
// x (as element index) -> rowmotion(x), for the whole lattice at once.
std::vector<std::size_t> rowmotion_map(const LatticeStructure& l);

// Induced lattice on { y : y >= z }, inheriting l's linear-extension order.
// Returns the new lattice plus the original indices of its elements.
struct UpperInterval {
  LatticeStructure lattice;
  std::vector<std::size_t> original;  // new index -> index in l
};
UpperInterval upper_interval(const LatticeStructure& l, std::size_t z);

// Meet-irreducible encoding of a lattice all of whose proper upper intervals
// are distributive: m_poset is the set of meet-irreducibles (bottom removed
// if meet-irreducible) with the order dualised so that zeta images are order
// ideals; zeta sends x != bottom to the meet-irreducibles above x.
struct MeetIrreducibleEncoding {
  Poset m_poset;
  std::vector<std::size_t> m_elements;  // m_poset index -> lattice element index
  // lattice element index -> ideal of m_poset; nullopt exactly at the bottom
  std::vector<std::optional<OrderIdeal>> zeta;
  std::vector<OrderIdeal> family;  // the image of zeta, sorted canonically
};

// Throws precondition-violated naming a witness interval whose lattice is not
// distributive; internal-inconsistency if a structural invariant fails.
MeetIrreducibleEncoding meet_irreducible_encoding(const LatticeStructure& l);

// Row of the Coxeter matrix predicted by the simplicial-complex formula, as a
// 1 x n matrix over the lattice's linear-extension positions.
Matrix euler_row(const LatticeStructure& l, const MeetIrreducibleEncoding& enc, std::size_t y);

}  // namespace coxlab
