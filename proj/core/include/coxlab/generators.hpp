#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "coxlab/lattice.hpp"
#include "coxlab/poset.hpp"

namespace coxlab {

// Named fixture and family generators. All are deterministic; random_poset is
// a pure function of (n, seed).
Poset chain(std::size_t n);
Poset antichain(std::size_t n);
Poset boolean_lattice(std::size_t n);  // 2^n elements
Poset m3();                            // diamond
Poset n5();                            // pentagon
Poset product(const Poset& a, const Poset& b);
Poset random_poset(std::size_t n, std::uint64_t seed);

// Bounded 10-element fixture (nodes "0".."9", 20 covers): 2-Gorenstein but
// not Auslander regular; its Coxeter permanent is -1501.
Poset paper_poset10();
// Non-distributive 8-element fixture lattice (nodes "1".."8", 11 covers)
// whose Coxeter matrix under the 1..8 ordering is pinned in the golden tests.
Poset paper_lattice8();

// Generator spec grammar: family[:param[:param]] with families
//   boolean chain antichain m3 n5 product random jrandom
//   paper-poset10 paper-lattice8
// product:a:b is the product of two chains; random:n draws random_poset(n,
// seed); jrandom:n is birkhoff(random_poset(n, seed)). Throws
// invalid-parameter for anything else.
Poset generate(const std::string& spec, std::uint64_t seed);

// True iff some relabelling identifies the two posets (brute force, intended
// for small inputs).
bool is_isomorphic(const Poset& a, const Poset& b);

// Every poset on 1..max_n elements, one representative per isomorphism class,
// in a deterministic order. Guarded at max_n <= 6.
std::vector<Poset> all_posets_up_to_iso(std::size_t max_n);

}  // namespace coxlab
