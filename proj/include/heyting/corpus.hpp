#pragma once

#include <string>
#include <vector>

#include "heyting/algebra.hpp"

namespace heyting {

// One representative per isomorphism class of finite Heyting algebras with
// at most `max_size` elements (the one-element algebra included). Built as
// upset algebras of all finite posets; ordered by size, then by the
// canonical code of the dual poset.
std::vector<HeytingAlgebra> all_heyting_algebras(std::size_t max_size);

// The s.i. members of all_heyting_algebras(max_size).
std::vector<HeytingAlgebra> si_algebras(std::size_t max_size);

// Lexicographically least upper-triangle order string over all linear
// extensions of the poset.
std::string poset_code(const Poset& p);

// Poset of join-irreducible elements (the dual frame, ordered as in `a`).
Poset dual_poset(const HeytingAlgebra& a);

}  // namespace heyting
