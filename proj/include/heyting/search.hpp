#pragma once

#include <optional>
#include <string>
#include <vector>

#include "heyting/algebra.hpp"

namespace heyting {

// All homomorphisms a -> b extending `partial` (kUnassigned = free), in
// lexicographic order of the map.
std::vector<Homomorphism> homomorphism_search(const HeytingAlgebra& a, const HeytingAlgebra& b,
                                              const std::vector<int>& partial = {},
                                              bool injective = false,
                                              std::size_t max_results = SIZE_MAX);

struct SubHomWitness {
  Filter filter;         // congruence of b
  Homomorphism embedding;  // a -> b / filter
};

struct SubHomVerdict {
  bool holds = false;
  std::optional<SubHomWitness> witness;
};

// a is a subalgebra of a homomorphic image of b. Filters are tried in
// enumerate_filters order; the first embedding found is the witness.
SubHomVerdict in_sh(const HeytingAlgebra& a, const HeytingAlgebra& b);

// a embeds into b (no quotient).
std::optional<Homomorphism> find_embedding(const HeytingAlgebra& a, const HeytingAlgebra& b);

// Size, order profile, and sorted per-element up/down-set sizes.
std::vector<std::size_t> invariant_vector(const HeytingAlgebra& a);

struct IsoVerdict {
  bool isomorphic = false;
  std::optional<Homomorphism> iso;
};
IsoVerdict is_isomorphic(const HeytingAlgebra& a, const HeytingAlgebra& b);

// Lexicographically least upper-triangle order bit string over all linear
// extensions; equal codes iff isomorphic. Throws SizeLimit above 32 elements.
std::string canonical_code(const HeytingAlgebra& a);

}  // namespace heyting
