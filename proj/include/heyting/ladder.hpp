#pragma once

#include <string>

#include "heyting/algebra.hpp"

namespace heyting {

// Finite part of the free one-generated algebra: the subalgebra generated by
// the valuation of p in the upsets of the depth-`depth` one-variable
// universal model.
struct LadderPortion {
  HeytingAlgebra algebra;
  Elem generator;
  std::size_t frame_points;
};
LadderPortion ladder_portion(std::size_t depth);

struct OneGenerated {
  HeytingAlgebra algebra;
  Elem generator;
};

// The n-element one-generated algebra Z_n, obtained as a quotient of a ladder
// portion with margin. Throws NoSuchAlgebra when no quotient has exactly n
// elements up to the explored depth.
OneGenerated rn_algebra(std::size_t n);

// Truncations of the built-in infinite algebras; every Z factor is replaced
// by rn_algebra(k).
//   Zinf   = Z
//   Zprime = Z x Z2 + Z2
//   Zstar  = Z x Z2 + C(3)
//   KG     = Z + Z7 + Z2
HeytingAlgebra truncation(const std::string& name, std::size_t k);
bool is_truncation_name(const std::string& name);

// Named elements of trunc(Zprime, k): a = <g,0>, b = <0,1>.
struct ZPrimeElements {
  Elem a;
  Elem b;
  Elem opremum;  // <1,1>
};
ZPrimeElements zprime_elements(const HeytingAlgebra& zprime, std::size_t k);

}  // namespace heyting
