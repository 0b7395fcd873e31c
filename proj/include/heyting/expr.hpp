#pragma once

#include <string>
#include <string_view>

#include "heyting/algebra.hpp"

namespace heyting {

// Algebra expressions:
//   sum     := product ('+' product)*
//   product := postfix ('x' postfix)*
//   postfix := atom ('/' 'nabla' '(' index ')')*
//   atom    := 'Z(' n ')' | 'C(' n ')' | 'B(' n ')' | 'trunc(' name ',' k ')' | '(' sum ')'
// Z(n) is the n-element one-generated algebra, C(n) the n-chain, B(n) the
// Boolean algebra with n atoms. Throws SyntaxError with a byte offset.
HeytingAlgebra eval_algebra(std::string_view text);

// Largest n of any Z(n) or trunc(.., k) in the text; 0 if none.
std::size_t max_ladder_index(std::string_view text);

}  // namespace heyting
