#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "heyting/algebra.hpp"
#include "heyting/formula.hpp"

namespace heyting {

// A formula with a valuation claimed to define `target`.
struct Presentation {
  Formula formula;
  HeytingAlgebra target;
  std::vector<Elem> valuation;  // variable i -> element
  std::string target_expr;      // display only
};

// Throws NotGenerated if the valuation's image does not generate the target
// and InvalidInput if the formula is not top under the valuation.
void validate_presentation(const Presentation& p);

struct Diagram {
  Formula formula;
  std::vector<Formula> relations;  // one (x <-> y) pair per table entry
  std::vector<Elem> valuation;     // identity: p(i+1) -> element i
};

inline constexpr std::size_t kDefaultVariableBudget = 12;

// Relations p_i o p_j <-> p_k for meet, join, imp (row-major, in that order)
// followed by ~p_i <-> p_j; 3n^2 + n relations.
Diagram diagram_formula(const HeytingAlgebra& a, std::size_t budget = kDefaultVariableBudget);

// D -> p_op for s.i. algebras.
Formula jankov_formula(const HeytingAlgebra& a, std::size_t budget = kDefaultVariableBudget);

struct Generator {
  int var;
  Elem elem;
};

// Breadth-first term search: terms of depth d+1 are combinations of the
// elements known after depth d, tried in the order meet, join, imp (operands
// by discovery order), then neg. Throws NotGenerated.
Formula term_for_element(const HeytingAlgebra& a, const std::vector<Generator>& gens, Elem target);

// Terms for every element reachable from `gens`; entry is empty when unreached.
std::vector<std::optional<Formula>> terms_for_all(const HeytingAlgebra& a,
                                                  const std::vector<Generator>& gens);

// Reduced diagram over the non-top join-irreducibles implying the term of
// the opremum.
struct DeJongh {
  Formula formula;
  std::vector<Elem> generators;  // variable i -> element
};
DeJongh dejongh_formula(const HeytingAlgebra& a);

// A(p) -> B(p) where B names the target's opremum through the valuation.
Formula characteristic_formula(const Presentation& p);

// The identity diagram presentation of a finite algebra.
Presentation diagram_presentation(const HeytingAlgebra& a, const std::string& expr = {},
                                  std::size_t budget = kDefaultVariableBudget);

}  // namespace heyting
