#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "heyting/algebra.hpp"
#include "heyting/formula.hpp"
#include "heyting/jankov.hpp"

namespace heyting {

enum class Evidence { Constructed, AxiomChecked };

// A variety given by generator algebras (Constructed) or by axioms
// (AxiomChecked; no axioms means all Heyting algebras).
struct VarietyHandle {
  std::vector<std::string> generator_exprs;
  std::vector<HeytingAlgebra> generators;
  std::vector<Formula> axioms;
  std::size_t bound = 8;
  Evidence mode = Evidence::Constructed;
};

struct CorpusEntry {
  HeytingAlgebra algebra;
  std::string evidence;
};

// S.i. members of the variety with at most `bound` elements, one per
// isomorphism class, ordered by size and canonical form. Constructed mode
// keeps the algebras embeddable into a quotient of some generator (s.i.
// members of a finitely generated variety lie in SH of the generators).
std::vector<CorpusEntry> build_corpus(const VarietyHandle& handle);
std::vector<HeytingAlgebra> corpus_algebras(const std::vector<CorpusEntry>& entries);

enum class Outcome { Refuted, VerifiedUpToBound };

struct DefinesWitness {
  std::size_t corpus_index;
  std::vector<Elem> tuple;  // variable i -> element of the corpus algebra
};

struct DefinesVerdict {
  Outcome outcome = Outcome::VerifiedUpToBound;
  std::optional<DefinesWitness> witness;
  std::size_t bound = 0;
  std::size_t algebras = 0;
  std::size_t tuples = 0;
  bool operator==(const DefinesVerdict&) const = default;
};
std::string describe(const DefinesVerdict& v);

// For every corpus algebra B and every tuple b with A(b) = top, tests whether
// the generator map extends to a homomorphism target -> B.
DefinesVerdict check_defines(const Presentation& p, std::span<const HeytingAlgebra> corpus,
                             std::size_t bound);

// Moves every variable of the presentation up by `offset`; the valuation is
// padded with bottom for the vacated indices.
Presentation shift_presentation(const Presentation& p, int offset);

// pa presents A' + Z2, pb presents Z2 + B' over disjoint variables; the
// anchors name the coatom of A and the atom of B (computed when absent).
// The result presents A' + B' with the merged valuation.
Presentation concat_defining_formula(const Presentation& pa, const Presentation& pb,
                                     std::optional<Formula> a_anchor = std::nullopt,
                                     std::optional<Formula> b_anchor = std::nullopt);

// The three conjuncts of the compact Z' presentation formula in p1, p2.
std::vector<Formula> zprime_compact_conjuncts();
// Its four-conjunct expansion.
Formula zprime_formula();
// zprime_formula with p1 -> <g,0>, p2 -> <0,1> in trunc(Zprime, k); k >= 6.
Presentation zprime_presentation(std::size_t k);

}  // namespace heyting
