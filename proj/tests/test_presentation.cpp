#include <doctest.h>

#include "heyting/corpus.hpp"
#include "heyting/expr.hpp"
#include "heyting/ladder.hpp"
#include "heyting/presentation.hpp"
#include "heyting/search.hpp"
#include "heyting/validity.hpp"

using namespace heyting;

namespace {

// Every s.i. algebra up to `bound` in SH of the generator, by direct search.
std::size_t sh_count(const HeytingAlgebra& gen, std::size_t bound) {
  std::size_t n = 0;
  for (const HeytingAlgebra& c : si_algebras(bound)) n += in_sh(c, gen).holds;
  return n;
}

}  // namespace

TEST_CASE("constructed corpus is the s.i. part of SH of the generator") {
  for (const char* e : {"Z(5)", "Z(3)xZ(2)+Z(2)", "B(2)+C(2)"}) {
    VarietyHandle h;
    h.generator_exprs = {e};
    h.generators = {eval_algebra(e)};
    h.bound = 7;
    const auto corpus = build_corpus(h);
    CHECK(corpus.size() == sh_count(h.generators[0], 7));
    for (const auto& entry : corpus) CHECK(entry.evidence.rfind("embeds into", 0) == 0);
  }
}

TEST_CASE("axiom-checked corpus filters by validity") {
  VarietyHandle h;
  h.mode = Evidence::AxiomChecked;
  h.axioms = {parse("(p1 -> p2) | (p2 -> p1)")};
  h.bound = 6;
  const auto corpus = build_corpus(h);
  // Linear algebras: s.i. ones are chains of length 2..6.
  CHECK(corpus.size() == 5);
  for (const auto& entry : corpus) CHECK(entry.algebra.coatoms().size() == 1);
}

TEST_CASE("the diagram presentation defines its algebra") {
  const HeytingAlgebra a = eval_algebra("Z(4)");
  const Presentation p = diagram_presentation(a, "Z(4)");
  const auto corpus = si_algebras(6);
  const DefinesVerdict v = check_defines(p, corpus, 6);
  CHECK(v.outcome == Outcome::VerifiedUpToBound);
  CHECK(describe(v) == "VERIFIED-UP-TO-BOUND(6)");
}

TEST_CASE("a weak formula does not define the algebra") {
  const HeytingAlgebra c3 = chain(3);
  const Presentation p{parse("p1 -> p1"), c3, {1}, "C(3)"};
  const auto corpus = si_algebras(4);
  const DefinesVerdict v = check_defines(p, corpus, 4);
  REQUIRE(v.outcome == Outcome::Refuted);
  CHECK(describe(v).rfind("REFUTED(algebra ", 0) == 0);
}

TEST_CASE("Z' presentation: elements, validity and limits") {
  const Presentation p = zprime_presentation(10);
  CHECK(p.target.size() == 21);
  CHECK(evaluate(p.formula, p.target.ops(), p.valuation) == p.target.top());
  CHECK(p.target.label(p.valuation[0]) == "<g,0>");
  CHECK(p.target.label(p.valuation[1]) == "<0,1>");
  try {
    zprime_presentation(5);
    FAIL("k = 5 accepted");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::TruncationTooSmall);
  }
  // The compact and expanded formulas agree on the truncation.
  const Formula compact = Formula::conj_all(zprime_compact_conjuncts());
  for (Elem x = 0; x < p.target.size(); ++x) {
    for (Elem y = 0; y < p.target.size(); ++y) {
      const std::vector<Elem> v = {x, y};
      CHECK(evaluate(compact, p.target.ops(), v) == evaluate(p.formula, p.target.ops(), v));
    }
  }
}

TEST_CASE("concatenated presentation of two chains") {
  const Presentation pa = diagram_presentation(chain(3), "C(3)");
  const Presentation pb = shift_presentation(diagram_presentation(chain(3), "C(3)"), 3);
  CHECK(pb.valuation.size() == 6);
  const Presentation c = concat_defining_formula(pa, pb);
  CHECK(is_isomorphic(c.target, chain(3)).isomorphic);
  CHECK(evaluate(c.formula, c.target.ops(), c.valuation) == c.target.top());
  try {
    concat_defining_formula(pa, pa);
    FAIL("shared variables accepted");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::VariableClash);
  }
  const Presentation square = shift_presentation(diagram_presentation(boolean_algebra(2), "B(2)"), 3);
  try {
    concat_defining_formula(pa, square);
    FAIL("B(2) has two atoms");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::BadAnchor);
  }
  try {
    concat_defining_formula(pa, pb, parse("p1"));
    FAIL("wrong anchor accepted");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::BadAnchor);
  }
}
