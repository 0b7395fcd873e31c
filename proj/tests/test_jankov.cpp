#include <doctest.h>

#include "heyting/corpus.hpp"
#include "heyting/jankov.hpp"
#include "heyting/ladder.hpp"
#include "heyting/search.hpp"
#include "heyting/validity.hpp"

using namespace heyting;

TEST_CASE("diagram formula has 3n^2 + n relations and holds at the identity") {
  for (const HeytingAlgebra& a : all_heyting_algebras(5)) {
    const Diagram d = diagram_formula(a);
    CHECK(d.relations.size() == 3 * a.size() * a.size() + a.size());
    CHECK(evaluate(d.formula, a.ops(), d.valuation) == a.top());
  }
  try {
    diagram_formula(chain(13));
    FAIL("no budget check");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::SizeLimit);
  }
}

TEST_CASE("Jankov formula needs an s.i. algebra") {
  try {
    jankov_formula(boolean_algebra(2));
    FAIL("accepted B(2)");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotSI);
  }
}

TEST_CASE("B refutes the Jankov formula of A iff A is in SH(B)") {
  const auto si = si_algebras(5);
  const auto all = all_heyting_algebras(7);
  for (const HeytingAlgebra& a : si) {
    const Formula chi = jankov_formula(a);
    for (const HeytingAlgebra& b : all) {
      CHECK(!is_valid(b, chi).valid == in_sh(a, b).holds);
    }
  }
}

TEST_CASE("term search names every generated element") {
  const OneGenerated z = rn_algebra(8);
  const std::vector<Generator> gens = {{0, z.generator}};
  const auto terms = terms_for_all(z.algebra, gens);
  const std::vector<Elem> v = {z.generator};
  for (std::size_t e = 0; e < z.algebra.size(); ++e) {
    REQUIRE(terms[e].has_value());
    CHECK(evaluate(*terms[e], z.algebra.ops(), v) == e);
  }
  CHECK(print(term_for_element(z.algebra, gens, z.algebra.neg(z.generator))) == "~p1");
}

TEST_CASE("term search reports ungenerated elements") {
  const HeytingAlgebra b = boolean_algebra(2);
  const std::vector<Generator> gens = {{0, b.bottom()}};
  try {
    term_for_element(b, gens, b.atoms().front());
    FAIL("atom reached from bottom");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotGenerated);
  }
}

TEST_CASE("de Jongh formula of Z(3) uses one variable and defines the same splitting") {
  const HeytingAlgebra z3 = rn_algebra(3).algebra;
  const DeJongh d = dejongh_formula(z3);
  CHECK(d.formula.variables().size() == 1);
  const Formula chi = jankov_formula(z3);
  for (const HeytingAlgebra& b : all_heyting_algebras(7)) {
    CHECK(is_valid(b, d.formula).valid == is_valid(b, chi).valid);
  }
}

TEST_CASE("de Jongh formulas agree with Jankov formulas on small s.i. algebras") {
  const auto all = all_heyting_algebras(6);
  for (const HeytingAlgebra& a : si_algebras(5)) {
    const Formula dj = dejongh_formula(a).formula;
    const Formula chi = jankov_formula(a);
    for (const HeytingAlgebra& b : all) CHECK(is_valid(b, dj).valid == is_valid(b, chi).valid);
  }
}

TEST_CASE("presentation validation") {
  const HeytingAlgebra c3 = chain(3);
  Presentation p{parse("p1 | ~p1"), c3, {1}, "C(3)"};
  try {
    validate_presentation(p);
    FAIL("formula is not top");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::InvalidInput);
  }
  Presentation q{parse("p1 -> p1"), c3, {0}, "C(3)"};
  try {
    validate_presentation(q);
    FAIL("bottom generates C(3)");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotGenerated);
  }
  const Presentation d = diagram_presentation(c3, "C(3)");
  CHECK_NOTHROW(validate_presentation(d));
  CHECK(print(characteristic_formula(d)).find("->") != std::string::npos);
}
