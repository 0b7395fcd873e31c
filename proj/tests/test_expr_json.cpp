#include <doctest.h>

#include "heyting/expr.hpp"
#include "heyting/json_io.hpp"
#include "heyting/ladder.hpp"
#include "heyting/search.hpp"

using namespace heyting;

TEST_CASE("algebra expressions") {
  CHECK(eval_algebra("Z(3)").size() == 3);
  CHECK(eval_algebra("Z(6)+Z(2)+Z(2)").size() == 8);
  CHECK(eval_algebra("C(2) x C(3)").size() == 6);
  CHECK(eval_algebra("Z(2)xZ(3)+C(3)").size() == 8);
  CHECK(eval_algebra("(Z(2)+Z(3))xZ(2)").size() == 8);
  CHECK(eval_algebra("B(3)").size() == 8);
  CHECK(eval_algebra("trunc(Zprime,10)").size() == 21);
  CHECK(eval_algebra("trunc(Zstar,10)").size() == 22);
  CHECK(eval_algebra("trunc(KG,10)").size() == 17);
  CHECK(eval_algebra("C(5)/nabla(2)").size() == 3);
  CHECK(is_isomorphic(eval_algebra("trunc(Zinf,7)"), rn_algebra(7).algebra).isomorphic);
  CHECK(max_ladder_index("Z(3)+trunc(KG,9)") == 9);
}

TEST_CASE("algebra expression errors") {
  try {
    eval_algebra("Z(2) x");
    FAIL("accepted");
  } catch (const SyntaxError& e) {
    CHECK(e.offset() == 6);
  }
  CHECK_THROWS_AS(eval_algebra("Q(3)"), SyntaxError);
  CHECK_THROWS_AS(eval_algebra("trunc(Zfoo,3)"), SyntaxError);
  CHECK_THROWS_AS(eval_algebra("C(3)/nabla(3)"), SyntaxError);
  CHECK_THROWS_AS(eval_algebra("(Z(2)"), SyntaxError);
}

TEST_CASE("algebra JSON round trip keeps the canonical form") {
  for (const char* e : {"Z(5)", "B(2)+C(3)", "Z(3)xZ(2)", "C(1)"}) {
    const HeytingAlgebra a = eval_algebra(e);
    const HeytingAlgebra b = algebra_from_json(Json::parse(algebra_to_json(a).dump()));
    CHECK(canonical_code(a) == canonical_code(b));
    CHECK(a.labels() == b.labels());
  }
}

TEST_CASE("algebra JSON import validates") {
  CHECK_THROWS_AS(algebra_from_json(Json::parse(R"J({"size": 2})J")), Error);
  CHECK_THROWS_AS(algebra_from_json(Json::parse(R"J({"size": 2, "leq": [[1,1],[0]]})J")), Error);
  try {
    algebra_from_json(Json::parse(R"J({"size": 3, "leq": [[1,1,1],[0,1,0],[0,0,1]]})J"));
    FAIL("not a lattice accepted");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotALattice);
  }
}

TEST_CASE("interior algebra JSON round trip") {
  const InteriorAlgebra b = span(rn_algebra(4).algebra).algebra;
  const InteriorAlgebra c = interior_from_json(Json::parse(interior_to_json(b).dump()));
  CHECK(c.box_table() == b.box_table());
  CHECK_THROWS_AS(interior_from_json(Json::parse(R"J({"atoms": 1, "box": [0, 0]})J")), Error);
}

TEST_CASE("presentation JSON") {
  const Json j = Json::parse(R"J({
    "formula": "~(p1 & p2) & (~~p2 -> p2) & ((~~p1 -> p1) -> p2 | ~p2) & (((~~p1 -> p1) -> p1 | ~p1) -> p2 | ~p2)",
    "vars": ["p1", "p2"], "target": "trunc(Zprime,10)", "valuation": [2, 1],
    "variety": {"generators": ["trunc(Zstar,10)"], "bound": 8}})J");
  const PresentationFile pf = presentation_from_json(j);
  const Presentation ref = zprime_presentation(10);
  CHECK(pf.presentation.valuation == ref.valuation);
  CHECK(pf.presentation.formula == ref.formula);
  CHECK(pf.variety.mode == Evidence::Constructed);
  CHECK(pf.variety.bound == 8);
  const PresentationFile again = presentation_from_json(presentation_to_json(pf.presentation, pf.variety));
  CHECK(again.presentation.valuation == pf.presentation.valuation);
  CHECK(again.variety.generator_exprs == pf.variety.generator_exprs);

  Json no_gen = j;
  no_gen["variety"].erase("generators");
  CHECK(presentation_from_json(no_gen).variety.mode == Evidence::AxiomChecked);

  Json missing = j;
  missing["vars"] = Json::array({"p1"});
  missing["valuation"] = Json::array({2});
  try {
    presentation_from_json(missing);
    FAIL("unbound p2 accepted");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::UnboundVariable);
  }
}
