#include <doctest.h>

#include <random>

#include "heyting/algebra.hpp"
#include "heyting/formula.hpp"

using namespace heyting;

TEST_CASE("printing uses minimal parentheses") {
  CHECK(print(parse("p1 -> p2 -> p3")) == "p1 -> p2 -> p3");
  CHECK(print(parse("(p1 -> p2) -> p3")) == "(p1 -> p2) -> p3");
  CHECK(print(parse("p1 & p2 | p3")) == "p1 & p2 | p3");
  CHECK(print(parse("p1 & (p2 | p3)")) == "p1 & (p2 | p3)");
  CHECK(print(parse("~~p1 -> p1")) == "~~p1 -> p1");
  CHECK(print(parse("~(p1 & p2)")) == "~(p1 & p2)");
  CHECK(print(parse("[](([]p1) -> ([]p2))")) == "[]([]p1 -> []p2)");
  CHECK(print(parse("1 & 0")) == "1 & 0");
}

TEST_CASE("<-> expands to a pair of implications") {
  CHECK(parse("p1 <-> p2") == parse("(p1 -> p2) & (p2 -> p1)"));
  CHECK_THROWS_AS(parse("p1 <-> p2 <-> p3"), SyntaxError);
}

TEST_CASE("syntax errors report offsets") {
  try {
    parse("((p");
    FAIL("accepted");
  } catch (const SyntaxError& e) {
    CHECK(e.offset() == 3);
  }
  try {
    parse("p1 & ");
    FAIL("accepted");
  } catch (const SyntaxError& e) {
    CHECK(e.offset() == 5);
  }
  CHECK_THROWS_AS(parse("p0"), SyntaxError);
  CHECK_THROWS_AS(parse("p1 p2"), SyntaxError);
}

TEST_CASE("random formulas survive a print/parse round trip") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 500; ++i) {
    const Formula f = random_formula(rng, 5, 3);
    CHECK(parse(print(f)) == f);
    CHECK(f.depth() <= 5);
    CHECK(f.var_bound() <= 3);
  }
}

TEST_CASE("substitution, shifting and normalizing") {
  const Formula f = parse("p1 -> p2 | p1");
  CHECK(substitute(f, {{0, parse("p3 & p4")}}) == parse("p3 & p4 -> p2 | p3 & p4"));
  CHECK(shift_variables(f, 2) == parse("p3 -> p4 | p3"));
  CHECK(normalize(parse("p4 -> p7")) == parse("p1 -> p2"));
  CHECK(parse("p2 & p5").variables() == std::vector<int>{1, 4});
  CHECK(conjuncts(parse("p1 & (p2 | p3) & p4")).size() == 3);
}

TEST_CASE("evaluation in a chain") {
  const HeytingAlgebra c = chain(3);
  const std::vector<Elem> v = {1, 2};
  CHECK(evaluate(parse("p1 -> p2"), c.ops(), v) == 2);
  CHECK(evaluate(parse("p2 -> p1"), c.ops(), v) == 1);
  CHECK(evaluate(parse("~p1"), c.ops(), v) == 0);
  CHECK(evaluate(parse("~~p1"), c.ops(), v) == 2);
  CHECK(evaluate(parse("0 -> p1"), c.ops(), v) == 2);
  CHECK_THROWS_AS(evaluate(parse("p3"), c.ops(), v), Error);
  CHECK_THROWS_AS(evaluate(parse("[]p1"), c.ops(), v), Error);
}
