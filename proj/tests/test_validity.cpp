#include <doctest.h>

#include <random>

#include "heyting/corpus.hpp"
#include "heyting/ladder.hpp"
#include "heyting/validity.hpp"

using namespace heyting;

namespace {

// Lexicographic enumeration through `evaluate`, independent of the engines.
std::optional<std::vector<Elem>> brute_counter(const HeytingAlgebra& a, const Formula& f) {
  const int k = f.var_bound();
  std::vector<Elem> v(k, 0);
  while (true) {
    if (evaluate(f, a.ops(), v) != a.top()) return v;
    int i = k - 1;
    while (i >= 0 && v[i] + 1 == a.size()) v[i--] = 0;
    if (i < 0) return std::nullopt;
    ++v[i];
  }
}

}  // namespace

TEST_CASE("intuitionistic theorems are valid everywhere") {
  const std::vector<std::string> theorems = {
      "p1 -> p1", "p1 -> p2 -> p1", "~~~p1 <-> ~p1", "(p1 -> p2) -> ~p2 -> ~p1",
      "p1 & (p2 | p3) <-> p1 & p2 | p1 & p3", "~~(p1 | ~p1)"};
  for (const HeytingAlgebra& a : all_heyting_algebras(7)) {
    for (const auto& t : theorems) CHECK(is_valid(a, parse(t)).valid);
  }
}

TEST_CASE("excluded middle fails on Z(3) at the generator") {
  const OneGenerated z = rn_algebra(3);
  for (Engine e : {Engine::Naive, Engine::Propagate, Engine::Both}) {
    ValidityOptions opt;
    opt.engine = e;
    const Verdict v = is_valid(z.algebra, parse("p1 | ~p1"), opt);
    REQUIRE_FALSE(v.valid);
    CHECK((*v.counter)[0] == z.generator);
  }
}

TEST_CASE("naive engine returns the lexicographically least counter-valuation") {
  std::mt19937_64 rng(11);
  const auto algs = all_heyting_algebras(6);
  for (int i = 0; i < 300; ++i) {
    const Formula f = random_formula(rng, 4, 3);
    const HeytingAlgebra& a = algs[rng() % algs.size()];
    const Verdict v = naive_validity(a.ops(), f, 1'000'000);
    const auto expected = brute_counter(a, f);
    CHECK(v.valid == !expected.has_value());
    if (expected) CHECK(*v.counter == *expected);
  }
}

TEST_CASE("propagation agrees with brute force and its witnesses refute") {
  std::mt19937_64 rng(12);
  const auto algs = all_heyting_algebras(8);
  for (int i = 0; i < 600; ++i) {
    const Formula f = random_formula(rng, 5, 3);
    const HeytingAlgebra& a = algs[rng() % algs.size()];
    const Verdict v = propagate_validity(a, f);
    CHECK(v.valid == !brute_counter(a, f).has_value());
    if (!v.valid) CHECK(evaluate(f, a.ops(), *v.counter) != a.top());
  }
}

TEST_CASE("naive engine refuses oversized enumerations") {
  const HeytingAlgebra c = chain(10);
  try {
    naive_validity(c.ops(), parse("p1 | p2 | p3 | p4 | p5 | p6 | p7 | ~p1"), 1000);
    FAIL("no limit");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::SizeLimit);
  }
}

TEST_CASE("satisfying valuations match a filter over all tuples") {
  const HeytingAlgebra a = rn_algebra(5).algebra;
  const Formula f = parse("(p1 -> p2) & ~(p1 & p2)");
  std::vector<std::vector<Elem>> expected;
  for (Elem x = 0; x < a.size(); ++x) {
    for (Elem y = 0; y < a.size(); ++y) {
      const std::vector<Elem> v = {x, y};
      if (evaluate(f, a.ops(), v) == a.top()) expected.push_back(v);
    }
  }
  CHECK(satisfying_valuations(a, f) == expected);
}

TEST_CASE("consequence refutation finds a separating algebra") {
  const auto algs = all_heyting_algebras(6);
  const std::vector<Formula> premises = {parse("~p1 | ~~p1")};
  const auto hit = consequence_refute(premises, parse("p1 | ~p1"), algs);
  REQUIRE(hit.has_value());
  CHECK(is_valid(algs[*hit], premises[0]).valid);
  CHECK_FALSE(is_valid(algs[*hit], parse("p1 | ~p1")).valid);
  CHECK_FALSE(consequence_refute(std::vector<Formula>{parse("p1 | ~p1")}, parse("~~p1 -> p1"), algs));
}
