#include <doctest.h>

#include <algorithm>
#include <map>

#include "heyting/algebra.hpp"
#include "heyting/corpus.hpp"
#include "heyting/ladder.hpp"
#include "heyting/search.hpp"

using namespace heyting;

namespace {

// Brute-force relative pseudocomplement from the order alone.
Elem imp_oracle(const HeytingAlgebra& a, Elem x, Elem y) {
  std::optional<Elem> best;
  for (std::size_t z = 0; z < a.size(); ++z) {
    const Elem e = static_cast<Elem>(z);
    if (!a.leq(a.meet(x, e), y)) continue;
    if (!best || a.leq(*best, e)) best = e;
  }
  return *best;
}

}  // namespace

TEST_CASE("chain operations match min/max and the chain implication") {
  const HeytingAlgebra c = chain(5);
  for (Elem x = 0; x < 5; ++x) {
    for (Elem y = 0; y < 5; ++y) {
      CHECK(c.meet(x, y) == std::min(x, y));
      CHECK(c.join(x, y) == std::max(x, y));
      CHECK(c.imp(x, y) == (x <= y ? 4 : y));
    }
  }
}

TEST_CASE("boolean algebra operations are set operations on bitmasks") {
  const HeytingAlgebra b = boolean_algebra(3);
  REQUIRE(b.size() == 8);
  // Locate each element by its down-set of atoms.
  const auto atoms = b.atoms();
  REQUIRE(atoms.size() == 3);
  auto mask = [&](Elem e) {
    unsigned m = 0;
    for (std::size_t i = 0; i < atoms.size(); ++i) {
      if (b.leq(atoms[i], e)) m |= 1u << i;
    }
    return m;
  };
  for (Elem x = 0; x < 8; ++x) {
    for (Elem y = 0; y < 8; ++y) {
      CHECK(mask(b.meet(x, y)) == (mask(x) & mask(y)));
      CHECK(mask(b.join(x, y)) == (mask(x) | mask(y)));
      CHECK(mask(b.imp(x, y)) == ((~mask(x) | mask(y)) & 7u));
    }
  }
  CHECK(is_boolean(b));
  CHECK_FALSE(is_si(b));
}

TEST_CASE("implication tables agree with the order-based oracle") {
  for (const HeytingAlgebra& a : all_heyting_algebras(7)) {
    for (std::size_t x = 0; x < a.size(); ++x) {
      for (std::size_t y = 0; y < a.size(); ++y) {
        CHECK(a.imp(static_cast<Elem>(x), static_cast<Elem>(y)) ==
              imp_oracle(a, static_cast<Elem>(x), static_cast<Elem>(y)));
      }
    }
  }
}

TEST_CASE("non-lattices and non-distributive lattices are rejected") {
  // Two incomparable maximal elements.
  OrderTable v = {{true, true, true}, {false, true, false}, {false, false, true}};
  CHECK_THROWS_AS(HeytingAlgebra::from_order(v), Error);
  // Diamond M3 is a lattice but not residuated.
  OrderTable m3(5, std::vector<bool>(5, false));
  for (int i = 0; i < 5; ++i) {
    m3[0][i] = true;
    m3[i][4] = true;
    m3[i][i] = true;
  }
  try {
    HeytingAlgebra::from_order(m3);
    FAIL("M3 accepted");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotResiduated);
  }
  OrderTable cyclic = {{true, true}, {true, true}};
  CHECK_THROWS_AS(HeytingAlgebra::from_order(cyclic), Error);
}

TEST_CASE("product, ordered sum and interval sizes") {
  const HeytingAlgebra z3 = rn_algebra(3).algebra;
  CHECK(product(z3, chain(2)).size() == 6);
  CHECK(concat(z3, chain(3)).size() == 5);
  CHECK(concat(chain(2), chain(2)).size() == 3);
  const HeytingAlgebra s = concat(boolean_algebra(2), chain(2));
  CHECK(s.size() == 5);
  CHECK(is_si(s));
  CHECK(s.coatoms().size() == 1);
  const HeytingAlgebra b3 = boolean_algebra(3);
  CHECK(interval(b3, b3.bottom(), b3.coatoms().front()).size() == 4);
}

TEST_CASE("finite algebras have exactly one filter per element") {
  for (const HeytingAlgebra& a : all_heyting_algebras(8)) {
    const auto filters = enumerate_filters(a);
    REQUIRE(filters.size() == a.size());
    for (std::size_t e = 0; e < a.size(); ++e) {
      const Filter f = principal_filter(a, static_cast<Elem>(e));
      CHECK(std::find(filters.begin(), filters.end(), f) != filters.end());
    }
  }
}

TEST_CASE("quotient by the filter above d is the interval below d") {
  for (const HeytingAlgebra& a : all_heyting_algebras(7)) {
    for (std::size_t d = 0; d < a.size(); ++d) {
      const Quotient q = quotient(a, principal_filter(a, static_cast<Elem>(d)));
      const HeytingAlgebra down = interval(a, a.bottom(), static_cast<Elem>(d));
      CHECK(is_isomorphic(q.algebra, down).isomorphic);
      CHECK(is_homomorphism(a, q.algebra, q.projection));
    }
  }
}

TEST_CASE("opremum, dense and regular elements of Z(3)") {
  const OneGenerated z = rn_algebra(3);
  const HeytingAlgebra& a = z.algebra;
  REQUIRE(opremum(a).has_value());
  CHECK(*opremum(a) == z.generator);
  CHECK(a.label(z.generator) == "g");
  CHECK(dense_elements(a).size() == 2);
  CHECK(elements_of(regular_elements(a)) == std::vector<Elem>{a.bottom(), a.top()});
  // A / Dn(A) is Boolean.
  CHECK(is_boolean(quotient(a, dense_elements(a)).algebra));
}

TEST_CASE("dense quotient is Boolean across the corpus") {
  for (const HeytingAlgebra& a : all_heyting_algebras(8)) {
    CHECK(is_boolean(quotient(a, dense_elements(a)).algebra));
  }
}

TEST_CASE("generated subalgebra of the generator is all of Z(n)") {
  for (std::size_t n = 2; n <= 10; ++n) {
    const OneGenerated z = rn_algebra(n);
    CHECK(z.algebra.size() == n);
    CHECK(generated_closure(z.algebra, make_set(n, {z.generator})).count() == n);
  }
}

TEST_CASE("one-generated algebras with at most 6 elements are unique per size") {
  std::map<std::size_t, int> count;
  for (const HeytingAlgebra& a : all_heyting_algebras(6)) {
    for (std::size_t g = 0; g < a.size(); ++g) {
      if (generated_closure(a, make_set(a.size(), {static_cast<Elem>(g)})).count() == a.size()) {
        ++count[a.size()];
        CHECK(is_isomorphic(a, rn_algebra(a.size()).algebra).isomorphic);
        break;
      }
    }
  }
  for (std::size_t n = 1; n <= 6; ++n) CHECK(count[n] == 1);
}

TEST_CASE("lower levels of Z(10) follow the ladder covering pattern") {
  const OneGenerated z = rn_algebra(10);
  const HeytingAlgebra& a = z.algebra;
  auto id = [&](const char* label) {
    const int i = a.find_label(label);
    REQUIRE(i >= 0);
    return static_cast<Elem>(i);
  };
  auto covers = [&](Elem lo, Elem hi) {
    const auto cv = a.covers();
    return std::find(cv.begin(), cv.end(), std::make_pair(lo, hi)) != cv.end();
  };
  const Elem g = id("g"), r2 = id("r2"), t = id("t"), r1 = id("r1");
  CHECK(g == z.generator);
  CHECK(covers(a.bottom(), g));
  CHECK(covers(a.bottom(), r2));
  CHECK(covers(g, r1));
  CHECK_FALSE(a.leq(r2, r1));
  CHECK(covers(g, t));
  CHECK(covers(r2, t));
  CHECK(a.neg(g) == r2);
  CHECK(a.neg(r2) == r1);
  const Elem e5 = a.join(r1, t);
  CHECK(covers(r1, e5));
  CHECK(covers(t, e5));
  // t has exactly two covers; the second one is not above r1.
  int t_covers = 0;
  for (auto [lo, hi] : a.covers()) t_covers += lo == t;
  CHECK(t_covers == 2);
}
