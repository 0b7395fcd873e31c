#include <doctest.h>

#include <set>

#include "heyting/corpus.hpp"
#include "heyting/search.hpp"

using namespace heyting;

TEST_CASE("number of finite distributive lattices by size") {
  const std::vector<std::size_t> expected = {1, 1, 1, 2, 3, 5, 8, 15, 26, 47};
  const auto all = all_heyting_algebras(10);
  std::vector<std::size_t> count(11, 0);
  for (const HeytingAlgebra& a : all) ++count[a.size()];
  for (std::size_t n = 1; n <= 10; ++n) CHECK(count[n] == expected[n - 1]);
}

TEST_CASE("corpus members are pairwise non-isomorphic") {
  const auto all = all_heyting_algebras(7);
  for (std::size_t i = 0; i < all.size(); ++i) {
    for (std::size_t j = i + 1; j < all.size(); ++j) {
      if (all[i].size() != all[j].size()) continue;
      CHECK_FALSE(is_isomorphic(all[i], all[j]).isomorphic);
    }
  }
}

TEST_CASE("s.i. members are those with a unique coatom") {
  const auto all = all_heyting_algebras(8);
  std::size_t si = 0;
  for (const HeytingAlgebra& a : all) {
    const bool expect = a.size() > 1 && a.coatoms().size() == 1;
    CHECK(is_si(a) == expect);
    si += expect;
  }
  CHECK(si_algebras(8).size() == si);
}

TEST_CASE("canonical codes separate exactly the isomorphism classes") {
  const auto all = all_heyting_algebras(8);
  std::set<std::string> codes;
  for (const HeytingAlgebra& a : all) codes.insert(canonical_code(a));
  CHECK(codes.size() == all.size());
  const HeytingAlgebra p = product(chain(2), chain(3));
  CHECK(canonical_code(p) == canonical_code(product(chain(3), chain(2))));
}
