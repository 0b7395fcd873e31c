#include <doctest.h>

#include <random>

#include "heyting/corpus.hpp"
#include "heyting/ladder.hpp"
#include "heyting/modal.hpp"
#include "heyting/search.hpp"

using namespace heyting;

namespace {

// Interior operator of the up-set topology of a preorder given by `up`.
std::vector<Mask> upset_box(std::size_t points, const std::vector<Mask>& up) {
  std::vector<Mask> box(std::size_t{1} << points);
  for (Mask x = 0; x < box.size(); ++x) {
    Mask inner = 0;
    for (std::size_t i = 0; i < points; ++i) {
      if ((up[i] & x) == up[i]) inner |= Mask{1} << i;
    }
    box[x] = inner;
  }
  return box;
}

}  // namespace

TEST_CASE("span of Z(3)") {
  const HeytingAlgebra z3 = rn_algebra(3).algebra;
  const Span s = span(z3);
  CHECK(s.algebra.atoms() == 2);
  CHECK(s.algebra.size() == 4);
  CHECK(s.algebra.opens().size() == 3);
  CHECK(is_isomorphic(heyting_carcass(s.algebra), z3).isomorphic);
}

TEST_CASE("box is the largest open below, and the carcass recovers the algebra") {
  for (const HeytingAlgebra& a : all_heyting_algebras(8)) {
    const Span s = span(a);
    const auto opens = s.algebra.opens();
    CHECK(opens.size() == a.size());
    for (Mask x = 0; x < s.algebra.size(); ++x) {
      Mask best = 0;
      for (Mask o : opens) {
        if ((o & x) == o && __builtin_popcount(o) > __builtin_popcount(best)) best = o;
      }
      CHECK(s.algebra.box(x) == best);
    }
    CHECK(span_box_formula_agrees(a, s));
  }
}

TEST_CASE("non-S4 operators are rejected") {
  // Point 0 open, point 1 not.
  const std::vector<Mask> box = {0, 1, 0, 3};
  const std::vector<Mask> not_deflationary = {0, 2, 2, 3};
  try {
    InteriorAlgebra::from_box(2, not_deflationary);
    FAIL("accepted");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotS4);
  }
  CHECK_NOTHROW(InteriorAlgebra::from_box(2, box));
}

TEST_CASE("up-set topologies are S4 and carcass matches the up-set algebra") {
  // Three-point poset: 0 below 1 and 2.
  const std::vector<Mask> up = {0b111, 0b010, 0b100};
  const InteriorAlgebra b = InteriorAlgebra::from_box(3, upset_box(3, up));
  CHECK(b.opens().size() == 5);
  CHECK(heyting_carcass(b).size() == 5);
  CHECK(is_isomorphic(heyting_carcass(b), concat(boolean_algebra(2), chain(2))).isomorphic);
}

TEST_CASE("GMT translation preserves validity") {
  CHECK(print(gmt_translate(parse("p1 -> p2"))) == "[]([]p1 -> []p2)");
  CHECK(print(gmt_translate(parse("~p1"))) == "[]~[]p1");
  std::mt19937_64 rng(3);
  const auto algs = all_heyting_algebras(6);
  std::vector<Span> spans;
  for (const HeytingAlgebra& a : algs) spans.push_back(span(a));
  for (int i = 0; i < 40; ++i) {
    const Formula f = random_formula(rng, 4, 2);
    const Formula t = gmt_translate(f);
    for (std::size_t j = 0; j < algs.size(); ++j) {
      CHECK(is_valid(algs[j], f).valid == modal_validity(spans[j].algebra, t).valid);
    }
  }
}

TEST_CASE("extra Boolean atoms keep the carcass") {
  const HeytingAlgebra a = rn_algebra(4).algebra;
  const InteriorAlgebra b = add_boolean_atoms(span(a).algebra, 2);
  CHECK(b.atoms() == span(a).algebra.atoms() + 2);
  CHECK(is_isomorphic(heyting_carcass(b), a).isomorphic);
  CHECK(is_isomorphic(heyting_carcass(open_generated(b)), a).isomorphic);
}

TEST_CASE("modal SH agrees with SH on carcasses of spans") {
  const auto algs = all_heyting_algebras(5);
  for (const HeytingAlgebra& a : algs) {
    if (!is_si(a)) continue;
    for (const HeytingAlgebra& b : algs) {
      CHECK(modal_in_sh(span(a).algebra, span(b).algebra).holds == in_sh(a, b).holds);
    }
  }
}

TEST_CASE("modal characteristic formula is refuted exactly on modal SH") {
  const auto algs = all_heyting_algebras(5);
  std::vector<InteriorAlgebra> corpus;
  for (const HeytingAlgebra& b : algs) corpus.push_back(span(b).algebra);
  for (const HeytingAlgebra& a : algs) {
    if (!is_si(a)) continue;
    const ModalPresentation p = modal_diagram_presentation(a);
    for (ModalImplication variant : {ModalImplication::BoxImp, ModalImplication::PlainImp}) {
      const Formula chi = modal_characteristic_formula(p, variant);
      for (std::size_t j = 0; j < corpus.size(); ++j) {
        CHECK(!modal_validity(corpus[j], chi).valid == modal_in_sh(p.target, corpus[j]).holds);
      }
    }
  }
}
