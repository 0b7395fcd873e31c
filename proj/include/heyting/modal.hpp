#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "heyting/algebra.hpp"
#include "heyting/formula.hpp"
#include "heyting/jankov.hpp"
#include "heyting/validity.hpp"

namespace heyting {

using Mask = std::uint32_t;

// Interior algebra on the powerset of `atoms` points. The element with index
// i is the subset with bitmask i.
class InteriorAlgebra {
 public:
  static constexpr std::size_t kMaxAtoms = 10;

  // Throws NotS4 unless box is an S4 interior operator.
  static InteriorAlgebra from_box(std::size_t atoms, std::vector<Mask> box);

  std::size_t atoms() const { return atoms_; }
  std::size_t size() const { return box_.size(); }
  Mask full() const { return static_cast<Mask>(box_.size() - 1); }
  Mask box(Mask x) const { return box_[x]; }
  const std::vector<Mask>& box_table() const { return box_; }
  bool is_open(Mask x) const { return box_[x] == x; }
  // Open elements ordered by (popcount, mask).
  std::vector<Mask> opens() const;
  // Boolean operations plus neg = complement and box.
  const OpTable& ops() const { return ops_; }

 private:
  std::size_t atoms_ = 0;
  std::vector<Mask> box_;
  OpTable ops_;
};

// Violations of the S4 laws, empty when none.
std::optional<std::string> s4_violation(std::size_t atoms, const std::vector<Mask>& box);

struct Span {
  InteriorAlgebra algebra;
  std::vector<Mask> embedding;  // Heyting element -> open
  std::vector<Elem> points;     // atom i <-> join-irreducible points[i]
};

// Free Boolean extension of a finite Heyting algebra over its
// join-irreducibles; box = largest open below.
Span span(const HeytingAlgebra& a);

// Checks, for every carrier element b, that the pairs (x, y) with
// ~e(x) | e(y) >= b meet to b, and that the meet of e(x -> y) over them is
// box(b). Returns false on the first mismatch.
bool span_box_formula_agrees(const HeytingAlgebra& a, const Span& s);

// Opens with a -> b = box(~a | b); elements in opens() order.
HeytingAlgebra heyting_carcass(const InteriorAlgebra& b);

// Subalgebra generated by the open elements, over the coarsest atom set
// separating the opens (classes ordered by least member).
InteriorAlgebra open_generated(const InteriorAlgebra& b);

// Adds `extra` points clustered with the last point: they belong to exactly
// the opens containing it, so the carcass is unchanged.
InteriorAlgebra add_boolean_atoms(const InteriorAlgebra& b, std::size_t extra);

// p -> []p, A -> B -> [](T(A) -> T(B)), ~A -> []~T(A); commutes with &, |.
Formula gmt_translate(const Formula& f);

Verdict modal_validity(const InteriorAlgebra& b, const Formula& f,
                       std::uint64_t budget = 50'000'000);

// A embeds into a quotient of B by an open filter.
struct ModalSubHom {
  bool holds = false;
  std::optional<Mask> cut;                 // open element u generating the filter
  std::optional<std::vector<Elem>> embedding;
};
ModalSubHom modal_in_sh(const InteriorAlgebra& a, const InteriorAlgebra& b);

// Quotient of b by the filter of elements above the open u: subsets of u,
// box'(x) = box(x | ~u) & u.
InteriorAlgebra modal_quotient(const InteriorAlgebra& b, Mask u);

struct ModalPresentation {
  Formula formula;
  InteriorAlgebra target;
  std::vector<Elem> valuation;
};

// <T(D) & (p1 -> []p1) & ..., e(identity)> presenting span(A).
ModalPresentation modal_diagram_presentation(const HeytingAlgebra& a);

enum class ModalImplication { BoxImp, PlainImp };

// []A -> T(B) (BoxImp) or A -> T(B) (PlainImp), B naming the carcass opremum.
Formula modal_characteristic_formula(const ModalPresentation& p,
                                     ModalImplication variant = ModalImplication::BoxImp);

struct ModalDefinesVerdict {
  bool refuted = false;
  std::optional<std::size_t> corpus_index;
  std::optional<std::vector<Elem>> tuple;
};
ModalDefinesVerdict modal_check_defines(const ModalPresentation& p,
                                        std::span<const InteriorAlgebra> corpus);

}  // namespace heyting
