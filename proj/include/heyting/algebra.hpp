#pragma once

#include <boost/dynamic_bitset.hpp>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "heyting/error.hpp"
#include "heyting/ops.hpp"

namespace heyting {

using ElementSet = boost::dynamic_bitset<>;
using OrderTable = std::vector<std::vector<bool>>;

// Configurable bounds shared by the search routines.
struct Limits {
  std::size_t max_elements = 512;       // hard cap on any constructed carrier
  std::size_t filter_enumeration = 20;  // enumerate_filters / in_sh cap
  std::size_t search = 64;              // homomorphism / isomorphism search cap
};
Limits& limits();

struct Poset {
  std::size_t size = 0;
  OrderTable leq;

  void validate() const;
};

// Finite Heyting algebra with precomputed operation tables. Elements are
// indices 0..n-1; labels are only for display.
class HeytingAlgebra {
 public:
  // Builds the algebra of a partial order; throws NotALattice / NotResiduated.
  static HeytingAlgebra from_order(const OrderTable& leq, std::vector<std::string> labels = {});

  std::size_t size() const { return ops_.n; }
  Elem bottom() const { return ops_.bottom; }
  Elem top() const { return ops_.top; }
  bool leq(Elem a, Elem b) const { return leq_[a * ops_.n + b] != 0; }
  bool less(Elem a, Elem b) const { return a != b && leq(a, b); }
  Elem meet(Elem a, Elem b) const { return ops_.apply(OpTable::kMeet, a, b); }
  Elem join(Elem a, Elem b) const { return ops_.apply(OpTable::kJoin, a, b); }
  Elem imp(Elem a, Elem b) const { return ops_.apply(OpTable::kImp, a, b); }
  Elem neg(Elem a) const { return ops_.apply(OpTable::kNeg, a); }
  Elem iff(Elem a, Elem b) const { return meet(imp(a, b), imp(b, a)); }

  const std::string& label(Elem a) const { return labels_[a]; }
  const std::vector<std::string>& labels() const { return labels_; }
  HeytingAlgebra relabeled(std::vector<std::string> labels) const;
  // Index of the first element carrying `label`, or -1.
  int find_label(const std::string& label) const;

  OrderTable order() const;
  const OpTable& ops() const { return ops_; }

  // Hasse diagram as (lower, upper) cover pairs in index order.
  std::vector<std::pair<Elem, Elem>> covers() const;
  std::vector<Elem> coatoms() const;
  std::vector<Elem> atoms() const;
  std::vector<Elem> join_irreducibles() const;  // excludes bottom

  // Exhaustive re-verification of lattice, residuation and distributivity laws.
  bool check_laws() const;

 private:
  OpTable ops_;
  std::vector<std::uint8_t> leq_;
  std::vector<std::string> labels_;
};

struct Filter {
  ElementSet members;

  bool contains(Elem a) const { return members.test(a); }
  std::size_t size() const { return members.count(); }
  bool operator==(const Filter&) const = default;
};

struct Homomorphism {
  std::vector<Elem> map;
  bool injective() const;
  bool operator==(const Homomorphism&) const = default;
};

bool is_filter(const HeytingAlgebra& a, const ElementSet& set);
bool is_homomorphism(const HeytingAlgebra& src, const HeytingAlgebra& dst, const Homomorphism& h);

HeytingAlgebra upset_algebra(const Poset& p);
HeytingAlgebra chain(std::size_t n);
HeytingAlgebra boolean_algebra(std::size_t atoms);
HeytingAlgebra product(const HeytingAlgebra& a, const HeytingAlgebra& b);

// Ordered sum: b stacked on a with top(a) glued to bottom(b). a keeps its
// indices; the non-bottom elements of b follow in b's index order.
HeytingAlgebra concat(const HeytingAlgebra& a, const HeytingAlgebra& b);
// Index in concat(a, b) of element `e` of b.
Elem concat_upper_index(const HeytingAlgebra& a, const HeytingAlgebra& b, Elem e);

// The interval [lo, hi] as a Heyting algebra, elements in index order.
HeytingAlgebra interval(const HeytingAlgebra& a, Elem lo, Elem hi);

Filter principal_filter(const HeytingAlgebra& a, Elem e);
// Filters sorted by member bitmask (bit i = element i) ascending.
std::vector<Filter> enumerate_filters(const HeytingAlgebra& a);

struct Quotient {
  HeytingAlgebra algebra;
  Homomorphism projection;
};
Quotient quotient(const HeytingAlgebra& a, const Filter& f);

struct Subalgebra {
  ElementSet members;
  HeytingAlgebra algebra;
  std::vector<Elem> embedding;  // subalgebra index -> parent index
};
ElementSet generated_closure(const HeytingAlgebra& a, const ElementSet& gens);
Subalgebra generated_subalgebra(const HeytingAlgebra& a, const ElementSet& gens);
Subalgebra induced_subalgebra(const HeytingAlgebra& a, const ElementSet& members);

std::optional<Elem> opremum(const HeytingAlgebra& a);
bool is_si(const HeytingAlgebra& a);
Filter dense_elements(const HeytingAlgebra& a);
ElementSet regular_elements(const HeytingAlgebra& a);
bool is_boolean(const HeytingAlgebra& a);

ElementSet make_set(std::size_t n, std::initializer_list<Elem> elems);
std::vector<Elem> elements_of(const ElementSet& set);

}  // namespace heyting
