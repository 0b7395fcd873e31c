#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <tuple>
#include <vector>

#include "heyting/algebra.hpp"
#include "heyting/formula.hpp"

namespace heyting {

enum class Engine { Auto, Naive, Propagate, Both };

struct ValidityOptions {
  Engine engine = Engine::Auto;
  // Largest valuation count the naive engine will enumerate.
  std::uint64_t naive_budget = 50'000'000;
  // Auto picks naive up to this many variables.
  int naive_max_vars = 6;
};

struct Verdict {
  bool valid = true;
  // Counter-valuation indexed by variable (0..var_bound-1); variables not
  // occurring in the formula are set to element 0.
  std::optional<std::vector<Elem>> counter;
  Engine engine = Engine::Naive;  // engine that produced the verdict
};

// Formula compiled to a shared DAG of operation nodes.
class Program {
 public:
  struct Node {
    Kind kind;
    int a = -1;
    int b = -1;
    int var = -1;
  };
  explicit Program(const Formula& f);

  const std::vector<Node>& nodes() const { return nodes_; }
  int root() const { return root_; }
  // Occurring variables, ascending.
  const std::vector<int>& vars() const { return vars_; }
  int var_bound() const { return var_bound_; }

  Elem eval(const OpTable& ops, std::span<const Elem> valuation, std::vector<Elem>& scratch) const;

 private:
  int add(const Formula& f);
  std::vector<Node> nodes_;
  std::map<std::tuple<int, int, int, int>, int> index_;
  std::vector<int> vars_;
  int root_ = -1;
  int var_bound_ = 0;
};

// Exhaustive product enumeration in lexicographic order (first variable
// most significant); returns the least counter-valuation. Works on any
// operation table, box included.
Verdict naive_validity(const OpTable& ops, const Formula& f, std::uint64_t budget);

// Constraint propagation: the formula is uncurried into premises and a
// conclusion; for each element d (ascending) the search runs in A/nabla(d)
// for valuations making every premise conjunct top and the conclusion not
// top, with forward checking on conjuncts. The witness is the least
// valuation of the quotient for the first such d, lifted to least class
// representatives.
Verdict propagate_validity(const HeytingAlgebra& a, const Formula& f);

Verdict is_valid(const HeytingAlgebra& a, const Formula& f, const ValidityOptions& opt = {});

// All valuations v over variables 0..var_bound-1 of f with v(f) = top, in
// lexicographic order, enumerated by the propagation search. Variables
// below var_bound that do not occur range over every element.
std::vector<std::vector<Elem>> satisfying_valuations(const HeytingAlgebra& a, const Formula& f,
                                                     std::size_t max_results = SIZE_MAX);
// Same over any operation table with at most 64 elements (box allowed).
std::vector<std::vector<Elem>> satisfying_valuations(const OpTable& ops, const Formula& f,
                                                     std::size_t max_results = SIZE_MAX);

// Index of the first corpus algebra validating every premise and refuting
// the conclusion; nullopt means no witness in this corpus.
std::optional<std::size_t> consequence_refute(std::span<const Formula> premises,
                                              const Formula& conclusion,
                                              std::span<const HeytingAlgebra> corpus,
                                              const ValidityOptions& opt = {});

}  // namespace heyting
