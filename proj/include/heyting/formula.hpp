#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "heyting/error.hpp"
#include "heyting/ops.hpp"

namespace heyting {

enum class Kind : std::uint8_t { Var, Top, Bot, And, Or, Imp, Neg, Box };

// Immutable propositional/modal formula. Variables are 0-based indices and
// print as p1, p2, ...
class Formula {
 public:
  // The constant Top.
  Formula();
  static Formula var(int index);
  static Formula top();
  static Formula bot();
  static Formula conj(Formula a, Formula b);
  static Formula disj(Formula a, Formula b);
  static Formula imp(Formula a, Formula b);
  static Formula neg(Formula a);
  static Formula box(Formula a);
  // (a -> b) & (b -> a)
  static Formula iff(const Formula& a, const Formula& b);
  // Left-nested conjunction; empty list gives Top.
  static Formula conj_all(std::span<const Formula> parts);

  Kind kind() const { return node_->kind; }
  int var_index() const { return node_->var; }
  const Formula& lhs() const { return node_->kids[0]; }
  const Formula& rhs() const { return node_->kids[1]; }
  const Formula& child() const { return node_->kids[0]; }
  std::size_t arity() const { return node_->kids.size(); }

  bool is_modal() const { return node_->modal; }
  // One past the largest variable index (0 for closed formulas).
  int var_bound() const { return node_->var_bound; }
  std::vector<int> variables() const;
  std::size_t depth() const { return node_->depth; }
  std::size_t size() const;

  bool operator==(const Formula& other) const;
  const void* identity() const { return node_.get(); }

 private:
  struct Node {
    Kind kind;
    int var = -1;
    std::vector<Formula> kids;
    bool modal = false;
    int var_bound = 0;
    std::size_t depth = 0;
  };
  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  static Formula make(Kind kind, std::vector<Formula> kids, int var = -1);

  std::shared_ptr<const Node> node_;
};

std::string print(const Formula& f);
Formula parse(std::string_view text);

// Simultaneous substitution; variables absent from the map stay unchanged.
Formula substitute(const Formula& f, const std::map<int, Formula>& map);
// Shifts every variable index by `offset`.
Formula shift_variables(const Formula& f, int offset);
// Renumbers the occurring variables to 0..k-1 preserving their order.
Formula normalize(const Formula& f);

// Conjuncts of the top-level conjunction tree, left to right.
std::vector<Formula> conjuncts(const Formula& f);

// Structural evaluation through the algebra's operation tables. Box requires
// a box table (interior algebras).
Elem evaluate(const Formula& f, const OpTable& ops, std::span<const Elem> valuation);

// Random formula for property tests: depth <= max_depth over variables
// 0..vars-1, connectives {&, |, ->, ~} and variables chosen uniformly.
Formula random_formula(std::mt19937_64& rng, std::size_t max_depth, int vars);

}  // namespace heyting
