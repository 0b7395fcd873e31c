#include "heyting/formula.hpp"

#include <algorithm>
#include <cctype>
#include <set>

namespace heyting {

Formula Formula::make(Kind kind, std::vector<Formula> kids, int var) {
  auto node = std::make_shared<Node>();
  node->kind = kind;
  node->var = var;
  node->modal = kind == Kind::Box;
  node->var_bound = kind == Kind::Var ? var + 1 : 0;
  for (const Formula& k : kids) {
    node->modal = node->modal || k.is_modal();
    node->var_bound = std::max(node->var_bound, k.var_bound());
    node->depth = std::max(node->depth, k.depth() + 1);
  }
  node->kids = std::move(kids);
  return Formula(std::move(node));
}

Formula::Formula() : Formula(top()) {}

Formula Formula::var(int index) {
  if (index < 0) throw Error(ErrorKind::InvalidInput, "negative variable index");
  return make(Kind::Var, {}, index);
}
Formula Formula::top() { return make(Kind::Top, {}); }
Formula Formula::bot() { return make(Kind::Bot, {}); }
Formula Formula::conj(Formula a, Formula b) { return make(Kind::And, {std::move(a), std::move(b)}); }
Formula Formula::disj(Formula a, Formula b) { return make(Kind::Or, {std::move(a), std::move(b)}); }
Formula Formula::imp(Formula a, Formula b) { return make(Kind::Imp, {std::move(a), std::move(b)}); }
Formula Formula::neg(Formula a) { return make(Kind::Neg, {std::move(a)}); }
Formula Formula::box(Formula a) { return make(Kind::Box, {std::move(a)}); }

Formula Formula::iff(const Formula& a, const Formula& b) { return conj(imp(a, b), imp(b, a)); }

Formula Formula::conj_all(std::span<const Formula> parts) {
  if (parts.empty()) return top();
  Formula acc = parts.front();
  for (std::size_t i = 1; i < parts.size(); ++i) acc = conj(acc, parts[i]);
  return acc;
}

std::vector<int> Formula::variables() const {
  std::set<int> seen;
  std::vector<const Formula*> stack{this};
  while (!stack.empty()) {
    const Formula* f = stack.back();
    stack.pop_back();
    if (f->kind() == Kind::Var) seen.insert(f->var_index());
    for (const Formula& k : f->node_->kids) stack.push_back(&k);
  }
  return {seen.begin(), seen.end()};
}

std::size_t Formula::size() const {
  std::size_t total = 1;
  for (const Formula& k : node_->kids) total += k.size();
  return total;
}

bool Formula::operator==(const Formula& other) const {
  if (node_ == other.node_) return true;
  if (kind() != other.kind() || node_->var != other.node_->var) return false;
  if (node_->kids.size() != other.node_->kids.size()) return false;
  for (std::size_t i = 0; i < node_->kids.size(); ++i) {
    if (!(node_->kids[i] == other.node_->kids[i])) return false;
  }
  return true;
}

namespace {

// Binding strength; higher binds tighter.
int level(Kind k) {
  switch (k) {
    case Kind::Imp: return 1;
    case Kind::Or: return 2;
    case Kind::And: return 3;
    case Kind::Neg:
    case Kind::Box: return 4;
    default: return 5;
  }
}

void print_into(const Formula& f, std::string& out);

void print_child(const Formula& f, int min_level, std::string& out) {
  if (level(f.kind()) < min_level) {
    out += '(';
    print_into(f, out);
    out += ')';
  } else {
    print_into(f, out);
  }
}

void print_into(const Formula& f, std::string& out) {
  switch (f.kind()) {
    case Kind::Var:
      out += 'p';
      out += std::to_string(f.var_index() + 1);
      return;
    case Kind::Top: out += '1'; return;
    case Kind::Bot: out += '0'; return;
    case Kind::Neg:
      out += '~';
      print_child(f.child(), 4, out);
      return;
    case Kind::Box:
      out += "[]";
      print_child(f.child(), 4, out);
      return;
    case Kind::And:
      print_child(f.lhs(), 3, out);
      out += " & ";
      print_child(f.rhs(), 4, out);
      return;
    case Kind::Or:
      print_child(f.lhs(), 2, out);
      out += " | ";
      print_child(f.rhs(), 3, out);
      return;
    case Kind::Imp:
      print_child(f.lhs(), 2, out);
      out += " -> ";
      print_child(f.rhs(), 1, out);
      return;
  }
}

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Formula run() {
    Formula f = parse_iff();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected input");
    return f;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw SyntaxError(pos_, what); }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(std::string_view tok) {
    skip_ws();
    if (text_.substr(pos_, tok.size()) == tok) {
      pos_ += tok.size();
      return true;
    }
    return false;
  }

  bool peek(std::string_view tok) {
    skip_ws();
    return text_.substr(pos_, tok.size()) == tok;
  }

  Formula parse_iff() {
    Formula lhs = parse_imp();
    if (accept("<->")) {
      Formula rhs = parse_imp();
      if (peek("<->")) fail("'<->' is not associative");
      return Formula::iff(lhs, rhs);
    }
    return lhs;
  }

  Formula parse_imp() {
    Formula lhs = parse_or();
    if (!peek("<->") && accept("->")) return Formula::imp(lhs, parse_imp());
    return lhs;
  }

  Formula parse_or() {
    Formula acc = parse_and();
    while (accept("|")) acc = Formula::disj(acc, parse_and());
    return acc;
  }

  Formula parse_and() {
    Formula acc = parse_unary();
    while (accept("&")) acc = Formula::conj(acc, parse_unary());
    return acc;
  }

  Formula parse_unary() {
    if (accept("~")) return Formula::neg(parse_unary());
    if (accept("[]")) return Formula::box(parse_unary());
    return parse_atom();
  }

  Formula parse_atom() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Formula inner = parse_iff();
      if (!accept(")")) fail("expected ')'");
      return inner;
    }
    if (c == '0') {
      ++pos_;
      return Formula::bot();
    }
    if (c == '1') {
      ++pos_;
      return Formula::top();
    }
    if (c == 'p') {
      ++pos_;
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (start == pos_) fail("expected variable digits");
      if (pos_ - start > 6) {
        pos_ = start;
        fail("variable index too large");
      }
      const int index = std::stoi(std::string(text_.substr(start, pos_ - start)));
      if (index == 0) {
        pos_ = start;
        fail("variables are numbered from p1");
      }
      return Formula::var(index - 1);
    }
    fail(std::string("unexpected character '") + c + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

std::string print(const Formula& f) {
  std::string out;
  print_into(f, out);
  return out;
}

Formula parse(std::string_view text) { return Parser(text).run(); }

namespace {

template <class Leaf>
Formula rebuild(const Formula& f, const Leaf& leaf) {
  switch (f.kind()) {
    case Kind::Var: return leaf(f);
    case Kind::Top:
    case Kind::Bot: return f;
    case Kind::Neg: return Formula::neg(rebuild(f.child(), leaf));
    case Kind::Box: return Formula::box(rebuild(f.child(), leaf));
    case Kind::And: return Formula::conj(rebuild(f.lhs(), leaf), rebuild(f.rhs(), leaf));
    case Kind::Or: return Formula::disj(rebuild(f.lhs(), leaf), rebuild(f.rhs(), leaf));
    case Kind::Imp: return Formula::imp(rebuild(f.lhs(), leaf), rebuild(f.rhs(), leaf));
  }
  return f;
}

}  // namespace

Formula substitute(const Formula& f, const std::map<int, Formula>& map) {
  return rebuild(f, [&](const Formula& v) {
    auto it = map.find(v.var_index());
    return it == map.end() ? v : it->second;
  });
}

Formula shift_variables(const Formula& f, int offset) {
  return rebuild(f, [&](const Formula& v) { return Formula::var(v.var_index() + offset); });
}

Formula normalize(const Formula& f) {
  std::map<int, Formula> renumber;
  int next = 0;
  for (int v : f.variables()) renumber.emplace(v, Formula::var(next++));
  return substitute(f, renumber);
}

std::vector<Formula> conjuncts(const Formula& f) {
  if (f.kind() != Kind::And) return {f};
  std::vector<Formula> out = conjuncts(f.lhs());
  for (Formula& g : conjuncts(f.rhs())) out.push_back(std::move(g));
  return out;
}

Elem evaluate(const Formula& f, const OpTable& ops, std::span<const Elem> valuation) {
  switch (f.kind()) {
    case Kind::Var:
      if (static_cast<std::size_t>(f.var_index()) >= valuation.size()) {
        throw Error(ErrorKind::UnboundVariable, "p" + std::to_string(f.var_index() + 1));
      }
      return valuation[f.var_index()];
    case Kind::Top: return ops.top;
    case Kind::Bot: return ops.bottom;
    case Kind::Neg: return ops.apply(OpTable::kNeg, evaluate(f.child(), ops, valuation));
    case Kind::Box:
      if (!ops.has_box()) throw Error(ErrorKind::NotAssertoric, "box in a Heyting evaluation");
      return ops.apply(OpTable::kBox, evaluate(f.child(), ops, valuation));
    case Kind::And:
      return ops.apply(OpTable::kMeet, evaluate(f.lhs(), ops, valuation),
                       evaluate(f.rhs(), ops, valuation));
    case Kind::Or:
      return ops.apply(OpTable::kJoin, evaluate(f.lhs(), ops, valuation),
                       evaluate(f.rhs(), ops, valuation));
    case Kind::Imp:
      return ops.apply(OpTable::kImp, evaluate(f.lhs(), ops, valuation),
                       evaluate(f.rhs(), ops, valuation));
  }
  return ops.bottom;
}

Formula random_formula(std::mt19937_64& rng, std::size_t max_depth, int vars) {
  std::uniform_int_distribution<int> pick_var(0, vars - 1);
  if (max_depth == 0) return Formula::var(pick_var(rng));
  std::uniform_int_distribution<int> pick_kind(0, 4);
  switch (pick_kind(rng)) {
    case 0: return Formula::var(pick_var(rng));
    case 1: {
      Formula a = random_formula(rng, max_depth - 1, vars);
      return Formula::conj(a, random_formula(rng, max_depth - 1, vars));
    }
    case 2: {
      Formula a = random_formula(rng, max_depth - 1, vars);
      return Formula::disj(a, random_formula(rng, max_depth - 1, vars));
    }
    case 3: {
      Formula a = random_formula(rng, max_depth - 1, vars);
      return Formula::imp(a, random_formula(rng, max_depth - 1, vars));
    }
    default: return Formula::neg(random_formula(rng, max_depth - 1, vars));
  }
}

}  // namespace heyting
