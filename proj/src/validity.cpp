#include "heyting/validity.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <stdexcept>
#include <tuple>

namespace heyting {

Program::Program(const Formula& f) {
  root_ = add(f);
  var_bound_ = f.var_bound();
  vars_ = f.variables();
}

int Program::add(const Formula& f) {
  Node node{f.kind()};
  switch (f.kind()) {
    case Kind::Var: node.var = f.var_index(); break;
    case Kind::Top:
    case Kind::Bot: break;
    case Kind::Neg:
    case Kind::Box: node.a = add(f.child()); break;
    default:
      node.a = add(f.lhs());
      node.b = add(f.rhs());
  }
  // Structural sharing keeps repeated subformulas (frequent in diagrams
  // after substitution) to one node.
  const auto key = std::make_tuple(static_cast<int>(node.kind), node.a, node.b, node.var);
  auto [it, fresh] = index_.emplace(key, static_cast<int>(nodes_.size()));
  if (fresh) nodes_.push_back(node);
  return it->second;
}

namespace {

inline Elem apply_node(const Program::Node& node, const OpTable& ops,
                       std::span<const Elem> valuation, const std::vector<Elem>& v) {
  switch (node.kind) {
    case Kind::Var: return valuation[node.var];
    case Kind::Top: return ops.top;
    case Kind::Bot: return ops.bottom;
    case Kind::Neg: return ops.apply(OpTable::kNeg, v[node.a]);
    case Kind::Box:
      if (!ops.has_box()) throw Error(ErrorKind::NotAssertoric, "box in a Heyting evaluation");
      return ops.apply(OpTable::kBox, v[node.a]);
    case Kind::And: return ops.apply(OpTable::kMeet, v[node.a], v[node.b]);
    case Kind::Or: return ops.apply(OpTable::kJoin, v[node.a], v[node.b]);
    case Kind::Imp: return ops.apply(OpTable::kImp, v[node.a], v[node.b]);
  }
  return ops.bottom;
}

std::uint64_t checked_power(std::uint64_t base, std::size_t exp, std::uint64_t cap) {
  std::uint64_t r = 1;
  for (std::size_t i = 0; i < exp; ++i) {
    if (base != 0 && r > cap / base) return cap + 1;
    r *= base;
  }
  return r;
}

}  // namespace

Elem Program::eval(const OpTable& ops, std::span<const Elem> valuation,
                   std::vector<Elem>& scratch) const {
  scratch.resize(nodes_.size());
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    scratch[i] = apply_node(nodes_[i], ops, valuation, scratch);
  }
  return scratch[root_];
}

Verdict naive_validity(const OpTable& ops, const Formula& f, std::uint64_t budget) {
  const Program prog(f);
  const std::vector<int>& vars = prog.vars();
  const std::size_t k = vars.size();
  if (checked_power(ops.n, k, budget) > budget) {
    throw Error(ErrorKind::SizeLimit, std::to_string(ops.n) + "^" + std::to_string(k) +
                                          " valuations exceed the naive budget");
  }
  // Stage of a node = position of its largest variable; a node is recomputed
  // only when that variable changes.
  const auto& nodes = prog.nodes();
  std::vector<int> stage(nodes.size(), -1);
  std::map<int, int> position;
  for (std::size_t i = 0; i < k; ++i) position[vars[i]] = static_cast<int>(i);
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    const auto& nd = nodes[i];
    if (nd.kind == Kind::Var) stage[i] = position[nd.var];
    if (nd.a >= 0) stage[i] = std::max(stage[i], stage[nd.a]);
    if (nd.b >= 0) stage[i] = std::max(stage[i], stage[nd.b]);
  }
  std::vector<std::vector<int>> by_stage(k + 1);
  for (std::size_t i = 0; i < nodes.size(); ++i) by_stage[stage[i] + 1].push_back(static_cast<int>(i));

  std::vector<Elem> valuation(prog.var_bound(), 0);
  std::vector<Elem> values(nodes.size(), 0);
  auto compute = [&](std::size_t s) {
    for (int i : by_stage[s]) values[i] = apply_node(nodes[i], ops, valuation, values);
  };
  compute(0);
  Verdict verdict;
  verdict.engine = Engine::Naive;
  if (k == 0) {
    if (values[prog.root()] != ops.top) {
      verdict.valid = false;
      verdict.counter = valuation;
    }
    return verdict;
  }
  auto rec = [&](auto&& self, std::size_t i) -> bool {
    for (std::size_t x = 0; x < ops.n; ++x) {
      valuation[vars[i]] = static_cast<Elem>(x);
      compute(i + 1);
      if (i + 1 == k) {
        if (values[prog.root()] != ops.top) return true;
      } else if (self(self, i + 1)) {
        return true;
      }
    }
    return false;
  };
  if (rec(rec, 0)) {
    verdict.valid = false;
    verdict.counter = valuation;
  }
  return verdict;
}

namespace {

// Forward-checking search for valuations making every `premises` formula top
// and, if present, `conclusion` not top.
class Solver {
 public:
  Solver(const OpTable& ops, std::span<const Formula> premises, const Formula* conclusion,
         int var_bound)
      : ops_(ops), var_bound_(var_bound) {
    if (ops.n > 64) throw Error(ErrorKind::SizeLimit, "propagation domain above 64 elements");
    for (const Formula& p : premises) add_constraint(p, true);
    if (conclusion != nullptr) add_constraint(*conclusion, false);
    var_cons_.resize(var_bound_);
    for (std::size_t c = 0; c < cons_.size(); ++c) {
      for (int v : cons_[c].prog.vars()) var_cons_[v].push_back(c);
    }
  }

  // Calls `emit` with each solution in lexicographic order until it returns
  // true.
  template <class Emit>
  void run(Emit&& emit) {
    const std::uint64_t full = ops_.n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << ops_.n) - 1;
    State st{std::vector<std::uint64_t>(var_bound_, full), std::vector<int>(var_bound_, -1)};
    val_.assign(var_bound_, 0);
    std::vector<int> queue;
    for (std::size_t c = 0; c < cons_.size(); ++c) {
      if (!check(c, st, queue)) return;
    }
    if (!drain(st, queue)) return;
    search(st, 0, emit);
  }

 private:
  struct Constraint {
    Program prog;
    bool must_be_top;
  };
  struct State {
    std::vector<std::uint64_t> dom;
    std::vector<int> value;
  };

  void add_constraint(const Formula& f, bool top) { cons_.push_back(Constraint{Program(f), top}); }

  bool accepts(const Constraint& c, Elem v) const { return (v == ops_.top) == c.must_be_top; }

  void assign(State& st, int var, Elem x, std::vector<int>& queue) {
    st.value[var] = x;
    st.dom[var] = std::uint64_t{1} << x;
    val_[var] = x;
    queue.push_back(var);
  }

  bool check(std::size_t ci, State& st, std::vector<int>& queue) {
    const Constraint& c = cons_[ci];
    int free_var = -1;
    for (int v : c.prog.vars()) {
      if (st.value[v] >= 0) continue;
      if (free_var >= 0) return true;  // two or more unassigned
      free_var = v;
    }
    if (free_var < 0) return accepts(c, c.prog.eval(ops_, val_, scratch_));
    std::uint64_t keep = 0;
    for (std::uint64_t rest = st.dom[free_var]; rest != 0; rest &= rest - 1) {
      const Elem x = static_cast<Elem>(std::countr_zero(rest));
      val_[free_var] = x;
      if (accepts(c, c.prog.eval(ops_, val_, scratch_))) keep |= std::uint64_t{1} << x;
    }
    st.dom[free_var] = keep;
    if (keep == 0) return false;
    if (std::has_single_bit(keep)) {
      assign(st, free_var, static_cast<Elem>(std::countr_zero(keep)), queue);
    }
    return true;
  }

  bool drain(State& st, std::vector<int>& queue) {
    while (!queue.empty()) {
      const int v = queue.back();
      queue.pop_back();
      for (std::size_t c : var_cons_[v]) {
        if (!check(c, st, queue)) return false;
      }
    }
    return true;
  }

  template <class Emit>
  bool search(const State& st, int from, Emit& emit) {
    int var = from;
    while (var < var_bound_ && st.value[var] >= 0) ++var;
    if (var == var_bound_) {
      std::vector<Elem> sol(var_bound_);
      for (int v = 0; v < var_bound_; ++v) sol[v] = static_cast<Elem>(st.value[v]);
      return emit(sol);
    }
    for (std::uint64_t rest = st.dom[var]; rest != 0; rest &= rest - 1) {
      State next = st;
      for (int v = 0; v < var_bound_; ++v) {
        if (next.value[v] >= 0) val_[v] = static_cast<Elem>(next.value[v]);
      }
      std::vector<int> queue;
      assign(next, var, static_cast<Elem>(std::countr_zero(rest)), queue);
      if (drain(next, queue) && search(next, var + 1, emit)) return true;
    }
    return false;
  }

  const OpTable& ops_;
  int var_bound_;
  std::vector<Constraint> cons_;
  std::vector<std::vector<std::size_t>> var_cons_;
  std::vector<Elem> val_;
  std::vector<Elem> scratch_;
};

}  // namespace

Verdict propagate_validity(const HeytingAlgebra& a, const Formula& f) {
  if (f.is_modal()) throw Error(ErrorKind::NotAssertoric, "propagation engine is Heyting-only");
  std::vector<Formula> premises;
  Formula goal = f;
  while (goal.kind() == Kind::Imp) {
    for (Formula& c : conjuncts(goal.lhs())) premises.push_back(std::move(c));
    goal = goal.rhs();
  }
  const int vb = f.var_bound();
  const std::vector<int> occurring = f.variables();
  Verdict verdict;
  verdict.engine = Engine::Propagate;
  // Without premises only the trivial filter matters.
  std::vector<Elem> cuts;
  if (premises.empty()) {
    cuts.push_back(a.top());
  } else {
    for (std::size_t d = 0; d < a.size(); ++d) {
      if (d != a.bottom()) cuts.push_back(static_cast<Elem>(d));
    }
  }
  for (Elem d : cuts) {
    const Quotient q = quotient(a, principal_filter(a, d));
    std::vector<Elem> rep(q.algebra.size(), 0);
    std::vector<bool> seen(q.algebra.size(), false);
    for (std::size_t x = 0; x < a.size(); ++x) {
      const Elem c = q.projection.map[x];
      if (!seen[c]) {
        seen[c] = true;
        rep[c] = static_cast<Elem>(x);
      }
    }
    std::optional<std::vector<Elem>> found;
    Solver solver(q.algebra.ops(), premises, &goal, vb);
    solver.run([&](const std::vector<Elem>& sol) {
      found = sol;
      return true;
    });
    if (found) {
      std::vector<Elem> lifted(vb, 0);
      for (int v : occurring) lifted[v] = rep[(*found)[v]];
      verdict.valid = false;
      verdict.counter = std::move(lifted);
      return verdict;
    }
  }
  return verdict;
}

Verdict is_valid(const HeytingAlgebra& a, const Formula& f, const ValidityOptions& opt) {
  if (f.is_modal()) throw Error(ErrorKind::NotAssertoric, "modal formula in a Heyting algebra");
  const std::size_t k = f.variables().size();
  const bool naive_fits =
      checked_power(a.size(), k, opt.naive_budget) <= opt.naive_budget;
  switch (opt.engine) {
    case Engine::Naive: return naive_validity(a.ops(), f, opt.naive_budget);
    case Engine::Propagate: return propagate_validity(a, f);
    case Engine::Both: {
      Verdict p = propagate_validity(a, f);
      if (!naive_fits) return p;
      Verdict n = naive_validity(a.ops(), f, opt.naive_budget);
      if (n.valid != p.valid) throw std::logic_error("validity engines disagree");
      n.engine = Engine::Both;
      return n;
    }
    case Engine::Auto:
      if (static_cast<int>(k) <= opt.naive_max_vars && naive_fits) {
        return naive_validity(a.ops(), f, opt.naive_budget);
      }
      return propagate_validity(a, f);
  }
  return propagate_validity(a, f);
}

std::vector<std::vector<Elem>> satisfying_valuations(const HeytingAlgebra& a, const Formula& f,
                                                     std::size_t max_results) {
  if (f.is_modal()) throw Error(ErrorKind::NotAssertoric, "modal formula in a Heyting algebra");
  return satisfying_valuations(a.ops(), f, max_results);
}

std::vector<std::vector<Elem>> satisfying_valuations(const OpTable& ops, const Formula& f,
                                                     std::size_t max_results) {
  std::vector<std::vector<Elem>> out;
  if (max_results == 0) return out;
  const std::vector<Formula> parts = conjuncts(f);
  Solver solver(ops, parts, nullptr, f.var_bound());
  solver.run([&](const std::vector<Elem>& sol) {
    out.push_back(sol);
    return out.size() >= max_results;
  });
  return out;
}

std::optional<std::size_t> consequence_refute(std::span<const Formula> premises,
                                              const Formula& conclusion,
                                              std::span<const HeytingAlgebra> corpus,
                                              const ValidityOptions& opt) {
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    const bool premises_hold = std::all_of(premises.begin(), premises.end(), [&](const Formula& p) {
      return is_valid(corpus[i], p, opt).valid;
    });
    if (premises_hold && !is_valid(corpus[i], conclusion, opt).valid) return i;
  }
  return std::nullopt;
}

}  // namespace heyting
