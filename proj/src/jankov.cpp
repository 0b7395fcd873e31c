#include "heyting/jankov.hpp"

#include <set>

namespace heyting {

void validate_presentation(const Presentation& p) {
  const HeytingAlgebra& t = p.target;
  if (p.valuation.size() < static_cast<std::size_t>(p.formula.var_bound())) {
    throw Error(ErrorKind::UnboundVariable, "valuation shorter than the formula's variables");
  }
  for (Elem e : p.valuation) {
    if (e >= t.size()) throw Error(ErrorKind::InvalidInput, "valuation outside the target");
  }
  if (evaluate(p.formula, t.ops(), p.valuation) != t.top()) {
    throw Error(ErrorKind::InvalidInput, "presentation formula is not top under its valuation");
  }
  ElementSet gens(t.size());
  for (Elem e : p.valuation) gens.set(e);
  if (generated_closure(t, gens).count() != t.size()) {
    throw Error(ErrorKind::NotGenerated, "valuation does not generate the target");
  }
}

Diagram diagram_formula(const HeytingAlgebra& a, std::size_t budget) {
  const std::size_t n = a.size();
  if (n > budget) {
    throw Error(ErrorKind::SizeLimit, "diagram of " + std::to_string(n) +
                                          " elements exceeds the variable budget " +
                                          std::to_string(budget));
  }
  Diagram d;
  auto p = [](std::size_t i) { return Formula::var(static_cast<int>(i)); };
  const std::size_t ops[] = {OpTable::kMeet, OpTable::kJoin, OpTable::kImp};
  for (std::size_t op : ops) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        const Elem k = a.ops().apply(op, static_cast<Elem>(i), static_cast<Elem>(j));
        Formula lhs = op == OpTable::kMeet   ? Formula::conj(p(i), p(j))
                      : op == OpTable::kJoin ? Formula::disj(p(i), p(j))
                                             : Formula::imp(p(i), p(j));
        d.relations.push_back(Formula::iff(lhs, p(k)));
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    d.relations.push_back(Formula::iff(Formula::neg(p(i)), p(a.neg(static_cast<Elem>(i)))));
  }
  d.formula = Formula::conj_all(d.relations);
  for (std::size_t i = 0; i < n; ++i) d.valuation.push_back(static_cast<Elem>(i));
  return d;
}

Formula jankov_formula(const HeytingAlgebra& a, std::size_t budget) {
  const auto op = opremum(a);
  if (!op) throw Error(ErrorKind::NotSI, "algebra has no opremum");
  return Formula::imp(diagram_formula(a, budget).formula, Formula::var(*op));
}

std::vector<std::optional<Formula>> terms_for_all(const HeytingAlgebra& a,
                                                  const std::vector<Generator>& gens) {
  std::vector<std::optional<Formula>> term(a.size());
  std::vector<Elem> known;
  for (const Generator& g : gens) {
    if (!term[g.elem]) {
      term[g.elem] = Formula::var(g.var);
      known.push_back(g.elem);
    }
  }
  auto discover = [&](Elem e, Formula f, std::vector<Elem>& fresh) {
    if (term[e]) return;
    term[e] = std::move(f);
    fresh.push_back(e);
  };
  while (true) {
    std::vector<Elem> fresh;
    for (Elem x : known) {
      for (Elem y : known) discover(a.meet(x, y), Formula::conj(*term[x], *term[y]), fresh);
    }
    for (Elem x : known) {
      for (Elem y : known) discover(a.join(x, y), Formula::disj(*term[x], *term[y]), fresh);
    }
    for (Elem x : known) {
      for (Elem y : known) discover(a.imp(x, y), Formula::imp(*term[x], *term[y]), fresh);
    }
    for (Elem x : known) discover(a.neg(x), Formula::neg(*term[x]), fresh);
    if (fresh.empty()) break;
    known.insert(known.end(), fresh.begin(), fresh.end());
  }
  return term;
}

Formula term_for_element(const HeytingAlgebra& a, const std::vector<Generator>& gens,
                         Elem target) {
  auto terms = terms_for_all(a, gens);
  if (target >= a.size() || !terms[target]) {
    throw Error(ErrorKind::NotGenerated, "element " + std::to_string(target) +
                                             " is not generated by the given elements");
  }
  return *terms[target];
}

DeJongh dejongh_formula(const HeytingAlgebra& a) {
  const auto op = opremum(a);
  if (!op) throw Error(ErrorKind::NotSI, "algebra has no opremum");
  DeJongh out;
  for (Elem j : a.join_irreducibles()) {
    if (j != a.top()) out.generators.push_back(j);
  }
  // Only Z2 has no such element; its opremum then serves as generator.
  if (out.generators.empty()) out.generators.push_back(*op);
  std::vector<Generator> gens;
  for (std::size_t i = 0; i < out.generators.size(); ++i) {
    gens.push_back(Generator{static_cast<int>(i), out.generators[i]});
  }
  const auto terms = terms_for_all(a, gens);
  const std::size_t n = a.size();
  std::vector<Formula> relations;
  std::set<std::string> seen;
  auto add = [&](const Formula& f) {
    if (seen.insert(print(f)).second) relations.push_back(f);
  };
  const std::size_t ops[] = {OpTable::kMeet, OpTable::kJoin, OpTable::kImp};
  for (std::size_t o : ops) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        const Formula& x = *terms[i];
        const Formula& y = *terms[j];
        const Elem k = a.ops().apply(o, static_cast<Elem>(i), static_cast<Elem>(j));
        Formula lhs = o == OpTable::kMeet   ? Formula::conj(x, y)
                      : o == OpTable::kJoin ? Formula::disj(x, y)
                                            : Formula::imp(x, y);
        add(Formula::iff(lhs, *terms[k]));
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    add(Formula::iff(Formula::neg(*terms[i]), *terms[a.neg(static_cast<Elem>(i))]));
  }
  out.formula = Formula::imp(Formula::conj_all(relations), *terms[*op]);
  return out;
}

Formula characteristic_formula(const Presentation& p) {
  const auto op = opremum(p.target);
  if (!op) throw Error(ErrorKind::NotSI, "presented algebra has no opremum");
  std::vector<Generator> gens;
  for (std::size_t i = 0; i < p.valuation.size(); ++i) {
    gens.push_back(Generator{static_cast<int>(i), p.valuation[i]});
  }
  return Formula::imp(p.formula, term_for_element(p.target, gens, *op));
}

Presentation diagram_presentation(const HeytingAlgebra& a, const std::string& expr,
                                  std::size_t budget) {
  Diagram d = diagram_formula(a, budget);
  return Presentation{d.formula, a, d.valuation, expr};
}

}  // namespace heyting
