#include "heyting/json_io.hpp"

#include "heyting/expr.hpp"

namespace heyting {
namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorKind::InvalidInput, what); }

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) bad(std::string("missing field '") + key + "'");
  return j.at(key);
}

std::size_t index_value(const Json& j, const char* what) {
  if (!j.is_number_integer() || j.get<long long>() < 0) {
    bad(std::string(what) + " must be a non-negative integer");
  }
  return j.get<std::size_t>();
}

}  // namespace

Json algebra_to_json(const HeytingAlgebra& a) {
  Json leq = Json::array();
  for (std::size_t i = 0; i < a.size(); ++i) {
    Json row = Json::array();
    for (std::size_t k = 0; k < a.size(); ++k) {
      row.push_back(a.leq(static_cast<Elem>(i), static_cast<Elem>(k)) ? 1 : 0);
    }
    leq.push_back(std::move(row));
  }
  return Json{{"size", a.size()}, {"leq", std::move(leq)}, {"labels", a.labels()}};
}

HeytingAlgebra algebra_from_json(const Json& j) {
  const std::size_t n = index_value(field(j, "size"), "size");
  if (n == 0) bad("size must be positive");
  if (n > limits().max_elements) throw Error(ErrorKind::SizeLimit, "algebra too large");
  const Json& rows = field(j, "leq");
  if (!rows.is_array() || rows.size() != n) bad("leq must have size rows");
  OrderTable leq(n, std::vector<bool>(n));
  for (std::size_t i = 0; i < n; ++i) {
    if (!rows[i].is_array() || rows[i].size() != n) bad("leq row " + std::to_string(i));
    for (std::size_t k = 0; k < n; ++k) {
      const Json& v = rows[i][k];
      if (!v.is_number_integer() || (v.get<int>() != 0 && v.get<int>() != 1)) {
        bad("leq entries must be 0 or 1");
      }
      leq[i][k] = v.get<int>() == 1;
    }
  }
  std::vector<std::string> labels;
  if (j.contains("labels")) {
    const Json& l = j.at("labels");
    if (!l.is_array() || l.size() != n) bad("labels must have size entries");
    for (const Json& s : l) {
      if (!s.is_string()) bad("labels must be strings");
      labels.push_back(s.get<std::string>());
    }
  }
  return HeytingAlgebra::from_order(leq, std::move(labels));
}

Json interior_to_json(const InteriorAlgebra& b) {
  return Json{{"atoms", b.atoms()}, {"box", b.box_table()}};
}

InteriorAlgebra interior_from_json(const Json& j) {
  const std::size_t atoms = index_value(field(j, "atoms"), "atoms");
  if (atoms > InteriorAlgebra::kMaxAtoms) throw Error(ErrorKind::SizeLimit, "too many atoms");
  const Json& box = field(j, "box");
  if (!box.is_array() || box.size() != (std::size_t{1} << atoms)) bad("box must have 2^atoms entries");
  std::vector<Mask> table;
  for (const Json& v : box) {
    const std::size_t m = index_value(v, "box entry");
    if (m >= box.size()) bad("box entry out of range");
    table.push_back(static_cast<Mask>(m));
  }
  return InteriorAlgebra::from_box(atoms, std::move(table));
}

PresentationFile presentation_from_json(const Json& j) {
  const Json& ftext = field(j, "formula");
  const Json& target = field(j, "target");
  if (!ftext.is_string() || !target.is_string()) bad("formula and target must be strings");
  PresentationFile out;
  Presentation& p = out.presentation;
  p.formula = parse(ftext.get<std::string>());
  p.target_expr = target.get<std::string>();
  p.target = eval_algebra(p.target_expr);

  const Json& vars = field(j, "vars");
  const Json& vals = field(j, "valuation");
  if (!vars.is_array() || !vals.is_array() || vars.size() != vals.size()) {
    bad("vars and valuation must be arrays of equal length");
  }
  int width = p.formula.var_bound();
  std::vector<std::pair<int, Elem>> assigned;
  for (std::size_t i = 0; i < vars.size(); ++i) {
    if (!vars[i].is_string()) bad("vars must be strings");
    const Formula v = parse(vars[i].get<std::string>());
    if (v.kind() != Kind::Var) bad("vars entry is not a variable");
    const std::size_t e = index_value(vals[i], "valuation entry");
    if (e >= p.target.size()) bad("valuation entry out of range");
    assigned.emplace_back(v.var_index(), static_cast<Elem>(e));
    width = std::max(width, v.var_index() + 1);
  }
  p.valuation.assign(width, p.target.bottom());
  std::vector<bool> seen(width, false);
  for (auto [v, e] : assigned) {
    if (seen[v]) bad("variable listed twice");
    seen[v] = true;
    p.valuation[v] = e;
  }
  for (int v : p.formula.variables()) {
    if (!seen[v]) throw Error(ErrorKind::UnboundVariable, "p" + std::to_string(v + 1) + " has no value");
  }

  VarietyHandle& h = out.variety;
  if (j.contains("variety")) {
    const Json& v = j.at("variety");
    if (!v.is_object()) bad("variety must be an object");
    if (v.contains("bound")) h.bound = index_value(v.at("bound"), "bound");
    if (v.contains("axioms")) {
      for (const Json& a : v.at("axioms")) {
        if (!a.is_string()) bad("axioms must be strings");
        h.axioms.push_back(parse(a.get<std::string>()));
      }
    }
    if (v.contains("generators")) {
      for (const Json& g : v.at("generators")) {
        if (!g.is_string()) bad("generators must be strings");
        h.generator_exprs.push_back(g.get<std::string>());
        h.generators.push_back(eval_algebra(h.generator_exprs.back()));
      }
    }
  }
  h.mode = h.generators.empty() ? Evidence::AxiomChecked : Evidence::Constructed;
  return out;
}

Json presentation_to_json(const Presentation& p, const VarietyHandle& v) {
  Json vars = Json::array();
  Json vals = Json::array();
  for (int x : p.formula.variables()) {
    vars.push_back("p" + std::to_string(x + 1));
    vals.push_back(p.valuation[x]);
  }
  Json variety{{"bound", v.bound}};
  if (!v.generator_exprs.empty()) variety["generators"] = v.generator_exprs;
  if (!v.axioms.empty()) {
    Json ax = Json::array();
    for (const Formula& f : v.axioms) ax.push_back(print(f));
    variety["axioms"] = std::move(ax);
  }
  return Json{{"formula", print(p.formula)}, {"vars", std::move(vars)},
              {"target", p.target_expr},   {"valuation", std::move(vals)},
              {"variety", std::move(variety)}};
}

}  // namespace heyting
