#include "heyting/cli.hpp"

#include <CLI11.hpp>
#include <chrono>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <regex>
#include <sstream>

#include "heyting/acceptance.hpp"
#include "heyting/expr.hpp"
#include "heyting/jankov.hpp"
#include "heyting/json_io.hpp"
#include "heyting/ladder.hpp"
#include "heyting/modal.hpp"
#include "heyting/presentation.hpp"
#include "heyting/search.hpp"
#include "heyting/validity.hpp"

namespace heyting {
namespace {

struct Globals {
  bool json = false;
  std::size_t size_limit = 0;
  std::uint64_t seed = kDefaultSeed;
  std::string engine = "auto";
};

int exit_code(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::SizeLimit:
      return kExitLimit;
    case ErrorKind::NotSI:
    case ErrorKind::NotGenerated:
    case ErrorKind::TruncationTooSmall:
    case ErrorKind::VariableClash:
    case ErrorKind::BadAnchor:
    case ErrorKind::NotS4:
      return kExitPrecondition;
    default:
      return kExitInput;
  }
}

Engine parse_engine(const std::string& name) {
  if (name == "auto") return Engine::Auto;
  if (name == "naive") return Engine::Naive;
  if (name == "propagate") return Engine::Propagate;
  if (name == "both") return Engine::Both;
  throw Error(ErrorKind::InvalidInput, "unknown engine '" + name + "'");
}

std::string join_labels(const HeytingAlgebra& a, const std::vector<Elem>& elems) {
  std::string s;
  for (Elem e : elems) s += (s.empty() ? "" : " ") + a.label(e);
  return s.empty() ? "-" : s;
}

std::string valuation_text(const HeytingAlgebra& a, const Formula& f, const std::vector<Elem>& v) {
  std::string s;
  for (int x : f.variables()) {
    s += (s.empty() ? "" : ",") + std::string("p") + std::to_string(x + 1) + "=" + a.label(v[x]);
  }
  return s;
}

Elem element_by_name(const HeytingAlgebra& a, const std::string& name) {
  const int found = a.find_label(name);
  if (found >= 0) return static_cast<Elem>(found);
  if (!name.empty() && std::all_of(name.begin(), name.end(), ::isdigit)) {
    const unsigned long idx = std::stoul(name);
    if (idx < a.size()) return static_cast<Elem>(idx);
  }
  throw Error(ErrorKind::InvalidInput, "no element '" + name + "'");
}

// "p1=a,p2=b" -> valuation indexed by variable. Labels may contain commas,
// so items split only before the next "p<digits>=".
std::vector<Elem> parse_assignment(const HeytingAlgebra& a, const std::string& text, int width) {
  std::vector<Elem> v(width, a.bottom());
  static const std::regex item_re(R"(p([0-9]+)=(.*?)(?=,p[0-9]+=|$))");
  std::size_t consumed = 0;
  for (auto it = std::sregex_iterator(text.begin(), text.end(), item_re); it != std::sregex_iterator(); ++it) {
    const std::smatch& m = *it;
    if (static_cast<std::size_t>(m.position(0)) != consumed) break;
    const int i = std::stoi(m[1].str()) - 1;
    if (i < 0) throw Error(ErrorKind::InvalidInput, "variables start at p1");
    if (i >= static_cast<int>(v.size())) v.resize(i + 1, a.bottom());
    v[i] = element_by_name(a, m[2].str());
    consumed = m.position(0) + m.length(0);
    if (consumed < text.size() && text[consumed] == ',') ++consumed;
  }
  if (consumed != text.size() || text.empty()) {
    throw Error(ErrorKind::InvalidInput, "expected p<i>=<element>,... in --at");
  }
  return v;
}

PresentationFile load_presentation(const std::string& path, const std::string& builtin, std::size_t k) {
  if (!builtin.empty()) {
    if (builtin != "zprime") throw Error(ErrorKind::InvalidInput, "unknown builtin '" + builtin + "'");
    PresentationFile pf;
    pf.presentation = zprime_presentation(k);
    const std::string gen = "trunc(Zstar," + std::to_string(k) + ")";
    pf.variety.generator_exprs = {gen};
    pf.variety.generators = {eval_algebra(gen)};
    pf.variety.bound = 8;
    pf.variety.mode = Evidence::Constructed;
    return pf;
  }
  if (path.empty()) throw Error(ErrorKind::InvalidInput, "give a presentation file or --builtin");
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::InvalidInput, "cannot read " + path);
  Json j;
  try {
    j = Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw Error(ErrorKind::InvalidInput, std::string("bad JSON: ") + e.what());
  }
  return presentation_from_json(j);
}

void show(const std::string& expr, const Globals& g, std::ostream& out) {
  const HeytingAlgebra a = eval_algebra(expr);
  if (g.json) {
    out << algebra_to_json(a).dump() << "\n";
    return;
  }
  if (max_ladder_index(expr) > 6) {
    out << "note: Z(n) for n > 6 is built as a ladder quotient; uniqueness is only checked up to 6\n";
  }
  out << "algebra: " << expr << "\n";
  out << "size: " << a.size() << "\n";
  std::vector<Elem> all;
  for (std::size_t i = 0; i < a.size(); ++i) all.push_back(static_cast<Elem>(i));
  out << "elements: ";
  out << join_labels(a, all) << "\n";
  out << "covers:";
  for (auto [lo, hi] : a.covers()) out << " " << a.label(lo) << "<" << a.label(hi);
  out << "\n";
  const auto op = opremum(a);
  out << "subdirectly irreducible: " << (op ? "yes" : "no") << "\n";
  out << "opremum: " << (op ? a.label(*op) : "-") << "\n";
  out << "dense: " << join_labels(a, elements_of(dense_elements(a).members)) << "\n";
  out << "regular: " << join_labels(a, elements_of(regular_elements(a))) << "\n";
}

int valid(const std::string& expr, const std::string& text, const std::string& at, const Globals& g,
          std::ostream& out) {
  const HeytingAlgebra a = eval_algebra(expr);
  const Formula f = parse(text);
  if (f.is_modal()) throw Error(ErrorKind::NotAssertoric, "box in an intuitionistic formula");
  if (!at.empty()) {
    const std::vector<Elem> v = parse_assignment(a, at, f.var_bound());
    const Elem value = evaluate(f, a.ops(), v);
    out << "value: " << a.label(value) << (value == a.top() ? " (top)" : "") << "\n";
    return value == a.top() ? kExitOk : kExitFails;
  }
  ValidityOptions opt;
  opt.engine = parse_engine(g.engine);
  const Verdict v = is_valid(a, f, opt);
  if (v.valid) {
    out << "VALID\n";
    return kExitOk;
  }
  out << "REFUTED " << valuation_text(a, f, *v.counter) << "\n";
  return kExitFails;
}

void jankov(const std::string& expr, const std::string& style, std::ostream& out) {
  const HeytingAlgebra a = eval_algebra(expr);
  Formula f;
  if (style == "full") {
    f = jankov_formula(a);
  } else if (style == "dejongh") {
    if (!opremum(a)) throw Error(ErrorKind::NotSI, "algebra is not subdirectly irreducible");
    f = dejongh_formula(a).formula;
  } else {
    throw Error(ErrorKind::InvalidInput, "unknown style '" + style + "'");
  }
  out << print(f) << "\n";
  out << "variables: " << f.variables().size() << "\n";
}

int embeds(const std::string& ea, const std::string& eb, std::ostream& out) {
  const HeytingAlgebra a = eval_algebra(ea);
  const HeytingAlgebra b = eval_algebra(eb);
  const SubHomVerdict v = in_sh(a, b);
  if (!v.holds) {
    out << "NO\n";
    return kExitFails;
  }
  const SubHomWitness& w = *v.witness;
  const Quotient q = quotient(b, w.filter);
  out << "YES\n";
  out << "filter: " << join_labels(b, elements_of(w.filter.members)) << "\n";
  out << "embedding:";
  for (std::size_t x = 0; x < a.size(); ++x) {
    out << " " << a.label(static_cast<Elem>(x)) << "->" << q.algebra.label(w.embedding.map[x]);
  }
  out << "\n";
  return kExitOk;
}

int present_verify(const PresentationFile& pf, std::size_t bound, std::ostream& out, std::ostream& err) {
  VarietyHandle h = pf.variety;
  if (bound > 0) h.bound = bound;
  const auto start = std::chrono::steady_clock::now();
  const auto entries = build_corpus(h);
  const auto corpus = corpus_algebras(entries);
  const DefinesVerdict v = check_defines(pf.presentation, corpus, h.bound);
  err << "corpus " << corpus.size() << " algebras, " << v.tuples << " tuples, "
      << std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count() << " s\n";
  out << describe(v) << "\n";
  if (v.witness) {
    const HeytingAlgebra& b = corpus[v.witness->corpus_index];
    out << "witness algebra: size " << b.size() << ", " << entries[v.witness->corpus_index].evidence << "\n";
    out << "witness tuple: " << valuation_text(b, pf.presentation.formula, v.witness->tuple) << "\n";
  }
  return v.outcome == Outcome::VerifiedUpToBound ? kExitOk : kExitFails;
}

void span_cmd(const std::string& expr, const Globals& g, std::ostream& out) {
  const HeytingAlgebra a = eval_algebra(expr);
  const Span s = span(a);
  if (g.json) {
    out << interior_to_json(s.algebra).dump() << "\n";
    return;
  }
  out << "atoms: " << s.algebra.atoms() << " (";
  for (std::size_t i = 0; i < s.points.size(); ++i) out << (i ? " " : "") << a.label(s.points[i]);
  out << ")\n";
  out << "size: " << s.algebra.size() << "\n";
  out << "opens:";
  for (std::size_t x = 0; x < a.size(); ++x) {
    out << " " << a.label(static_cast<Elem>(x)) << "=" << s.embedding[x];
  }
  out << "\n";
  out << "carcass isomorphic: "
      << (is_isomorphic(heyting_carcass(s.algebra), a).isomorphic ? "yes" : "no") << "\n";
}

int suite(const std::string& name, const std::vector<int>& only, const Globals& g, std::ostream& out,
          std::ostream& err) {
  if (name != "acceptance") throw Error(ErrorKind::InvalidInput, "unknown suite '" + name + "'");
  bool all_passed = true;
  auto report = [&](const CriterionResult& r) {
    out << format_result(r) << std::endl;
    err << "criterion " << r.id << " time " << std::fixed << std::setprecision(3) << r.seconds << " s\n";
    all_passed = all_passed && r.passed;
  };
  if (only.empty()) {
    run_acceptance(g.seed, report);
  } else {
    for (int id : only) report(run_criterion(id, g.seed));
  }
  return all_passed ? kExitOk : kExitFails;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Finite Heyting and interior algebra toolkit", "heyctl"};
  app.require_subcommand(1);
  Globals g;
  app.add_flag("--json", g.json, "JSON output where supported");
  app.add_option("--size-limit", g.size_limit, "cap for filter enumeration and homomorphism search");
  app.add_option("--seed", g.seed, "seed for sampled checks");
  app.add_option("--engine", g.engine, "validity engine")
      ->check(CLI::IsMember({"auto", "naive", "propagate", "both"}));

  std::string expr, expr2, text, at, style = "full", path, builtin, suite_name;
  std::size_t k = 10, bound = 0;
  std::vector<int> only;

  auto* c_show = app.add_subcommand("show", "describe an algebra");
  c_show->add_option("expr", expr)->required();
  auto* c_valid = app.add_subcommand("valid", "check a formula");
  c_valid->add_option("expr", expr)->required();
  c_valid->add_option("formula", text)->required();
  c_valid->add_option("--at", at, "evaluate at p1=x,p2=y instead");
  auto* c_jankov = app.add_subcommand("jankov", "Jankov formula of an s.i. algebra");
  c_jankov->add_option("expr", expr)->required();
  c_jankov->add_option("--style", style)->check(CLI::IsMember({"full", "dejongh"}));
  auto* c_charf = app.add_subcommand("charf", "characteristic formula of a presentation");
  c_charf->add_option("file", path);
  c_charf->add_option("--builtin", builtin);
  c_charf->add_option("--k", k);
  auto* c_embeds = app.add_subcommand("embeds", "A in SH(B)");
  c_embeds->add_option("a", expr)->required();
  c_embeds->add_option("b", expr2)->required();
  auto* c_present = app.add_subcommand("present-verify", "check that a presentation defines its target");
  c_present->add_option("file", path);
  c_present->add_option("--builtin", builtin);
  c_present->add_option("--k", k);
  c_present->add_option("--bound", bound);
  auto* c_gmt = app.add_subcommand("gmt", "modal translation of a formula");
  c_gmt->add_option("formula", text)->required();
  auto* c_span = app.add_subcommand("span", "interior algebra spanned by an algebra");
  c_span->add_option("expr", expr)->required();
  auto* c_suite = app.add_subcommand("suite", "run a check suite");
  c_suite->add_option("name", suite_name)->required();
  c_suite->add_option("--criterion", only, "run only these criteria");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInput;
  }

  const Limits saved = limits();
  if (g.size_limit > 0) {
    limits().filter_enumeration = g.size_limit;
    limits().search = g.size_limit;
  }
  int code = kExitOk;
  try {
    if (*c_show) {
      show(expr, g, out);
    } else if (*c_valid) {
      code = valid(expr, text, at, g, out);
    } else if (*c_jankov) {
      jankov(expr, style, out);
    } else if (*c_charf) {
      const PresentationFile pf = load_presentation(path, builtin, k);
      const Formula f = characteristic_formula(pf.presentation);
      out << print(f) << "\n";
      out << "variables: " << f.variables().size() << "\n";
    } else if (*c_embeds) {
      code = embeds(expr, expr2, out);
    } else if (*c_present) {
      code = present_verify(load_presentation(path, builtin, k), bound, out, err);
    } else if (*c_gmt) {
      out << print(gmt_translate(parse(text))) << "\n";
    } else if (*c_span) {
      span_cmd(expr, g, out);
    } else if (*c_suite) {
      code = suite(suite_name, only, g, out, err);
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    code = exit_code(e.kind());
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    code = kExitInput;
  }
  limits() = saved;
  return code;
}

}  // namespace heyting
