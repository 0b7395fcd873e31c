#include "heyting/acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "heyting/corpus.hpp"
#include "heyting/expr.hpp"
#include "heyting/jankov.hpp"
#include "heyting/ladder.hpp"
#include "heyting/modal.hpp"
#include "heyting/presentation.hpp"
#include "heyting/search.hpp"
#include "heyting/validity.hpp"

namespace heyting {
namespace {

// Counts checks and keeps the first few failure messages.
class Tally {
 public:
  void expect(bool ok, const std::string& what) {
    ++checks_;
    if (ok) return;
    ++failed_;
    if (messages_.size() < 3) messages_.push_back(what);
  }
  bool ok() const { return failed_ == 0; }
  std::string summary(const std::string& extra = {}) const {
    std::ostringstream out;
    out << checks_ << " checks";
    if (!extra.empty()) out << ", " << extra;
    if (failed_ > 0) {
      out << ", " << failed_ << " failed";
      for (const std::string& m : messages_) out << "; " << m;
    }
    return out.str();
  }

 private:
  std::size_t checks_ = 0;
  std::size_t failed_ = 0;
  std::vector<std::string> messages_;
};

struct Result {
  bool passed;
  std::string detail;
};

Result finish(const Tally& t, const std::string& extra = {}) { return {t.ok(), t.summary(extra)}; }

bool surjective(const Homomorphism& h, std::size_t n) {
  std::vector<bool> hit(n, false);
  for (Elem e : h.map) hit[e] = true;
  return std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
}

std::vector<std::pair<std::string, HeytingAlgebra>> standard_corpus() {
  std::vector<std::pair<std::string, HeytingAlgebra>> out;
  const auto all = all_heyting_algebras(10);
  for (std::size_t i = 0; i < all.size(); ++i) out.emplace_back("corpus#" + std::to_string(i), all[i]);
  std::vector<std::string> named;
  for (int n = 1; n <= 10; ++n) {
    named.push_back("Z(" + std::to_string(n) + ")");
    named.push_back("C(" + std::to_string(n) + ")");
  }
  for (const char* e : {"B(0)", "B(1)", "B(2)", "B(3)", "Z(2)xZ(5)", "Z(3)xZ(3)", "C(2)xZ(4)",
                        "Z(3)+Z(3)", "Z(4)+B(2)", "Z(2)+Z(3)+Z(2)", "Z(2)xZ(2)+Z(2)+Z(2)",
                        "trunc(Zinf,9)", "trunc(Zprime,4)", "(Z(3)xZ(3))/nabla(3)",
                        "(Z(10))/nabla(4)", "B(3)/nabla(1)"}) {
    named.push_back(e);
  }
  for (const std::string& e : named) out.emplace_back(e, eval_algebra(e));
  return out;
}

Result kernel_laws() {
  Tally t;
  const auto corpus = standard_corpus();
  for (const auto& [name, a] : corpus) {
    const std::size_t n = a.size();
    t.expect(a.size() <= 10, name + " exceeds 10 elements");
    t.expect(a.check_laws(), name + " violates the Heyting laws");
    const auto filters = enumerate_filters(a);
    t.expect(filters.size() == n, name + ": filter count differs from size");
    for (const Filter& f : filters) {
      t.expect(is_filter(a, f.members), name + ": enumerated set is not a filter");
      const Quotient q = quotient(a, f);
      t.expect(q.algebra.check_laws(), name + ": quotient violates the laws");
      t.expect(is_homomorphism(a, q.algebra, q.projection), name + ": projection not a homomorphism");
      t.expect(surjective(q.projection, q.algebra.size()), name + ": projection not onto");
      for (std::size_t x = 0; x < n; ++x) {
        const bool in_kernel = q.projection.map[x] == q.algebra.top();
        t.expect(in_kernel == f.contains(static_cast<Elem>(x)), name + ": kernel differs from filter");
        for (std::size_t y = 0; y < n; ++y) {
          const bool same = q.projection.map[x] == q.projection.map[y];
          const bool related = f.contains(a.iff(static_cast<Elem>(x), static_cast<Elem>(y)));
          t.expect(same == related, name + ": congruence classes differ from the filter relation");
        }
      }
    }
  }
  return finish(t, std::to_string(corpus.size()) + " algebras");
}

Result concat_quotient() {
  Tally t;
  const std::vector<std::string> names = {"Z(2)", "Z(3)", "Z(4)", "Z(5)", "C(4)", "B(2)"};
  std::vector<HeytingAlgebra> algs;
  for (const auto& n : names) algs.push_back(eval_algebra(n));
  std::size_t cases = 0;
  for (std::size_t i = 0; i < algs.size(); ++i) {
    const HeytingAlgebra& a = algs[i];
    for (std::size_t j = 0; j < algs.size(); ++j) {
      const HeytingAlgebra& b = algs[j];
      const HeytingAlgebra sum = concat(a, b);
      const std::string tag = names[i] + "+" + names[j];
      for (const Filter& f : enumerate_filters(b)) {
        ++cases;
        ElementSet image(sum.size());
        for (Elem y : elements_of(f.members)) image.set(concat_upper_index(a, b, y));
        t.expect(is_filter(sum, image), tag + ": image of a filter is not a filter");
        const HeytingAlgebra lhs = quotient(sum, Filter{image}).algebra;
        const HeytingAlgebra rhs = concat(a, quotient(b, f).algebra);
        t.expect(is_isomorphic(lhs, rhs).isomorphic, tag + ": (A+B)/F not isomorphic to A+B/F");
      }
    }
    t.expect(is_isomorphic(concat(a, chain(1)), a).isomorphic, names[i] + "+C(1) differs from " + names[i]);
  }
  return finish(t, std::to_string(cases) + " filter cases");
}

Result jankov_iff() {
  Tally t;
  const auto si = si_algebras(6);
  const auto all = all_heyting_algebras(8);
  std::size_t refuted = 0;
  for (std::size_t i = 0; i < si.size(); ++i) {
    const Formula chi = jankov_formula(si[i]);
    for (std::size_t j = 0; j < all.size(); ++j) {
      const bool refutes = !propagate_validity(all[j], chi).valid;
      refuted += refutes;
      t.expect(refutes == in_sh(si[i], all[j]).holds,
               "s.i. #" + std::to_string(i) + " vs corpus #" + std::to_string(j));
    }
  }
  return finish(t, std::to_string(si.size()) + " x " + std::to_string(all.size()) + " pairs, " +
                       std::to_string(refuted) + " refuted");
}

Result excluded_middle() {
  Tally t;
  const Formula chi = jankov_formula(rn_algebra(3).algebra);
  const Formula lem = parse("p1 | ~p1");
  std::size_t valid = 0;
  const auto all = all_heyting_algebras(8);
  for (std::size_t j = 0; j < all.size(); ++j) {
    const bool v = is_valid(all[j], lem).valid;
    valid += v;
    t.expect(is_valid(all[j], chi).valid == v, "corpus #" + std::to_string(j));
  }
  return finish(t, std::to_string(valid) + " of " + std::to_string(all.size()) + " validate both");
}

Result antichain() {
  Tally t;
  std::vector<HeytingAlgebra> algs;
  std::vector<Formula> chis;
  for (int k : {3, 4, 5}) {
    algs.push_back(eval_algebra("Z(" + std::to_string(2 * k) + ")+Z(2)+Z(2)"));
    chis.push_back(jankov_formula(algs.back()));
  }
  for (std::size_t i = 0; i < algs.size(); ++i) {
    const std::string ki = "k=" + std::to_string(i + 3);
    for (std::size_t j = 0; j < algs.size(); ++j) {
      const std::string kj = "k=" + std::to_string(j + 3);
      if (i == j) {
        ValidityOptions opt;
        opt.engine = i == 0 ? Engine::Both : Engine::Propagate;
        t.expect(!is_valid(algs[j], chis[i], opt).valid, "chi(" + ki + ") valid on its own algebra");
      } else {
        t.expect(!in_sh(algs[i], algs[j]).holds, ki + " in SH(" + kj + ")");
        ValidityOptions opt;
        opt.engine = Engine::Propagate;
        t.expect(is_valid(algs[j], chis[i], opt).valid, "chi(" + ki + ") refuted on " + kj);
      }
    }
  }
  return finish(t);
}

std::vector<HeytingAlgebra> variety_corpus(const std::string& generator, std::size_t bound) {
  VarietyHandle h;
  h.generator_exprs = {generator};
  h.generators = {eval_algebra(generator)};
  h.bound = bound;
  return corpus_algebras(build_corpus(h));
}

// Z-part elements located by the covering pattern of the ladder's lower levels.
struct LadderNames {
  Elem g, r2, r1, t, e5, e6, e7;
};

std::optional<Elem> unique_cover(const HeytingAlgebra& z, Elem x,
                                 const std::function<bool(Elem)>& accept) {
  std::optional<Elem> found;
  for (auto [lo, hi] : z.covers()) {
    if (lo != x || !accept(hi)) continue;
    if (found) return std::nullopt;
    found = hi;
  }
  return found;
}

std::optional<LadderNames> name_ladder(const OneGenerated& z) {
  const HeytingAlgebra& a = z.algebra;
  LadderNames n{};
  n.g = z.generator;
  const auto atoms = a.atoms();
  if (atoms.size() != 2 || std::find(atoms.begin(), atoms.end(), n.g) == atoms.end()) return {};
  n.r2 = atoms[0] == n.g ? atoms[1] : atoms[0];
  auto r1 = unique_cover(a, n.g, [&](Elem y) { return !a.leq(n.r2, y); });
  if (!r1) return {};
  n.r1 = *r1;
  n.t = a.join(n.g, n.r2);
  n.e5 = a.join(n.r1, n.t);
  auto e6 = unique_cover(a, n.t, [&](Elem y) { return y != n.e5; });
  if (!e6) return {};
  n.e6 = *e6;
  auto e7 = unique_cover(a, n.e5, [&](Elem y) { return !a.leq(n.e6, y); });
  if (!e7) return {};
  n.e7 = *e7;
  return n;
}

bool covers(const HeytingAlgebra& a, Elem lo, Elem hi) {
  const auto cv = a.covers();
  return std::find(cv.begin(), cv.end(), std::make_pair(lo, hi)) != cv.end();
}

Result zprime_presentation_check() {
  Tally t;
  std::vector<std::string> verdicts;
  for (std::size_t k : {10u, 12u}) {
    const std::string tag = "k=" + std::to_string(k);
    const Presentation p = zprime_presentation(k);
    const auto corpus = variety_corpus("trunc(Zstar," + std::to_string(k) + ")", 8);
    const DefinesVerdict v = check_defines(p, corpus, 8);
    verdicts.push_back(describe(v));
    t.expect(v.outcome == Outcome::VerifiedUpToBound, tag + ": " + describe(v));

    // Element identities.
    const HeytingAlgebra& zp = p.target;
    const OneGenerated z = rn_algebra(k);
    const auto names = name_ladder(z);
    t.expect(names.has_value(), tag + ": covering pattern not found");
    if (!names) continue;
    const LadderNames& n = *names;
    t.expect(covers(z.algebra, z.algebra.bottom(), n.g) && covers(z.algebra, z.algebra.bottom(), n.r2) &&
                 covers(z.algebra, n.g, n.r1) && covers(z.algebra, n.g, n.t) &&
                 covers(z.algebra, n.r2, n.t) && covers(z.algebra, n.r1, n.e5) &&
                 covers(z.algebra, n.t, n.e5) && covers(z.algebra, n.t, n.e6) &&
                 covers(z.algebra, n.e5, n.e7) &&
                 covers(z.algebra, n.e5, z.algebra.join(n.e5, n.e6)) &&
                 covers(z.algebra, n.e6, z.algebra.join(n.e5, n.e6)),
             tag + ": ladder covers differ from the expected pattern");
    auto pair = [](Elem x, int y) { return static_cast<Elem>(x * 2 + y); };
    const Elem a = p.valuation[0];
    const Elem b = p.valuation[1];
    t.expect(evaluate(p.formula, zp.ops(), p.valuation) == zp.top(), tag + ": A(a,b) is not top");
    t.expect(evaluate(Formula::conj_all(zprime_compact_conjuncts()), zp.ops(), p.valuation) == zp.top(),
             tag + ": compact formula is not top");
    t.expect(a == pair(n.g, 0) && b == pair(z.algebra.bottom(), 1), tag + ": generator placement");
    const Elem a7 = pair(n.e7, 1);
    const Elem lhs = zp.imp(zp.imp(zp.neg(zp.neg(a)), a), zp.join(a, zp.neg(a)));
    t.expect(lhs == a7, tag + ": (~~a -> a) -> (a | ~a) differs from a7");
    const Elem r21 = pair(z.algebra.join(n.r2, n.r1), 1);
    for (int y : {0, 1}) {
      const Elem d = pair(n.r2, y);
      t.expect(zp.join(d, zp.neg(d)) == r21, tag + ": d | ~d differs from <r2 | r1, 1>");
    }
    t.expect(zp.less(r21, a7), tag + ": <r2 | r1, 1> is not below a7");
  }
  t.expect(verdicts.size() == 2 && verdicts[0] == verdicts[1], "verdicts differ between k=10 and k=12");

  // Mutations: each conjunct of the compact formula dropped in turn.
  const auto compact = zprime_compact_conjuncts();
  const Presentation base = zprime_presentation(10);
  const auto corpus12 = variety_corpus("trunc(Zstar,10)", 12);
  std::string mutated;
  for (std::size_t drop = 0; drop < compact.size(); ++drop) {
    std::vector<Formula> keep;
    for (std::size_t i = 0; i < compact.size(); ++i) {
      if (i != drop) keep.push_back(compact[i]);
    }
    Presentation m{Formula::conj_all(keep), base.target, base.valuation, base.target_expr};
    const DefinesVerdict v = check_defines(m, corpus12, 12);
    t.expect(v.outcome == Outcome::Refuted, "dropping conjunct " + std::to_string(drop + 1) + ": " + describe(v));
    mutated += (drop ? " " : "") + describe(v);
  }
  return finish(t, verdicts.front() + "; mutations " + mutated);
}

Result concat_presentation() {
  Tally t;
  {
    const Presentation pa = diagram_presentation(chain(3), "C(3)");
    const Presentation pb = shift_presentation(diagram_presentation(chain(3), "C(3)"), 3);
    const Presentation c = concat_defining_formula(pa, pb);
    t.expect(is_isomorphic(c.target, chain(3)).isomorphic, "3-chain target");
    const auto corpus = si_algebras(6);
    const DefinesVerdict v = check_defines(c, corpus, 6);
    t.expect(v.outcome == Outcome::VerifiedUpToBound, "3-chain: " + describe(v));
  }
  const Presentation pa = zprime_presentation(10);
  const Presentation pb = shift_presentation(diagram_presentation(eval_algebra("Z(2)+Z(7)"), "Z(2)+Z(7)"), 2);
  const Presentation c = concat_defining_formula(pa, pb);
  const std::string expected = "Z(10)xZ(2)+Z(7)";
  t.expect(is_isomorphic(c.target, eval_algebra(expected)).isomorphic, "target differs from " + expected);
  const DefinesVerdict v = check_defines(c, variety_corpus(expected, 8), 8);
  t.expect(v.outcome == Outcome::VerifiedUpToBound, expected + ": " + describe(v));
  return finish(t, describe(v) + " over " + std::to_string(v.algebras) + " algebras");
}

// Value tables of two-variable formulas over a fixed list of algebras,
// concatenated; formulas with equal fingerprints agree on every listed algebra.
class Fingerprints {
 public:
  explicit Fingerprints(std::vector<const HeytingAlgebra*> algs) : algs_(std::move(algs)) {
    for (const HeytingAlgebra* a : algs_) {
      offset_.push_back(width_);
      width_ += a->size() * a->size();
    }
  }
  using Table = std::vector<Elem>;

  Table var(int v) const {
    Table out(width_);
    for (std::size_t i = 0; i < algs_.size(); ++i) {
      const std::size_t n = algs_[i]->size();
      for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t y = 0; y < n; ++y) out[offset_[i] + x * n + y] = static_cast<Elem>(v == 0 ? x : y);
      }
    }
    return out;
  }

  Table apply(std::size_t op, const Table& l, const Table& r) const {
    Table out(width_);
    for (std::size_t i = 0; i < algs_.size(); ++i) {
      const OpTable& ops = algs_[i]->ops();
      const std::size_t end = offset_[i] + algs_[i]->size() * algs_[i]->size();
      for (std::size_t k = offset_[i]; k < end; ++k) out[k] = ops.apply(op, l[k], r[k]);
    }
    return out;
  }

  Table neg(const Table& l) const {
    Table out(width_);
    for (std::size_t i = 0; i < algs_.size(); ++i) {
      const OpTable& ops = algs_[i]->ops();
      const std::size_t end = offset_[i] + algs_[i]->size() * algs_[i]->size();
      for (std::size_t k = offset_[i]; k < end; ++k) out[k] = ops.apply(OpTable::kNeg, l[k]);
    }
    return out;
  }

  Table of(const Formula& f) const {
    switch (f.kind()) {
      case Kind::Var: return var(f.var_index());
      case Kind::And: return apply(OpTable::kMeet, of(f.lhs()), of(f.rhs()));
      case Kind::Or: return apply(OpTable::kJoin, of(f.lhs()), of(f.rhs()));
      case Kind::Imp: return apply(OpTable::kImp, of(f.lhs()), of(f.rhs()));
      case Kind::Neg: return neg(of(f.child()));
      default: throw Error(ErrorKind::InvalidInput, "fingerprints cover p1, p2 and the connectives only");
    }
  }

  Elem at(const Table& t, std::size_t alg, Elem x, Elem y) const {
    return t[offset_[alg] + x * algs_[alg]->size() + y];
  }

 private:
  std::vector<const HeytingAlgebra*> algs_;
  std::vector<std::size_t> offset_;
  std::size_t width_ = 0;
};

Result auxiliary_properties(std::uint64_t seed) {
  Tally t;
  const HeytingAlgebra zp = truncation("Zprime", 12);
  const ZPrimeElements ze = zprime_elements(zp, 12);
  const auto corpus = all_heyting_algebras(8);
  std::vector<const HeytingAlgebra*> algs{&zp};
  for (const HeytingAlgebra& a : corpus) algs.push_back(&a);
  const Fingerprints fp(algs);
  const Fingerprints::Table a_table = fp.of(zprime_formula());
  std::vector<bool> si;
  for (const HeytingAlgebra& a : corpus) si.push_back(is_si(a));

  std::size_t failures = 0;
  auto check = [&](const Fingerprints::Table& b, const std::string& tag) {
    bool ok = true;
    for (std::size_t i = 0; i < corpus.size(); ++i) {
      const HeytingAlgebra& x = corpus[i];
      const std::size_t slot = i + 1;
      const Elem top = x.top();
      const Elem bot = x.bottom();
      for (std::size_t p = 0; p < x.size() && ok; ++p) {
        for (std::size_t q = 0; q < x.size(); ++q) {
          const Elem qq = x.meet(static_cast<Elem>(q), x.neg(static_cast<Elem>(q)));
          if (fp.at(b, slot, static_cast<Elem>(p), qq) != top) {
            ok = false;
            t.expect(false, tag + ": B(p, q & ~q) refuted on corpus #" + std::to_string(i));
            break;
          }
        }
      }
      if (fp.at(b, slot, bot, bot) != top || fp.at(b, slot, bot, top) != top ||
          fp.at(b, slot, top, bot) != top) {
        ok = false;
        t.expect(false, tag + ": constant values on corpus #" + std::to_string(i));
      }
      if (!si[i]) continue;
      for (std::size_t c = 0; c < x.size(); ++c) {
        for (std::size_t d = 0; d < x.size(); ++d) {
          const Elem de = static_cast<Elem>(d);
          if (fp.at(a_table, slot, static_cast<Elem>(c), de) != top) continue;
          if (x.join(de, x.neg(de)) != top) continue;
          if (fp.at(b, slot, static_cast<Elem>(c), de) != top) {
            ok = false;
            t.expect(false, tag + ": d | ~d case on corpus #" + std::to_string(i));
          }
        }
      }
    }
    if (ok) t.expect(true, tag);
    failures += !ok;
  };
  auto assumed = [&](const Fingerprints::Table& b) { return fp.at(b, 0, ze.a, ze.b) == zp.top(); };

  std::mt19937_64 rng(seed);
  std::size_t sampled = 0;
  std::size_t drawn = 0;
  while (sampled < 500 && drawn < 2'000'000) {
    const Formula f = random_formula(rng, 6, 2);
    ++drawn;
    const auto table = fp.of(f);
    if (!assumed(table)) continue;
    ++sampled;
    check(table, "sample " + print(f));
  }
  t.expect(sampled == 500, "only " + std::to_string(sampled) + " samples accepted");

  // Every formula of depth <= 3, one per fingerprint class.
  std::map<Fingerprints::Table, int> classes;
  std::vector<const Fingerprints::Table*> level;
  for (int v : {0, 1}) {
    auto it = classes.emplace(fp.var(v), 0).first;
    level.push_back(&it->first);
  }
  for (int depth = 1; depth <= 3; ++depth) {
    std::vector<const Fingerprints::Table*> known = level;
    std::vector<const Fingerprints::Table*> fresh;
    auto add = [&](Fingerprints::Table&& tb) {
      auto [it, inserted] = classes.emplace(std::move(tb), depth);
      if (inserted) fresh.push_back(&it->first);
    };
    for (const auto* l : known) {
      add(fp.neg(*l));
      for (const auto* r : known) {
        for (std::size_t op : {OpTable::kMeet, OpTable::kJoin, OpTable::kImp}) add(fp.apply(op, *l, *r));
      }
    }
    level.insert(level.end(), fresh.begin(), fresh.end());
  }
  std::size_t assumed_classes = 0;
  for (const auto& [table, depth] : classes) {
    if (!assumed(table)) continue;
    ++assumed_classes;
    check(table, "depth-" + std::to_string(depth) + " class");
  }
  return finish(t, std::to_string(sampled) + " samples of " + std::to_string(drawn) + " drawn, " +
                       std::to_string(assumed_classes) + " of " + std::to_string(classes.size()) +
                       " depth<=3 classes, " + std::to_string(failures) + " exceptions");
}

Result kg_equivalence() {
  Tally t;
  const Formula axiom = parse("(p1 -> p2) | (p2 -> p3) | ((p2 -> p3) -> p3) | (p3 -> p1 | p2)");
  const Formula pretrue = parse(
      "(((p1 -> p2) -> p2) -> p1) -> (p1 | (p1 -> p2)) -> "
      "(p3 | ((p1 -> p2) | ((p1 -> p2) -> p2)))");
  const HeytingAlgebra a1 = eval_algebra("Z(7)+Z(2)");
  const HeytingAlgebra a2 = eval_algebra("Z(2)+Z(7)+Z(2)");
  std::size_t members = 0;
  std::size_t refuting = 0;
  std::size_t refuting_any = 0;
  const auto all = all_heyting_algebras(10);
  for (std::size_t i = 0; i < all.size(); ++i) {
    if (!is_valid(all[i], axiom).valid) {
      refuting_any += !is_valid(all[i], pretrue).valid;
      continue;
    }
    ++members;
    const bool valid = is_valid(all[i], pretrue).valid;
    refuting += !valid;
    const bool embeds = find_embedding(a1, all[i]).has_value() || find_embedding(a2, all[i]).has_value();
    t.expect(valid == !embeds, "corpus #" + std::to_string(i));
  }
  const HeytingAlgebra kg = truncation("KG", 10);
  t.expect(is_valid(kg, axiom).valid, "trunc(KG,10) refutes the axiom");
  t.expect(!is_valid(kg, pretrue).valid, "trunc(KG,10) validates the pre-true formula");
  refuting_any += refuting;
  return finish(t, std::to_string(members) + " axiom models, " + std::to_string(refuting) +
                       " refute the pre-true formula (" + std::to_string(refuting_any) + " of " +
                       std::to_string(all.size()) + " algebras overall)");
}

Result modal_bridge(std::uint64_t seed) {
  Tally t;
  const Formula grz = parse("[]([](p1 -> []p1) -> p1) -> p1");
  const auto all = all_heyting_algebras(10);
  std::vector<Span> spans;
  for (std::size_t i = 0; i < all.size(); ++i) {
    const std::string tag = "corpus #" + std::to_string(i);
    Span s = span(all[i]);
    t.expect(!s4_violation(s.algebra.atoms(), s.algebra.box_table()).has_value(), tag + ": S4 laws");
    t.expect(modal_validity(s.algebra, grz).valid, tag + ": Grz refuted");
    t.expect(is_isomorphic(heyting_carcass(s.algebra), all[i]).isomorphic, tag + ": carcass of span");
    t.expect(span_box_formula_agrees(all[i], s), tag + ": box formula");
    spans.push_back(std::move(s));
  }
  std::mt19937_64 rng(seed);
  std::size_t small = 0;
  for (const HeytingAlgebra& a : all) small += a.size() <= 8;
  for (int k = 0; k < 200; ++k) {
    const Formula f = random_formula(rng, 4, 3);
    const Formula tf = gmt_translate(f);
    for (std::size_t i = 0; i < small; ++i) {
      t.expect(is_valid(all[i], f).valid == modal_validity(spans[i].algebra, tf).valid,
               "GMT transfer for " + print(f) + " on corpus #" + std::to_string(i));
    }
  }
  return finish(t, std::to_string(all.size()) + " spans, " + std::to_string(small) + " algebras for GMT");
}

const char* const kTitles[kCriteria] = {
    "kernel-laws",    "concat-quotient",    "jankov-iff",   "chi-Z3-excluded-middle",
    "antichain",      "zprime-presentation", "concat-presentation", "zprime-auxiliary",
    "kg-pretrue",     "modal-bridge"};

}  // namespace

CriterionResult run_criterion(int id, std::uint64_t seed) {
  if (id < 1 || id > kCriteria) throw Error(ErrorKind::InvalidInput, "no criterion " + std::to_string(id));
  CriterionResult r;
  r.id = id;
  r.title = kTitles[id - 1];
  const auto start = std::chrono::steady_clock::now();
  try {
    Result o{false, {}};
    switch (id) {
      case 1: o = kernel_laws(); break;
      case 2: o = concat_quotient(); break;
      case 3: o = jankov_iff(); break;
      case 4: o = excluded_middle(); break;
      case 5: o = antichain(); break;
      case 6: o = zprime_presentation_check(); break;
      case 7: o = concat_presentation(); break;
      case 8: o = auxiliary_properties(seed); break;
      case 9: o = kg_equivalence(); break;
      default: o = modal_bridge(seed); break;
    }
    r.passed = o.passed;
    r.detail = o.detail;
  } catch (const std::exception& e) {
    r.passed = false;
    r.detail = std::string("exception: ") + e.what();
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

std::vector<CriterionResult> run_acceptance(std::uint64_t seed,
                                            const std::function<void(const CriterionResult&)>& sink) {
  std::vector<CriterionResult> out;
  for (int id = 1; id <= kCriteria; ++id) {
    out.push_back(run_criterion(id, seed));
    if (sink) sink(out.back());
  }
  return out;
}

bool expected_failure(int id) { return id == 9; }

std::string format_result(const CriterionResult& r) {
  std::string verdict = r.passed ? "PASS" : "FAIL";
  if (expected_failure(r.id)) verdict += r.passed ? " (expected FAIL)" : " (expected)";
  return "criterion " + std::to_string(r.id) + " " + verdict + " " + r.title + ": " + r.detail;
}

}  // namespace heyting
