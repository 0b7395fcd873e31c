#include "heyting/presentation.hpp"

#include <algorithm>
#include <set>

#include "heyting/corpus.hpp"
#include "heyting/ladder.hpp"
#include "heyting/search.hpp"
#include "heyting/validity.hpp"

namespace heyting {

std::vector<CorpusEntry> build_corpus(const VarietyHandle& handle) {
  std::vector<CorpusEntry> out;
  if (handle.mode == Evidence::AxiomChecked) {
    for (HeytingAlgebra& c : si_algebras(handle.bound)) {
      const bool ok = std::all_of(handle.axioms.begin(), handle.axioms.end(),
                                  [&](const Formula& ax) { return is_valid(c, ax).valid; });
      if (ok) out.push_back(CorpusEntry{std::move(c), "validates the axioms"});
    }
    return out;
  }
  struct Image {
    std::size_t gen;
    Elem cut;
    HeytingAlgebra algebra;
  };
  std::vector<Image> images;
  for (std::size_t g = 0; g < handle.generators.size(); ++g) {
    const HeytingAlgebra& gen = handle.generators[g];
    for (std::size_t d = 0; d < gen.size(); ++d) {
      Quotient q = quotient(gen, principal_filter(gen, static_cast<Elem>(d)));
      images.push_back(Image{g, static_cast<Elem>(d), std::move(q.algebra)});
    }
  }
  for (HeytingAlgebra& c : si_algebras(handle.bound)) {
    for (const Image& im : images) {
      if (im.algebra.size() < c.size()) continue;
      if (!find_embedding(c, im.algebra)) continue;
      const std::string name = im.gen < handle.generator_exprs.size()
                                   ? handle.generator_exprs[im.gen]
                                   : "generator " + std::to_string(im.gen);
      out.push_back(CorpusEntry{std::move(c), "embeds into " + name + " / nabla(" +
                                                  std::to_string(im.cut) + ")"});
      break;
    }
  }
  return out;
}

std::vector<HeytingAlgebra> corpus_algebras(const std::vector<CorpusEntry>& entries) {
  std::vector<HeytingAlgebra> out;
  for (const CorpusEntry& e : entries) out.push_back(e.algebra);
  return out;
}

std::string describe(const DefinesVerdict& v) {
  if (v.outcome == Outcome::VerifiedUpToBound) {
    return "VERIFIED-UP-TO-BOUND(" + std::to_string(v.bound) + ")";
  }
  std::string s = "REFUTED(algebra " + std::to_string(v.witness->corpus_index) + ", tuple";
  for (std::size_t i = 0; i < v.witness->tuple.size(); ++i) {
    s += (i == 0 ? " " : ",") + std::string("p") + std::to_string(i + 1) + "=" +
         std::to_string(v.witness->tuple[i]);
  }
  return s + ")";
}

DefinesVerdict check_defines(const Presentation& p, std::span<const HeytingAlgebra> corpus,
                             std::size_t bound) {
  validate_presentation(p);
  const std::vector<int> vars = p.formula.variables();
  DefinesVerdict verdict;
  verdict.bound = bound;
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    const HeytingAlgebra& b = corpus[i];
    ++verdict.algebras;
    for (const std::vector<Elem>& tuple : satisfying_valuations(b, p.formula)) {
      ++verdict.tuples;
      std::vector<std::pair<Elem, Elem>> pairs;
      for (int v : vars) pairs.emplace_back(p.valuation[v], tuple[v]);
      if (!extend_map(p.target.ops(), b.ops(), pairs).consistent) {
        verdict.outcome = Outcome::Refuted;
        verdict.witness = DefinesWitness{i, tuple};
        return verdict;
      }
    }
  }
  return verdict;
}

Presentation shift_presentation(const Presentation& p, int offset) {
  if (offset < 0) throw Error(ErrorKind::InvalidInput, "negative variable shift");
  Presentation out = p;
  out.formula = shift_variables(p.formula, offset);
  out.valuation.assign(offset, p.target.bottom());
  out.valuation.insert(out.valuation.end(), p.valuation.begin(), p.valuation.end());
  return out;
}

namespace {

std::vector<Generator> generators_of(const Presentation& p) {
  std::vector<Generator> gens;
  for (int v : p.formula.variables()) gens.push_back(Generator{v, p.valuation[v]});
  return gens;
}

// Index of each member of [lo, hi] inside interval(a, lo, hi), -1 outside.
std::vector<int> interval_ranks(const HeytingAlgebra& a, Elem lo, Elem hi) {
  std::vector<int> rank(a.size(), -1);
  int next = 0;
  for (std::size_t x = 0; x < a.size(); ++x) {
    if (a.leq(lo, static_cast<Elem>(x)) && a.leq(static_cast<Elem>(x), hi)) rank[x] = next++;
  }
  return rank;
}

}  // namespace

Presentation concat_defining_formula(const Presentation& pa, const Presentation& pb,
                                     std::optional<Formula> a_anchor,
                                     std::optional<Formula> b_anchor) {
  const std::vector<int> va = pa.formula.variables();
  const std::vector<int> vb = pb.formula.variables();
  std::set<int> shared;
  std::set_intersection(va.begin(), va.end(), vb.begin(), vb.end(),
                        std::inserter(shared, shared.begin()));
  if (!shared.empty()) {
    throw Error(ErrorKind::VariableClash,
                "p" + std::to_string(*shared.begin() + 1) + " occurs in both presentations");
  }
  const HeytingAlgebra& a = pa.target;
  const HeytingAlgebra& b = pb.target;
  const auto coatoms = a.coatoms();
  const auto atoms = b.atoms();
  if (coatoms.size() != 1) throw Error(ErrorKind::BadAnchor, "first algebra has no unique coatom");
  if (atoms.size() != 1) throw Error(ErrorKind::BadAnchor, "second algebra has no unique atom");
  const Elem coatom = coatoms.front();
  const Elem atom = atoms.front();
  if (!a_anchor) a_anchor = term_for_element(a, generators_of(pa), coatom);
  if (!b_anchor) b_anchor = term_for_element(b, generators_of(pb), atom);
  for (int v : a_anchor->variables()) {
    if (!std::binary_search(va.begin(), va.end(), v)) {
      throw Error(ErrorKind::VariableClash, "anchor uses a variable outside its presentation");
    }
  }
  for (int v : b_anchor->variables()) {
    if (!std::binary_search(vb.begin(), vb.end(), v)) {
      throw Error(ErrorKind::VariableClash, "anchor uses a variable outside its presentation");
    }
  }
  if (evaluate(*a_anchor, a.ops(), pa.valuation) != coatom) {
    throw Error(ErrorKind::BadAnchor, "first anchor does not evaluate to the coatom");
  }
  if (evaluate(*b_anchor, b.ops(), pb.valuation) != atom) {
    throw Error(ErrorKind::BadAnchor, "second anchor does not evaluate to the atom");
  }
  const HeytingAlgebra lower = interval(a, a.bottom(), coatom);
  const HeytingAlgebra upper = interval(b, atom, b.top());
  const HeytingAlgebra target = concat(lower, upper);
  const auto rank_a = interval_ranks(a, a.bottom(), coatom);
  const auto rank_b = interval_ranks(b, atom, b.top());
  auto embed_a = [&](Elem x) {
    return x == a.top() ? target.top() : static_cast<Elem>(rank_a[x]);
  };
  auto embed_b = [&](Elem y) {
    return y == b.bottom() ? target.bottom()
                           : concat_upper_index(lower, upper, static_cast<Elem>(rank_b[y]));
  };
  const int width = std::max(pa.formula.var_bound(), pb.formula.var_bound());
  std::vector<Elem> valuation(width, target.bottom());
  for (int v : va) valuation[v] = embed_a(pa.valuation[v]);
  for (int v : vb) valuation[v] = embed_b(pb.valuation[v]);
  Formula c = Formula::conj(Formula::conj(pa.formula, pb.formula),
                            Formula::iff(*a_anchor, *b_anchor));
  Presentation out{std::move(c), target, std::move(valuation),
                   "(" + pa.target_expr + ")' + '(" + pb.target_expr + ")"};
  return out;
}

std::vector<Formula> zprime_compact_conjuncts() {
  return {parse("~(p1 & p2)"), parse("~~p2 -> p2"),
          parse("((~~p1 -> p1) | ((~~p1 -> p1) -> p1 | ~p1)) -> p2 | ~p2")};
}

Formula zprime_formula() {
  return parse(
      "~(p1 & p2) & (~~p2 -> p2) & ((~~p1 -> p1) -> p2 | ~p2) & "
      "(((~~p1 -> p1) -> p1 | ~p1) -> p2 | ~p2)");
}

Presentation zprime_presentation(std::size_t k) {
  if (k < 6) {
    throw Error(ErrorKind::TruncationTooSmall,
                "trunc(Zprime, k) needs k >= 6, got " + std::to_string(k));
  }
  HeytingAlgebra z = truncation("Zprime", k);
  const ZPrimeElements e = zprime_elements(z, k);
  return Presentation{zprime_formula(), std::move(z), {e.a, e.b},
                      "trunc(Zprime," + std::to_string(k) + ")"};
}

}  // namespace heyting
