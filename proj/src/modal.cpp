#include "heyting/modal.hpp"

#include <algorithm>
#include <bit>
#include <map>

namespace heyting {
namespace {

OpTable boolean_ops(std::size_t atoms, const std::vector<Mask>& box) {
  const std::size_t n = std::size_t{1} << atoms;
  const Mask full = static_cast<Mask>(n - 1);
  OpTable t;
  t.n = n;
  t.bottom = 0;
  t.top = static_cast<Elem>(full);
  t.binary.assign(3, std::vector<Elem>(n * n));
  t.unary.assign(2, std::vector<Elem>(n));
  for (Mask x = 0; x < n; ++x) {
    for (Mask y = 0; y < n; ++y) {
      t.binary[OpTable::kMeet][x * n + y] = static_cast<Elem>(x & y);
      t.binary[OpTable::kJoin][x * n + y] = static_cast<Elem>(x | y);
      t.binary[OpTable::kImp][x * n + y] = static_cast<Elem>((~x | y) & full);
    }
    t.unary[OpTable::kNeg][x] = static_cast<Elem>(~x & full);
    t.unary[OpTable::kBox][x] = static_cast<Elem>(box[x]);
  }
  return t;
}

std::vector<Mask> sorted_opens(const std::vector<Mask>& box) {
  std::vector<Mask> out;
  for (Mask x = 0; x < box.size(); ++x) {
    if (box[x] == x) out.push_back(x);
  }
  std::sort(out.begin(), out.end(), [](Mask a, Mask b) {
    const int pa = std::popcount(a);
    const int pb = std::popcount(b);
    return pa != pb ? pa < pb : a < b;
  });
  return out;
}

}  // namespace

std::optional<std::string> s4_violation(std::size_t atoms, const std::vector<Mask>& box) {
  const std::size_t n = std::size_t{1} << atoms;
  if (box.size() != n) return "box table has " + std::to_string(box.size()) + " entries";
  const Mask full = static_cast<Mask>(n - 1);
  if (box[full] != full) return std::string("box(1) != 1");
  for (Mask x = 0; x < n; ++x) {
    if (box[x] > full) return "box(" + std::to_string(x) + ") outside the carrier";
    if ((box[x] & ~x) != 0) return "box(" + std::to_string(x) + ") not below it";
    if (box[box[x]] != box[x]) return "box not idempotent at " + std::to_string(x);
  }
  for (Mask x = 0; x < n; ++x) {
    for (Mask y = 0; y < n; ++y) {
      if (box[x & y] != (box[x] & box[y])) {
        return "box does not preserve the meet of " + std::to_string(x) + " and " +
               std::to_string(y);
      }
    }
  }
  return std::nullopt;
}

InteriorAlgebra InteriorAlgebra::from_box(std::size_t atoms, std::vector<Mask> box) {
  if (atoms > kMaxAtoms) {
    throw Error(ErrorKind::SizeLimit, "interior algebra with " + std::to_string(atoms) +
                                          " atoms exceeds " + std::to_string(kMaxAtoms));
  }
  if (auto why = s4_violation(atoms, box)) throw Error(ErrorKind::NotS4, *why);
  InteriorAlgebra b;
  b.atoms_ = atoms;
  b.ops_ = boolean_ops(atoms, box);
  b.box_ = std::move(box);
  return b;
}

std::vector<Mask> InteriorAlgebra::opens() const { return sorted_opens(box_); }

Span span(const HeytingAlgebra& a) {
  Span s;
  s.points = a.join_irreducibles();
  const std::size_t m = s.points.size();
  if (m > InteriorAlgebra::kMaxAtoms) {
    throw Error(ErrorKind::SizeLimit, "span needs 2^" + std::to_string(m) + " elements");
  }
  s.embedding.assign(a.size(), 0);
  for (std::size_t x = 0; x < a.size(); ++x) {
    for (std::size_t i = 0; i < m; ++i) {
      if (a.leq(s.points[i], static_cast<Elem>(x))) s.embedding[x] |= Mask{1} << i;
    }
  }
  const std::size_t n = std::size_t{1} << m;
  std::vector<Mask> box(n, 0);
  for (Mask b = 0; b < n; ++b) {
    for (Mask e : s.embedding) {
      if ((e & ~b) == 0) box[b] |= e;
    }
  }
  s.algebra = InteriorAlgebra::from_box(m, std::move(box));
  return s;
}

bool span_box_formula_agrees(const HeytingAlgebra& a, const Span& s) {
  const InteriorAlgebra& b = s.algebra;
  const Mask full = b.full();
  for (Mask x = 0; x < b.size(); ++x) {
    Mask meet_bool = full;
    Elem meet_imp = a.top();
    for (std::size_t u = 0; u < a.size(); ++u) {
      for (std::size_t v = 0; v < a.size(); ++v) {
        const Mask piece = (~s.embedding[u] | s.embedding[v]) & full;
        if ((x & ~piece) != 0) continue;
        meet_bool &= piece;
        meet_imp = a.meet(meet_imp, a.imp(static_cast<Elem>(u), static_cast<Elem>(v)));
      }
    }
    if (meet_bool != x || s.embedding[meet_imp] != b.box(x)) return false;
  }
  return true;
}

HeytingAlgebra heyting_carcass(const InteriorAlgebra& b) {
  const std::vector<Mask> opens = b.opens();
  const std::size_t n = opens.size();
  OrderTable leq(n, std::vector<bool>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) leq[i][j] = (opens[i] & ~opens[j]) == 0;
  }
  HeytingAlgebra h = HeytingAlgebra::from_order(leq);
  // The lattice structure fixes the implication; confirm it is box(~a | b).
  std::map<Mask, Elem> index;
  for (std::size_t i = 0; i < n; ++i) index[opens[i]] = static_cast<Elem>(i);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const Mask imp = b.box((~opens[i] | opens[j]) & b.full());
      if (h.imp(static_cast<Elem>(i), static_cast<Elem>(j)) != index.at(imp)) {
        throw Error(ErrorKind::NotS4, "open implication disagrees with the carcass");
      }
    }
  }
  return h;
}

InteriorAlgebra open_generated(const InteriorAlgebra& b) {
  const std::vector<Mask> opens = b.opens();
  // Points are equivalent when no open separates them.
  std::vector<int> cls(b.atoms(), -1);
  std::vector<Mask> members;
  for (std::size_t x = 0; x < b.atoms(); ++x) {
    if (cls[x] >= 0) continue;
    const int c = static_cast<int>(members.size());
    Mask group = 0;
    for (std::size_t y = x; y < b.atoms(); ++y) {
      const bool same = std::all_of(opens.begin(), opens.end(), [&](Mask o) {
        return ((o >> x) & 1u) == ((o >> y) & 1u);
      });
      if (same) {
        cls[y] = c;
        group |= Mask{1} << y;
      }
    }
    members.push_back(group);
  }
  const std::size_t k = members.size();
  auto expand = [&](Mask x) {
    Mask r = 0;
    for (std::size_t c = 0; c < k; ++c) {
      if (x >> c & 1u) r |= members[c];
    }
    return r;
  };
  auto compress = [&](Mask x) {
    Mask r = 0;
    for (std::size_t c = 0; c < k; ++c) {
      if ((x & members[c]) == members[c]) r |= Mask{1} << c;
    }
    return r;
  };
  std::vector<Mask> box(std::size_t{1} << k);
  for (Mask x = 0; x < box.size(); ++x) box[x] = compress(b.box(expand(x)));
  return InteriorAlgebra::from_box(k, std::move(box));
}

InteriorAlgebra add_boolean_atoms(const InteriorAlgebra& b, std::size_t extra) {
  if (extra > 0 && b.atoms() == 0) throw Error(ErrorKind::InvalidInput, "no point to attach new atoms to");
  const std::size_t m = b.atoms() + extra;
  if (m > InteriorAlgebra::kMaxAtoms) throw Error(ErrorKind::SizeLimit, "too many atoms");
  const Mask old_full = b.full();
  const Mask anchor = Mask{1} << (b.atoms() - 1);
  const Mask added = static_cast<Mask>(((std::size_t{1} << m) - 1) & ~std::size_t{old_full});
  std::vector<Mask> box(std::size_t{1} << m);
  for (Mask x = 0; x < box.size(); ++x) {
    // An old open extends to the new points exactly when it contains the anchor.
    Mask inner = b.box(x & old_full);
    if ((x & added) != added) inner = b.box(inner & ~anchor);
    box[x] = (inner & anchor) ? (inner | added) : inner;
  }
  return InteriorAlgebra::from_box(m, std::move(box));
}

Formula gmt_translate(const Formula& f) {
  switch (f.kind()) {
    case Kind::Var: return Formula::box(f);
    case Kind::Top:
    case Kind::Bot: return f;
    case Kind::And: return Formula::conj(gmt_translate(f.lhs()), gmt_translate(f.rhs()));
    case Kind::Or: return Formula::disj(gmt_translate(f.lhs()), gmt_translate(f.rhs()));
    case Kind::Imp:
      return Formula::box(Formula::imp(gmt_translate(f.lhs()), gmt_translate(f.rhs())));
    case Kind::Neg: return Formula::box(Formula::neg(gmt_translate(f.child())));
    case Kind::Box: break;
  }
  throw Error(ErrorKind::NotAssertoric, "translation of a modal formula");
}

Verdict modal_validity(const InteriorAlgebra& b, const Formula& f, std::uint64_t budget) {
  return naive_validity(b.ops(), f, budget);
}

InteriorAlgebra modal_quotient(const InteriorAlgebra& b, Mask u) {
  if (!b.is_open(u)) throw Error(ErrorKind::InvalidInput, "quotient by a non-open element");
  std::vector<std::size_t> pts;
  for (std::size_t x = 0; x < b.atoms(); ++x) {
    if (u >> x & 1u) pts.push_back(x);
  }
  const std::size_t k = pts.size();
  auto expand = [&](Mask x) {
    Mask r = 0;
    for (std::size_t i = 0; i < k; ++i) {
      if (x >> i & 1u) r |= Mask{1} << pts[i];
    }
    return r;
  };
  auto compress = [&](Mask x) {
    Mask r = 0;
    for (std::size_t i = 0; i < k; ++i) {
      if (x >> pts[i] & 1u) r |= Mask{1} << i;
    }
    return r;
  };
  std::vector<Mask> box(std::size_t{1} << k);
  for (Mask x = 0; x < box.size(); ++x) {
    box[x] = compress(b.box((expand(x) | ~u) & b.full()) & u);
  }
  return InteriorAlgebra::from_box(k, std::move(box));
}

ModalSubHom modal_in_sh(const InteriorAlgebra& a, const InteriorAlgebra& b) {
  for (Mask u : b.opens()) {
    if ((std::size_t{1} << std::popcount(u)) < a.size()) continue;
    const InteriorAlgebra q = modal_quotient(b, u);
    auto found = search_homomorphisms(a.ops(), q.ops(), {}, true, 1);
    if (!found.empty()) return ModalSubHom{true, u, found.front()};
  }
  return ModalSubHom{};
}

ModalPresentation modal_diagram_presentation(const HeytingAlgebra& a) {
  const Diagram d = diagram_formula(a);
  Span s = span(a);
  std::vector<Formula> parts{gmt_translate(d.formula)};
  for (std::size_t i = 0; i < a.size(); ++i) {
    const Formula p = Formula::var(static_cast<int>(i));
    parts.push_back(Formula::imp(p, Formula::box(p)));
  }
  std::vector<Elem> valuation;
  for (Elem x : d.valuation) valuation.push_back(static_cast<Elem>(s.embedding[x]));
  return ModalPresentation{Formula::conj_all(parts), std::move(s.algebra), std::move(valuation)};
}

Formula modal_characteristic_formula(const ModalPresentation& p, ModalImplication variant) {
  const HeytingAlgebra h = heyting_carcass(p.target);
  const auto op = opremum(h);
  if (!op) throw Error(ErrorKind::NotSI, "carcass has no opremum");
  const std::vector<Mask> opens = p.target.opens();
  // Generators must be open to be named by a carcass term.
  std::vector<Generator> gens;
  for (std::size_t i = 0; i < p.valuation.size(); ++i) {
    auto it = std::find(opens.begin(), opens.end(), static_cast<Mask>(p.valuation[i]));
    if (it != opens.end()) {
      gens.push_back(Generator{static_cast<int>(i), static_cast<Elem>(it - opens.begin())});
    }
  }
  const Formula term = gmt_translate(term_for_element(h, gens, *op));
  const Formula lhs = variant == ModalImplication::BoxImp ? Formula::box(p.formula) : p.formula;
  return Formula::imp(lhs, term);
}

ModalDefinesVerdict modal_check_defines(const ModalPresentation& p,
                                        std::span<const InteriorAlgebra> corpus) {
  if (evaluate(p.formula, p.target.ops(), p.valuation) != p.target.full()) {
    throw Error(ErrorKind::InvalidInput, "modal presentation formula is not top");
  }
  const std::vector<int> vars = p.formula.variables();
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    for (const auto& tuple : satisfying_valuations(corpus[i].ops(), p.formula)) {
      std::vector<std::pair<Elem, Elem>> pairs;
      for (int v : vars) pairs.emplace_back(p.valuation[v], tuple[v]);
      if (!extend_map(p.target.ops(), corpus[i].ops(), pairs).consistent) {
        return ModalDefinesVerdict{true, i, tuple};
      }
    }
  }
  return ModalDefinesVerdict{};
}

}  // namespace heyting
