#include "heyting/algebra.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <unordered_set>

namespace heyting {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NotALattice: return "NotALattice";
    case ErrorKind::NotResiduated: return "NotResiduated";
    case ErrorKind::NotAPartialOrder: return "NotAPartialOrder";
    case ErrorKind::SizeLimit: return "SizeLimit";
    case ErrorKind::NoSuchAlgebra: return "NoSuchAlgebra";
    case ErrorKind::NotSI: return "NotSI";
    case ErrorKind::NotGenerated: return "NotGenerated";
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::UnboundVariable: return "UnboundVariable";
    case ErrorKind::NotAssertoric: return "NotAssertoric";
    case ErrorKind::VariableClash: return "VariableClash";
    case ErrorKind::BadAnchor: return "BadAnchor";
    case ErrorKind::TruncationTooSmall: return "TruncationTooSmall";
    case ErrorKind::NotS4: return "NotS4";
    case ErrorKind::InvalidInput: return "InvalidInput";
  }
  return "Error";
}

Limits& limits() {
  static Limits instance;
  return instance;
}

void Poset::validate() const {
  if (leq.size() != size) throw Error(ErrorKind::InvalidInput, "order table has wrong row count");
  for (const auto& row : leq) {
    if (row.size() != size) throw Error(ErrorKind::InvalidInput, "order table is not square");
  }
  for (std::size_t a = 0; a < size; ++a) {
    if (!leq[a][a]) throw Error(ErrorKind::NotAPartialOrder, "not reflexive");
    for (std::size_t b = 0; b < size; ++b) {
      if (a != b && leq[a][b] && leq[b][a]) {
        throw Error(ErrorKind::NotAPartialOrder, "not antisymmetric");
      }
      if (!leq[a][b]) continue;
      for (std::size_t c = 0; c < size; ++c) {
        if (leq[b][c] && !leq[a][c]) throw Error(ErrorKind::NotAPartialOrder, "not transitive");
      }
    }
  }
}

HeytingAlgebra HeytingAlgebra::from_order(const OrderTable& leq, std::vector<std::string> labels) {
  const std::size_t n = leq.size();
  if (n == 0) throw Error(ErrorKind::InvalidInput, "empty carrier");
  if (n > limits().max_elements) {
    throw Error(ErrorKind::SizeLimit, "carrier of " + std::to_string(n) + " elements");
  }
  Poset{n, leq}.validate();

  HeytingAlgebra h;
  h.leq_.assign(n * n, 0);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) h.leq_[a * n + b] = leq[a][b] ? 1 : 0;
  }
  auto le = [&](std::size_t a, std::size_t b) { return h.leq_[a * n + b] != 0; };

  // Greatest element of a set given as predicate, if one exists.
  auto greatest = [&](auto&& member) -> int {
    int best = -1;
    for (std::size_t c = 0; c < n; ++c) {
      if (!member(c)) continue;
      if (best < 0 || le(static_cast<std::size_t>(best), c)) best = static_cast<int>(c);
    }
    if (best < 0) return -1;
    for (std::size_t c = 0; c < n; ++c) {
      if (member(c) && !le(c, static_cast<std::size_t>(best))) return -1;
    }
    return best;
  };
  auto least = [&](auto&& member) -> int {
    int best = -1;
    for (std::size_t c = 0; c < n; ++c) {
      if (!member(c)) continue;
      if (best < 0 || le(c, static_cast<std::size_t>(best))) best = static_cast<int>(c);
    }
    if (best < 0) return -1;
    for (std::size_t c = 0; c < n; ++c) {
      if (member(c) && !le(static_cast<std::size_t>(best), c)) return -1;
    }
    return best;
  };

  OpTable& ops = h.ops_;
  ops.n = n;
  ops.binary.assign(3, std::vector<Elem>(n * n));
  ops.unary.assign(1, std::vector<Elem>(n));
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      const int m = greatest([&](std::size_t c) { return le(c, a) && le(c, b); });
      const int j = least([&](std::size_t c) { return le(a, c) && le(b, c); });
      if (m < 0 || j < 0) {
        throw Error(ErrorKind::NotALattice, "elements " + std::to_string(a) + " and " +
                                                std::to_string(b) + " lack a meet or join");
      }
      ops.binary[OpTable::kMeet][a * n + b] = static_cast<Elem>(m);
      ops.binary[OpTable::kJoin][a * n + b] = static_cast<Elem>(j);
    }
  }
  const int bot = least([](std::size_t) { return true; });
  const int tp = greatest([](std::size_t) { return true; });
  ops.bottom = static_cast<Elem>(bot);
  ops.top = static_cast<Elem>(tp);
  const auto& meet = ops.binary[OpTable::kMeet];
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      const int r = greatest([&](std::size_t c) { return le(meet[a * n + c], b); });
      if (r < 0) {
        throw Error(ErrorKind::NotResiduated, "no relative pseudocomplement for " +
                                                  std::to_string(a) + " -> " + std::to_string(b));
      }
      ops.binary[OpTable::kImp][a * n + b] = static_cast<Elem>(r);
    }
  }
  for (std::size_t a = 0; a < n; ++a) {
    ops.unary[OpTable::kNeg][a] = ops.binary[OpTable::kImp][a * n + ops.bottom];
  }

  if (labels.empty()) {
    labels.resize(n);
    for (std::size_t a = 0; a < n; ++a) labels[a] = "a" + std::to_string(a);
    labels[ops.bottom] = "0";
    if (n > 1) labels[ops.top] = "1";
  } else if (labels.size() != n) {
    throw Error(ErrorKind::InvalidInput, "label count does not match carrier");
  }
  h.labels_ = std::move(labels);
  return h;
}

HeytingAlgebra HeytingAlgebra::relabeled(std::vector<std::string> labels) const {
  if (labels.size() != size()) throw Error(ErrorKind::InvalidInput, "label count mismatch");
  HeytingAlgebra copy = *this;
  copy.labels_ = std::move(labels);
  return copy;
}

int HeytingAlgebra::find_label(const std::string& label) const {
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (labels_[i] == label) return static_cast<int>(i);
  }
  return -1;
}

OrderTable HeytingAlgebra::order() const {
  const std::size_t n = size();
  OrderTable t(n, std::vector<bool>(n));
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) t[a][b] = leq(static_cast<Elem>(a), static_cast<Elem>(b));
  }
  return t;
}

std::vector<std::pair<Elem, Elem>> HeytingAlgebra::covers() const {
  std::vector<std::pair<Elem, Elem>> out;
  const auto n = static_cast<Elem>(size());
  for (Elem a = 0; a < n; ++a) {
    for (Elem b = 0; b < n; ++b) {
      if (!less(a, b)) continue;
      bool cover = true;
      for (Elem c = 0; c < n && cover; ++c) cover = !(less(a, c) && less(c, b));
      if (cover) out.emplace_back(a, b);
    }
  }
  return out;
}

std::vector<Elem> HeytingAlgebra::coatoms() const {
  std::vector<Elem> out;
  for (auto [lo, hi] : covers()) {
    if (hi == top()) out.push_back(lo);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Elem> HeytingAlgebra::atoms() const {
  std::vector<Elem> out;
  for (auto [lo, hi] : covers()) {
    if (lo == bottom()) out.push_back(hi);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Elem> HeytingAlgebra::join_irreducibles() const {
  std::vector<std::size_t> lower_covers(size(), 0);
  for (auto [lo, hi] : covers()) ++lower_covers[hi];
  std::vector<Elem> out;
  for (std::size_t a = 0; a < size(); ++a) {
    if (lower_covers[a] == 1) out.push_back(static_cast<Elem>(a));
  }
  return out;
}

bool HeytingAlgebra::check_laws() const {
  const auto n = static_cast<Elem>(size());
  for (Elem a = 0; a < n; ++a) {
    if (!leq(bottom(), a) || !leq(a, top())) return false;
    if (neg(a) != imp(a, bottom())) return false;
    for (Elem b = 0; b < n; ++b) {
      const Elem m = meet(a, b);
      const Elem j = join(a, b);
      if (!leq(m, a) || !leq(m, b) || !leq(a, j) || !leq(b, j)) return false;
      for (Elem c = 0; c < n; ++c) {
        if (leq(c, a) && leq(c, b) && !leq(c, m)) return false;
        if (leq(a, c) && leq(b, c) && !leq(j, c)) return false;
        if (leq(c, imp(a, b)) != leq(meet(a, c), b)) return false;
        if (meet(a, join(b, c)) != join(meet(a, b), meet(a, c))) return false;
      }
    }
  }
  return true;
}

bool Homomorphism::injective() const {
  std::vector<Elem> sorted = map;
  std::sort(sorted.begin(), sorted.end());
  return std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
}

bool is_filter(const HeytingAlgebra& a, const ElementSet& set) {
  if (set.size() != a.size() || !set.test(a.top())) return false;
  for (std::size_t x = 0; x < a.size(); ++x) {
    if (!set.test(x)) continue;
    for (std::size_t y = 0; y < a.size(); ++y) {
      const auto ex = static_cast<Elem>(x);
      const auto ey = static_cast<Elem>(y);
      if (a.leq(ex, ey) && !set.test(y)) return false;
      if (set.test(y) && !set.test(a.meet(ex, ey))) return false;
    }
  }
  return true;
}

bool is_homomorphism(const HeytingAlgebra& src, const HeytingAlgebra& dst, const Homomorphism& h) {
  return is_homomorphism(src.ops(), dst.ops(), h.map);
}

namespace {

std::vector<std::string> default_chain_labels(std::size_t n) {
  std::vector<std::string> labels(n);
  for (std::size_t i = 0; i < n; ++i) labels[i] = "c" + std::to_string(i);
  labels[0] = "0";
  if (n > 1) labels[n - 1] = "1";
  return labels;
}

bool mask_less(const ElementSet& a, const ElementSet& b) {
  for (std::size_t i = a.size(); i-- > 0;) {
    if (a.test(i) != b.test(i)) return b.test(i);
  }
  return false;
}

}  // namespace

HeytingAlgebra upset_algebra(const Poset& p) {
  p.validate();
  if (p.size > 63) throw Error(ErrorKind::SizeLimit, "poset larger than 63 points");
  const std::size_t m = p.size;
  std::vector<std::uint64_t> strict_up(m, 0);
  for (std::size_t x = 0; x < m; ++x) {
    for (std::size_t y = 0; y < m; ++y) {
      if (x != y && p.leq[x][y]) strict_up[x] |= std::uint64_t{1} << y;
    }
  }
  // Points with larger up-sets first is not enough; use a reverse linear
  // extension: a point is processed after everything strictly above it.
  std::vector<std::size_t> order(m);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return std::popcount(strict_up[a]) < std::popcount(strict_up[b]);
  });
  std::vector<std::uint64_t> upsets;
  const std::size_t cap = limits().max_elements;
  auto rec = [&](auto&& self, std::size_t i, std::uint64_t cur) -> void {
    if (i == m) {
      upsets.push_back(cur);
      if (upsets.size() > cap) throw Error(ErrorKind::SizeLimit, "too many upsets");
      return;
    }
    self(self, i + 1, cur);
    const std::size_t x = order[i];
    if ((strict_up[x] & ~cur) == 0) self(self, i + 1, cur | (std::uint64_t{1} << x));
  };
  rec(rec, 0, 0);
  std::sort(upsets.begin(), upsets.end(), [](std::uint64_t a, std::uint64_t b) {
    const int pa = std::popcount(a);
    const int pb = std::popcount(b);
    return pa != pb ? pa < pb : a < b;
  });
  const std::size_t n = upsets.size();
  OrderTable leq(n, std::vector<bool>(n));
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) leq[a][b] = (upsets[a] & ~upsets[b]) == 0;
  }
  return HeytingAlgebra::from_order(leq);
}

HeytingAlgebra chain(std::size_t n) {
  if (n == 0) throw Error(ErrorKind::InvalidInput, "empty chain");
  OrderTable leq(n, std::vector<bool>(n));
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a; b < n; ++b) leq[a][b] = true;
  }
  return HeytingAlgebra::from_order(leq, default_chain_labels(n));
}

HeytingAlgebra boolean_algebra(std::size_t atoms) {
  Poset p{atoms, OrderTable(atoms, std::vector<bool>(atoms))};
  for (std::size_t i = 0; i < atoms; ++i) p.leq[i][i] = true;
  return upset_algebra(p);
}

HeytingAlgebra product(const HeytingAlgebra& a, const HeytingAlgebra& b) {
  const std::size_t na = a.size();
  const std::size_t nb = b.size();
  const std::size_t n = na * nb;
  if (n > limits().max_elements) throw Error(ErrorKind::SizeLimit, "product too large");
  OrderTable leq(n, std::vector<bool>(n));
  std::vector<std::string> labels(n);
  for (std::size_t x = 0; x < n; ++x) {
    const auto xa = static_cast<Elem>(x / nb);
    const auto xb = static_cast<Elem>(x % nb);
    labels[x] = "<" + a.label(xa) + "," + b.label(xb) + ">";
    for (std::size_t y = 0; y < n; ++y) {
      leq[x][y] = a.leq(xa, static_cast<Elem>(y / nb)) && b.leq(xb, static_cast<Elem>(y % nb));
    }
  }
  return HeytingAlgebra::from_order(leq, std::move(labels));
}

Elem concat_upper_index(const HeytingAlgebra& a, const HeytingAlgebra& b, Elem e) {
  if (e == b.bottom()) return a.top();
  return static_cast<Elem>(a.size() + e - (e > b.bottom() ? 1 : 0));
}

HeytingAlgebra concat(const HeytingAlgebra& a, const HeytingAlgebra& b) {
  const std::size_t na = a.size();
  const std::size_t n = na + b.size() - 1;
  if (n > limits().max_elements) throw Error(ErrorKind::SizeLimit, "concatenation too large");
  // Position of each element: (part, index in part).
  std::vector<std::pair<int, Elem>> origin(n);
  for (std::size_t i = 0; i < na; ++i) origin[i] = {0, static_cast<Elem>(i)};
  for (std::size_t e = 0; e < b.size(); ++e) {
    if (e == b.bottom()) continue;
    origin[concat_upper_index(a, b, static_cast<Elem>(e))] = {1, static_cast<Elem>(e)};
  }
  OrderTable leq(n, std::vector<bool>(n));
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      auto [px, ex] = origin[x];
      auto [py, ey] = origin[y];
      if (px == 0 && py == 0) {
        leq[x][y] = a.leq(ex, ey);
      } else if (px == 1 && py == 1) {
        leq[x][y] = b.leq(ex, ey);
      } else {
        leq[x][y] = px == 0;  // everything of a lies below everything of b
      }
    }
  }
  std::unordered_set<std::string> seen;
  std::vector<std::string> labels(n);
  for (std::size_t x = 0; x < n; ++x) {
    auto [part, e] = origin[x];
    std::string label = part == 0 ? a.label(e) : b.label(e);
    while (!seen.insert(label).second) label += "'";
    labels[x] = label;
  }
  return HeytingAlgebra::from_order(leq, std::move(labels));
}

HeytingAlgebra interval(const HeytingAlgebra& a, Elem lo, Elem hi) {
  std::vector<Elem> members;
  for (std::size_t x = 0; x < a.size(); ++x) {
    const auto e = static_cast<Elem>(x);
    if (a.leq(lo, e) && a.leq(e, hi)) members.push_back(e);
  }
  if (members.empty()) throw Error(ErrorKind::InvalidInput, "empty interval");
  const std::size_t n = members.size();
  OrderTable leq(n, std::vector<bool>(n));
  std::vector<std::string> labels(n);
  for (std::size_t i = 0; i < n; ++i) {
    labels[i] = a.label(members[i]);
    for (std::size_t j = 0; j < n; ++j) leq[i][j] = a.leq(members[i], members[j]);
  }
  return HeytingAlgebra::from_order(leq, std::move(labels));
}

Filter principal_filter(const HeytingAlgebra& a, Elem e) {
  Filter f{ElementSet(a.size())};
  for (std::size_t x = 0; x < a.size(); ++x) {
    if (a.leq(e, static_cast<Elem>(x))) f.members.set(x);
  }
  return f;
}

std::vector<Filter> enumerate_filters(const HeytingAlgebra& a) {
  if (a.size() > limits().filter_enumeration) {
    throw Error(ErrorKind::SizeLimit, "filter enumeration over " + std::to_string(a.size()) +
                                          " elements exceeds bound " +
                                          std::to_string(limits().filter_enumeration));
  }
  // In a finite algebra every filter is generated by the meet of its members.
  std::vector<Filter> out;
  for (std::size_t e = 0; e < a.size(); ++e) out.push_back(principal_filter(a, static_cast<Elem>(e)));
  std::sort(out.begin(), out.end(),
            [](const Filter& x, const Filter& y) { return mask_less(x.members, y.members); });
  return out;
}

Quotient quotient(const HeytingAlgebra& a, const Filter& f) {
  const std::size_t n = a.size();
  std::vector<Elem> rep(n);
  std::vector<Elem> reps;
  std::vector<int> class_index(n, -1);
  for (std::size_t x = 0; x < n; ++x) {
    int found = -1;
    for (std::size_t k = 0; k < reps.size() && found < 0; ++k) {
      if (f.contains(a.iff(static_cast<Elem>(x), reps[k]))) found = static_cast<int>(k);
    }
    if (found < 0) {
      found = static_cast<int>(reps.size());
      reps.push_back(static_cast<Elem>(x));
    }
    class_index[x] = found;
  }
  const std::size_t m = reps.size();
  OrderTable leq(m, std::vector<bool>(m));
  std::vector<std::string> labels(m);
  for (std::size_t i = 0; i < m; ++i) {
    labels[i] = a.label(reps[i]);
    for (std::size_t j = 0; j < m; ++j) leq[i][j] = f.contains(a.imp(reps[i], reps[j]));
  }
  Quotient q{HeytingAlgebra::from_order(leq, std::move(labels)), Homomorphism{}};
  q.projection.map.resize(n);
  for (std::size_t x = 0; x < n; ++x) q.projection.map[x] = static_cast<Elem>(class_index[x]);
  return q;
}

ElementSet generated_closure(const HeytingAlgebra& a, const ElementSet& gens) {
  ElementSet in = gens;
  in.resize(a.size());
  in.set(a.bottom());
  in.set(a.top());
  std::vector<Elem> members = elements_of(in);
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t j = 0; j <= i; ++j) {
      const Elem x = members[i];
      const Elem y = members[j];
      for (Elem r : {a.meet(x, y), a.join(x, y), a.imp(x, y), a.imp(y, x)}) {
        if (!in.test(r)) {
          in.set(r);
          members.push_back(r);
        }
      }
    }
  }
  return in;
}

Subalgebra induced_subalgebra(const HeytingAlgebra& a, const ElementSet& members) {
  std::vector<Elem> elems = elements_of(members);
  const std::size_t n = elems.size();
  OrderTable leq(n, std::vector<bool>(n));
  std::vector<std::string> labels(n);
  for (std::size_t i = 0; i < n; ++i) {
    labels[i] = a.label(elems[i]);
    for (std::size_t j = 0; j < n; ++j) leq[i][j] = a.leq(elems[i], elems[j]);
  }
  return Subalgebra{members, HeytingAlgebra::from_order(leq, std::move(labels)), elems};
}

Subalgebra generated_subalgebra(const HeytingAlgebra& a, const ElementSet& gens) {
  return induced_subalgebra(a, generated_closure(a, gens));
}

std::optional<Elem> opremum(const HeytingAlgebra& a) {
  if (a.size() < 2) return std::nullopt;
  auto coatoms = a.coatoms();
  if (coatoms.size() != 1) return std::nullopt;
  return coatoms.front();
}

bool is_si(const HeytingAlgebra& a) { return opremum(a).has_value(); }

Filter dense_elements(const HeytingAlgebra& a) {
  Filter f{ElementSet(a.size())};
  for (std::size_t x = 0; x < a.size(); ++x) {
    if (a.neg(a.neg(static_cast<Elem>(x))) == a.top()) f.members.set(x);
  }
  return f;
}

ElementSet regular_elements(const HeytingAlgebra& a) {
  ElementSet s(a.size());
  for (std::size_t x = 0; x < a.size(); ++x) {
    const auto e = static_cast<Elem>(x);
    if (a.neg(a.neg(e)) == e) s.set(x);
  }
  return s;
}

bool is_boolean(const HeytingAlgebra& a) {
  for (std::size_t x = 0; x < a.size(); ++x) {
    const auto e = static_cast<Elem>(x);
    if (a.join(e, a.neg(e)) != a.top()) return false;
  }
  return true;
}

ElementSet make_set(std::size_t n, std::initializer_list<Elem> elems) {
  ElementSet s(n);
  for (Elem e : elems) s.set(e);
  return s;
}

std::vector<Elem> elements_of(const ElementSet& set) {
  std::vector<Elem> out;
  for (auto i = set.find_first(); i != ElementSet::npos; i = set.find_next(i)) {
    out.push_back(static_cast<Elem>(i));
  }
  return out;
}

}  // namespace heyting
