#include "heyting/ladder.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <set>

namespace heyting {
namespace {

struct FramePoint {
  bool p;
  std::uint64_t up;  // reflexive up-set
};

std::vector<FramePoint> universal_frame(std::size_t depth) {
  std::vector<FramePoint> pts{{true, 1u}, {false, 2u}};
  std::vector<std::size_t> depth_of{1, 1};
  for (std::size_t d = 2; d <= depth; ++d) {
    const std::size_t existing = pts.size();
    std::vector<std::vector<std::size_t>> antichains;
    std::vector<std::size_t> cur;
    auto rec = [&](auto&& self, std::size_t i) -> void {
      if (i == existing) {
        bool fresh = std::any_of(cur.begin(), cur.end(),
                                 [&](std::size_t x) { return depth_of[x] == d - 1; });
        if (fresh) antichains.push_back(cur);
        return;
      }
      self(self, i + 1);
      bool free = std::all_of(cur.begin(), cur.end(), [&](std::size_t x) {
        return !(pts[x].up >> i & 1u) && !(pts[i].up >> x & 1u);
      });
      if (free) {
        cur.push_back(i);
        self(self, i + 1);
        cur.pop_back();
      }
    };
    rec(rec, 0);
    for (const auto& x : antichains) {
      for (bool color : {false, true}) {
        if (color && !std::all_of(x.begin(), x.end(), [&](std::size_t y) { return pts[y].p; })) {
          continue;
        }
        if (x.size() == 1 && pts[x[0]].p == color) continue;
        if (pts.size() >= 63) throw Error(ErrorKind::SizeLimit, "universal frame too deep");
        std::uint64_t up = std::uint64_t{1} << pts.size();
        for (std::size_t y : x) up |= pts[y].up;
        pts.push_back({color, up});
        depth_of.push_back(d);
      }
    }
  }
  return pts;
}

std::vector<std::string> rn_labels(const HeytingAlgebra& a, Elem g) {
  std::vector<std::string> labels(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) labels[i] = "a" + std::to_string(i);
  labels[a.bottom()] = "0";
  labels[a.top()] = "1";
  std::set<Elem> taken{a.bottom(), a.top()};
  auto name = [&](Elem e, const char* label) {
    if (taken.insert(e).second) labels[e] = label;
  };
  name(g, "g");
  name(a.neg(g), "r2");
  name(a.neg(a.neg(g)), "r1");
  name(a.join(g, a.neg(g)), "t");
  return labels;
}

}  // namespace

LadderPortion ladder_portion(std::size_t depth) {
  const auto pts = universal_frame(depth);
  const std::size_t m = pts.size();
  const std::uint64_t all = m == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << m) - 1;
  std::uint64_t vp = 0;
  for (std::size_t x = 0; x < m; ++x) {
    if (pts[x].p) vp |= std::uint64_t{1} << x;
  }
  auto imp = [&](std::uint64_t u, std::uint64_t v) {
    std::uint64_t r = 0;
    for (std::size_t x = 0; x < m; ++x) {
      if ((pts[x].up & u & ~v) == 0) r |= std::uint64_t{1} << x;
    }
    return r;
  };
  std::vector<std::uint64_t> elems{0, vp, all};
  std::set<std::uint64_t> seen(elems.begin(), elems.end());
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (std::size_t j = 0; j <= i; ++j) {
      const std::uint64_t x = elems[i];
      const std::uint64_t y = elems[j];
      for (std::uint64_t r : {x & y, x | y, imp(x, y), imp(y, x)}) {
        if (seen.insert(r).second) {
          elems.push_back(r);
          if (elems.size() > limits().max_elements) {
            throw Error(ErrorKind::SizeLimit, "ladder portion too large");
          }
        }
      }
    }
  }
  std::sort(elems.begin(), elems.end(), [](std::uint64_t a, std::uint64_t b) {
    const int pa = std::popcount(a);
    const int pb = std::popcount(b);
    return pa != pb ? pa < pb : a < b;
  });
  const std::size_t n = elems.size();
  OrderTable leq(n, std::vector<bool>(n));
  Elem g = 0;
  for (std::size_t a = 0; a < n; ++a) {
    if (elems[a] == vp) g = static_cast<Elem>(a);
    for (std::size_t b = 0; b < n; ++b) leq[a][b] = (elems[a] & ~elems[b]) == 0;
  }
  HeytingAlgebra alg = HeytingAlgebra::from_order(leq);
  alg = alg.relabeled(rn_labels(alg, g));
  return LadderPortion{std::move(alg), g, m};
}

OneGenerated rn_algebra(std::size_t n) {
  if (n == 0) throw Error(ErrorKind::InvalidInput, "Z(0) is undefined");
  if (n > limits().max_elements) throw Error(ErrorKind::SizeLimit, "Z(n) beyond size limit");
  if (n == 1) return OneGenerated{chain(1), 0};
  // Explore deeper portions until the quotient exists and two further layers
  // of margin are present above n.
  for (std::size_t depth = 2; depth <= 30; ++depth) {
    LadderPortion portion = ladder_portion(depth);
    if (portion.algebra.size() < n + 4) continue;
    for (std::size_t a = 0; a < portion.algebra.size(); ++a) {
      Filter f = principal_filter(portion.algebra, static_cast<Elem>(a));
      Quotient q = quotient(portion.algebra, f);
      if (q.algebra.size() != n) continue;
      const Elem g = q.projection.map[portion.generator];
      ElementSet gens(n);
      gens.set(g);
      if (generated_closure(q.algebra, gens).count() != n) {
        throw Error(ErrorKind::NoSuchAlgebra, "quotient is not one-generated");
      }
      HeytingAlgebra alg = q.algebra.relabeled(rn_labels(q.algebra, g));
      return OneGenerated{std::move(alg), g};
    }
    throw Error(ErrorKind::NoSuchAlgebra,
                "no quotient of the ladder portion has " + std::to_string(n) + " elements");
  }
  throw Error(ErrorKind::NoSuchAlgebra, "ladder exploration depth exhausted");
}

bool is_truncation_name(const std::string& name) {
  return name == "Zinf" || name == "Zprime" || name == "Zstar" || name == "KG";
}

HeytingAlgebra truncation(const std::string& name, std::size_t k) {
  if (name == "Zinf") return rn_algebra(k).algebra;
  if (name == "Zprime") {
    return concat(product(rn_algebra(k).algebra, chain(2)), chain(2));
  }
  if (name == "Zstar") {
    return concat(product(rn_algebra(k).algebra, chain(2)), chain(3));
  }
  if (name == "KG") {
    return concat(concat(rn_algebra(k).algebra, rn_algebra(7).algebra), chain(2));
  }
  throw Error(ErrorKind::InvalidInput, "unknown truncation '" + name + "'");
}

ZPrimeElements zprime_elements(const HeytingAlgebra& zprime, std::size_t k) {
  OneGenerated z = rn_algebra(k);
  if (zprime.size() != 2 * k + 1) throw Error(ErrorKind::InvalidInput, "not trunc(Zprime, k)");
  // product index = x * 2 + y with Z2 = {0, 1}; concat keeps the lower indices.
  ZPrimeElements e{};
  e.a = static_cast<Elem>(z.generator * 2 + 0);
  e.b = static_cast<Elem>(z.algebra.bottom() * 2 + 1);
  e.opremum = static_cast<Elem>(z.algebra.top() * 2 + 1);
  return e;
}

}  // namespace heyting
