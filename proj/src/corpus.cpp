#include "heyting/corpus.hpp"

#include <algorithm>
#include <cstdint>
#include <map>

namespace heyting {
namespace {

// Upsets of a poset given as reflexive up-set masks.
std::vector<std::uint32_t> upsets(const std::vector<std::uint32_t>& up) {
  const std::size_t m = up.size();
  std::vector<std::uint32_t> out;
  for (std::uint32_t s = 0; s < (std::uint32_t{1} << m); ++s) {
    bool closed = true;
    for (std::size_t x = 0; x < m && closed; ++x) {
      if ((s >> x & 1u) && (up[x] & ~s)) closed = false;
    }
    if (closed) out.push_back(s);
  }
  return out;
}

Poset to_poset(const std::vector<std::uint32_t>& up) {
  Poset p;
  p.size = up.size();
  p.leq.assign(p.size, std::vector<bool>(p.size));
  for (std::size_t x = 0; x < p.size; ++x) {
    for (std::size_t y = 0; y < p.size; ++y) p.leq[x][y] = up[x] >> y & 1u;
  }
  return p;
}

}  // namespace

std::string poset_code(const Poset& p) {
  const std::size_t n = p.size;
  std::string best;
  std::string cur;
  std::vector<std::size_t> order;
  std::vector<std::uint8_t> placed(n, 0);
  auto rec = [&](auto&& self) -> void {
    if (order.size() == n) {
      if (best.empty() || cur < best) best = cur;
      return;
    }
    for (std::size_t x = 0; x < n; ++x) {
      if (placed[x]) continue;
      bool minimal = true;
      for (std::size_t y = 0; y < n && minimal; ++y) {
        if (!placed[y] && y != x && p.leq[y][x]) minimal = false;
      }
      if (!minimal) continue;
      const std::size_t mark = cur.size();
      for (std::size_t q : order) cur.push_back(p.leq[q][x] ? '1' : '0');
      if (best.empty() || cur.compare(0, cur.size(), best, 0, cur.size()) <= 0) {
        placed[x] = 1;
        order.push_back(x);
        self(self);
        order.pop_back();
        placed[x] = 0;
      }
      cur.resize(mark);
    }
  };
  rec(rec);
  return std::to_string(n) + ":" + best;
}

Poset dual_poset(const HeytingAlgebra& a) {
  const std::vector<Elem> ji = a.join_irreducibles();
  Poset p;
  p.size = ji.size();
  p.leq.assign(p.size, std::vector<bool>(p.size));
  for (std::size_t i = 0; i < p.size; ++i) {
    for (std::size_t j = 0; j < p.size; ++j) p.leq[i][j] = a.leq(ji[i], ji[j]);
  }
  return p;
}

std::vector<HeytingAlgebra> all_heyting_algebras(std::size_t max_size) {
  if (max_size == 0) return {};
  if (max_size > 64) throw Error(ErrorKind::SizeLimit, "corpus bound above 64");
  // Each poset arises from a smaller one by adjoining a minimal point whose
  // strict up-set is an upset. Adjoining a point never shrinks the number of
  // upsets, so branches past the bound are cut.
  using Key = std::pair<std::size_t, std::string>;
  std::map<Key, std::vector<std::uint32_t>> found;
  std::map<std::string, std::vector<std::uint32_t>> level{{poset_code(Poset{}), {}}};
  found.emplace(Key{1, poset_code(Poset{})}, std::vector<std::uint32_t>{});
  while (!level.empty()) {
    std::map<std::string, std::vector<std::uint32_t>> next;
    for (const auto& [code, up] : level) {
      const std::size_t m = up.size();
      if (m >= 31) throw Error(ErrorKind::SizeLimit, "poset too large");
      for (std::uint32_t u : upsets(up)) {
        std::vector<std::uint32_t> grown = up;
        grown.push_back(u | (std::uint32_t{1} << m));
        const std::size_t count = upsets(grown).size();
        if (count > max_size) continue;
        const Poset p = to_poset(grown);
        std::string c = poset_code(p);
        if (next.count(c)) continue;
        found.emplace(Key{count, c}, grown);
        next.emplace(std::move(c), std::move(grown));
      }
    }
    level = std::move(next);
  }
  std::vector<HeytingAlgebra> out;
  for (const auto& [key, up] : found) out.push_back(upset_algebra(to_poset(up)));
  return out;
}

std::vector<HeytingAlgebra> si_algebras(std::size_t max_size) {
  std::vector<HeytingAlgebra> out;
  for (HeytingAlgebra& a : all_heyting_algebras(max_size)) {
    if (is_si(a)) out.push_back(std::move(a));
  }
  return out;
}

}  // namespace heyting
