#include "heyting/ops.hpp"

#include <utility>

namespace heyting {
namespace {

struct MapState {
  std::vector<int> map;
  std::vector<std::uint8_t> used;
  std::vector<Elem> assigned;
};

class Propagator {
 public:
  Propagator(const OpTable& src, const OpTable& dst, bool injective)
      : src_(src), dst_(dst), injective_(injective) {}

  // Assigns x -> y and everything forced by closure. False on conflict.
  bool assign(MapState& s, Elem x, Elem y) const {
    std::vector<std::pair<Elem, Elem>> queue{{x, y}};
    while (!queue.empty()) {
      auto [a, b] = queue.back();
      queue.pop_back();
      if (s.map[a] != kUnassigned) {
        if (s.map[a] != b) return false;
        continue;
      }
      if (injective_) {
        if (s.used[b]) return false;
        s.used[b] = 1;
      }
      s.map[a] = b;
      s.assigned.push_back(a);
      for (std::size_t op = 0; op < src_.unary.size() && op < dst_.unary.size(); ++op) {
        queue.emplace_back(src_.apply(op, a), dst_.apply(op, b));
      }
      for (std::size_t op = 0; op < src_.binary.size(); ++op) {
        for (Elem c : s.assigned) {
          const Elem d = static_cast<Elem>(s.map[c]);
          queue.emplace_back(src_.apply(op, a, c), dst_.apply(op, b, d));
          queue.emplace_back(src_.apply(op, c, a), dst_.apply(op, d, b));
        }
      }
    }
    return true;
  }

 private:
  const OpTable& src_;
  const OpTable& dst_;
  bool injective_;
};

void dfs(const OpTable& src, const OpTable& dst, const Propagator& prop, MapState& state,
         std::vector<std::vector<Elem>>& out, std::size_t max_results) {
  if (out.size() >= max_results) return;
  std::size_t next = 0;
  while (next < src.n && state.map[next] != kUnassigned) ++next;
  if (next == src.n) {
    out.emplace_back(state.map.begin(), state.map.end());
    return;
  }
  for (std::size_t y = 0; y < dst.n && out.size() < max_results; ++y) {
    MapState child = state;
    if (prop.assign(child, static_cast<Elem>(next), static_cast<Elem>(y))) {
      dfs(src, dst, prop, child, out, max_results);
    }
  }
}

}  // namespace

std::vector<std::vector<Elem>> search_homomorphisms(const OpTable& src, const OpTable& dst,
                                                    std::span<const int> partial, bool injective,
                                                    std::size_t max_results) {
  std::vector<std::vector<Elem>> out;
  if (src.binary.size() != dst.binary.size() || src.unary.size() != dst.unary.size()) return out;
  if (injective && src.n > dst.n) return out;
  Propagator prop(src, dst, injective);
  MapState state{std::vector<int>(src.n, kUnassigned), std::vector<std::uint8_t>(dst.n, 0), {}};
  if (!prop.assign(state, src.bottom, dst.bottom) || !prop.assign(state, src.top, dst.top)) {
    return out;
  }
  for (std::size_t i = 0; i < partial.size() && i < src.n; ++i) {
    if (partial[i] == kUnassigned) continue;
    if (partial[i] < 0 || static_cast<std::size_t>(partial[i]) >= dst.n) return out;
    if (!prop.assign(state, static_cast<Elem>(i), static_cast<Elem>(partial[i]))) return out;
  }
  dfs(src, dst, prop, state, out, max_results);
  return out;
}

ExtensionResult extend_map(const OpTable& src, const OpTable& dst,
                           std::span<const std::pair<Elem, Elem>> pairs) {
  ExtensionResult result;
  Propagator prop(src, dst, false);
  MapState state{std::vector<int>(src.n, kUnassigned), std::vector<std::uint8_t>(dst.n, 0), {}};
  bool ok = prop.assign(state, src.bottom, dst.bottom) && prop.assign(state, src.top, dst.top);
  for (auto [a, b] : pairs) {
    if (!ok) break;
    ok = prop.assign(state, a, b);
  }
  result.consistent = ok;
  result.covers_source = ok && state.assigned.size() == src.n;
  result.map = std::move(state.map);
  return result;
}

bool is_homomorphism(const OpTable& src, const OpTable& dst, std::span<const Elem> map) {
  if (map.size() != src.n) return false;
  for (Elem m : map) {
    if (m >= dst.n) return false;
  }
  if (map[src.bottom] != dst.bottom || map[src.top] != dst.top) return false;
  for (std::size_t op = 0; op < src.unary.size(); ++op) {
    for (std::size_t a = 0; a < src.n; ++a) {
      if (map[src.apply(op, static_cast<Elem>(a))] != dst.apply(op, map[a])) return false;
    }
  }
  for (std::size_t op = 0; op < src.binary.size(); ++op) {
    for (std::size_t a = 0; a < src.n; ++a) {
      for (std::size_t b = 0; b < src.n; ++b) {
        if (map[src.apply(op, static_cast<Elem>(a), static_cast<Elem>(b))] !=
            dst.apply(op, map[a], map[b])) {
          return false;
        }
      }
    }
  }
  return true;
}

}  // namespace heyting
