#include "heyting/search.hpp"

#include <algorithm>

namespace heyting {
namespace {

void check_search_size(const HeytingAlgebra& a, const char* what) {
  if (a.size() > limits().search) {
    throw Error(ErrorKind::SizeLimit, std::string(what) + " over " + std::to_string(a.size()) +
                                          " elements exceeds bound " +
                                          std::to_string(limits().search));
  }
}

}  // namespace

std::vector<Homomorphism> homomorphism_search(const HeytingAlgebra& a, const HeytingAlgebra& b,
                                              const std::vector<int>& partial, bool injective,
                                              std::size_t max_results) {
  check_search_size(a, "homomorphism search");
  check_search_size(b, "homomorphism search");
  std::vector<Homomorphism> out;
  for (auto& m : search_homomorphisms(a.ops(), b.ops(), partial, injective, max_results)) {
    out.push_back(Homomorphism{std::move(m)});
  }
  return out;
}

std::optional<Homomorphism> find_embedding(const HeytingAlgebra& a, const HeytingAlgebra& b) {
  if (a.size() > b.size()) return std::nullopt;
  auto found = homomorphism_search(a, b, {}, true, 1);
  if (found.empty()) return std::nullopt;
  return found.front();
}

SubHomVerdict in_sh(const HeytingAlgebra& a, const HeytingAlgebra& b) {
  check_search_size(a, "in_sh");
  for (const Filter& f : enumerate_filters(b)) {
    Quotient q = quotient(b, f);
    if (q.algebra.size() < a.size()) continue;
    if (auto e = find_embedding(a, q.algebra)) {
      return SubHomVerdict{true, SubHomWitness{f, *e}};
    }
  }
  return SubHomVerdict{};
}

std::vector<std::size_t> invariant_vector(const HeytingAlgebra& a) {
  const std::size_t n = a.size();
  std::vector<std::size_t> up(n, 0);
  std::vector<std::size_t> down(n, 0);
  std::size_t comparable = 0;
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      if (a.leq(static_cast<Elem>(x), static_cast<Elem>(y))) {
        ++up[x];
        ++down[y];
        ++comparable;
      }
    }
  }
  std::vector<std::pair<std::size_t, std::size_t>> profile;
  for (std::size_t x = 0; x < n; ++x) profile.emplace_back(up[x], down[x]);
  std::sort(profile.begin(), profile.end());
  std::vector<std::size_t> out{n, comparable, a.covers().size(), a.coatoms().size(),
                               a.atoms().size(), a.join_irreducibles().size()};
  for (auto [u, d] : profile) {
    out.push_back(u);
    out.push_back(d);
  }
  return out;
}

IsoVerdict is_isomorphic(const HeytingAlgebra& a, const HeytingAlgebra& b) {
  if (a.size() != b.size()) return IsoVerdict{};
  if (invariant_vector(a) != invariant_vector(b)) return IsoVerdict{};
  auto found = homomorphism_search(a, b, {}, true, 1);
  if (found.empty()) return IsoVerdict{};
  return IsoVerdict{true, found.front()};
}

std::string canonical_code(const HeytingAlgebra& a) {
  const std::size_t n = a.size();
  if (n > 32) throw Error(ErrorKind::SizeLimit, "canonical code above 32 elements");
  std::string best;
  std::string cur;
  std::vector<Elem> order;
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
        if (!placed[y] && y != x && a.leq(static_cast<Elem>(y), static_cast<Elem>(x))) {
          minimal = false;
        }
      }
      if (!minimal) continue;
      const std::size_t mark = cur.size();
      for (Elem p : order) cur.push_back(a.leq(p, static_cast<Elem>(x)) ? '1' : '0');
      // Prune when the prefix is already worse than the best full code.
      if (best.empty() || cur.compare(0, cur.size(), best, 0, cur.size()) <= 0) {
        placed[x] = 1;
        order.push_back(static_cast<Elem>(x));
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

}  // namespace heyting
