#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace heyting {

using Elem = std::uint16_t;

inline constexpr int kUnassigned = -1;

// Flat operation tables of a finite algebra. Binary tables are row-major
// n*n; slot meanings are fixed: binary {meet, join, imp}, unary {neg, box}.
// Heyting algebras carry no box table.
struct OpTable {
  std::size_t n = 0;
  Elem bottom = 0;
  Elem top = 0;
  std::vector<std::vector<Elem>> binary;
  std::vector<std::vector<Elem>> unary;

  enum Binary : std::size_t { kMeet = 0, kJoin = 1, kImp = 2 };
  enum Unary : std::size_t { kNeg = 0, kBox = 1 };

  Elem apply(std::size_t op, Elem a, Elem b) const { return binary[op][a * n + b]; }
  Elem apply(std::size_t op, Elem a) const { return unary[op][a]; }
  bool has_box() const { return unary.size() > kBox; }
};

// Every map src -> dst preserving the constants and all operations, extending
// `partial` (kUnassigned marks free entries). Results are in lexicographic
// order of the map vector. Search stops after `max_results` hits.
std::vector<std::vector<Elem>> search_homomorphisms(const OpTable& src, const OpTable& dst,
                                                    std::span<const int> partial, bool injective,
                                                    std::size_t max_results = SIZE_MAX);

// Closes the relation generated by `pairs` (plus the constants) under all
// operations. Returns the total map if it is a well-defined function on all of
// src, nullopt if two images clash. `generated` reports whether the closure
// covered every element of src.
struct ExtensionResult {
  bool consistent = false;
  bool covers_source = false;
  std::vector<int> map;
};
ExtensionResult extend_map(const OpTable& src, const OpTable& dst,
                           std::span<const std::pair<Elem, Elem>> pairs);

bool is_homomorphism(const OpTable& src, const OpTable& dst, std::span<const Elem> map);

}  // namespace heyting
