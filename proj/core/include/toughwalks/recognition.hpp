#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "toughwalks/graph.hpp"

namespace toughwalks {

/// l pairwise disjoint edges with no other edges of the host graph among
/// their 2l endpoints. Edges are listed in increasing order.
struct InducedMatchingWitness {
  std::vector<Edge> edges;
  friend bool operator==(const InducedMatchingWitness&,
                         const InducedMatchingWitness&) = default;
};

struct Triangle {
  Vertex a = 0;
  Vertex b = 0;
  Vertex c = 0;
  friend bool operator==(const Triangle&, const Triangle&) = default;
};

inline constexpr std::uint64_t kDefaultInducedSearchBudget = 50'000'000;

/// Lexicographically smallest induced lK2, or nullopt. Throws
/// Error{InvalidArgument} for l == 0 and Error{BudgetExceeded} when the
/// search visits more than `budget` partial matchings.
std::optional<InducedMatchingWitness> find_induced_lk2(
    const Graph& g, std::size_t l,
    std::uint64_t budget = kDefaultInducedSearchBudget);

/// Calls `visit` for every induced lK2 in lexicographic order until it
/// returns false.
void for_each_induced_lk2(
    const Graph& g, std::size_t l,
    const std::function<bool(const InducedMatchingWitness&)>& visit,
    std::uint64_t budget = kDefaultInducedSearchBudget);

bool is_induced_matching(const Graph& g, const InducedMatchingWitness& w);

struct TwoK2FreeResult {
  bool free = true;
  std::optional<InducedMatchingWitness> witness;

  explicit operator bool() const noexcept { return free; }
};

TwoK2FreeResult is_2k2_free(const Graph& g);

/// True iff adding the non-edge {a, b} to g would create an induced 2K2.
/// Only 2K2s through the new edge need checking.
bool addition_creates_2k2(const Graph& g, Vertex a, Vertex b);

/// Lexicographically smallest triangle (a < b < c), or nullopt.
std::optional<Triangle> find_triangle(const Graph& g);

bool is_triangle(const Graph& g, const Triangle& t);

}  // namespace toughwalks
