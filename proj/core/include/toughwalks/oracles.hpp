#pragma once

#include <cstdint>
#include <optional>

#include "toughwalks/graph.hpp"
#include "toughwalks/toughness.hpp"

namespace toughwalks {

struct KWalk;
struct PrismCycle;

// Exhaustive verifiers and small-instance solvers. None of these share code
// with the constructive modules beyond graph_core.

bool check_edge_dominating(const Graph& g, const DominatingWitness& w);

/// All k-walk invariants: existing edges, multiplicities <= 2k, even degrees
/// in [2, 2k] (for n >= 2), connected multiset, and a traversal that is a
/// closed Euler circuit of the multiset visiting each vertex <= k times.
bool check_k_walk(const Graph& g, const KWalk& w);

/// Visits every (v, layer) exactly once along prism edges, cyclically.
bool check_prism_cycle(const Graph& g, const PrismCycle& pc);

inline constexpr std::size_t kToughnessMaxVertices = 20;

/// Minimum of |S| / c(G - S) over all S with c(G - S) >= 2. Throws
/// Error{BudgetExceeded} above 20 vertices unless `force` (hard cap 63).
Toughness brute_force_toughness(const Graph& g, bool force = false);

struct HamiltonianSearch {
  std::optional<Cycle> cycle;
  std::uint64_t nodes = 0;
};

/// Exact backtracking; Error{BudgetExceeded} after `budget` search nodes.
HamiltonianSearch brute_force_hamiltonian(const Graph& g, std::uint64_t budget = 10'000'000);

inline constexpr std::size_t kDominatingCycleMaxVertices = 14;

/// Shortest edge-dominating cycle, lexicographically first among the
/// shortest (each cycle listed from its smallest vertex, second vertex
/// smaller than last). Throws Error{BudgetExceeded} for n > 14 or after
/// `budget` search nodes.
std::optional<Cycle> brute_force_dominating_cycle(const Graph& g,
                                                  std::uint64_t budget = 50'000'000);

/// Vertex connectivity is at least `k` (and n > k).
bool is_k_connected(const Graph& g, std::size_t k);

/// g is (l-1)-connected and every induced lK2 has degree sum at least
/// (l-1)(n-l+1)/2. Throws Error{InvalidArgument} for l < 2 and
/// Error{BudgetExceeded} for l > 3 unless `force`.
bool veldman_condition(const Graph& g, std::size_t l, bool force = false);

}  // namespace toughwalks
