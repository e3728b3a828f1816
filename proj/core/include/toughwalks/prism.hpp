#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "toughwalks/graph.hpp"
#include "toughwalks/toughness.hpp"

namespace toughwalks {

struct PrismVertex {
  Vertex v = 0;
  int layer = 0;
  friend auto operator<=>(const PrismVertex&, const PrismVertex&) = default;
};

/// Hamiltonian cycle of G x K2, read cyclically.
struct PrismCycle {
  std::vector<PrismVertex> sequence;
  friend bool operator==(const PrismCycle&, const PrismCycle&) = default;
};

using PrismOutcome = std::variant<PrismCycle, ToughnessCertificate>;

/// Zigzag over an even edge-dominating cycle v1..v2p:
///   v1 v1' v2' v2 v3 v3' v4' v4 ... v2p-1 v'2p-1 v'2p v2p (v1)
/// with every rung v v' of a matched cycle vertex replaced by v u u' v'.
/// The vertices off the cycle are matched into it with capacity 1; on
/// failure the Hall violator yields a certificate with bound < 1.
///
/// Throws Error{OddCycle | NotDominating | NotConnected}.
PrismOutcome prism_ham_even(const Graph& g, const Cycle& c);

/// Template over an odd edge-dominating cycle v1..v2p+1 in which v1, v2q,
/// v2q+1 form a triangle (q is 1-based):
///   v1 v2 v2' v3' v3 ... v2q-1 v2q v2q' v1' v2q+1' v2q+1 ... v2p+1 (v1)
/// Every rung except v1's is used, so outside vertices are matched into
/// V(C) - {v1}; on failure the certificate has bound <= 1.
///
/// Throws Error{EvenCycle | TriangleMissing | NotDominating | NotConnected}.
PrismOutcome prism_ham_odd(const Graph& g, const Cycle& c, std::size_t q);

/// Prism cycle from a Hamiltonian cycle of g: layer 0 forwards, one rung,
/// layer 1 backwards, rung back.
PrismCycle prism_from_hamiltonian(const Cycle& hamiltonian);

struct ExactSearchExhausted {
  std::uint64_t nodes = 0;
};

struct PrismFailure {
  std::variant<ToughnessCertificate, ExactSearchExhausted> reason;
};

using PrismDriverOutcome = std::variant<PrismCycle, PrismFailure>;

inline constexpr std::uint64_t kDefaultHamiltonianBudget = 1'000'000;

/// Hamiltonian cycle in the prism over a connected 2K2-free graph with
/// n >= 2, or a reason why none was built.
///
/// Graphs with a triangle go through the triangle-preserving dominating
/// cycle and one of the two templates; for odd cycles all labellings that
/// place a triangle on (v1, v2q, v2q+1) are tried before giving up.
/// Triangle-free graphs fall back to exact Hamiltonian search in g with
/// `search_budget` nodes.
///
/// Throws Error{PreconditionViolated | NotConnected | BudgetExceeded} and
/// Not2K2FreeError.
PrismDriverOutcome prism_hamiltonian(const Graph& g,
                                     std::uint64_t search_budget = kDefaultHamiltonianBudget);

}  // namespace toughwalks
