#pragma once

#include <cstddef>
#include <utility>
#include <variant>
#include <vector>

#include "toughwalks/graph.hpp"
#include "toughwalks/toughness.hpp"

namespace toughwalks {

/// Every outside vertex paired with one target neighbour; each target is used
/// at most `capacity` times. Pairs are (outside, target), sorted by outside.
struct CapacitatedMatching {
  std::vector<std::pair<Vertex, Vertex>> pairs;
  std::size_t capacity = 1;
};

/// Outside vertices D0 with capacity * |N(D0) & targets| < |D0|.
struct HallViolator {
  std::vector<Vertex> deficient;     // D0
  std::vector<Vertex> neighborhood;  // N(D0) & targets
};

using MatchingOutcome = std::variant<CapacitatedMatching, HallViolator>;

/// Saturates `outside` into `targets` with per-target capacity, or returns the
/// deficient set read off the final residual graph (all outside vertices
/// reachable from an unmatched one along alternating paths).
///
/// Outside vertices may have neighbours that are not targets; those edges
/// are ignored. Throws Error{PreconditionViolated} if the sets overlap, have
/// the wrong universe size, or `outside` is not independent, and
/// Error{InvalidArgument} for capacity 0.
MatchingOutcome capacitated_matching(const Graph& g, const VertexSet& targets,
                                     const VertexSet& outside, std::size_t capacity);

bool is_valid_matching(const Graph& g, const VertexSet& targets,
                       const VertexSet& outside, const CapacitatedMatching& m);

struct WalkEdge {
  Edge edge;
  std::size_t multiplicity = 0;
  friend bool operator==(const WalkEdge&, const WalkEdge&) = default;
};

/// A spanning, connected, even-degree edge multiset with maximum degree 2k,
/// plus a closed traversal (first vertex repeated at the end).
struct KWalk {
  std::size_t k = 2;
  std::vector<WalkEdge> edges;  // sorted by edge
  std::vector<Vertex> traversal;

  std::vector<std::size_t> degrees(std::size_t n) const;
};

using KWalkOutcome = std::variant<KWalk, ToughnessCertificate>;

/// Euler circuit of the multigraph, starting at the smallest vertex that has
/// an edge (Hierholzer; neighbours taken in increasing order). Precondition:
/// all degrees even and the edges connected.
std::vector<Vertex> euler_circuit(std::size_t n, const std::vector<WalkEdge>& edges);

/// k-walk from an edge-dominating witness: the witness cycle once (or the
/// witness edge doubled) plus every edge of a capacity-(k-1) matching of the
/// remaining vertices into the witness, doubled. When no such matching
/// exists, the Hall violator D0 gives S = N(D0) with c(G - S) >= |D0| >
/// (k-1)|S|, a certificate that G is not 1/(k-1)-tough.
///
/// Throws Error{KTooSmall | InvalidWitness | NotConnected |
/// PreconditionViolated}.
KWalkOutcome build_k_walk(const Graph& g, const DominatingWitness& w, std::size_t k);

/// Smallest k >= 2 for which build_k_walk returns a walk.
/// Throws Error{NoNeighborInWitness} if a vertex off the witness has no
/// neighbour on it.
std::size_t minimal_construction_k(const Graph& g, const DominatingWitness& w);

}  // namespace toughwalks
