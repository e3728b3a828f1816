#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "toughwalks/error.hpp"
#include "toughwalks/graph.hpp"
#include "toughwalks/recognition.hpp"

namespace toughwalks {

/// Which rule produced a growth step. The C* tags follow the case split of
/// the cycle-growth argument: with x1 on C adjacent to v1, x2 its successor
/// and x3 the next one,
///   C1     x2 ~ v1            insert v1 between x1 and x2
///   C2     x2 ~ v2            insert v1 v2
///   C3a    x3 ~ v2            replace x2 by v1 v2
///   C3b_i  x3 ~ v1, x2 has no neighbour off C: replace x2 by v1 (same length)
///   C3b_ii x3 ~ v1, x2 ~ z off C: detour through z
enum class GrowthCase {
  StartTree,
  StartCycle,
  StartTriangle,
  C1,
  C2,
  C3a,
  C3b_i,
  C3b_ii,
};

std::string_view to_string(GrowthCase c) noexcept;

struct GrowthStep {
  GrowthCase tag = GrowthCase::StartCycle;
  std::vector<Vertex> before;  // empty for start records
  std::optional<Edge> undominated_edge;
  std::optional<std::size_t> x1_position;  // index of x1 in `before`
  std::vector<Vertex> after;
  std::size_t undominated_before = 0;
  std::size_t undominated_after = 0;
};

struct GrowthTrace {
  std::vector<GrowthStep> steps;

  /// Steps other than the start record.
  std::size_t growth_steps() const noexcept {
    return steps.empty() ? 0 : steps.size() - 1;
  }
};

/// Raised when the input has an induced 2K2; carries the smallest one.
class Not2K2FreeError : public Error {
 public:
  explicit Not2K2FreeError(InducedMatchingWitness witness);
  const InducedMatchingWitness& witness() const noexcept { return witness_; }

 private:
  InducedMatchingWitness witness_;
};

/// Number of edges of g with neither endpoint in `covered`.
std::size_t count_undominated(const Graph& g, const VertexSet& covered);

/// Smallest edge with neither endpoint in `covered`.
std::optional<Edge> first_undominated(const Graph& g, const VertexSet& covered);

struct DominatingCycleResult {
  DominatingWitness witness;
  GrowthTrace trace;
};

/// Edge-dominating cycle (or the vertex/edge witness for stars and double
/// stars) of a connected 2K2-free graph.
///
/// Starting from any cycle, the smallest undominated edge v1v2 is absorbed
/// by one of the growth rules above; each step either lengthens C or keeps
/// its length and strictly lowers the number of undominated edges, so at
/// most |E|^2 steps are taken.
///
/// Throws Error{NotConnected | PreconditionViolated} and Not2K2FreeError
/// (the input is scanned up front, so the growth rules never dead-end).
DominatingCycleResult find_edge_dominating_cycle(const Graph& g);

struct TriangleCycleResult {
  Cycle cycle;  // normalized: (cycle[k-2], cycle[k-1], cycle[0]) is a triangle
  GrowthTrace trace;
};

/// Edge-dominating cycle that keeps the triangle `t` on three consecutive
/// positions. The cycle is kept labelled as (X', x2, ..., X'', X) with X the
/// middle triangle vertex; each step grows C between X' and x3, which never
/// disturbs the edges X''X and XX' once |C| >= 4. For |C| = 3 every
/// arrangement of the triangle is a valid labelling and one of them always
/// admits a length-increasing step.
///
/// Throws Error{NotConnected | NotATriangle} and Not2K2FreeError.
TriangleCycleResult find_edge_dominating_cycle_with_triangle(const Graph& g,
                                                             const Triangle& t);

/// True iff cycle[k-2], cycle[k-1], cycle[0] are pairwise adjacent.
bool triangle_at_seam(const Graph& g, const std::vector<Vertex>& cycle);

/// First i such that cycle[i], cycle[i+1], cycle[i+2] (cyclically) are
/// pairwise adjacent.
std::optional<std::size_t> find_consecutive_triangle(const Graph& g,
                                                     const std::vector<Vertex>& cycle);

}  // namespace toughwalks
