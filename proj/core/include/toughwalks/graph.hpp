#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <variant>
#include <vector>

#include <boost/dynamic_bitset.hpp>

namespace toughwalks {

using Vertex = std::uint32_t;
using VertexSet = boost::dynamic_bitset<std::uint64_t>;

/// Unordered vertex pair, stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  Edge() = default;
  Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

  bool touches(Vertex w) const noexcept { return u == w || v == w; }

  friend auto operator<=>(const Edge&, const Edge&) = default;
  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Simple undirected graph on vertices 0..n-1 with one adjacency bitset per
/// vertex. Immutable once built.
class Graph {
 public:
  Graph() = default;

  /// Throws Error{SelfLoop | DuplicateEdge | VertexOutOfRange}.
  Graph(std::size_t n, const std::vector<Edge>& edges);

  std::size_t n() const noexcept { return adjacency_.size(); }
  std::size_t m() const noexcept { return edges_.size(); }

  bool adjacent(Vertex a, Vertex b) const { return adjacency_[a].test(b); }
  const VertexSet& neighbors(Vertex v) const { return adjacency_[v]; }
  std::vector<Vertex> neighbor_list(Vertex v) const;
  std::size_t degree(Vertex v) const { return adjacency_[v].count(); }

  /// Sorted ascending.
  const std::vector<Edge>& edges() const noexcept { return edges_; }

  VertexSet empty_set() const { return VertexSet(n()); }
  VertexSet full_set() const { return ~VertexSet(n()); }

  /// Subgraph induced by `keep`, relabelled to 0..|keep|-1 in increasing
  /// order of the original ids.
  Graph induced(const VertexSet& keep) const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n() == b.n() && a.edges_ == b.edges_;
  }

 private:
  std::vector<VertexSet> adjacency_;
  std::vector<Edge> edges_;
};

/// Vertex sequence (v_1, ..., v_k), k >= 3, read cyclically.
struct Cycle {
  std::vector<Vertex> vertices;

  std::size_t size() const noexcept { return vertices.size(); }
  friend bool operator==(const Cycle&, const Cycle&) = default;
};

/// True iff `c` has >= 3 distinct in-range vertices and every cyclically
/// consecutive pair is an edge of `g`.
bool is_cycle_in(const Graph& g, const Cycle& c);

/// True iff `a` and `b` describe the same cyclic sequence up to rotation and
/// reflection.
bool same_cycle(const Cycle& a, const Cycle& b);

struct CycleW {
  Cycle cycle;
  friend bool operator==(const CycleW&, const CycleW&) = default;
};
struct EdgeW {
  Edge edge;
  friend bool operator==(const EdgeW&, const EdgeW&) = default;
};
struct VertexW {
  Vertex vertex = 0;
  friend bool operator==(const VertexW&, const VertexW&) = default;
};

/// An edge-dominating cycle, or the degenerate edge/vertex witnesses used for
/// stars and double stars.
struct DominatingWitness {
  std::variant<CycleW, EdgeW, VertexW> value;

  /// Vertices of the witness, in witness order (cycle order for cycles).
  std::vector<Vertex> vertices() const;
  VertexSet vertex_set(std::size_t n) const;

  friend bool operator==(const DominatingWitness&,
                         const DominatingWitness&) = default;
};

/// True iff `w` is well formed for `g` (valid cycle, existing edge, in-range
/// vertex). Says nothing about domination.
bool is_structurally_valid(const Graph& g, const DominatingWitness& w);

/// Components ordered by smallest member; members ascending.
std::vector<std::vector<Vertex>> connected_components(const Graph& g);

/// Components of g - removed, same ordering rules.
std::vector<std::vector<Vertex>> connected_components(const Graph& g,
                                                      const VertexSet& removed);

bool is_connected(const Graph& g);

/// A cycle found from the first depth-first back edge, or nullopt for forests.
std::optional<Cycle> find_any_cycle(const Graph& g);

/// G x K2. Vertex (v, layer) has id v + layer * n.
class PrismGraph {
 public:
  explicit PrismGraph(Graph base);

  const Graph& base() const noexcept { return base_; }
  const Graph& product() const noexcept { return product_; }

  Vertex encode(Vertex v, int layer) const {
    return v + static_cast<Vertex>(layer) * static_cast<Vertex>(base_.n());
  }

 private:
  Graph base_;
  Graph product_;
};

PrismGraph prism(const Graph& g);

}  // namespace toughwalks
