#include "toughwalks/graph.hpp"

#include <algorithm>
#include <string>

#include "toughwalks/error.hpp"

namespace toughwalks {

Graph::Graph(std::size_t n, const std::vector<Edge>& edges)
    : adjacency_(n, VertexSet(n)) {
  edges_.reserve(edges.size());
  for (const Edge& e : edges) {
    if (e.v >= n) {
      throw Error(ErrorCode::VertexOutOfRange,
                  "vertex " + std::to_string(e.v) + " out of range for n = " +
                      std::to_string(n));
    }
    if (e.u == e.v) {
      throw Error(ErrorCode::SelfLoop,
                  "self-loop at vertex " + std::to_string(e.u));
    }
    if (adjacency_[e.u].test(e.v)) {
      throw Error(ErrorCode::DuplicateEdge,
                  "duplicate edge {" + std::to_string(e.u) + "," +
                      std::to_string(e.v) + "}");
    }
    adjacency_[e.u].set(e.v);
    adjacency_[e.v].set(e.u);
    edges_.push_back(e);
  }
  std::sort(edges_.begin(), edges_.end());
}

std::vector<Vertex> Graph::neighbor_list(Vertex v) const {
  std::vector<Vertex> out;
  out.reserve(degree(v));
  const VertexSet& row = adjacency_[v];
  for (auto w = row.find_first(); w != VertexSet::npos; w = row.find_next(w)) {
    out.push_back(static_cast<Vertex>(w));
  }
  return out;
}

Graph Graph::induced(const VertexSet& keep) const {
  std::vector<Vertex> relabel(n(), 0);
  Vertex next = 0;
  for (auto v = keep.find_first(); v != VertexSet::npos; v = keep.find_next(v)) {
    relabel[v] = next++;
  }
  std::vector<Edge> kept;
  for (const Edge& e : edges_) {
    if (keep.test(e.u) && keep.test(e.v)) {
      kept.emplace_back(relabel[e.u], relabel[e.v]);
    }
  }
  return Graph(next, kept);
}

bool is_cycle_in(const Graph& g, const Cycle& c) {
  const auto k = c.size();
  if (k < 3) return false;
  VertexSet seen(g.n());
  for (Vertex v : c.vertices) {
    if (v >= g.n() || seen.test(v)) return false;
    seen.set(v);
  }
  for (std::size_t i = 0; i < k; ++i) {
    if (!g.adjacent(c.vertices[i], c.vertices[(i + 1) % k])) return false;
  }
  return true;
}

bool same_cycle(const Cycle& a, const Cycle& b) {
  const auto k = a.size();
  if (k != b.size()) return false;
  if (k == 0) return true;
  const auto& x = a.vertices;
  const auto& y = b.vertices;
  for (std::size_t shift = 0; shift < k; ++shift) {
    bool forward = true;
    bool backward = true;
    for (std::size_t i = 0; i < k && (forward || backward); ++i) {
      if (x[i] != y[(shift + i) % k]) forward = false;
      if (x[i] != y[(shift + k - i) % k]) backward = false;
    }
    if (forward || backward) return true;
  }
  return false;
}

std::vector<Vertex> DominatingWitness::vertices() const {
  return std::visit(
      [](const auto& w) -> std::vector<Vertex> {
        using T = std::decay_t<decltype(w)>;
        if constexpr (std::is_same_v<T, CycleW>) {
          return w.cycle.vertices;
        } else if constexpr (std::is_same_v<T, EdgeW>) {
          return {w.edge.u, w.edge.v};
        } else {
          return {w.vertex};
        }
      },
      value);
}

VertexSet DominatingWitness::vertex_set(std::size_t n) const {
  VertexSet out(n);
  for (Vertex v : vertices()) {
    if (v < n) out.set(v);
  }
  return out;
}

bool is_structurally_valid(const Graph& g, const DominatingWitness& w) {
  if (const auto* c = std::get_if<CycleW>(&w.value)) return is_cycle_in(g, c->cycle);
  if (const auto* e = std::get_if<EdgeW>(&w.value)) {
    return e->edge.v < g.n() && e->edge.u != e->edge.v &&
           g.adjacent(e->edge.u, e->edge.v);
  }
  return std::get<VertexW>(w.value).vertex < g.n();
}

std::vector<std::vector<Vertex>> connected_components(const Graph& g,
                                                      const VertexSet& removed) {
  std::vector<std::vector<Vertex>> parts;
  VertexSet seen = removed;
  std::vector<Vertex> stack;
  for (Vertex s = 0; s < g.n(); ++s) {
    if (seen.test(s)) continue;
    std::vector<Vertex> part;
    seen.set(s);
    stack.push_back(s);
    while (!stack.empty()) {
      const Vertex v = stack.back();
      stack.pop_back();
      part.push_back(v);
      const VertexSet fresh = g.neighbors(v) - seen;
      for (auto w = fresh.find_first(); w != VertexSet::npos; w = fresh.find_next(w)) {
        seen.set(w);
        stack.push_back(static_cast<Vertex>(w));
      }
    }
    std::sort(part.begin(), part.end());
    parts.push_back(std::move(part));
  }
  return parts;
}

std::vector<std::vector<Vertex>> connected_components(const Graph& g) {
  return connected_components(g, g.empty_set());
}

bool is_connected(const Graph& g) { return connected_components(g).size() <= 1; }

std::optional<Cycle> find_any_cycle(const Graph& g) {
  constexpr Vertex kNone = static_cast<Vertex>(-1);
  std::vector<Vertex> parent(g.n(), kNone);
  std::vector<std::uint8_t> state(g.n(), 0);  // 0 new, 1 on stack, 2 done

  for (Vertex root = 0; root < g.n(); ++root) {
    if (state[root] != 0) continue;
    // Frames hold (vertex, next neighbour to look at).
    std::vector<std::pair<Vertex, Vertex>> frames{{root, 0}};
    state[root] = 1;
    while (!frames.empty()) {
      auto& [v, cursor] = frames.back();
      const VertexSet& row = g.neighbors(v);
      auto w = cursor == 0 ? row.find_first() : row.find_next(cursor - 1);
      if (w == VertexSet::npos) {
        state[v] = 2;
        frames.pop_back();
        continue;
      }
      cursor = static_cast<Vertex>(w) + 1;
      const auto u = static_cast<Vertex>(w);
      if (u == parent[v]) continue;
      if (state[u] == 1) {
        // Back edge v -> u: the tree path u .. v closes a cycle.
        std::vector<Vertex> path;
        for (Vertex x = v; x != u; x = parent[x]) path.push_back(x);
        path.push_back(u);
        std::reverse(path.begin(), path.end());
        return Cycle{std::move(path)};
      }
      if (state[u] == 0) {
        parent[u] = v;
        state[u] = 1;
        frames.emplace_back(u, 0);
      }
    }
  }
  return std::nullopt;
}

namespace {

Graph build_product(const Graph& base) {
  const auto n = static_cast<Vertex>(base.n());
  std::vector<Edge> edges;
  edges.reserve(2 * base.m() + n);
  for (const Edge& e : base.edges()) {
    edges.emplace_back(e.u, e.v);
    edges.emplace_back(e.u + n, e.v + n);
  }
  for (Vertex v = 0; v < n; ++v) edges.emplace_back(v, v + n);
  return Graph(2 * base.n(), edges);
}

}  // namespace

PrismGraph::PrismGraph(Graph base)
    : base_(std::move(base)), product_(build_product(base_)) {}

PrismGraph prism(const Graph& g) { return PrismGraph(g); }

}  // namespace toughwalks
