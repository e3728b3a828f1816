#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "toughwalks/generators.hpp"
#include "toughwalks/graph.hpp"

// Small named graphs and test-only reference checks. Nothing here calls the
// algorithms under test.
namespace toughwalks::testing {

inline Graph k3() { return gen_complete(3); }
inline Graph c4() { return gen_cycle(4); }
inline Graph c5() { return gen_cycle(5); }
inline Graph c6() { return gen_cycle(6); }
inline Graph p4() { return gen_path(4); }
inline Graph two_k2() { return Graph(4, {{0, 1}, {2, 3}}); }
inline Graph k13() { return gen_star(3); }

// Centres 0-1; leaves 2, 3 on 0 and 4, 5 on 1.
inline Graph double_star() { return Graph(6, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {1, 5}}); }

// K3 on {0,1,2}, edge {3,4}, joined by 0-3 and 1-4.
inline Graph triangle_with_edge() {
  return Graph(5, {{0, 1}, {0, 2}, {1, 2}, {3, 4}, {0, 3}, {1, 4}});
}

// C4 (0 1 2 3) with pendants attached to 0.
inline Graph c4_with_pendants(std::size_t pendants) {
  std::vector<Edge> edges{{0, 1}, {1, 2}, {2, 3}, {3, 0}};
  for (std::size_t i = 0; i < pendants; ++i) edges.emplace_back(0, static_cast<Vertex>(4 + i));
  return Graph(4 + pendants, edges);
}

inline Graph add_edges(const Graph& g, const std::vector<Edge>& extra) {
  std::vector<Edge> edges = g.edges();
  edges.insert(edges.end(), extra.begin(), extra.end());
  return Graph(g.n(), edges);
}

// Naive ordered double loop over edge pairs.
inline bool naive_2k2_free(const Graph& g) {
  for (const Edge& a : g.edges()) {
    for (const Edge& b : g.edges()) {
      const Vertex q[4] = {a.u, a.v, b.u, b.v};
      bool disjoint = true;
      for (int i = 0; i < 2; ++i) {
        for (int j = 2; j < 4; ++j) disjoint = disjoint && q[i] != q[j];
      }
      if (!disjoint) continue;
      bool linked = false;
      for (int i = 0; i < 2; ++i) {
        for (int j = 2; j < 4; ++j) linked = linked || g.adjacent(q[i], q[j]);
      }
      if (!linked) return false;
    }
  }
  return true;
}

// Independent exhaustive toughness on adjacency matrices. Returns
// (|S|, c) of a minimizer, or (0, 0) when no separating set exists.
inline std::pair<std::size_t, std::size_t> reference_toughness(const Graph& g) {
  const std::size_t n = g.n();
  std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
  for (const Edge& e : g.edges()) adj[e.u][e.v] = adj[e.v][e.u] = true;
  std::pair<std::size_t, std::size_t> best{0, 0};
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s) {
    std::vector<int> label(n, -1);
    std::size_t parts = 0;
    for (std::size_t v = 0; v < n; ++v) {
      if ((s >> v) & 1 || label[v] >= 0) continue;
      std::vector<std::size_t> stack{v};
      label[v] = static_cast<int>(parts);
      while (!stack.empty()) {
        auto x = stack.back();
        stack.pop_back();
        for (std::size_t y = 0; y < n; ++y) {
          if (adj[x][y] && !((s >> y) & 1) && label[y] < 0) {
            label[y] = static_cast<int>(parts);
            stack.push_back(y);
          }
        }
      }
      ++parts;
    }
    const auto size = static_cast<std::size_t>(__builtin_popcountll(s));
    if (parts >= 2 && (best.second == 0 || size * best.second < best.first * parts)) {
      best = {size, parts};
    }
  }
  return best;
}

// Uniform random graph G(n, 1/2) style with a given edge probability in
// percent, driven by std::mt19937_64 directly.
inline Graph random_graph(std::mt19937_64& rng, std::size_t n, unsigned percent) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (rng() % 100 < percent) edges.emplace_back(u, v);
    }
  }
  return Graph(n, edges);
}

}  // namespace toughwalks::testing
