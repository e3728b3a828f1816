#include "toughwalks/generators.hpp"

#include <limits>

#include "toughwalks/recognition.hpp"

namespace toughwalks {

std::uint64_t SeededRng::below(std::uint64_t bound) {
  // Largest multiple of `bound` that fits, to avoid modulo bias.
  const std::uint64_t limit =
      std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t x = engine_();
  while (x >= limit) x = engine_();
  return x % bound;
}

bool SeededRng::chance(const Rational& p) {
  if (p <= 0) return false;
  if (p >= 1) return true;
  return below(static_cast<std::uint64_t>(p.denominator())) <
         static_cast<std::uint64_t>(p.numerator());
}

Graph fixture_net() {
  return Graph(6, {{0, 1}, {1, 2}, {2, 3}, {1, 4}, {2, 4}, {4, 5}});
}

Graph gen_path(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
  return Graph(n, edges);
}

Graph gen_cycle(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex v = 0; v < n; ++v) edges.emplace_back(v, static_cast<Vertex>((v + 1) % n));
  return Graph(n, edges);
}

Graph gen_complete(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  }
  return Graph(n, edges);
}

Graph gen_star(std::size_t leaves) {
  std::vector<Edge> edges;
  for (Vertex v = 1; v <= leaves; ++v) edges.emplace_back(0, v);
  return Graph(leaves + 1, edges);
}

Graph gen_split_graph(std::size_t n, const Rational& density, std::uint64_t seed) {
  SeededRng rng(seed);
  std::vector<bool> in_clique(n);
  for (std::size_t v = 0; v < n; ++v) in_clique[v] = rng.below(2) == 1;
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (in_clique[u] && in_clique[v]) {
        edges.emplace_back(u, v);
      } else if (in_clique[u] != in_clique[v] && rng.chance(density)) {
        edges.emplace_back(u, v);
      }
    }
  }
  return Graph(n, edges);
}

Graph gen_complete_multipartite(const std::vector<std::size_t>& part_sizes) {
  std::vector<std::size_t> part_of;
  for (std::size_t p = 0; p < part_sizes.size(); ++p) {
    part_of.insert(part_of.end(), part_sizes[p], p);
  }
  std::vector<Edge> edges;
  for (Vertex u = 0; u < part_of.size(); ++u) {
    for (Vertex v = u + 1; v < part_of.size(); ++v) {
      if (part_of[u] != part_of[v]) edges.emplace_back(u, v);
    }
  }
  return Graph(part_of.size(), edges);
}

Graph gen_2k2_free_perturbed(const Graph& base, std::size_t extra_edges, std::uint64_t seed) {
  SeededRng rng(seed);
  std::vector<Edge> candidates;
  for (Vertex u = 0; u < base.n(); ++u) {
    for (Vertex v = u + 1; v < base.n(); ++v) {
      if (!base.adjacent(u, v)) candidates.emplace_back(u, v);
    }
  }
  rng.shuffle(candidates);
  Graph current = base;
  std::size_t added = 0;
  for (const Edge& e : candidates) {
    if (added == extra_edges) break;
    if (addition_creates_2k2(current, e.u, e.v)) continue;
    std::vector<Edge> edges = current.edges();
    edges.push_back(e);
    current = Graph(current.n(), edges);
    ++added;
  }
  return current;
}

Graph gen_3k2_free_joined(const Graph& first, const Graph& second, std::size_t clique_size,
                          const Rational& join_density, std::uint64_t seed) {
  const auto n1 = static_cast<Vertex>(first.n());
  const auto n2 = static_cast<Vertex>(second.n());
  const auto blocks = n1 + n2;
  const auto n = blocks + static_cast<Vertex>(clique_size);
  std::vector<Edge> base = first.edges();
  for (const Edge& e : second.edges()) base.emplace_back(e.u + n1, e.v + n1);
  for (Vertex u = blocks; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) base.emplace_back(u, v);
  }

  SeededRng rng(seed);
  constexpr int kAttempts = 32;
  for (int attempt = 0; attempt <= kAttempts; ++attempt) {
    std::vector<Edge> edges = base;
    for (Vertex c = blocks; c < n; ++c) {
      for (Vertex v = 0; v < blocks; ++v) {
        if (attempt == kAttempts || rng.chance(join_density)) edges.emplace_back(v, c);
      }
    }
    Graph g(n, edges);
    if (!find_induced_lk2(g, 3)) return g;
  }
  return Graph(n, base);  // unreachable: the full join is 3K2-free
}

namespace {

Graph corpus_member(std::size_t index, std::size_t n, SeededRng& rng) {
  const std::uint64_t seed = rng.below(std::numeric_limits<std::uint64_t>::max());
  switch (index % 3) {
    case 0: {
      const auto num = static_cast<std::int64_t>(1 + rng.below(4));
      return gen_split_graph(n, Rational(num, 4), seed);
    }
    case 1: {
      std::vector<std::size_t> parts;
      std::size_t left = n;
      while (left > 0) {
        const std::size_t size = 1 + rng.below(std::min<std::size_t>(left, 4));
        parts.push_back(size);
        left -= size;
      }
      return gen_complete_multipartite(parts);
    }
    default: {
      const Graph base = rng.below(2) == 0
                             ? gen_split_graph(n, Rational(1, 3), seed)
                             : gen_complete_multipartite({n / 2, n - n / 2});
      return gen_2k2_free_perturbed(base, 1 + rng.below(n), seed ^ 0x9e3779b97f4a7c15ULL);
    }
  }
}

}  // namespace

std::vector<Graph> gen_corpus(const CorpusOptions& options) {
  SeededRng rng(options.seed);
  std::vector<Graph> out;
  std::size_t index = 0;
  while (out.size() < options.count) {
    const std::size_t n = options.min_n + rng.below(options.max_n - options.min_n + 1);
    Graph g = corpus_member(index, n, rng);
    if (is_connected(g)) {
      out.push_back(std::move(g));
      ++index;
    }
  }
  return out;
}

std::vector<Graph> gen_3k2_corpus(const CorpusOptions& options) {
  SeededRng rng(options.seed);
  std::vector<Graph> out;
  while (out.size() < options.count) {
    const std::size_t n = options.min_n + rng.below(options.max_n - options.min_n + 1);
    const std::size_t clique = 1 + rng.below(std::min<std::size_t>(3, n - 2));
    const std::size_t left = n - clique;
    const std::size_t n1 = 1 + rng.below(left - 1);
    const std::uint64_t seed = rng.below(std::numeric_limits<std::uint64_t>::max());
    const Graph a = rng.below(2) == 0 ? gen_split_graph(n1, Rational(1, 2), seed)
                                      : gen_complete_multipartite({(n1 + 1) / 2, n1 / 2});
    const Graph b = gen_split_graph(left - n1, Rational(1, 2), seed + 1);
    Graph g = gen_3k2_free_joined(a, b, clique, Rational(1, 2), seed + 2);
    if (is_connected(g)) out.push_back(std::move(g));
  }
  return out;
}

}  // namespace toughwalks
