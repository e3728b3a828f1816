#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "toughwalks/graph.hpp"
#include "toughwalks/toughness.hpp"

namespace toughwalks {

/// Seeded source used by every generator: std::mt19937_64 with bounded draws
/// by rejection, so output is identical across standard libraries.
class SeededRng {
 public:
  explicit SeededRng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform in [0, bound), bound >= 1.
  std::uint64_t below(std::uint64_t bound);
  /// True with probability p (0 <= p <= 1).
  bool chance(const Rational& p);

  template <typename T>
  void shuffle(std::vector<T>& items) {
    for (std::size_t i = items.size(); i > 1; --i) {
      std::swap(items[i - 1], items[below(i)]);
    }
  }

 private:
  std::mt19937_64 engine_;
};

/// Triangle b(1) c(2) e(4) with pendants a(0)-b, d(3)-c, f(5)-e.
Graph fixture_net();

Graph gen_path(std::size_t n);
Graph gen_cycle(std::size_t n);
Graph gen_complete(std::size_t n);
Graph gen_star(std::size_t leaves);

/// Each vertex joins the clique side with probability 1/2; cross edges
/// appear independently with probability `density`.
Graph gen_split_graph(std::size_t n, const Rational& density, std::uint64_t seed);

Graph gen_complete_multipartite(const std::vector<std::size_t>& part_sizes);

/// Adds up to `extra_edges` random non-edges to a 2K2-free `base`, skipping
/// any addition that would create an induced 2K2. Stops early when every
/// non-edge has been tried.
Graph gen_2k2_free_perturbed(const Graph& base, std::size_t extra_edges, std::uint64_t seed);

/// Disjoint union of two 2K2-free blocks plus a clique of `clique_size`
/// vertices, each clique vertex joined to each block vertex with probability
/// `join_density`. Retries (up to 32 times) until the result is 3K2-free and
/// falls back to joining the clique to everything, which always is.
Graph gen_3k2_free_joined(const Graph& first, const Graph& second, std::size_t clique_size,
                          const Rational& join_density, std::uint64_t seed);

struct CorpusOptions {
  std::size_t count = 100;
  std::size_t min_n = 4;
  std::size_t max_n = 12;
  std::uint64_t seed = 1;
};

/// Connected 2K2-free graphs cycling through split, complete multipartite
/// and perturbed families. Deterministic in the options.
std::vector<Graph> gen_corpus(const CorpusOptions& options);

/// Connected 3K2-free graphs built with gen_3k2_free_joined from small
/// split/multipartite blocks. Not all of them are 2K2-free.
std::vector<Graph> gen_3k2_corpus(const CorpusOptions& options);

}  // namespace toughwalks
