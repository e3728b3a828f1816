#include "toughwalks/oracles.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <string>

#include "toughwalks/error.hpp"
#include "toughwalks/kwalk.hpp"
#include "toughwalks/prism.hpp"
#include "toughwalks/recognition.hpp"

namespace toughwalks {

bool check_edge_dominating(const Graph& g, const DominatingWitness& w) {
  if (!is_structurally_valid(g, w)) return false;
  const VertexSet on = w.vertex_set(g.n());
  return std::all_of(g.edges().begin(), g.edges().end(), [&](const Edge& e) {
    return on.test(e.u) || on.test(e.v);
  });
}

bool check_k_walk(const Graph& g, const KWalk& w) {
  const auto n = g.n();
  if (w.k < 1) return false;
  std::vector<std::size_t> deg(n, 0);
  std::vector<std::vector<Vertex>> adj(n);
  std::vector<std::pair<Edge, std::size_t>> remaining;
  for (const WalkEdge& e : w.edges) {
    if (e.edge.v >= n || e.edge.u == e.edge.v || !g.adjacent(e.edge.u, e.edge.v)) return false;
    if (e.multiplicity == 0 || e.multiplicity > 2 * w.k) return false;
    deg[e.edge.u] += e.multiplicity;
    deg[e.edge.v] += e.multiplicity;
    adj[e.edge.u].push_back(e.edge.v);
    adj[e.edge.v].push_back(e.edge.u);
    remaining.emplace_back(e.edge, e.multiplicity);
  }
  for (std::size_t i = 1; i < remaining.size(); ++i) {
    if (!(remaining[i - 1].first < remaining[i].first)) return false;  // duplicates
  }
  if (n >= 2) {
    for (Vertex v = 0; v < n; ++v) {
      if (deg[v] < 2 || deg[v] % 2 != 0 || deg[v] > 2 * w.k) return false;
    }
    // Connectivity of the multiset.
    std::vector<bool> seen(n, false);
    std::vector<Vertex> stack{0};
    seen[0] = true;
    std::size_t reached = 1;
    while (!stack.empty()) {
      const Vertex v = stack.back();
      stack.pop_back();
      for (Vertex u : adj[v]) {
        if (!seen[u]) {
          seen[u] = true;
          ++reached;
          stack.push_back(u);
        }
      }
    }
    if (reached != n) return false;
  }

  // The traversal must be closed and use each edge copy exactly once.
  const auto& t = w.traversal;
  if (n < 2) return t.empty() || t.size() == 1;
  if (t.size() < 3 || t.front() != t.back()) return false;
  std::vector<std::size_t> visits(n, 0);
  for (std::size_t i = 0; i + 1 < t.size(); ++i) {
    if (t[i] >= n || t[i + 1] >= n || t[i] == t[i + 1]) return false;
    ++visits[t[i]];
    const Edge e(t[i], t[i + 1]);
    auto it = std::lower_bound(remaining.begin(), remaining.end(), e,
                               [](const auto& entry, const Edge& key) { return entry.first < key; });
    if (it == remaining.end() || !(it->first == e) || it->second == 0) return false;
    --it->second;
  }
  for (const auto& [edge, left] : remaining) {
    if (left != 0) return false;
  }
  return std::all_of(visits.begin(), visits.end(),
                     [&](std::size_t c) { return c >= 1 && c <= w.k; });
}

bool check_prism_cycle(const Graph& g, const PrismCycle& pc) {
  const auto n = g.n();
  const auto& s = pc.sequence;
  if (n == 0 || s.size() != 2 * n || s.size() < 3) return false;
  std::vector<bool> seen(2 * n, false);
  for (const PrismVertex& p : s) {
    if (p.v >= n || (p.layer != 0 && p.layer != 1)) return false;
    const auto id = p.v + static_cast<std::size_t>(p.layer) * n;
    if (seen[id]) return false;
    seen[id] = true;
  }
  for (std::size_t i = 0; i < s.size(); ++i) {
    const PrismVertex a = s[i];
    const PrismVertex b = s[(i + 1) % s.size()];
    const bool rung = a.v == b.v && a.layer != b.layer;
    const bool flat = a.layer == b.layer && a.v != b.v && g.adjacent(a.v, b.v);
    if (!rung && !flat) return false;
  }
  return true;
}

namespace {

using Mask = std::uint64_t;

std::vector<Mask> adjacency_masks(const Graph& g) {
  std::vector<Mask> rows(g.n(), 0);
  for (const Edge& e : g.edges()) {
    rows[e.u] |= Mask{1} << e.v;
    rows[e.v] |= Mask{1} << e.u;
  }
  return rows;
}

std::size_t count_components(const std::vector<Mask>& rows, Mask alive) {
  std::size_t parts = 0;
  while (alive != 0) {
    ++parts;
    Mask frontier = alive & (~alive + 1);
    Mask component = frontier;
    while (frontier != 0) {
      Mask next = 0;
      for (Mask f = frontier; f != 0; f &= f - 1) {
        next |= rows[static_cast<std::size_t>(std::countr_zero(f))];
      }
      next &= alive & ~component;
      component |= next;
      frontier = next;
    }
    alive &= ~component;
  }
  return parts;
}

}  // namespace

Toughness brute_force_toughness(const Graph& g, bool force) {
  const auto n = g.n();
  if (n > 63 || (n > kToughnessMaxVertices && !force)) {
    throw Error(ErrorCode::BudgetExceeded,
                "exhaustive toughness limited to " + std::to_string(kToughnessMaxVertices) +
                    " vertices (n = " + std::to_string(n) + ")");
  }
  const auto rows = adjacency_masks(g);
  const Mask all = n == 0 ? 0 : (n == 64 ? ~Mask{0} : (Mask{1} << n) - 1);
  std::optional<std::pair<Mask, std::size_t>> best;
  for (Mask removed = 0;; ++removed) {
    const auto parts = count_components(rows, all & ~removed);
    if (parts >= 2) {
      const auto size = static_cast<std::size_t>(std::popcount(removed));
      // size / parts < best_size / best_parts, cross-multiplied.
      if (!best || size * best->second < static_cast<std::size_t>(std::popcount(best->first)) * parts) {
        best = {removed, parts};
      }
    }
    if (removed == all) break;
  }
  if (!best) return Toughness::infinite();
  ToughnessCertificate cert;
  for (Mask m = best->first; m != 0; m &= m - 1) {
    cert.cutset.push_back(static_cast<Vertex>(std::countr_zero(m)));
  }
  cert.components = best->second;
  return Toughness::attained_by(std::move(cert));
}

namespace {

// Exact backtracking from vertex 0. Branches are cut when some unvisited
// vertex has fewer than two usable neighbours or the unvisited part is no
// longer reachable from the path's end; neither cut loses a solution.
class HamiltonianBacktracker {
 public:
  HamiltonianBacktracker(const Graph& g, std::uint64_t budget)
      : g_(g), budget_(budget), free_(g.full_set()) {}

  std::optional<Cycle> run() {
    const auto n = g_.n();
    if (n < 3) return std::nullopt;
    for (Vertex v = 0; v < n; ++v) {
      if (g_.degree(v) < 2) return std::nullopt;
    }
    if (!is_connected(g_)) return std::nullopt;
    path_.push_back(0);
    free_.reset(0);
    if (extend()) return Cycle{path_};
    return std::nullopt;
  }

  std::uint64_t nodes() const noexcept { return nodes_; }

 private:
  bool feasible(Vertex last) const {
    const Vertex first = path_.front();
    VertexSet usable = free_;
    usable.set(last);
    usable.set(first);
    for (auto w = free_.find_first(); w != VertexSet::npos; w = free_.find_next(w)) {
      if ((g_.neighbors(static_cast<Vertex>(w)) & usable).count() < 2) return false;
    }
    // Every free vertex and the start must be reachable from `last`.
    VertexSet seen(g_.n());
    seen.set(last);
    std::vector<Vertex> stack{last};
    std::size_t reached = 0;
    bool start_reached = false;
    while (!stack.empty()) {
      const Vertex x = stack.back();
      stack.pop_back();
      VertexSet next = g_.neighbors(x) & free_ & ~seen;
      if (g_.adjacent(x, first)) start_reached = true;
      for (auto y = next.find_first(); y != VertexSet::npos; y = next.find_next(y)) {
        seen.set(y);
        ++reached;
        stack.push_back(static_cast<Vertex>(y));
      }
    }
    return reached == free_.count() && start_reached;
  }

  bool extend() {
    if (++nodes_ > budget_) {
      throw Error(ErrorCode::BudgetExceeded,
                  "Hamiltonian search exceeded budget of " + std::to_string(budget_) + " nodes");
    }
    const Vertex last = path_.back();
    if (path_.size() == g_.n()) return g_.adjacent(last, path_.front());
    if (!feasible(last)) return false;
    // Fewest onward options first.
    std::vector<std::pair<std::size_t, Vertex>> order;
    const VertexSet next = g_.neighbors(last) & free_;
    for (auto w = next.find_first(); w != VertexSet::npos; w = next.find_next(w)) {
      const auto v = static_cast<Vertex>(w);
      order.emplace_back((g_.neighbors(v) & free_).count(), v);
    }
    std::sort(order.begin(), order.end());
    for (const auto& [degree, w] : order) {
      free_.reset(w);
      path_.push_back(w);
      if (extend()) return true;
      path_.pop_back();
      free_.set(w);
    }
    return false;
  }

  const Graph& g_;
  std::uint64_t budget_;
  VertexSet free_;
  std::vector<Vertex> path_;
  std::uint64_t nodes_ = 0;
};

}  // namespace

HamiltonianSearch brute_force_hamiltonian(const Graph& g, std::uint64_t budget) {
  HamiltonianBacktracker search(g, budget);
  auto cycle = search.run();
  return {std::move(cycle), search.nodes()};
}

namespace {

class DominatingCycleSearch {
 public:
  DominatingCycleSearch(const Graph& g, std::uint64_t budget)
      : g_(g), budget_(budget), rows_(adjacency_masks(g)) {}

  std::optional<Cycle> run() {
    const auto n = g_.n();
    for (std::size_t length = 3; length <= n; ++length) {
      length_ = length;
      for (Vertex s = 0; s < n; ++s) {
        path_.assign(1, s);
        if (extend(Mask{1} << s)) return Cycle{path_};
      }
    }
    return std::nullopt;
  }

 private:
  bool dominates(Mask on) const {
    for (const Edge& e : g_.edges()) {
      if (((on >> e.u) & 1) == 0 && ((on >> e.v) & 1) == 0) return false;
    }
    return true;
  }

  bool extend(Mask on) {
    if (++nodes_ > budget_) {
      throw Error(ErrorCode::BudgetExceeded,
                  "dominating cycle search exceeded budget of " + std::to_string(budget_) +
                      " nodes");
    }
    const Vertex start = path_.front();
    const Vertex last = path_.back();
    if (path_.size() == length_) {
      return path_[1] < last && ((rows_[last] >> start) & 1) != 0 && dominates(on);
    }
    Mask options = rows_[last] & ~on;
    // Only vertices larger than the start may appear after it.
    options &= ~((Mask{2} << start) - 1);
    for (; options != 0; options &= options - 1) {
      const auto w = static_cast<Vertex>(std::countr_zero(options));
      path_.push_back(w);
      if (extend(on | (Mask{1} << w))) return true;
      path_.pop_back();
    }
    return false;
  }

  const Graph& g_;
  std::uint64_t budget_;
  std::vector<Mask> rows_;
  std::vector<Vertex> path_;
  std::size_t length_ = 0;
  std::uint64_t nodes_ = 0;
};

}  // namespace

std::optional<Cycle> brute_force_dominating_cycle(const Graph& g, std::uint64_t budget) {
  if (g.n() > kDominatingCycleMaxVertices) {
    throw Error(ErrorCode::BudgetExceeded,
                "exhaustive dominating cycle search limited to " +
                    std::to_string(kDominatingCycleMaxVertices) + " vertices");
  }
  return DominatingCycleSearch(g, budget).run();
}

bool is_k_connected(const Graph& g, std::size_t k) {
  const auto n = g.n();
  if (k == 0) return true;
  if (n <= k) return false;
  // Remove every vertex subset of size < k and check connectivity.
  std::vector<Vertex> chosen;
  const auto still_connected = [&]() {
    VertexSet removed(n);
    for (Vertex v : chosen) removed.set(v);
    return connected_components(g, removed).size() <= 1;
  };
  std::function<bool(Vertex)> walk = [&](Vertex from) -> bool {
    if (!still_connected()) return false;
    if (chosen.size() + 1 == k) return true;
    for (Vertex v = from; v < n; ++v) {
      chosen.push_back(v);
      const bool ok = walk(v + 1);
      chosen.pop_back();
      if (!ok) return false;
    }
    return true;
  };
  return walk(0);
}

bool veldman_condition(const Graph& g, std::size_t l, bool force) {
  if (l < 2) throw Error(ErrorCode::InvalidArgument, "l must be >= 2");
  if (l > 3 && !force) {
    throw Error(ErrorCode::BudgetExceeded, "degree-sum condition limited to l <= 3");
  }
  if (!is_k_connected(g, l - 1)) return false;
  // sum >= (l-1)(n-l+1)/2, compared as 2*sum >= (l-1)(n-l+1); n - l + 1 may
  // be negative for tiny graphs, in which case the bound is vacuous.
  const auto n = static_cast<std::int64_t>(g.n());
  const auto li = static_cast<std::int64_t>(l);
  const std::int64_t rhs = (li - 1) * (n - li + 1);
  bool holds = true;
  for_each_induced_lk2(g, l, [&](const InducedMatchingWitness& h) {
    std::int64_t sum = 0;
    for (const Edge& e : h.edges) {
      sum += static_cast<std::int64_t>(g.degree(e.u) + g.degree(e.v));
    }
    holds = 2 * sum >= rhs;
    return holds;
  });
  return holds;
}

}  // namespace toughwalks
