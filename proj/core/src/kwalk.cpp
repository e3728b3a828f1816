#include "toughwalks/kwalk.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <string>

#include "toughwalks/error.hpp"
#include "toughwalks/oracles.hpp"

namespace toughwalks {

namespace {

constexpr Vertex kUnmatched = static_cast<Vertex>(-1);

std::vector<Vertex> members(const VertexSet& s) {
  std::vector<Vertex> out;
  for (auto v = s.find_first(); v != VertexSet::npos; v = s.find_next(v)) {
    out.push_back(static_cast<Vertex>(v));
  }
  return out;
}

class BMatcher {
 public:
  BMatcher(const Graph& g, const VertexSet& targets, std::size_t capacity)
      : g_(g),
        targets_(targets),
        capacity_(capacity),
        match_(g.n(), kUnmatched),
        load_(g.n(), 0) {}

  // Augments from `root`; false if no augmenting path exists.
  bool augment(Vertex root) {
    std::vector<Vertex> reached_by(g_.n(), kUnmatched);  // target -> outside
    VertexSet seen_target(g_.n());
    VertexSet seen_outside(g_.n());
    std::deque<Vertex> queue{root};
    seen_outside.set(root);
    while (!queue.empty()) {
      const Vertex x = queue.front();
      queue.pop_front();
      const VertexSet fresh = (g_.neighbors(x) & targets_) - seen_target;
      for (auto t = fresh.find_first(); t != VertexSet::npos; t = fresh.find_next(t)) {
        seen_target.set(t);
        reached_by[t] = x;
        if (load_[t] < capacity_) {
          flip(static_cast<Vertex>(t), reached_by, root);
          return true;
        }
        for (Vertex y : partners(static_cast<Vertex>(t))) {
          if (!seen_outside.test(y)) {
            seen_outside.set(y);
            queue.push_back(y);
          }
        }
      }
    }
    return false;
  }

  // Outside vertices reachable from `sources` along alternating paths, and
  // the targets seen on the way.
  std::pair<VertexSet, VertexSet> reachable(const std::vector<Vertex>& sources) const {
    VertexSet outside(g_.n());
    VertexSet seen_target(g_.n());
    std::deque<Vertex> queue(sources.begin(), sources.end());
    for (Vertex s : sources) outside.set(s);
    while (!queue.empty()) {
      const Vertex x = queue.front();
      queue.pop_front();
      const VertexSet fresh = (g_.neighbors(x) & targets_) - seen_target;
      for (auto t = fresh.find_first(); t != VertexSet::npos; t = fresh.find_next(t)) {
        seen_target.set(t);
        for (Vertex y : partners(static_cast<Vertex>(t))) {
          if (!outside.test(y)) {
            outside.set(y);
            queue.push_back(y);
          }
        }
      }
    }
    return {outside, seen_target};
  }

  Vertex match_of(Vertex x) const { return match_[x]; }

 private:
  std::vector<Vertex> partners(Vertex t) const {
    std::vector<Vertex> out;
    for (Vertex x = 0; x < g_.n(); ++x) {
      if (match_[x] == t) out.push_back(x);
    }
    return out;
  }

  // Shift every outside vertex on the alternating path one target forward;
  // only the final target gains load.
  void flip(Vertex free_target, const std::vector<Vertex>& reached_by, Vertex root) {
    Vertex t = free_target;
    for (;;) {
      const Vertex x = reached_by[t];
      const Vertex previous = match_[x];
      match_[x] = t;
      if (x == root) break;
      t = previous;
    }
    ++load_[free_target];
  }

  const Graph& g_;
  const VertexSet& targets_;
  std::size_t capacity_;
  std::vector<Vertex> match_;
  std::vector<std::size_t> load_;
};

}  // namespace

MatchingOutcome capacitated_matching(const Graph& g, const VertexSet& targets,
                                     const VertexSet& outside, std::size_t capacity) {
  if (capacity == 0) {
    throw Error(ErrorCode::InvalidArgument, "matching capacity must be >= 1");
  }
  if (targets.size() != g.n() || outside.size() != g.n()) {
    throw Error(ErrorCode::PreconditionViolated, "vertex sets sized for another graph");
  }
  if (targets.intersects(outside)) {
    throw Error(ErrorCode::PreconditionViolated, "targets and outside overlap");
  }
  const auto outside_list = members(outside);
  for (Vertex x : outside_list) {
    if (g.neighbors(x).intersects(outside)) {
      throw Error(ErrorCode::PreconditionViolated,
                  "outside set is not independent at vertex " + std::to_string(x));
    }
  }

  BMatcher matcher(g, targets, capacity);
  std::vector<Vertex> unmatched;
  for (Vertex x : outside_list) {
    if (!matcher.augment(x)) unmatched.push_back(x);
  }
  if (!unmatched.empty()) {
    auto [deficient, neighborhood] = matcher.reachable(unmatched);
    return HallViolator{members(deficient), members(neighborhood)};
  }
  CapacitatedMatching result;
  result.capacity = capacity;
  for (Vertex x : outside_list) result.pairs.emplace_back(x, matcher.match_of(x));
  return result;
}

bool is_valid_matching(const Graph& g, const VertexSet& targets,
                       const VertexSet& outside, const CapacitatedMatching& m) {
  std::vector<std::size_t> load(g.n(), 0);
  VertexSet covered(g.n());
  for (auto [x, t] : m.pairs) {
    if (x >= g.n() || t >= g.n()) return false;
    if (!outside.test(x) || !targets.test(t) || !g.adjacent(x, t)) return false;
    if (covered.test(x)) return false;
    covered.set(x);
    if (++load[t] > m.capacity) return false;
  }
  return covered == outside;
}

std::vector<std::size_t> KWalk::degrees(std::size_t n) const {
  std::vector<std::size_t> deg(n, 0);
  for (const WalkEdge& e : edges) {
    if (e.edge.u < n) deg[e.edge.u] += e.multiplicity;
    if (e.edge.v < n) deg[e.edge.v] += e.multiplicity;
  }
  return deg;
}

std::vector<Vertex> euler_circuit(std::size_t n, const std::vector<WalkEdge>& edges) {
  // Incidence lists of (neighbour, copy id), sorted so the walk is canonical.
  std::vector<std::vector<std::pair<Vertex, std::size_t>>> incident(n);
  std::size_t copies = 0;
  for (const WalkEdge& e : edges) {
    for (std::size_t i = 0; i < e.multiplicity; ++i, ++copies) {
      incident[e.edge.u].emplace_back(e.edge.v, copies);
      incident[e.edge.v].emplace_back(e.edge.u, copies);
    }
  }
  if (copies == 0) return {};
  for (auto& list : incident) std::sort(list.begin(), list.end());

  Vertex start = 0;
  while (incident[start].empty()) ++start;

  std::vector<bool> used(copies, false);
  std::vector<std::size_t> cursor(n, 0);
  std::vector<Vertex> stack{start};
  std::vector<Vertex> circuit;
  while (!stack.empty()) {
    const Vertex v = stack.back();
    auto& list = incident[v];
    while (cursor[v] < list.size() && used[list[cursor[v]].second]) ++cursor[v];
    if (cursor[v] == list.size()) {
      circuit.push_back(v);
      stack.pop_back();
    } else {
      const auto [w, id] = list[cursor[v]];
      used[id] = true;
      stack.push_back(w);
    }
  }
  std::reverse(circuit.begin(), circuit.end());
  return circuit;
}

namespace {

void check_walk_input(const Graph& g, const DominatingWitness& w, std::size_t k) {
  if (k < 2) {
    throw Error(ErrorCode::KTooSmall, "k-walks are built for k >= 2 only");
  }
  if (g.n() < 2) {
    throw Error(ErrorCode::PreconditionViolated, "graph needs at least 2 vertices");
  }
  if (!is_connected(g)) throw Error(ErrorCode::NotConnected, "graph is not connected");
  if (!check_edge_dominating(g, w)) {
    throw Error(ErrorCode::InvalidWitness, "witness is not an edge-dominating subgraph");
  }
}

}  // namespace

KWalkOutcome build_k_walk(const Graph& g, const DominatingWitness& w, std::size_t k) {
  check_walk_input(g, w, k);
  const VertexSet targets = w.vertex_set(g.n());
  const VertexSet outside = ~targets;

  auto matched = capacitated_matching(g, targets, outside, k - 1);
  if (auto* violator = std::get_if<HallViolator>(&matched)) {
    return make_certificate(g, violator->neighborhood);
  }

  std::map<Edge, std::size_t> multiplicity;
  if (const auto* c = std::get_if<CycleW>(&w.value)) {
    const auto& vs = c->cycle.vertices;
    for (std::size_t i = 0; i < vs.size(); ++i) {
      ++multiplicity[Edge(vs[i], vs[(i + 1) % vs.size()])];
    }
  } else if (const auto* e = std::get_if<EdgeW>(&w.value)) {
    multiplicity[e->edge] += 2;
  }
  for (auto [x, t] : std::get<CapacitatedMatching>(matched).pairs) {
    multiplicity[Edge(x, t)] += 2;
  }

  KWalk walk;
  walk.k = k;
  for (const auto& [edge, count] : multiplicity) walk.edges.push_back({edge, count});
  walk.traversal = euler_circuit(g.n(), walk.edges);
  return walk;
}

std::size_t minimal_construction_k(const Graph& g, const DominatingWitness& w) {
  check_walk_input(g, w, 2);
  const VertexSet targets = w.vertex_set(g.n());
  const VertexSet outside = ~targets;
  for (auto x = outside.find_first(); x != VertexSet::npos; x = outside.find_next(x)) {
    if (!g.neighbors(static_cast<Vertex>(x)).intersects(targets)) {
      throw Error(ErrorCode::NoNeighborInWitness,
                  "vertex " + std::to_string(x) + " has no neighbour on the witness");
    }
  }
  // Capacity |D| always saturates, so k = |D| + 1 is an upper bound.
  const std::size_t limit = std::max<std::size_t>(outside.count() + 1, 2);
  for (std::size_t k = 2; k <= limit; ++k) {
    if (std::holds_alternative<CapacitatedMatching>(
            capacitated_matching(g, targets, outside, k - 1))) {
      return k;
    }
  }
  return limit;
}

}  // namespace toughwalks
