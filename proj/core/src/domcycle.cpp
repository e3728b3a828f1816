#include "toughwalks/domcycle.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

namespace toughwalks {

std::string_view to_string(GrowthCase c) noexcept {
  switch (c) {
    case GrowthCase::StartTree: return "START_TREE";
    case GrowthCase::StartCycle: return "START_CYCLE";
    case GrowthCase::StartTriangle: return "START_TRIANGLE";
    case GrowthCase::C1: return "C1";
    case GrowthCase::C2: return "C2";
    case GrowthCase::C3a: return "C3a";
    case GrowthCase::C3b_i: return "C3b_i";
    case GrowthCase::C3b_ii: return "C3b_ii";
  }
  return "?";
}

namespace {

std::string describe(const InducedMatchingWitness& w) {
  std::string out = "graph has an induced 2K2:";
  for (const Edge& e : w.edges) {
    out += " {" + std::to_string(e.u) + "," + std::to_string(e.v) + "}";
  }
  return out;
}

[[noreturn]] void throw_not_2k2_free(const Graph& g) {
  auto witness = find_induced_lk2(g, 2);
  if (!witness) {
    throw std::logic_error("cycle growth dead-ended on a 2K2-free graph");
  }
  throw Not2K2FreeError(std::move(*witness));
}

void require_growable(const Graph& g) {
  if (g.n() == 0) {
    throw Error(ErrorCode::PreconditionViolated, "graph has no vertices");
  }
  if (!is_connected(g)) {
    throw Error(ErrorCode::NotConnected, "graph is not connected");
  }
  auto check = is_2k2_free(g);
  if (!check.free) throw Not2K2FreeError(std::move(*check.witness));
}

struct GrowthMove {
  GrowthCase tag;
  std::vector<Vertex> cycle;
};

// `labelled` is the current cycle rotated/reflected so that x1 = labelled[0]
// and x2 = labelled[1]; v1 must be adjacent to x1 and both v1, v2 off C.
std::optional<GrowthMove> grow(const Graph& g, const VertexSet& on_cycle,
                               const std::vector<Vertex>& labelled, Vertex v1,
                               Vertex v2) {
  const std::size_t k = labelled.size();
  const Vertex x1 = labelled[0];
  const Vertex x2 = labelled[1];
  const Vertex x3 = labelled[2 % k];
  const auto tail = [&](std::size_t from) {
    return std::vector<Vertex>(labelled.begin() + static_cast<std::ptrdiff_t>(from),
                               labelled.end());
  };
  const auto join = [](std::vector<Vertex> head, const std::vector<Vertex>& rest) {
    head.insert(head.end(), rest.begin(), rest.end());
    return head;
  };

  if (g.adjacent(x2, v1)) return GrowthMove{GrowthCase::C1, join({x1, v1}, tail(1))};
  if (g.adjacent(x2, v2)) return GrowthMove{GrowthCase::C2, join({x1, v1, v2}, tail(1))};
  // x2 sees neither v1 nor v2, so {v1v2, x2x3} forces x3 ~ v1 or x3 ~ v2.
  if (g.adjacent(x3, v2)) return GrowthMove{GrowthCase::C3a, join({x1, v1, v2}, tail(2))};
  if (!g.adjacent(x3, v1)) return std::nullopt;

  const VertexSet outside = g.neighbors(x2) - on_cycle;
  const auto z_pos = outside.find_first();
  if (z_pos == VertexSet::npos) {
    return GrowthMove{GrowthCase::C3b_i, join({x1, v1}, tail(2))};
  }
  const auto z = static_cast<Vertex>(z_pos);
  // {x2z, v1v2} forces z ~ v1 or z ~ v2.
  if (g.adjacent(z, v1)) return GrowthMove{GrowthCase::C3b_ii, join({x1, v1, z}, tail(1))};
  if (g.adjacent(z, v2)) {
    return GrowthMove{GrowthCase::C3b_ii, join({x1, v1, v2, z}, tail(1))};
  }
  return std::nullopt;
}

std::vector<Vertex> relabel(const std::vector<Vertex>& cycle, std::size_t start,
                            bool forward) {
  const std::size_t k = cycle.size();
  std::vector<Vertex> out(k);
  for (std::size_t i = 0; i < k; ++i) {
    out[i] = forward ? cycle[(start + i) % k] : cycle[(start + k - i) % k];
  }
  return out;
}

VertexSet as_set(const Graph& g, const std::vector<Vertex>& vs) {
  VertexSet s(g.n());
  for (Vertex v : vs) s.set(v);
  return s;
}

class CycleGrower {
 public:
  CycleGrower(const Graph& g, std::vector<Vertex> start, GrowthCase start_tag)
      : g_(g), cycle_(std::move(start)), on_cycle_(as_set(g, cycle_)) {
    limit_ = g.m() * g.m();
    GrowthStep first;
    first.tag = start_tag;
    first.after = cycle_;
    first.undominated_after = count_undominated(g_, on_cycle_);
    trace_.steps.push_back(std::move(first));
  }

  // Runs until C is edge-dominating. `triangle_mode` keeps the seam triangle.
  void run(bool triangle_mode) {
    while (auto edge = first_undominated(g_, on_cycle_)) {
      if (trace_.growth_steps() >= limit_) {
        throw std::logic_error("cycle growth exceeded |E|^2 steps");
      }
      auto chosen = triangle_mode ? seam_step(*edge) : free_step(*edge);
      if (!chosen) throw_not_2k2_free(g_);

      GrowthStep step;
      step.tag = chosen->move.tag;
      step.before = cycle_;
      step.undominated_edge = *edge;
      step.x1_position = chosen->x1_position;
      step.undominated_before = trace_.steps.back().undominated_after;

      cycle_ = std::move(chosen->move.cycle);
      on_cycle_ = as_set(g_, cycle_);
      step.after = cycle_;
      step.undominated_after = count_undominated(g_, on_cycle_);
      trace_.steps.push_back(std::move(step));
    }
  }

  const std::vector<Vertex>& cycle() const noexcept { return cycle_; }
  GrowthTrace take_trace() { return std::move(trace_); }

 private:
  struct Chosen {
    GrowthMove move;
    std::size_t x1_position;
  };

  std::optional<Chosen> free_step(const Edge& edge) {
    Vertex v1 = edge.u;
    Vertex v2 = edge.v;
    if (!g_.neighbors(v1).intersects(on_cycle_)) std::swap(v1, v2);
    const auto k = cycle_.size();
    std::size_t pos = 0;
    while (pos < k && !g_.adjacent(cycle_[pos], v1)) ++pos;
    if (pos == k) return std::nullopt;
    for (bool forward : {true, false}) {
      if (auto move = grow(g_, on_cycle_, relabel(cycle_, pos, forward), v1, v2)) {
        return Chosen{std::move(*move), pos};
      }
    }
    return std::nullopt;
  }

  std::optional<Chosen> seam_step(const Edge& edge) {
    const auto k = cycle_.size();
    // Candidate labellings as (start position, direction). Every candidate
    // keeps the seam triangle on (x_{k-1}, x_k, x_1).
    std::vector<std::pair<std::size_t, bool>> labellings;
    if (k == 3) {
      for (bool forward : {true, false}) {
        for (std::size_t r = 0; r < 3; ++r) labellings.emplace_back(r, forward);
      }
    } else {
      labellings.emplace_back(0, true);
      labellings.emplace_back(k - 2, false);
    }
    for (auto [start, forward] : labellings) {
      std::vector<Vertex> labelled;
      if (k == 3 || forward) {
        labelled = relabel(cycle_, start, forward);
      } else {
        // (X'', x_{k-2}, ..., x2, X', X): swap the roles of X' and X''.
        labelled.assign(cycle_.rbegin() + 1, cycle_.rend());
        labelled.push_back(cycle_.back());
      }
      for (auto [v1, v2] : {std::pair{edge.u, edge.v}, std::pair{edge.v, edge.u}}) {
        if (!g_.adjacent(labelled[0], v1)) continue;
        auto move = grow(g_, on_cycle_, labelled, v1, v2);
        if (move && triangle_at_seam(g_, move->cycle)) {
          return Chosen{std::move(*move), start};
        }
      }
    }
    return std::nullopt;
  }

  const Graph& g_;
  std::vector<Vertex> cycle_;
  VertexSet on_cycle_;
  GrowthTrace trace_;
  std::size_t limit_ = 0;
};

std::optional<DominatingWitness> tree_witness(const Graph& g) {
  const auto n = g.n();
  for (Vertex v = 0; v < n; ++v) {
    if (g.degree(v) + 1 == n) return DominatingWitness{VertexW{v}};
  }
  for (const Edge& e : g.edges()) {
    if (g.degree(e.u) + g.degree(e.v) - 1 == g.m()) return DominatingWitness{EdgeW{e}};
  }
  return std::nullopt;
}

}  // namespace

Not2K2FreeError::Not2K2FreeError(InducedMatchingWitness witness)
    : Error(ErrorCode::Not2K2Free, describe(witness)), witness_(std::move(witness)) {}

std::size_t count_undominated(const Graph& g, const VertexSet& covered) {
  std::size_t twice = 0;
  const VertexSet off = ~covered;
  for (auto v = off.find_first(); v != VertexSet::npos; v = off.find_next(v)) {
    twice += (g.neighbors(static_cast<Vertex>(v)) & off).count();
  }
  return twice / 2;
}

std::optional<Edge> first_undominated(const Graph& g, const VertexSet& covered) {
  const VertexSet off = ~covered;
  for (auto v = off.find_first(); v != VertexSet::npos; v = off.find_next(v)) {
    const auto w = (g.neighbors(static_cast<Vertex>(v)) & off).find_next(v);
    if (w != VertexSet::npos) {
      return Edge(static_cast<Vertex>(v), static_cast<Vertex>(w));
    }
  }
  return std::nullopt;
}

DominatingCycleResult find_edge_dominating_cycle(const Graph& g) {
  require_growable(g);
  GrowthTrace trace;
  auto record_start = [&](const DominatingWitness& w) {
    GrowthStep start;
    start.tag = GrowthCase::StartTree;
    start.after = w.vertices();
    trace.steps.push_back(std::move(start));
  };

  if (g.n() <= 2) {
    DominatingWitness w = g.n() == 1 ? DominatingWitness{VertexW{0}}
                                     : DominatingWitness{EdgeW{Edge(0, 1)}};
    record_start(w);
    return {std::move(w), std::move(trace)};
  }
  auto start = find_any_cycle(g);
  if (!start) {
    auto w = tree_witness(g);
    if (!w) throw_not_2k2_free(g);
    record_start(*w);
    return {std::move(*w), std::move(trace)};
  }

  CycleGrower grower(g, std::move(start->vertices), GrowthCase::StartCycle);
  grower.run(false);
  return {DominatingWitness{CycleW{Cycle{grower.cycle()}}}, grower.take_trace()};
}

TriangleCycleResult find_edge_dominating_cycle_with_triangle(const Graph& g,
                                                             const Triangle& t) {
  if (!is_triangle(g, t)) {
    throw Error(ErrorCode::NotATriangle, "given vertices are not a triangle");
  }
  require_growable(g);
  CycleGrower grower(g, {t.a, t.b, t.c}, GrowthCase::StartTriangle);
  grower.run(true);
  return {Cycle{grower.cycle()}, grower.take_trace()};
}

bool triangle_at_seam(const Graph& g, const std::vector<Vertex>& cycle) {
  const auto k = cycle.size();
  if (k < 3) return false;
  const Vertex a = cycle[k - 2];
  const Vertex b = cycle[k - 1];
  const Vertex c = cycle[0];
  return g.adjacent(a, b) && g.adjacent(b, c) && g.adjacent(a, c);
}

std::optional<std::size_t> find_consecutive_triangle(const Graph& g,
                                                     const std::vector<Vertex>& cycle) {
  const auto k = cycle.size();
  if (k < 3) return std::nullopt;
  for (std::size_t i = 0; i < k; ++i) {
    const Vertex a = cycle[i];
    const Vertex b = cycle[(i + 1) % k];
    const Vertex c = cycle[(i + 2) % k];
    if (g.adjacent(a, b) && g.adjacent(b, c) && g.adjacent(a, c)) return i;
  }
  return std::nullopt;
}

}  // namespace toughwalks
