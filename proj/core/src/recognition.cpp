#include "toughwalks/recognition.hpp"

#include <string>

#include "toughwalks/error.hpp"

namespace toughwalks {

namespace {

class InducedMatchingSearch {
 public:
  InducedMatchingSearch(const Graph& g, std::size_t l, std::uint64_t budget,
                        const std::function<bool(const InducedMatchingWitness&)>& visit)
      : g_(g), l_(l), budget_(budget), visit_(visit), blocked_(g.n()) {}

  void run() { extend(0); }

 private:
  // Returns false once the visitor asks to stop.
  bool extend(std::size_t first_edge) {
    if (++nodes_ > budget_) {
      throw Error(ErrorCode::BudgetExceeded,
                  "induced matching search exceeded budget of " +
                      std::to_string(budget_) + " nodes");
    }
    if (chosen_.edges.size() == l_) return visit_(chosen_);
    const auto& edges = g_.edges();
    const std::size_t missing = l_ - chosen_.edges.size();
    for (std::size_t i = first_edge; i + missing <= edges.size(); ++i) {
      const Edge e = edges[i];
      // blocked_ holds chosen endpoints and all their neighbours.
      if (blocked_.test(e.u) || blocked_.test(e.v)) continue;
      const VertexSet saved = blocked_;
      blocked_.set(e.u).set(e.v);
      blocked_ |= g_.neighbors(e.u);
      blocked_ |= g_.neighbors(e.v);
      chosen_.edges.push_back(e);
      const bool keep_going = extend(i + 1);
      chosen_.edges.pop_back();
      blocked_ = saved;
      if (!keep_going) return false;
    }
    return true;
  }

  const Graph& g_;
  std::size_t l_;
  std::uint64_t budget_;
  const std::function<bool(const InducedMatchingWitness&)>& visit_;
  VertexSet blocked_;
  InducedMatchingWitness chosen_;
  std::uint64_t nodes_ = 0;
};

}  // namespace

void for_each_induced_lk2(
    const Graph& g, std::size_t l,
    const std::function<bool(const InducedMatchingWitness&)>& visit,
    std::uint64_t budget) {
  if (l == 0) {
    throw Error(ErrorCode::InvalidArgument, "induced matching size must be >= 1");
  }
  InducedMatchingSearch(g, l, budget, visit).run();
}

std::optional<InducedMatchingWitness> find_induced_lk2(const Graph& g,
                                                       std::size_t l,
                                                       std::uint64_t budget) {
  if (l == 0) {
    throw Error(ErrorCode::InvalidArgument, "induced matching size must be >= 1");
  }
  if (l == 2) {
    // Direct pair scan; the first hit in sorted edge order is the minimum.
    const auto& edges = g.edges();
    for (std::size_t i = 0; i < edges.size(); ++i) {
      VertexSet closed = g.neighbors(edges[i].u) | g.neighbors(edges[i].v);
      for (std::size_t j = i + 1; j < edges.size(); ++j) {
        if (!closed.test(edges[j].u) && !closed.test(edges[j].v)) {
          return InducedMatchingWitness{{edges[i], edges[j]}};
        }
      }
    }
    return std::nullopt;
  }
  std::optional<InducedMatchingWitness> found;
  for_each_induced_lk2(
      g, l,
      [&](const InducedMatchingWitness& w) {
        found = w;
        return false;
      },
      budget);
  return found;
}

bool is_induced_matching(const Graph& g, const InducedMatchingWitness& w) {
  VertexSet endpoints(g.n());
  for (const Edge& e : w.edges) {
    if (e.v >= g.n() || e.u == e.v || !g.adjacent(e.u, e.v)) return false;
    if (endpoints.test(e.u) || endpoints.test(e.v)) return false;
    endpoints.set(e.u).set(e.v);
  }
  for (const Edge& e : w.edges) {
    VertexSet others = endpoints;
    others.reset(e.u).reset(e.v);
    if (g.neighbors(e.u).intersects(others) || g.neighbors(e.v).intersects(others)) {
      return false;
    }
  }
  return true;
}

TwoK2FreeResult is_2k2_free(const Graph& g) {
  auto witness = find_induced_lk2(g, 2);
  if (witness) return {false, std::move(witness)};
  return {true, std::nullopt};
}

bool addition_creates_2k2(const Graph& g, Vertex a, Vertex b) {
  VertexSet closed = g.neighbors(a) | g.neighbors(b);
  closed.set(a).set(b);
  for (const Edge& e : g.edges()) {
    if (!closed.test(e.u) && !closed.test(e.v)) return true;
  }
  return false;
}

std::optional<Triangle> find_triangle(const Graph& g) {
  for (const Edge& e : g.edges()) {
    const VertexSet common = g.neighbors(e.u) & g.neighbors(e.v);
    const auto c = common.find_next(e.v);
    if (c != VertexSet::npos) return Triangle{e.u, e.v, static_cast<Vertex>(c)};
  }
  return std::nullopt;
}

bool is_triangle(const Graph& g, const Triangle& t) {
  const auto n = g.n();
  if (t.a >= n || t.b >= n || t.c >= n) return false;
  if (t.a == t.b || t.b == t.c || t.a == t.c) return false;
  return g.adjacent(t.a, t.b) && g.adjacent(t.b, t.c) && g.adjacent(t.a, t.c);
}

}  // namespace toughwalks
