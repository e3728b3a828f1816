#include "toughwalks/prism.hpp"

#include <algorithm>
#include <array>

#include "toughwalks/domcycle.hpp"
#include "toughwalks/error.hpp"
#include "toughwalks/kwalk.hpp"
#include "toughwalks/oracles.hpp"
#include "toughwalks/recognition.hpp"

namespace toughwalks {

namespace {

void require_dominating_cycle(const Graph& g, const Cycle& c) {
  if (!is_connected(g)) throw Error(ErrorCode::NotConnected, "graph is not connected");
  if (!is_cycle_in(g, c)) throw Error(ErrorCode::InvalidWitness, "not a cycle of the graph");
  if (!check_edge_dominating(g, DominatingWitness{CycleW{c}})) {
    throw Error(ErrorCode::NotDominating, "cycle is not edge-dominating");
  }
}

// Replaces each rung (v,i)-(v,1-i) of a matched cycle vertex v by the
// detour through its partner u.
PrismCycle splice_detours(const std::vector<PrismVertex>& base,
                          const CapacitatedMatching& matching, std::size_t n) {
  constexpr Vertex kNone = static_cast<Vertex>(-1);
  std::vector<Vertex> partner(n, kNone);
  for (auto [u, v] : matching.pairs) partner[v] = u;

  PrismCycle out;
  const auto len = base.size();
  for (std::size_t i = 0; i < len; ++i) {
    const PrismVertex here = base[i];
    const PrismVertex next = base[(i + 1) % len];
    out.sequence.push_back(here);
    if (here.v == next.v && partner[here.v] != kNone) {
      const Vertex u = partner[here.v];
      out.sequence.push_back({u, here.layer});
      out.sequence.push_back({u, next.layer});
    }
  }
  return out;
}

PrismOutcome finish(const Graph& g, const std::vector<PrismVertex>& base,
                    const VertexSet& targets, const VertexSet& extra_cut) {
  const VertexSet outside = ~(targets | extra_cut);
  auto matched = capacitated_matching(g, targets, outside, 1);
  if (auto* violator = std::get_if<HallViolator>(&matched)) {
    // The deficient vertices only see the targets and the excluded vertex.
    std::vector<Vertex> cut = violator->neighborhood;
    for (Vertex d : violator->deficient) {
      for (auto x = extra_cut.find_first(); x != VertexSet::npos; x = extra_cut.find_next(x)) {
        if (g.adjacent(d, static_cast<Vertex>(x))) cut.push_back(static_cast<Vertex>(x));
      }
    }
    return make_certificate(g, std::move(cut));
  }
  return splice_detours(base, std::get<CapacitatedMatching>(matched), g.n());
}

}  // namespace

PrismOutcome prism_ham_even(const Graph& g, const Cycle& c) {
  if (c.size() % 2 != 0) throw Error(ErrorCode::OddCycle, "cycle length is odd");
  require_dominating_cycle(g, c);
  const auto& v = c.vertices;
  std::vector<PrismVertex> base;
  base.reserve(2 * v.size());
  for (std::size_t j = 0; j < v.size(); j += 2) {
    base.push_back({v[j], 0});
    base.push_back({v[j], 1});
    base.push_back({v[j + 1], 1});
    base.push_back({v[j + 1], 0});
  }
  VertexSet targets(g.n());
  for (Vertex x : v) targets.set(x);
  return finish(g, base, targets, VertexSet(g.n()));
}

PrismOutcome prism_ham_odd(const Graph& g, const Cycle& c, std::size_t q) {
  const std::size_t k = c.size();
  if (k % 2 == 0) throw Error(ErrorCode::EvenCycle, "cycle length is even");
  require_dominating_cycle(g, c);
  const std::size_t p = (k - 1) / 2;
  // 1-based labels: at(i) = v_i.
  const auto at = [&](std::size_t i) { return c.vertices[i - 1]; };
  if (q < 1 || q > p || !g.adjacent(at(1), at(2 * q)) || !g.adjacent(at(1), at(2 * q + 1))) {
    throw Error(ErrorCode::TriangleMissing, "v1, v2q, v2q+1 do not form a triangle");
  }

  std::vector<PrismVertex> base;
  base.reserve(2 * k);
  base.push_back({at(1), 0});
  for (std::size_t i = 1; i < q; ++i) {
    base.push_back({at(2 * i), 0});
    base.push_back({at(2 * i), 1});
    base.push_back({at(2 * i + 1), 1});
    base.push_back({at(2 * i + 1), 0});
  }
  base.push_back({at(2 * q), 0});
  base.push_back({at(2 * q), 1});
  base.push_back({at(1), 1});
  base.push_back({at(2 * q + 1), 1});
  base.push_back({at(2 * q + 1), 0});
  for (std::size_t i = q + 1; i <= p; ++i) {
    base.push_back({at(2 * i), 0});
    base.push_back({at(2 * i), 1});
    base.push_back({at(2 * i + 1), 1});
    base.push_back({at(2 * i + 1), 0});
  }

  VertexSet targets(g.n());
  for (Vertex x : c.vertices) targets.set(x);
  targets.reset(at(1));
  VertexSet excluded(g.n());
  excluded.set(at(1));
  return finish(g, base, targets, excluded);
}

PrismCycle prism_from_hamiltonian(const Cycle& hamiltonian) {
  PrismCycle out;
  const auto& v = hamiltonian.vertices;
  for (Vertex x : v) out.sequence.push_back({x, 0});
  for (auto it = v.rbegin(); it != v.rend(); ++it) out.sequence.push_back({*it, 1});
  return out;
}

namespace {

struct OddLabelling {
  Cycle cycle;
  std::size_t q;
};

// All relabellings of `c` (v1 a triangle vertex, either direction) in which
// the other two vertices of the consecutive triangle at `seam` sit on
// (v2q, v2q+1). The first entry is the seam labelling with q = p.
std::vector<OddLabelling> odd_labellings(const std::vector<Vertex>& c) {
  const std::size_t k = c.size();
  const std::array<Vertex, 3> tri{c[0], c[k - 2], c[k - 1]};
  std::vector<OddLabelling> out;
  for (Vertex first : tri) {
    const auto start = static_cast<std::size_t>(
        std::find(c.begin(), c.end(), first) - c.begin());
    for (bool forward : {true, false}) {
      std::vector<Vertex> seq(k);
      for (std::size_t i = 0; i < k; ++i) {
        seq[i] = forward ? c[(start + i) % k] : c[(start + k - i) % k];
      }
      // Positions (1-based) 2q and 2q+1 hold the other two vertices.
      for (std::size_t pos = 1; pos + 1 < k; pos += 2) {
        const bool a = std::find(tri.begin(), tri.end(), seq[pos]) != tri.end();
        const bool b = std::find(tri.begin(), tri.end(), seq[pos + 1]) != tri.end();
        if (a && b) out.push_back({Cycle{seq}, (pos + 1) / 2});
      }
    }
  }
  // Seam labelling first: v1 = X', walking forwards puts X'', X at the end.
  std::stable_partition(out.begin(), out.end(), [&](const OddLabelling& l) {
    return l.cycle.vertices == c;
  });
  return out;
}

}  // namespace

PrismDriverOutcome prism_hamiltonian(const Graph& g, std::uint64_t search_budget) {
  if (g.n() < 2) {
    throw Error(ErrorCode::PreconditionViolated, "prism driver needs n >= 2");
  }
  if (!is_connected(g)) throw Error(ErrorCode::NotConnected, "graph is not connected");
  if (auto w = find_induced_lk2(g, 2)) throw Not2K2FreeError(std::move(*w));

  if (g.n() == 2) {
    return PrismCycle{{{0, 0}, {1, 0}, {1, 1}, {0, 1}}};
  }

  if (auto t = find_triangle(g)) {
    const Cycle c = find_edge_dominating_cycle_with_triangle(g, *t).cycle;
    if (c.size() % 2 == 0) {
      auto out = prism_ham_even(g, c);
      if (auto* pc = std::get_if<PrismCycle>(&out)) return *pc;
      return PrismFailure{std::get<ToughnessCertificate>(out)};
    }
    std::optional<ToughnessCertificate> first_failure;
    for (const OddLabelling& l : odd_labellings(c.vertices)) {
      auto out = prism_ham_odd(g, l.cycle, l.q);
      if (auto* pc = std::get_if<PrismCycle>(&out)) return *pc;
      if (!first_failure) first_failure = std::get<ToughnessCertificate>(out);
    }
    return PrismFailure{*first_failure};
  }

  const auto ham = brute_force_hamiltonian(g, search_budget);
  if (!ham.cycle) return PrismFailure{ExactSearchExhausted{ham.nodes}};
  if (g.n() % 2 == 0) {
    return std::get<PrismCycle>(prism_ham_even(g, *ham.cycle));
  }
  return prism_from_hamiltonian(*ham.cycle);
}

}  // namespace toughwalks
