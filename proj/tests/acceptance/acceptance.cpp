// Acceptance suite: one PASS/FAIL line per criterion, non-zero exit if any
// criterion fails. Limits are fixed below.
#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "toughwalks/domcycle.hpp"
#include "toughwalks/generators.hpp"
#include "toughwalks/io.hpp"
#include "toughwalks/kwalk.hpp"
#include "toughwalks/oracles.hpp"
#include "toughwalks/prism.hpp"
#include "toughwalks/recognition.hpp"

namespace tw = toughwalks;
using tw::Graph;
using tw::Rational;

namespace {

constexpr double kNetSeconds = 1.0;
constexpr double kCorpusSeconds = 30.0;
constexpr double kLargeSplitSeconds = 5.0;
constexpr std::size_t kCorpusSize = 500;
constexpr std::size_t kMinQualifying3K2 = 10;

struct Verdict {
  bool ok = true;
  std::string detail;

  void fail(const std::string& why) {
    if (ok) detail = why;
    ok = false;
  }
};

// Every walk produced anywhere is re-checked against the toughness bound.
struct ProducedWalk {
  Graph g;
  std::size_t k;
};
std::vector<ProducedWalk> g_walks;

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

Rational inverse(std::size_t k) { return Rational(1, static_cast<std::int64_t>(k)); }

const std::vector<Graph>& corpus() {
  static const auto c = tw::gen_corpus({.count = kCorpusSize, .min_n = 4, .max_n = 40, .seed = 2026});
  return c;
}

std::vector<Graph> small_corpus(std::size_t max_n, std::size_t count, std::uint64_t seed) {
  return tw::gen_corpus({.count = count, .min_n = 4, .max_n = max_n, .seed = seed});
}

bool steps_monotone(const Graph& g, const tw::GrowthTrace& trace, std::string& why) {
  if (trace.growth_steps() > g.m() * g.m()) {
    why = "trace longer than |E|^2";
    return false;
  }
  for (std::size_t i = 1; i < trace.steps.size(); ++i) {
    const auto& s = trace.steps[i];
    const bool longer = s.after.size() > s.before.size();
    const bool fewer = s.after.size() == s.before.size() && s.undominated_after < s.undominated_before;
    if (!longer && !fewer) {
      why = "potential not increasing at step " + std::to_string(i);
      return false;
    }
  }
  return true;
}

Verdict ac1_net() {
  Verdict v;
  const auto t0 = std::chrono::steady_clock::now();
  const Graph net = tw::fixture_net();
  if (!tw::is_2k2_free(net).free) v.fail("net not 2K2-free");
  const auto walk = tw::build_k_walk(net, tw::DominatingWitness{tw::CycleW{tw::Cycle{{1, 2, 4}}}}, 2);
  if (const auto* w = std::get_if<tw::KWalk>(&walk); w && tw::check_k_walk(net, *w)) {
    g_walks.push_back({net, 2});
  } else {
    v.fail("no verified 2-walk");
  }
  if (tw::brute_force_hamiltonian(tw::prism(net).product()).cycle) v.fail("prism Hamiltonian");
  const auto drive = tw::prism_hamiltonian(net);
  const auto* failure = std::get_if<tw::PrismFailure>(&drive);
  const auto* cert = failure ? std::get_if<tw::ToughnessCertificate>(&failure->reason) : nullptr;
  if (!cert || !tw::is_valid_certificate(net, *cert) || cert->bound() > Rational(1)) {
    v.fail("driver did not return a certificate with bound <= 1");
  }
  const double s = seconds_since(t0);
  if (s >= kNetSeconds) v.fail("took " + std::to_string(s) + " s");
  if (v.ok && cert) v.detail = "certificate bound " + tw::to_string(cert->bound());
  return v;
}

Verdict ac2_domcycle_corpus() {
  Verdict v;
  const auto t0 = std::chrono::steady_clock::now();
  std::size_t total_steps = 0;
  for (const Graph& g : corpus()) {
    const auto r = tw::find_edge_dominating_cycle(g);
    if (!tw::check_edge_dominating(g, r.witness)) v.fail("witness rejected on " + tw::to_graph6(g));
    std::string why;
    if (!steps_monotone(g, r.trace, why)) v.fail(why + " on " + tw::to_graph6(g));
    total_steps += r.trace.growth_steps();
  }
  const double s = seconds_since(t0);
  if (s >= kCorpusSeconds) v.fail("took " + std::to_string(s) + " s");
  if (v.ok) v.detail = std::to_string(corpus().size()) + " graphs, " + std::to_string(total_steps) + " steps";
  return v;
}

Verdict ac3_triangle_corpus() {
  Verdict v;
  std::size_t used = 0;
  for (const Graph& g : corpus()) {
    const auto t = tw::find_triangle(g);
    if (!t) continue;
    ++used;
    const auto r = tw::find_edge_dominating_cycle_with_triangle(g, *t);
    if (!tw::check_edge_dominating(g, tw::DominatingWitness{tw::CycleW{r.cycle}})) {
      v.fail("cycle not dominating on " + tw::to_graph6(g));
    }
    for (const auto& step : r.trace.steps) {
      if (!tw::find_consecutive_triangle(g, step.after)) {
        v.fail("lost the consecutive triangle on " + tw::to_graph6(g));
      }
    }
  }
  if (used == 0) v.fail("no graph with a triangle");
  if (v.ok) v.detail = std::to_string(used) + " graphs with a triangle";
  return v;
}

Verdict ac4_kwalk_pipeline() {
  Verdict v;
  std::size_t walks = 0, certs = 0;
  for (const Graph& g : small_corpus(10, 300, 41)) {
    const auto tough = tw::brute_force_toughness(g);
    const auto dom = tw::find_edge_dominating_cycle(g);
    for (std::size_t k : {2u, 3u, 4u}) {
      const Rational threshold = inverse(k - 1);
      const auto r = tw::build_k_walk(g, dom.witness, k);
      if (const auto* w = std::get_if<tw::KWalk>(&r)) {
        if (!tw::check_k_walk(g, *w)) v.fail("walk rejected on " + tw::to_graph6(g));
        g_walks.push_back({g, k});
        ++walks;
      } else {
        const auto& cert = std::get<tw::ToughnessCertificate>(r);
        ++certs;
        if (tough.at_least(threshold)) v.fail("certificate on a tough graph " + tw::to_graph6(g));
        if (!(cert.bound() < threshold) || !tw::is_valid_certificate(g, cert)) {
          v.fail("unsound certificate on " + tw::to_graph6(g));
        }
      }
    }
  }
  if (v.ok) v.detail = std::to_string(walks) + " walks, " + std::to_string(certs) + " certificates";
  return v;
}

Verdict ac5_prism_driver() {
  Verdict v;
  std::size_t used = 0;
  for (const Graph& g : small_corpus(12, 300, 53)) {
    if (!tw::brute_force_toughness(g).greater_than(Rational(1))) continue;
    ++used;
    const auto r = tw::prism_hamiltonian(g);
    const auto* pc = std::get_if<tw::PrismCycle>(&r);
    if (!pc || !tw::check_prism_cycle(g, *pc)) {
      v.fail("no verified prism cycle on " + tw::to_graph6(g));
      continue;
    }
    if (!tw::brute_force_hamiltonian(tw::prism(g).product()).cycle) {
      v.fail("exact search disagrees on " + tw::to_graph6(g));
    }
  }
  if (used == 0) v.fail("no graph with toughness > 1");
  if (v.ok) v.detail = std::to_string(used) + " graphs with toughness > 1";
  return v;
}

std::size_t host_rungs(const tw::PrismCycle& pc, const tw::VertexSet& on_cycle) {
  std::size_t count = 0;
  const auto& s = pc.sequence;
  for (std::size_t i = 0; i < s.size(); ++i) {
    const auto& a = s[i];
    const auto& b = s[(i + 1) % s.size()];
    if (a.v == b.v && on_cycle.test(a.v)) ++count;
  }
  return count;
}

Verdict ac6_template_identities() {
  Verdict v;
  std::size_t checked = 0;
  auto identity = [](std::size_t n) {
    std::vector<tw::Vertex> order(n);
    for (tw::Vertex i = 0; i < n; ++i) order[i] = i;
    return tw::Cycle{order};
  };
  for (std::size_t p = 2; p <= 10; ++p) {
    const auto r = tw::prism_ham_even(tw::gen_cycle(2 * p), identity(2 * p));
    const auto* pc = std::get_if<tw::PrismCycle>(&r);
    if (!pc || pc->sequence.size() != 4 * p) v.fail("even length != 4p at p=" + std::to_string(p));
    ++checked;
  }
  for (std::size_t p = 1; p <= 6; ++p) {
    for (std::size_t q = 1; q <= p; ++q) {
      const auto r = tw::prism_ham_odd(tw::gen_complete(2 * p + 1), identity(2 * p + 1), q);
      const auto* pc = std::get_if<tw::PrismCycle>(&r);
      if (!pc || pc->sequence.size() != 4 * p + 2) v.fail("odd length != 4p+2 at p=" + std::to_string(p));
      ++checked;
    }
  }
  // Corpus cycles with matched outside vertices: exactly d host rungs drop out.
  for (const Graph& g : small_corpus(16, 200, 67)) {
    const auto t = tw::find_triangle(g);
    if (!t) continue;
    const auto cyc = tw::find_edge_dominating_cycle_with_triangle(g, *t).cycle;
    const std::size_t k = cyc.size();
    const std::size_t d = g.n() - k;
    tw::VertexSet on(g.n());
    for (auto x : cyc.vertices) on.set(x);
    tw::PrismOutcome r;
    std::size_t base_rungs = 0;
    if (k % 2 == 0) {
      r = tw::prism_ham_even(g, cyc);
      base_rungs = k;
    } else {
      // The seam triangle (cycle[k-2], cycle[k-1], cycle[0]) is already
      // (v2q, v2q+1, v1) for q = (k-1)/2.
      r = tw::prism_ham_odd(g, cyc, (k - 1) / 2);
      base_rungs = k - 1;
    }
    const auto* pc = std::get_if<tw::PrismCycle>(&r);
    if (!pc) continue;
    ++checked;
    if (pc->sequence.size() != 2 * g.n()) v.fail("length != 2n on " + tw::to_graph6(g));
    if (host_rungs(*pc, on) != base_rungs - d) v.fail("rung count off on " + tw::to_graph6(g));
  }
  if (v.ok) v.detail = std::to_string(checked) + " template instances";
  return v;
}

Verdict ac7_three_k2_free() {
  Verdict v;
  std::size_t used = 0;
  for (const Graph& g : tw::gen_3k2_corpus({.count = 300, .min_n = 5, .max_n = 10, .seed = 19})) {
    if (tw::find_induced_lk2(g, 3)) {
      v.fail("corpus graph has an induced 3K2: " + tw::to_graph6(g));
      continue;
    }
    if (!tw::is_k_connected(g, 2) || !tw::brute_force_toughness(g).at_least(Rational(1))) continue;
    ++used;
    const auto c = tw::brute_force_dominating_cycle(g);
    if (!c) {
      v.fail("no dominating cycle on " + tw::to_graph6(g));
      continue;
    }
    const auto r = tw::build_k_walk(g, tw::DominatingWitness{tw::CycleW{*c}}, 2);
    const auto* w = std::get_if<tw::KWalk>(&r);
    if (!w || !tw::check_k_walk(g, *w)) {
      v.fail("no verified 2-walk on " + tw::to_graph6(g));
      continue;
    }
    g_walks.push_back({g, 2});
  }
  if (used < kMinQualifying3K2) v.fail("only " + std::to_string(used) + " qualifying graphs");
  if (v.ok) v.detail = std::to_string(used) + " qualifying graphs";
  return v;
}

Verdict ac8_toughness_necessity() {
  Verdict v;
  for (const auto& [g, k] : g_walks) {
    if (!tw::brute_force_toughness(g).at_least(inverse(k))) {
      v.fail("toughness below 1/" + std::to_string(k) + " on " + tw::to_graph6(g));
    }
  }
  if (g_walks.empty()) v.fail("no walks collected");
  if (v.ok) v.detail = std::to_string(g_walks.size()) + " walks";
  return v;
}

Verdict ac9_large_split() {
  Verdict v;
  Graph g = tw::gen_split_graph(200, Rational(1, 2), 9);
  for (std::uint64_t seed = 10; !tw::is_connected(g); ++seed) {
    g = tw::gen_split_graph(200, Rational(1, 2), seed);
  }
  const auto t0 = std::chrono::steady_clock::now();
  const auto r = tw::find_edge_dominating_cycle(g);
  const double s = seconds_since(t0);
  if (!tw::check_edge_dominating(g, r.witness)) v.fail("witness rejected");
  if (r.trace.growth_steps() > g.m() * g.m()) v.fail("more than |E|^2 steps");
  if (s >= kLargeSplitSeconds) v.fail("took " + std::to_string(s) + " s");
  if (v.ok) {
    v.detail = "m=" + std::to_string(g.m()) + ", " + std::to_string(r.trace.growth_steps()) +
               " steps, " + std::to_string(s) + " s";
  }
  return v;
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Verdict()>>> criteria{
      {"AC1 net example", ac1_net},
      {"AC2 dominating cycle corpus", ac2_domcycle_corpus},
      {"AC3 triangle-preserving corpus", ac3_triangle_corpus},
      {"AC4 k-walk pipeline", ac4_kwalk_pipeline},
      {"AC5 prism driver", ac5_prism_driver},
      {"AC6 template identities", ac6_template_identities},
      {"AC7 3K2-free desk check", ac7_three_k2_free},
      {"AC8 toughness necessity", ac8_toughness_necessity},
      {"AC9 large split graph", ac9_large_split},
  };
  int failures = 0;
  for (const auto& [name, check] : criteria) {
    Verdict v;
    try {
      v = check();
    } catch (const std::exception& e) {
      v.fail(std::string("exception: ") + e.what());
    }
    std::printf("%s %s: %s\n", v.ok ? "PASS" : "FAIL", name, v.detail.c_str());
    std::fflush(stdout);
    if (!v.ok) ++failures;
  }
  return failures == 0 ? 0 : 1;
}
