#include "cli.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>

#include <openssl/evp.h>

#include "CLI11.hpp"
#include "toughwalks/domcycle.hpp"
#include "toughwalks/error.hpp"
#include "toughwalks/generators.hpp"
#include "toughwalks/io.hpp"
#include "toughwalks/kwalk.hpp"
#include "toughwalks/oracles.hpp"
#include "toughwalks/prism.hpp"
#include "toughwalks/recognition.hpp"
#include "toughwalks/serialize.hpp"

namespace toughwalks::cli {

namespace {

constexpr const char* kBudgetEnv = "TOUGHWALKS_BUDGET";

struct Options {
  std::string input_path;
  std::string format = "edgelist";
  bool triangle = false;
  bool trace = false;
  long long k = 2;
  std::string witness_path;
  std::string oracle_kind;
  std::optional<std::uint64_t> budget;
  bool force = false;
  std::string family;
  std::uint64_t seed = 1;
  std::size_t n = 10;
  std::string density = "1/2";
  std::vector<std::size_t> parts{2, 2};
  std::size_t extra = 0;
};

// Thrown when a produced witness fails its own oracle check.
class SelfCheckFailed : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

struct Outcome {
  int code = kWitness;
  std::string result;  // witness | certificate | failure
  Json payload;
  std::optional<Json> trace;
};

std::string sha256_hex(const std::string& data) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int length = 0;
  EVP_Digest(data.data(), data.size(), digest, &length, EVP_sha256(), nullptr);
  std::ostringstream hex;
  for (unsigned int i = 0; i < length; ++i) {
    hex << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(digest[i]);
  }
  return hex.str();
}

std::string read_all(std::istream& in) {
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

std::string read_input(const Options& opt, std::istream& in) {
  if (opt.input_path.empty() || opt.input_path == "-") return read_all(in);
  std::ifstream file(opt.input_path, std::ios::binary);
  if (!file) throw Error(ErrorCode::InvalidArgument, "cannot open " + opt.input_path);
  return read_all(file);
}

Graph parse_graph(const Options& opt, const std::string& text) {
  if (opt.format == "graph6") return parse_graph6(text);
  return parse_edge_list(text);
}

std::uint64_t budget_or(const Options& opt, std::uint64_t fallback) {
  if (opt.budget) return *opt.budget;
  if (const char* env = std::getenv(kBudgetEnv)) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw Error(ErrorCode::InvalidArgument, std::string(kBudgetEnv) + " is not an integer");
    }
  }
  return fallback;
}

Rational parse_rational(const std::string& text) {
  const auto slash = text.find('/');
  try {
    if (slash == std::string::npos) return Rational(std::stoll(text));
    return Rational(std::stoll(text.substr(0, slash)), std::stoll(text.substr(slash + 1)));
  } catch (const std::exception&) {
    throw Error(ErrorCode::InvalidArgument, "bad rational '" + text + "'");
  }
}

void require(bool ok, const std::string& what) {
  if (!ok) throw SelfCheckFailed("self-verification failed: " + what);
}

Outcome certificate_outcome(const Graph& g, const ToughnessCertificate& cert,
                            const Rational& strict_bound, bool inclusive) {
  require(is_valid_certificate(g, cert), "certificate component count");
  require(inclusive ? cert.bound() <= strict_bound : cert.bound() < strict_bound,
          "certificate bound");
  return {kCertificate, "certificate", to_json(cert), std::nullopt};
}

Outcome cmd_check_2k2free(const Graph& g) {
  const auto result = is_2k2_free(g);
  if (result.free) return {kWitness, "witness", Json{{"2k2_free", true}}, std::nullopt};
  require(is_induced_matching(g, *result.witness), "induced 2K2 witness");
  return {kCertificate, "certificate",
          Json{{"2k2_free", false}, {"induced_2k2", to_json(*result.witness)}}, std::nullopt};
}

Outcome cmd_dom_cycle(const Graph& g, const Options& opt, std::ostream& err) {
  Outcome out;
  out.result = "witness";
  GrowthTrace trace;
  if (opt.triangle) {
    const auto t = find_triangle(g);
    if (!t) throw Error(ErrorCode::TriangleMissing, "graph has no triangle");
    auto found = find_edge_dominating_cycle_with_triangle(g, *t);
    require(check_edge_dominating(g, DominatingWitness{CycleW{found.cycle}}), "edge domination");
    require(triangle_at_seam(g, found.cycle.vertices), "consecutive triangle");
    out.payload = to_json(DominatingWitness{CycleW{found.cycle}});
    const auto k = found.cycle.size();
    out.payload["triangle"] = Json::array(
        {found.cycle.vertices[k - 2], found.cycle.vertices[k - 1], found.cycle.vertices[0]});
    trace = std::move(found.trace);
  } else {
    auto found = find_edge_dominating_cycle(g);
    require(check_edge_dominating(g, found.witness), "edge domination");
    out.payload = to_json(found.witness);
    trace = std::move(found.trace);
  }
  err << "dom-cycle: " << trace.growth_steps() << " growth steps\n";
  if (opt.trace) out.trace = to_json(trace);
  return out;
}

Outcome cmd_kwalk(const Graph& g, const Options& opt) {
  if (opt.k < 2) throw Error(ErrorCode::KTooSmall, "k-walks are built for k >= 2 only");
  const auto k = static_cast<std::size_t>(opt.k);
  const auto witness = find_edge_dominating_cycle(g).witness;
  auto built = build_k_walk(g, witness, k);
  if (auto* cert = std::get_if<ToughnessCertificate>(&built)) {
    return certificate_outcome(g, *cert, Rational(1, static_cast<std::int64_t>(k - 1)), false);
  }
  const auto& walk = std::get<KWalk>(built);
  require(check_k_walk(g, walk), "k-walk invariants");
  Outcome out{kWitness, "witness", to_json(walk), std::nullopt};
  out.payload["dominating_witness"] = to_json(witness);
  return out;
}

Outcome cmd_prism_ham(const Graph& g, const Options& opt) {
  auto result = prism_hamiltonian(g, budget_or(opt, kDefaultHamiltonianBudget));
  if (auto* pc = std::get_if<PrismCycle>(&result)) {
    require(check_prism_cycle(g, *pc), "prism cycle");
    return {kWitness, "witness", to_json(*pc), std::nullopt};
  }
  const auto& failure = std::get<PrismFailure>(result);
  if (const auto* cert = std::get_if<ToughnessCertificate>(&failure.reason)) {
    return certificate_outcome(g, *cert, Rational(1), true);
  }
  const auto nodes = std::get<ExactSearchExhausted>(failure.reason).nodes;
  return {kCertificate, "failure", Json{{"reason", "ExactSearchExhausted"}, {"nodes", nodes}},
          std::nullopt};
}

Outcome cmd_oracle(const Graph& g, const Options& opt) {
  if (opt.oracle_kind == "toughness") {
    const auto t = brute_force_toughness(g, opt.force);
    if (t.minimizer()) require(is_valid_certificate(g, *t.minimizer()), "toughness minimizer");
    return {kWitness, "witness", to_json(t), std::nullopt};
  }
  if (opt.oracle_kind == "ham") {
    const auto found = brute_force_hamiltonian(g, budget_or(opt, 10'000'000));
    if (!found.cycle) {
      return {kCertificate, "failure", Json{{"hamiltonian", false}, {"nodes", found.nodes}},
              std::nullopt};
    }
    require(is_cycle_in(g, *found.cycle) && found.cycle->size() == g.n(), "Hamiltonian cycle");
    return {kWitness, "witness", Json{{"hamiltonian", true}, {"cycle", found.cycle->vertices}},
            std::nullopt};
  }
  const auto found = brute_force_dominating_cycle(g, budget_or(opt, 50'000'000));
  if (!found) {
    return {kCertificate, "failure", Json{{"dominating_cycle", nullptr}}, std::nullopt};
  }
  const DominatingWitness w{CycleW{*found}};
  require(check_edge_dominating(g, w), "dominating cycle");
  return {kWitness, "witness", to_json(w), std::nullopt};
}

// Picks the checker from the document shape: a run report carries the
// command that produced its payload.
Outcome cmd_verify(const Graph& g, const Options& opt) {
  std::ifstream file(opt.witness_path, std::ios::binary);
  if (!file) throw Error(ErrorCode::InvalidArgument, "cannot open " + opt.witness_path);
  Json doc;
  try {
    doc = Json::parse(read_all(file));
  } catch (const Json::parse_error& e) {
    throw Error(ErrorCode::ParseError, std::string("witness file: ") + e.what());
  }
  std::string kind;
  Json payload = doc;
  if (doc.is_object() && doc.contains("payload")) {
    payload = doc.at("payload");
    const auto command = doc.value("command", std::string());
    const auto result = doc.value("result", std::string());
    if (result == "certificate" && payload.is_object() && payload.contains("cutset")) {
      kind = "ToughnessCertificate";
    } else if (command == "dom-cycle") {
      kind = "DominatingWitness";
    } else if (command == "kwalk") {
      kind = "KWalk";
    } else if (command == "prism-ham") {
      kind = "PrismCycle";
    }
  }
  if (kind.empty()) {
    if (payload.is_array()) {
      kind = "PrismCycle";
    } else if (payload.is_object() && payload.contains("traversal")) {
      kind = "KWalk";
    } else if (payload.is_object() && payload.contains("cutset")) {
      kind = "ToughnessCertificate";
    } else if (payload.is_object() && payload.contains("kind")) {
      kind = "DominatingWitness";
    } else {
      throw Error(ErrorCode::ParseError, "unrecognised witness document");
    }
  }

  bool valid = false;
  if (kind == "DominatingWitness") {
    valid = check_edge_dominating(g, dominating_witness_from_json(payload));
  } else if (kind == "KWalk") {
    valid = check_k_walk(g, kwalk_from_json(payload));
  } else if (kind == "PrismCycle") {
    valid = check_prism_cycle(g, prism_cycle_from_json(payload));
  } else {
    valid = is_valid_certificate(g, certificate_from_json(payload));
  }
  return {valid ? kWitness : kCertificate, valid ? "witness" : "failure",
          Json{{"verified", valid}, {"kind", kind}}, std::nullopt};
}

Outcome cmd_gen(const Options& opt, std::ostream& out) {
  Graph g;
  const auto& f = opt.family;
  if (f == "net") {
    g = fixture_net();
  } else if (f == "split") {
    g = gen_split_graph(opt.n, parse_rational(opt.density), opt.seed);
  } else if (f == "multipartite") {
    g = gen_complete_multipartite(opt.parts);
  } else if (f == "perturbed") {
    g = gen_2k2_free_perturbed(gen_split_graph(opt.n, parse_rational(opt.density), opt.seed),
                               opt.extra, opt.seed + 1);
  } else if (f == "path") {
    g = gen_path(opt.n);
  } else if (f == "cycle") {
    g = gen_cycle(opt.n);
  } else if (f == "complete") {
    g = gen_complete(opt.n);
  } else if (f == "star") {
    g = gen_star(opt.n);
  } else {
    throw Error(ErrorCode::InvalidArgument, "unknown family '" + f + "'");
  }
  if (opt.format == "graph6") {
    out << to_graph6(g) << "\n";
  } else {
    out << to_edge_list(g);
  }
  return {kWitness, "graph", Json(), std::nullopt};
}

Json error_json(const std::string& command, const std::string& code, const std::string& message) {
  return {{"command", command}, {"error", {{"code", code}, {"message", message}}}};
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  Options opt;
  CLI::App app{"Edge-dominating cycles, k-walks and prism Hamiltonicity for 2K2-free graphs",
               "toughwalks"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--in", opt.input_path, "Input graph file (default: standard input)");
  app.add_option("--format", opt.format, "Graph format")
      ->check(CLI::IsMember({"edgelist", "graph6"}));

  auto* check = app.add_subcommand("check-2k2free", "Search for an induced 2K2");
  auto* dom = app.add_subcommand("dom-cycle", "Build an edge-dominating cycle");
  dom->add_flag("--triangle", opt.triangle, "Keep a triangle on three consecutive vertices");
  dom->add_flag("--trace", opt.trace, "Include the growth trace");
  auto* kwalk = app.add_subcommand("kwalk", "Build a k-walk or a toughness certificate");
  kwalk->add_option("--k", opt.k, "Walk parameter (>= 2)")->required();
  auto* prism_cmd = app.add_subcommand("prism-ham", "Hamiltonian cycle in the prism");
  prism_cmd->add_option("--budget", opt.budget, "Node budget for the triangle-free fallback");
  auto* verify = app.add_subcommand("verify", "Re-check a witness or certificate");
  verify->add_option("witness", opt.witness_path, "Witness JSON file")->required();
  auto* oracle = app.add_subcommand("oracle", "Run an exhaustive oracle");
  oracle->add_option("kind", opt.oracle_kind, "toughness | ham | domcycle")
      ->required()
      ->check(CLI::IsMember({"toughness", "ham", "domcycle"}));
  oracle->add_option("--budget", opt.budget, "Search node budget");
  oracle->add_flag("--force", opt.force, "Lift the vertex-count guard of the toughness oracle");
  auto* gen = app.add_subcommand("gen", "Generate a graph");
  gen->add_option("family", opt.family,
                  "net | split | multipartite | perturbed | path | cycle | complete | star")
      ->required();
  gen->add_option("--seed", opt.seed, "Random seed");
  gen->add_option("--n", opt.n, "Vertex count (leaf count for star)");
  gen->add_option("--density", opt.density, "Cross-edge density as p/q");
  gen->add_option("--parts", opt.parts, "Part sizes for multipartite")->delimiter(',');
  gen->add_option("--extra", opt.extra, "Extra edges for perturbed");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    out << error_json("", "UsageError", e.what()).dump() << "\n";
    return kInputError;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  try {
    if (gen->parsed()) return cmd_gen(opt, out).code;

    const std::string text = read_input(opt, in);
    const Graph g = parse_graph(opt, text);
    err << command << ": n=" << g.n() << " m=" << g.m() << "\n";

    const auto started = std::chrono::steady_clock::now();
    Outcome outcome;
    if (check->parsed()) {
      outcome = cmd_check_2k2free(g);
    } else if (dom->parsed()) {
      outcome = cmd_dom_cycle(g, opt, err);
    } else if (kwalk->parsed()) {
      outcome = cmd_kwalk(g, opt);
    } else if (prism_cmd->parsed()) {
      outcome = cmd_prism_ham(g, opt);
    } else if (verify->parsed()) {
      outcome = cmd_verify(g, opt);
    } else {
      outcome = cmd_oracle(g, opt);
    }
    const std::chrono::duration<double, std::milli> elapsed =
        std::chrono::steady_clock::now() - started;

    Json report = {{"command", command},
                   {"input_digest", "sha256:" + sha256_hex(to_graph6(g))},
                   {"result", outcome.result},
                   {"payload", outcome.payload},
                   {"timing_ms", elapsed.count()}};
    if (outcome.trace) report["trace"] = *outcome.trace;
    out << report.dump() << "\n";
    return outcome.code;
  } catch (const Not2K2FreeError& e) {
    Json j = error_json(command, "Not2K2Free", e.what());
    j["error"]["induced_2k2"] = to_json(e.witness());
    out << j.dump() << "\n";
    return kInputError;
  } catch (const Error& e) {
    out << error_json(command, std::string(to_string(e.code())), e.what()).dump() << "\n";
    return e.code() == ErrorCode::BudgetExceeded ? kBudget : kInputError;
  } catch (const SelfCheckFailed& e) {
    out << error_json(command, "SelfCheckFailed", e.what()).dump() << "\n";
    err << e.what() << "\n";
    return kInputError;
  }
}

}  // namespace toughwalks::cli
