#include "toughwalks/serialize.hpp"

#include "toughwalks/error.hpp"

namespace toughwalks {

namespace {

Json edge_json(const Edge& e) { return Json::array({e.u, e.v}); }

[[noreturn]] void bad_shape(const std::string& what) {
  throw Error(ErrorCode::ParseError, "malformed JSON: " + what);
}

Vertex vertex_from(const Json& j) {
  if (!j.is_number_unsigned()) bad_shape("vertex ids must be non-negative integers");
  return j.get<Vertex>();
}

std::vector<Vertex> vertices_from(const Json& j) {
  if (!j.is_array()) bad_shape("expected an array of vertex ids");
  std::vector<Vertex> out;
  for (const Json& v : j) out.push_back(vertex_from(v));
  return out;
}

Edge edge_from(const Json& j) {
  if (!j.is_array() || j.size() != 2) bad_shape("edges are [u, v] pairs");
  return Edge(vertex_from(j[0]), vertex_from(j[1]));
}

}  // namespace

Json to_json(const DominatingWitness& w) {
  if (const auto* c = std::get_if<CycleW>(&w.value)) {
    return {{"kind", "CycleW"}, {"vertices", c->cycle.vertices}};
  }
  if (const auto* e = std::get_if<EdgeW>(&w.value)) {
    return {{"kind", "EdgeW"}, {"edge", edge_json(e->edge)}};
  }
  return {{"kind", "VertexW"}, {"vertex", std::get<VertexW>(w.value).vertex}};
}

Json to_json(const KWalk& w) {
  Json edges = Json::array();
  for (const WalkEdge& e : w.edges) {
    edges.push_back(Json::array({e.edge.u, e.edge.v, e.multiplicity}));
  }
  return {{"k", w.k}, {"edges", std::move(edges)}, {"traversal", w.traversal}};
}

Json to_json(const PrismCycle& pc) {
  Json out = Json::array();
  for (const PrismVertex& p : pc.sequence) out.push_back(Json::array({p.v, p.layer}));
  return out;
}

Json to_json(const ToughnessCertificate& cert) {
  return {{"cutset", cert.cutset},
          {"components", cert.components},
          {"bound", to_string(cert.bound())}};
}

Json to_json(const GrowthTrace& trace) {
  Json out = Json::array();
  for (const GrowthStep& s : trace.steps) {
    Json step = {{"case", std::string(to_string(s.tag))},
                 {"cycle_before", s.before},
                 {"cycle_after", s.after},
                 {"undominated_before", s.undominated_before},
                 {"undominated_after", s.undominated_after}};
    step["undominated_edge"] = s.undominated_edge ? edge_json(*s.undominated_edge) : Json(nullptr);
    step["x1_position"] = s.x1_position ? Json(*s.x1_position) : Json(nullptr);
    out.push_back(std::move(step));
  }
  return out;
}

Json to_json(const InducedMatchingWitness& w) {
  Json out = Json::array();
  for (const Edge& e : w.edges) out.push_back(edge_json(e));
  return out;
}

Json to_json(const Toughness& t) {
  Json out = {{"toughness", t.to_string()}};
  if (t.minimizer()) out["certificate"] = to_json(*t.minimizer());
  return out;
}

DominatingWitness dominating_witness_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("kind")) bad_shape("witness needs a 'kind'");
  const auto kind = j.at("kind").get<std::string>();
  if (kind == "CycleW" && j.contains("vertices")) {
    return DominatingWitness{CycleW{Cycle{vertices_from(j.at("vertices"))}}};
  }
  if (kind == "EdgeW" && j.contains("edge")) return DominatingWitness{EdgeW{edge_from(j.at("edge"))}};
  if (kind == "VertexW" && j.contains("vertex")) {
    return DominatingWitness{VertexW{vertex_from(j.at("vertex"))}};
  }
  bad_shape("unknown witness kind '" + kind + "'");
}

KWalk kwalk_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("k") || !j.contains("edges") || !j.contains("traversal")) {
    bad_shape("k-walk needs k, edges and traversal");
  }
  KWalk w;
  if (!j.at("k").is_number_unsigned()) bad_shape("k must be a positive integer");
  w.k = j.at("k").get<std::size_t>();
  for (const Json& e : j.at("edges")) {
    if (!e.is_array() || e.size() != 3 || !e[2].is_number_unsigned()) {
      bad_shape("walk edges are [u, v, multiplicity]");
    }
    w.edges.push_back({Edge(vertex_from(e[0]), vertex_from(e[1])), e[2].get<std::size_t>()});
  }
  w.traversal = vertices_from(j.at("traversal"));
  return w;
}

PrismCycle prism_cycle_from_json(const Json& j) {
  if (!j.is_array()) bad_shape("prism cycle is an array of [v, layer]");
  PrismCycle pc;
  for (const Json& p : j) {
    if (!p.is_array() || p.size() != 2 || !p[1].is_number_integer()) {
      bad_shape("prism vertices are [v, layer]");
    }
    pc.sequence.push_back({vertex_from(p[0]), p[1].get<int>()});
  }
  return pc;
}

ToughnessCertificate certificate_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("cutset") || !j.contains("components") ||
      !j.at("components").is_number_unsigned()) {
    bad_shape("certificate needs cutset and components");
  }
  return ToughnessCertificate{vertices_from(j.at("cutset")),
                              j.at("components").get<std::size_t>()};
}

}  // namespace toughwalks
