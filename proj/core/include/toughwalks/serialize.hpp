#pragma once

#include <nlohmann/json.hpp>

#include "toughwalks/domcycle.hpp"
#include "toughwalks/kwalk.hpp"
#include "toughwalks/prism.hpp"
#include "toughwalks/recognition.hpp"
#include "toughwalks/toughness.hpp"

// JSON shapes shared by the CLI and by downstream tooling:
//   DominatingWitness     {"kind":"CycleW","vertices":[..]} | {"kind":"EdgeW","edge":[u,v]}
//                         | {"kind":"VertexW","vertex":v}
//   KWalk                 {"k":k,"edges":[[u,v,mult],..],"traversal":[v0,..,v0]}
//   PrismCycle            [[v,layer],..]
//   ToughnessCertificate  {"cutset":[..],"components":c,"bound":"p/q"}
//   GrowthTrace           [{"case":"C1","cycle_before":[..],"undominated_edge":[u,v],
//                           "x1_position":i,"cycle_after":[..],
//                           "undominated_before":t,"undominated_after":t'},..]
namespace toughwalks {

using Json = nlohmann::json;

Json to_json(const DominatingWitness& w);
Json to_json(const KWalk& w);
Json to_json(const PrismCycle& pc);
Json to_json(const ToughnessCertificate& cert);
Json to_json(const GrowthTrace& trace);
Json to_json(const InducedMatchingWitness& w);
Json to_json(const Toughness& t);

// Parsers throw Error{ParseError} on shape mismatch.
DominatingWitness dominating_witness_from_json(const Json& j);
KWalk kwalk_from_json(const Json& j);
PrismCycle prism_cycle_from_json(const Json& j);
ToughnessCertificate certificate_from_json(const Json& j);

}  // namespace toughwalks
