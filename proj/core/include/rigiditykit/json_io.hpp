#pragma once

#include <nlohmann/json.hpp>
#include <string>

#include "rigiditykit/census.hpp"
#include "rigiditykit/l2me.hpp"
#include "rigiditykit/reports.hpp"

namespace rigiditykit {

// Insertion-ordered JSON keeps every serialization deterministic.
using Json = nlohmann::ordered_json;

Json graph_to_json(const LabeledGraph& g);
LabeledGraph graph_from_json(const Json& j);

Json edge_to_json(const Edge& e);
Edge edge_from_json(const Json& j);

Json descriptor_to_json(const ArtinSubgroupDescriptor& d);
ArtinSubgroupDescriptor descriptor_from_json(const Json& j);

Json chain_to_json(const RigidChain& chain);
RigidChain chain_from_json(const Json& j);

Json nonamenability_to_json(const NonamenabilityWitness& w);
NonamenabilityWitness nonamenability_from_json(const Json& j);

Json certificate_to_json(const RigidityCertificate& cert);
RigidityCertificate certificate_from_json(const Json& j);

Json check_report_to_json(const CertCheckReport& report);

Json artin_report_to_json(const ArtinTheoremReport& report);
Json coxeter_report_to_json(const CoxeterTheoremReport& report);

Json spec_to_json(const FreeProductSpec& spec);
FreeProductSpec spec_from_json(const Json& j);

Json betti_to_json(const BettiVector& b);

Json me_witness_to_json(const CommensurabilityWitness& w);
CommensurabilityWitness me_witness_from_json(const Json& j);
Json me_verdict_to_json(const MEVerdict& v);

Json action_verification_to_json(const ActionVerification& v);

Json census_to_json(int max_vertices, const std::vector<int>& labels,
                    const std::vector<CensusRow>& rows);

// dump with trailing newline; pretty = 2-space indent
std::string dump_json(const Json& j, bool pretty);

// parse with located error messages instead of exceptions from the library
Json parse_json_text(const std::string& text, const std::string& what);

}  // namespace rigiditykit
