#include "rigiditykit/json_io.hpp"

#include <algorithm>

namespace rigiditykit {

namespace {

const Json& require(const Json& j, const char* key, const std::string& what) {
  if (!j.is_object()) fail(Errc::invalid_input, what + ": expected an object");
  auto it = j.find(key);
  if (it == j.end()) fail(Errc::invalid_input, what + ": missing key '" + key + "'");
  return *it;
}

std::string require_string(const Json& j, const char* key, const std::string& what) {
  const Json& v = require(j, key, what);
  if (!v.is_string()) fail(Errc::invalid_input, what + ": '" + key + "' must be a string");
  return v.get<std::string>();
}

bool require_bool(const Json& j, const char* key, const std::string& what) {
  const Json& v = require(j, key, what);
  if (!v.is_boolean()) fail(Errc::invalid_input, what + ": '" + key + "' must be a boolean");
  return v.get<bool>();
}

long long require_integer(const Json& v, const std::string& what) {
  if (!v.is_number_integer()) fail(Errc::invalid_input, what + ": expected an integer");
  return v.get<long long>();
}

const Json& require_array(const Json& j, const char* key, const std::string& what) {
  const Json& v = require(j, key, what);
  if (!v.is_array()) fail(Errc::invalid_input, what + ": '" + key + "' must be an array");
  return v;
}

std::vector<std::string> string_list(const Json& v, const std::string& what) {
  if (!v.is_array()) fail(Errc::invalid_input, what + ": expected an array of strings");
  std::vector<std::string> out;
  for (const Json& item : v) {
    if (!item.is_string()) fail(Errc::invalid_input, what + ": expected an array of strings");
    out.push_back(item.get<std::string>());
  }
  return out;
}

BigInt bigint_from(const Json& v, const std::string& what) {
  if (!v.is_string()) fail(Errc::invalid_input, what + ": expected a decimal string");
  try {
    return BigInt(v.get<std::string>());
  } catch (const std::exception&) {
    fail(Errc::invalid_input, what + ": not a decimal integer");
  }
}

Json word_json(const Word& w) { return w.to_string(); }

Word word_from(const Json& v, const std::string& what) {
  if (!v.is_string()) fail(Errc::invalid_input, what + ": expected a word string");
  return Word::from_string(v.get<std::string>());
}

Json delta_to_json(const DeltaElement& d) {
  Json j;
  j["edge"] = edge_to_json(d.edge);
  j["word"] = word_json(d.word);
  return j;
}

DeltaElement delta_from_json(const Json& j, const std::string& what) {
  DeltaElement d;
  d.edge = edge_from_json(require(j, "edge", what));
  d.word = word_from(require(j, "word", what), what);
  return d;
}

}  // namespace

Json edge_to_json(const Edge& e) { return Json::array({e.u, e.v, e.m}); }

Edge edge_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 3 || !j[0].is_string() || !j[1].is_string())
    fail(Errc::invalid_input, "edge: expected [u, v, m]");
  const long long m = require_integer(j[2], "edge label");
  if (m < 2 || m > 1'000'000) fail(Errc::invalid_input, "edge: label out of range");
  return normalized_edge(j[0].get<std::string>(), j[1].get<std::string>(),
                         static_cast<int>(m));
}

Json graph_to_json(const LabeledGraph& g) {
  Json j;
  j["kind"] = kind_name(g.kind());
  j["vertices"] = g.vertex_names();
  Json edges = Json::array();
  for (const Edge& e : g.edge_list()) edges.push_back(edge_to_json(e));
  j["edges"] = edges;
  return j;
}

LabeledGraph graph_from_json(const Json& j) {
  const std::string kind = require_string(j, "kind", "graph");
  GraphKind k;
  if (kind == "artin")
    k = GraphKind::artin;
  else if (kind == "coxeter")
    k = GraphKind::coxeter;
  else
    fail(Errc::invalid_input, "graph: kind must be 'artin' or 'coxeter'");
  const auto vertices = string_list(require_array(j, "vertices", "graph"), "graph vertices");
  std::vector<EdgeInput> edges;
  for (const Json& e : require_array(j, "edges", "graph")) {
    const Edge parsed = edge_from_json(e);
    edges.push_back(EdgeInput{parsed.u, parsed.v, parsed.m});
  }
  return LabeledGraph(k, vertices, edges);
}

Json descriptor_to_json(const ArtinSubgroupDescriptor& d) {
  Json j;
  j["kind"] = descriptor_kind_name(d.kind);
  switch (d.kind) {
    case DescriptorKind::vertex_set:
      j["vertices"] = d.vertices;
      if (d.star_center) j["star_center"] = *d.star_center;
      break;
    case DescriptorKind::edge_group:
      j["edge"] = edge_to_json(d.edge);
      break;
    case DescriptorKind::vertex_delta: {
      j["center"] = d.center;
      Json edges = Json::array();
      for (const Edge& e : d.incident_edges) edges.push_back(edge_to_json(e));
      j["incident_edges"] = edges;
      break;
    }
  }
  Json gens = Json::array();
  for (const Word& w : d.generators()) gens.push_back(word_json(w));
  j["generators"] = gens;
  return j;
}

ArtinSubgroupDescriptor descriptor_from_json(const Json& j) {
  const std::string kind = require_string(j, "kind", "descriptor");
  if (kind == "vertex_set") {
    std::optional<std::string> center;
    if (j.contains("star_center")) center = require_string(j, "star_center", "descriptor");
    return ArtinSubgroupDescriptor::make_vertex_set(
        string_list(require_array(j, "vertices", "descriptor"), "descriptor vertices"),
        std::move(center));
  }
  if (kind == "edge_group")
    return ArtinSubgroupDescriptor::make_edge_group(
        edge_from_json(require(j, "edge", "descriptor")));
  if (kind == "vertex_delta") {
    ArtinSubgroupDescriptor d;
    d.kind = DescriptorKind::vertex_delta;
    d.center = require_string(j, "center", "descriptor");
    for (const Json& e : require_array(j, "incident_edges", "descriptor"))
      d.incident_edges.push_back(edge_from_json(e));
    std::sort(d.incident_edges.begin(), d.incident_edges.end());
    return d;
  }
  fail(Errc::invalid_input, "descriptor: unknown kind '" + kind + "'");
}

Json chain_to_json(const RigidChain& chain) {
  Json j;
  j["family"] = "artin";
  Json entries = Json::array();
  for (const auto& e : chain.entries) entries.push_back(descriptor_to_json(e));
  j["entries"] = entries;
  Json links = Json::array();
  for (const ChainLink& link : chain.links) {
    Json l;
    if (link.type == ChainLink::Type::vertex) {
      l["type"] = "vertex";
      l["vertex"] = link.vertex;
    } else {
      l["type"] = "delta";
      l["edge"] = edge_to_json(link.delta.edge);
      l["word"] = word_json(link.delta.word);
    }
    links.push_back(l);
  }
  j["links"] = links;
  return j;
}

RigidChain chain_from_json(const Json& j) {
  if (j.contains("family") && require_string(j, "family", "chain") != "artin")
    fail(Errc::invalid_input, "chain: family must be 'artin'");
  RigidChain chain;
  for (const Json& e : require_array(j, "entries", "chain"))
    chain.entries.push_back(descriptor_from_json(e));
  for (const Json& l : require_array(j, "links", "chain")) {
    const std::string type = require_string(l, "type", "chain link");
    if (type == "vertex")
      chain.links.push_back(ChainLink::of_vertex(require_string(l, "vertex", "chain link")));
    else if (type == "delta")
      chain.links.push_back(ChainLink::of_delta(delta_from_json(l, "chain link")));
    else
      fail(Errc::invalid_input, "chain link: unknown type '" + type + "'");
  }
  return chain;
}

Json nonamenability_to_json(const NonamenabilityWitness& w) {
  Json j;
  j["center"] = w.center;
  j["u"] = w.u;
  j["w"] = w.w;
  j["m_uv"] = w.m_uv;
  j["m_vw"] = w.m_vw;
  j["m_uw"] = w.m_uw == 0 ? Json(nullptr) : Json(w.m_uw);
  j["case"] = witness_case_name(w.kind);
  Json deltas = Json::array();
  for (const DeltaElement& d : w.deltas) deltas.push_back(delta_to_json(d));
  j["deltas"] = deltas;
  if (w.kind == WitnessCase::spherical_triple) j["exponent"] = w.exponent;
  return j;
}

NonamenabilityWitness nonamenability_from_json(const Json& j) {
  NonamenabilityWitness w;
  w.center = require_string(j, "center", "nonamenability witness");
  w.u = require_string(j, "u", "nonamenability witness");
  w.w = require_string(j, "w", "nonamenability witness");
  w.m_uv = static_cast<int>(
      require_integer(require(j, "m_uv", "nonamenability witness"), "m_uv"));
  w.m_vw = static_cast<int>(
      require_integer(require(j, "m_vw", "nonamenability witness"), "m_vw"));
  const Json& muw = require(j, "m_uw", "nonamenability witness");
  w.m_uw = muw.is_null() ? 0 : static_cast<int>(require_integer(muw, "m_uw"));
  const std::string kind = require_string(j, "case", "nonamenability witness");
  if (kind == "two_dimensional")
    w.kind = WitnessCase::two_dimensional;
  else if (kind == "commuting_pair")
    w.kind = WitnessCase::commuting_pair;
  else if (kind == "spherical_triple")
    w.kind = WitnessCase::spherical_triple;
  else
    fail(Errc::invalid_input, "nonamenability witness: unknown case '" + kind + "'");
  for (const Json& d : require_array(j, "deltas", "nonamenability witness"))
    w.deltas.push_back(delta_from_json(d, "nonamenability witness delta"));
  if (j.contains("exponent")) w.exponent = require_string(j, "exponent", "nonamenability witness");
  return w;
}

namespace {

Json scope_to_json(const ScopeDescription& s) {
  Json j;
  j["family"] = kind_name(s.family);
  if (s.family == GraphKind::coxeter) {
    j["vertices"] = s.vertices;
  } else {
    Json ds = Json::array();
    for (const auto& d : s.descriptors) ds.push_back(descriptor_to_json(d));
    j["descriptors"] = ds;
  }
  return j;
}

ScopeDescription scope_from_json(const Json& j) {
  ScopeDescription s;
  const std::string family = require_string(j, "family", "scope");
  if (family == "coxeter") {
    s.family = GraphKind::coxeter;
    s.vertices = string_list(require_array(j, "vertices", "scope"), "scope vertices");
  } else if (family == "artin") {
    s.family = GraphKind::artin;
    for (const Json& d : require_array(j, "descriptors", "scope"))
      s.descriptors.push_back(descriptor_from_json(d));
  } else {
    fail(Errc::invalid_input, "scope: family must be 'artin' or 'coxeter'");
  }
  return s;
}

Json infinite_witness_to_json(const InfiniteSubgroupWitness& w) {
  Json j;
  j["kind"] = infinite_witness_kind_name(w.kind);
  switch (w.kind) {
    case InfiniteWitnessKind::non_spherical_subset:
      j["subset"] = w.subset;
      break;
    case InfiniteWitnessKind::vertex_generator:
      j["vertex"] = w.vertex;
      break;
    case InfiniteWitnessKind::cyclic_generator:
      j["word"] = word_json(w.word);
      j["delta"] = w.delta ? delta_to_json(*w.delta) : Json(nullptr);
      break;
  }
  return j;
}

InfiniteSubgroupWitness infinite_witness_from_json(const Json& j) {
  const std::string kind = require_string(j, "kind", "witness");
  if (kind == "non_spherical_subset")
    return InfiniteSubgroupWitness::of_subset(
        string_list(require_array(j, "subset", "witness"), "witness subset"));
  if (kind == "vertex_generator")
    return InfiniteSubgroupWitness::of_vertex(require_string(j, "vertex", "witness"));
  if (kind == "cyclic_generator") {
    const Json& delta = require(j, "delta", "witness");
    if (!delta.is_null()) return InfiniteSubgroupWitness::of_delta(delta_from_json(delta, "witness delta"));
    InfiniteSubgroupWitness w;
    w.kind = InfiniteWitnessKind::cyclic_generator;
    w.word = word_from(require(j, "word", "witness"), "witness word");
    return w;
  }
  fail(Errc::invalid_input, "witness: unknown kind '" + kind + "'");
}

}  // namespace

Json certificate_to_json(const RigidityCertificate& cert) {
  Json j;
  j["rule"] = cert_rule_name(cert.rule);
  j["scope"] = scope_to_json(cert.scope);
  switch (cert.rule) {
    case CertRule::product_split:
      j["left"] = cert.left;
      j["right"] = cert.right;
      break;
    case CertRule::infinite_center:
      j["subgroup"] = cert.subgroup ? descriptor_to_json(*cert.subgroup) : Json(nullptr);
      j["center_witness"] = word_json(cert.center_witness);
      j["nonamenability"] =
          cert.nonamenability ? nonamenability_to_json(*cert.nonamenability) : Json(nullptr);
      break;
    case CertRule::join:
      j["a"] = cert.a ? certificate_to_json(*cert.a) : Json(nullptr);
      j["b"] = cert.b ? certificate_to_json(*cert.b) : Json(nullptr);
      j["witness"] = cert.witness ? infinite_witness_to_json(*cert.witness) : Json(nullptr);
      break;
    case CertRule::wq_normalize:
      j["inner"] = cert.inner ? certificate_to_json(*cert.inner) : Json(nullptr);
      j["normalizers"] = cert.normalizers;
      j["witness_form"] = wq_witness_form_name(cert.witness_form);
      j["witness_subset"] = cert.witness_subset;
      break;
  }
  return j;
}

RigidityCertificate certificate_from_json(const Json& j) {
  RigidityCertificate c;
  const std::string rule = require_string(j, "rule", "certificate");
  c.scope = scope_from_json(require(j, "scope", "certificate"));
  if (rule == "product_split") {
    c.rule = CertRule::product_split;
    c.left = string_list(require_array(j, "left", "certificate"), "certificate left");
    c.right = string_list(require_array(j, "right", "certificate"), "certificate right");
  } else if (rule == "infinite_center") {
    c.rule = CertRule::infinite_center;
    const Json& subgroup = require(j, "subgroup", "certificate");
    if (!subgroup.is_null()) c.subgroup = descriptor_from_json(subgroup);
    c.center_witness = word_from(require(j, "center_witness", "certificate"), "center witness");
    const Json& w = require(j, "nonamenability", "certificate");
    if (!w.is_null()) c.nonamenability = nonamenability_from_json(w);
  } else if (rule == "join") {
    c.rule = CertRule::join;
    const Json& a = require(j, "a", "certificate");
    const Json& b = require(j, "b", "certificate");
    if (!a.is_null()) c.a = std::make_shared<RigidityCertificate>(certificate_from_json(a));
    if (!b.is_null()) c.b = std::make_shared<RigidityCertificate>(certificate_from_json(b));
    const Json& w = require(j, "witness", "certificate");
    if (!w.is_null()) c.witness = infinite_witness_from_json(w);
  } else if (rule == "wq_normalize") {
    c.rule = CertRule::wq_normalize;
    const Json& inner = require(j, "inner", "certificate");
    if (!inner.is_null())
      c.inner = std::make_shared<RigidityCertificate>(certificate_from_json(inner));
    c.normalizers =
        string_list(require_array(j, "normalizers", "certificate"), "certificate normalizers");
    const std::string form = require_string(j, "witness_form", "certificate");
    if (form == "perp")
      c.witness_form = WqWitnessForm::perp;
    else if (form == "component")
      c.witness_form = WqWitnessForm::component;
    else
      fail(Errc::invalid_input, "certificate: unknown witness form '" + form + "'");
    c.witness_subset =
        string_list(require_array(j, "witness_subset", "certificate"), "witness subset");
  } else {
    fail(Errc::invalid_input, "certificate: unknown rule '" + rule + "'");
  }
  return c;
}

Json check_report_to_json(const CertCheckReport& report) {
  Json j;
  j["valid"] = report.valid;
  j["coverage_ok"] = report.coverage_ok;
  j["coverage_detail"] = report.coverage_detail;
  Json nodes = Json::array();
  for (const NodeCheck& n : report.nodes) {
    Json node;
    node["path"] = n.path;
    node["rule"] = cert_rule_name(n.rule);
    node["ok"] = n.ok;
    node["detail"] = n.detail;
    nodes.push_back(node);
  }
  j["nodes"] = nodes;
  return j;
}

Json artin_report_to_json(const ArtinTheoremReport& report) {
  Json j;
  j["kind"] = "artin_theorem_report";
  j["component_count"] = report.component_count;
  Json comps = Json::array();
  for (const auto& c : report.components) {
    Json comp;
    comp["vertices"] = c.vertices;
    comp["complete_all_two"] = c.complete_all_two;
    comp["chain"] = c.chain ? chain_to_json(*c.chain) : Json(nullptr);
    comp["certificate"] = c.certificate ? certificate_to_json(*c.certificate) : Json(nullptr);
    comps.push_back(comp);
  }
  j["components"] = comps;
  j["all_components_certifiable"] = report.all_components_certifiable;
  return j;
}

Json coxeter_report_to_json(const CoxeterTheoremReport& report) {
  Json j;
  j["kind"] = "coxeter_theorem_report";
  j["component_count"] = report.component_count;
  Json comps = Json::array();
  for (const auto& c : report.components) {
    Json comp;
    comp["vertices"] = c.vertices;
    comp["amenable"] = c.amenable;
    comp["in_t"] = c.in_t;
    comp["relatively_hyperbolic"] = c.relatively_hyperbolic;
    comp["certificate"] = c.certificate ? certificate_to_json(*c.certificate) : Json(nullptr);
    comps.push_back(comp);
  }
  j["components"] = comps;
  j["all_components_certifiable"] = report.all_components_certifiable;
  return j;
}

Json spec_to_json(const FreeProductSpec& spec) {
  Json j;
  Json factors = Json::array();
  for (const auto& tuple : spec.factors) factors.push_back(tuple);
  j["factors"] = factors;
  return j;
}

FreeProductSpec spec_from_json(const Json& j) {
  std::vector<std::vector<long long>> factors;
  for (const Json& tuple : require_array(j, "factors", "spec")) {
    if (!tuple.is_array()) fail(Errc::invalid_input, "spec: each factor must be an array");
    std::vector<long long> t;
    for (const Json& a : tuple) t.push_back(require_integer(a, "spec rank"));
    factors.push_back(std::move(t));
  }
  return FreeProductSpec::from_factors(std::move(factors));
}

Json betti_to_json(const BettiVector& b) {
  Json values = Json::object();
  for (const auto& [m, v] : b.values) values[std::to_string(m)] = v.str();
  Json j;
  j["values"] = values;
  return j;
}

namespace {

Json kurosh_to_json(const KuroshDecomposition& k) {
  Json counts = Json::object();
  for (const auto& [m, v] : k.vertex_counts) counts[std::to_string(m)] = v.str();
  Json j;
  j["vertex_counts"] = counts;
  j["free_rank"] = k.free_rank.str();
  return j;
}

KuroshDecomposition kurosh_from_json(const Json& j) {
  KuroshDecomposition k;
  const Json& counts = require(j, "vertex_counts", "kurosh");
  if (!counts.is_object()) fail(Errc::invalid_input, "kurosh: vertex_counts must be an object");
  for (const auto& [key, value] : counts.items()) {
    try {
      k.vertex_counts[std::stoi(key)] = bigint_from(value, "kurosh count");
    } catch (const Error&) {
      throw;
    } catch (const std::exception&) {
      fail(Errc::invalid_input, "kurosh: bad degree key '" + key + "'");
    }
  }
  k.free_rank = bigint_from(require(j, "free_rank", "kurosh"), "kurosh free rank");
  return k;
}

std::vector<BigInt> bigint_list(const Json& v, const std::string& what) {
  if (!v.is_array()) fail(Errc::invalid_input, what + ": expected an array");
  std::vector<BigInt> out;
  for (const Json& item : v) out.push_back(bigint_from(item, what));
  return out;
}

Json ratio_to_json(const Rational& r) {
  Json j;
  j["numerator"] = r.num.str();
  j["denominator"] = r.den.str();
  return j;
}

}  // namespace

Json me_witness_to_json(const CommensurabilityWitness& w) {
  Json j;
  j["ratio"] = ratio_to_json(w.ratio);
  j["x"] = w.x.str();
  j["index_1"] = w.index_1.str();
  j["index_2"] = w.index_2.str();
  Json h1 = Json::array(), h2 = Json::array();
  for (const BigInt& h : w.factor_indices_1) h1.push_back(h.str());
  for (const BigInt& h : w.factor_indices_2) h2.push_back(h.str());
  j["factor_indices_1"] = h1;
  j["factor_indices_2"] = h2;
  j["kurosh_1"] = kurosh_to_json(w.kurosh_1);
  j["kurosh_2"] = kurosh_to_json(w.kurosh_2);
  return j;
}

CommensurabilityWitness me_witness_from_json(const Json& j) {
  CommensurabilityWitness w;
  const Json& ratio = require(j, "ratio", "witness");
  w.ratio.num = bigint_from(require(ratio, "numerator", "witness ratio"), "witness ratio");
  w.ratio.den = bigint_from(require(ratio, "denominator", "witness ratio"), "witness ratio");
  w.x = bigint_from(require(j, "x", "witness"), "witness x");
  w.index_1 = bigint_from(require(j, "index_1", "witness"), "witness index");
  w.index_2 = bigint_from(require(j, "index_2", "witness"), "witness index");
  w.factor_indices_1 = bigint_list(require(j, "factor_indices_1", "witness"), "factor indices");
  w.factor_indices_2 = bigint_list(require(j, "factor_indices_2", "witness"), "factor indices");
  w.kurosh_1 = kurosh_from_json(require(j, "kurosh_1", "witness"));
  w.kurosh_2 = kurosh_from_json(require(j, "kurosh_2", "witness"));
  return w;
}

Json me_verdict_to_json(const MEVerdict& v) {
  Json j;
  j["proportional"] = v.proportional;
  j["ratio"] = v.ratio ? ratio_to_json(*v.ratio) : Json(nullptr);
  j["statement"] = v.statement;
  j["witness"] = v.witness ? me_witness_to_json(*v.witness) : Json(nullptr);
  return j;
}

Json action_verification_to_json(const ActionVerification& v) {
  auto side = [](const ActionSideReport& s) {
    Json j;
    j["points"] = s.points;
    Json factors = Json::array();
    for (const auto& f : s.factors) {
      Json fj;
      fj["tuple"] = f.tuple;
      fj["index"] = f.index;
      fj["orbit_count"] = f.orbit_count;
      factors.push_back(fj);
    }
    j["factors"] = factors;
    j["edge_count"] = s.edge_count;
    j["vertex_count"] = s.vertex_count;
    j["rank"] = s.rank;
    Json groups = Json::object();
    for (const auto& [m, count] : s.vertex_groups) groups[std::to_string(m)] = count;
    j["vertex_groups"] = groups;
    j["connected"] = s.connected;
    j["repair_swaps"] = s.repair_swaps;
    return j;
  };
  Json j;
  j["side1"] = side(v.side1);
  j["side2"] = side(v.side2);
  return j;
}

Json census_to_json(int max_vertices, const std::vector<int>& labels,
                    const std::vector<CensusRow>& rows) {
  Json j;
  j["max_vertices"] = max_vertices;
  j["labels"] = labels;
  Json out = Json::array();
  for (const CensusRow& row : rows) {
    Json r;
    r["vertices"] = row.vertices;
    Json edges = Json::array();
    for (const Edge& e : row.edges) edges.push_back(edge_to_json(e));
    r["edges"] = edges;
    r["amenable"] = row.amenable;
    r["in_t"] = row.in_t;
    r["relatively_hyperbolic"] = row.relatively_hyperbolic;
    r["artin_certifiable"] = row.artin_certifiable;
    r["coxeter_certifiable"] = row.coxeter_certifiable;
    r["component_count"] = row.component_count;
    out.push_back(r);
  }
  j["rows"] = out;
  return j;
}

std::string dump_json(const Json& j, bool pretty) {
  return (pretty ? j.dump(2) : j.dump()) + "\n";
}

Json parse_json_text(const std::string& text, const std::string& what) {
  Json j = Json::parse(text, nullptr, false);
  if (j.is_discarded()) fail(Errc::invalid_input, what + ": malformed JSON");
  return j;
}

}  // namespace rigiditykit
