#include "rigiditykit/cli.hpp"

#include <fstream>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "rigiditykit/json_io.hpp"

namespace rigiditykit {

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(Errc::invalid_input, "cannot read file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

LabeledGraph load_graph(const std::string& path) {
  return graph_from_json(parse_json_text(read_file(path), path));
}

FreeProductSpec load_spec(const std::string& path) {
  return spec_from_json(parse_json_text(read_file(path), path));
}

// Ambient vertex set for a bare chain: the component holding its first entry.
std::vector<std::string> chain_component(const RigidChain& chain, const LabeledGraph& g) {
  if (chain.entries.empty()) fail(Errc::invalid_input, "chain has no entries");
  const ArtinSubgroupDescriptor& first = chain.entries.front();
  std::string seed;
  switch (first.kind) {
    case DescriptorKind::vertex_set:
      if (first.vertices.empty()) fail(Errc::invalid_input, "chain entry has no vertices");
      seed = first.vertices.front();
      break;
    case DescriptorKind::edge_group:
      seed = first.edge.u;
      break;
    case DescriptorKind::vertex_delta:
      seed = first.center;
      break;
  }
  g.index_of(seed);
  for (const auto& comp : connected_components(g))
    if (std::binary_search(comp.begin(), comp.end(), seed)) return comp;
  fail(Errc::internal, "vertex missing from every component");
}

int do_classify(const std::string& path, bool pretty, std::ostream& out) {
  const LabeledGraph g = load_graph(path);
  const Json j = g.kind() == GraphKind::artin ? artin_report_to_json(artin_theorem_report(g))
                                              : coxeter_report_to_json(coxeter_theorem_report(g));
  out << dump_json(j, pretty);
  return 0;
}

int do_certify(const std::string& path, bool pretty, std::ostream& out) {
  const LabeledGraph g = load_graph(path);
  bool ok;
  Json j;
  if (g.kind() == GraphKind::artin) {
    const ArtinTheoremReport report = artin_theorem_report(g);
    ok = report.all_components_certifiable;
    j = artin_report_to_json(report);
  } else {
    const CoxeterTheoremReport report = coxeter_theorem_report(g);
    ok = report.all_components_certifiable;
    j = coxeter_report_to_json(report);
  }
  out << dump_json(j, pretty);
  return ok ? 0 : 1;
}

int do_check_cert(const std::string& cert_path, const std::string& graph_path, bool pretty,
                  std::ostream& out) {
  const LabeledGraph g = load_graph(graph_path);
  const Json doc = parse_json_text(read_file(cert_path), cert_path);
  RigidityCertificate cert;
  if (doc.contains("rule")) {
    cert = certificate_from_json(doc);
  } else if (doc.contains("entries")) {
    const RigidChain chain = chain_from_json(doc);
    cert = chain_to_certificate(chain, g, chain_component(chain, g));
  } else {
    fail(Errc::invalid_input, cert_path + ": expected a certificate or a chain");
  }
  const CertCheckReport report = check_certificate(cert, g);
  out << dump_json(check_report_to_json(report), pretty);
  return report.valid ? 0 : 1;
}

int do_betti(const std::string& path, bool pretty, std::ostream& out) {
  const FreeProductSpec spec = load_spec(path);
  Json j = betti_to_json(betti_vector(spec));
  j["euler_characteristic"] = euler_characteristic(spec).str();
  out << dump_json(j, pretty);
  return 0;
}

int do_me(const std::string& path1, const std::string& path2, bool with_witness,
          bool verify_action, bool pretty, std::ostream& out) {
  const FreeProductSpec s1 = load_spec(path1);
  const FreeProductSpec s2 = load_spec(path2);
  const MEVerdict verdict = me_witness(s1, s2);
  Json j = me_verdict_to_json(verdict);
  if (!with_witness) j["witness"] = Json(nullptr);
  if (verify_action)
    j["action_verification"] = verdict.witness
        ? action_verification_to_json(build_and_verify_action(s1, s2, *verdict.witness))
        : Json(nullptr);
  out << dump_json(j, pretty);
  return verdict.proportional ? 0 : 1;
}

int do_census(int max_vertices, const std::vector<int>& labels, bool pretty, std::ostream& out) {
  std::vector<int> sorted = labels;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  const auto rows = census(max_vertices, sorted);
  out << dump_json(census_to_json(max_vertices, sorted, rows), pretty);
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Rigidity toolkit for Artin and Coxeter defining graphs"};
  app.name("rigiditykit");
  app.require_subcommand(1);
  app.fallthrough();

  bool pretty = false;
  app.add_flag("--pretty", pretty, "indent JSON output");

  std::string graph_path, cert_path, spec1_path, spec2_path;
  bool with_witness = false, verify_action = false;
  int max_vertices = 4;
  std::vector<int> labels;

  CLI::App* classify = app.add_subcommand("classify", "per-component theorem report");
  classify->add_option("graph", graph_path, "graph JSON file")->required();

  CLI::App* certify =
      app.add_subcommand("certify", "theorem report; exit 1 unless every component certifies");
  certify->add_option("graph", graph_path, "graph JSON file")->required();

  CLI::App* check =
      app.add_subcommand("check-cert", "validate a certificate or chain against a graph");
  check->add_option("certificate", cert_path, "certificate or chain JSON file")->required();
  check->add_option("graph", graph_path, "graph JSON file")->required();

  CLI::App* betti = app.add_subcommand("betti", "l2-Betti vector of a free-product spec");
  betti->add_option("spec", spec1_path, "spec JSON file")->required();

  CLI::App* me = app.add_subcommand("me", "measure-equivalence verdict for two specs");
  me->add_option("spec1", spec1_path, "first spec JSON file")->required();
  me->add_option("spec2", spec2_path, "second spec JSON file")->required();
  me->add_flag("--witness", with_witness, "include the commensurability witness");
  me->add_flag("--verify-action", verify_action, "build and verify the permutation actions");

  CLI::App* census_cmd = app.add_subcommand("census", "classify small connected labeled graphs");
  census_cmd->add_option("--max-vertices", max_vertices, "largest vertex count (<= 6)")
      ->required();
  census_cmd->add_option("--labels", labels, "edge labels, e.g. 2,3")
      ->required()
      ->delimiter(',');

  std::vector<std::string> argv{args};
  try {
    app.parse(std::vector<std::string>(argv.rbegin(), argv.rend()));
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return 2;
  }

  try {
    if (classify->parsed()) return do_classify(graph_path, pretty, out);
    if (certify->parsed()) return do_certify(graph_path, pretty, out);
    if (check->parsed()) return do_check_cert(cert_path, graph_path, pretty, out);
    if (betti->parsed()) return do_betti(spec1_path, pretty, out);
    if (me->parsed())
      return do_me(spec1_path, spec2_path, with_witness, verify_action, pretty, out);
    if (census_cmd->parsed()) return do_census(max_vertices, labels, pretty, out);
  } catch (const Error& e) {
    if (is_input_error(e.code())) {
      err << e.what() << "\n";
      return 2;
    }
    Json j;
    Json detail;
    detail["code"] = errc_name(e.code());
    detail["message"] = e.what();
    j["error"] = detail;
    out << dump_json(j, pretty);
    return 1;
  }
  err << "no subcommand given\n";
  return 2;
}

}  // namespace rigiditykit
