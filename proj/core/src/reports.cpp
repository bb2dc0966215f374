#include "rigiditykit/reports.hpp"

namespace rigiditykit {

ArtinTheoremReport artin_theorem_report(const LabeledGraph& g) {
  ArtinTheoremReport report;
  const auto components = connected_components(g);
  report.component_count = components.size();
  report.all_components_certifiable = !components.empty();
  for (const auto& vertices : components) {
    ArtinComponentReport comp;
    comp.vertices = vertices;
    const LabeledGraph sub = g.full_subgraph(vertices);
    comp.complete_all_two = sub.complete_all_two();
    if (comp.complete_all_two) {
      report.all_components_certifiable = false;
    } else {
      comp.chain = artin_rigid_chain(sub);
      comp.certificate = chain_to_certificate(*comp.chain, sub, vertices);
    }
    report.components.push_back(std::move(comp));
  }
  return report;
}

CoxeterTheoremReport coxeter_theorem_report(const LabeledGraph& g) {
  CoxeterTheoremReport report;
  const auto components = connected_components(g);
  report.component_count = components.size();
  report.all_components_certifiable = !components.empty();
  for (const auto& vertices : components) {
    CoxeterComponentReport comp;
    comp.vertices = vertices;
    const LabeledGraph sub = g.full_subgraph(vertices);
    const CoxeterSystem sys = full_system(sub);
    comp.amenable = subset_properties(sys).amenable;
    comp.in_t = t_membership(sys).member;
    comp.relatively_hyperbolic = !comp.in_t;
    if (!comp.amenable && comp.in_t)
      comp.certificate = coxeter_rigidity_certificate(sys);
    else
      report.all_components_certifiable = false;
    report.components.push_back(std::move(comp));
  }
  return report;
}

}  // namespace rigiditykit
