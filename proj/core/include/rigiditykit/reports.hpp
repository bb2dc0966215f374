#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "rigiditykit/certificates.hpp"

namespace rigiditykit {

struct ArtinComponentReport {
  std::vector<std::string> vertices;
  bool complete_all_two = false;
  std::optional<RigidChain> chain;
  std::optional<RigidityCertificate> certificate;
};

// Component count is the rigidity invariant: graphs with isomorphic group von
// Neumann algebras must agree on it, provided no component is flagged.
struct ArtinTheoremReport {
  std::size_t component_count = 0;
  std::vector<ArtinComponentReport> components;
  bool all_components_certifiable = false;
};

ArtinTheoremReport artin_theorem_report(const LabeledGraph& g);

struct CoxeterComponentReport {
  std::vector<std::string> vertices;
  bool amenable = false;
  bool in_t = false;
  bool relatively_hyperbolic = false;
  std::optional<RigidityCertificate> certificate;
};

struct CoxeterTheoremReport {
  std::size_t component_count = 0;
  std::vector<CoxeterComponentReport> components;
  bool all_components_certifiable = false;
};

CoxeterTheoremReport coxeter_theorem_report(const LabeledGraph& g);

}  // namespace rigiditykit
