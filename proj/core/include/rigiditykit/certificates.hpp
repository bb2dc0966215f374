#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "rigiditykit/artin.hpp"
#include "rigiditykit/coxeter.hpp"
#include "rigiditykit/graph.hpp"

namespace rigiditykit {

enum class CertRule { product_split, infinite_center, join, wq_normalize };

const char* cert_rule_name(CertRule) noexcept;

// The group a certificate node talks about, as a generator list: vertex
// generators for Coxeter scopes, subgroup descriptors for Artin scopes.
struct ScopeDescription {
  GraphKind family = GraphKind::artin;
  std::vector<std::string> vertices;                 // coxeter
  std::vector<ArtinSubgroupDescriptor> descriptors;  // artin

  friend bool operator==(const ScopeDescription&, const ScopeDescription&) = default;
};

enum class InfiniteWitnessKind { non_spherical_subset, vertex_generator, cyclic_generator };

const char* infinite_witness_kind_name(InfiniteWitnessKind) noexcept;

struct InfiniteSubgroupWitness {
  InfiniteWitnessKind kind = InfiniteWitnessKind::vertex_generator;
  std::vector<std::string> subset;    // non_spherical_subset (coxeter scopes only)
  std::string vertex;                 // vertex_generator
  Word word;                          // cyclic_generator
  std::optional<DeltaElement> delta;  // cyclic_generator given as a Delta

  static InfiniteSubgroupWitness of_subset(std::vector<std::string> subset);
  static InfiniteSubgroupWitness of_vertex(std::string v);
  static InfiniteSubgroupWitness of_delta(DeltaElement d);

  friend bool operator==(const InfiniteSubgroupWitness&, const InfiniteSubgroupWitness&) = default;
};

struct RigidityCertificate;
using CertPtr = std::shared_ptr<const RigidityCertificate>;

enum class WqWitnessForm { perp, component };

const char* wq_witness_form_name(WqWitnessForm) noexcept;

// One inference-rule application. Which fields are meaningful depends on
// rule; scope is always present.
struct RigidityCertificate {
  CertRule rule = CertRule::product_split;
  ScopeDescription scope;

  // product_split: two commuting generator sets covering the scope
  std::vector<std::string> left;
  std::vector<std::string> right;

  // infinite_center: a subgroup with certified infinite center
  std::optional<ArtinSubgroupDescriptor> subgroup;
  Word center_witness;
  std::optional<NonamenabilityWitness> nonamenability;  // vertex_delta leaves

  // join: two overlapping certified subgroups
  CertPtr a;
  CertPtr b;
  std::optional<InfiniteSubgroupWitness> witness;

  // wq_normalize: certified inner subgroup plus normalizing generators
  CertPtr inner;
  std::vector<std::string> normalizers;
  WqWitnessForm witness_form = WqWitnessForm::perp;
  std::vector<std::string> witness_subset;
};

struct NodeCheck {
  std::string path;  // "root", "root.a", "root.b", "root.inner", nested
  CertRule rule = CertRule::product_split;
  bool ok = false;
  std::string detail;
};

struct CertCheckReport {
  bool valid = false;
  bool coverage_ok = false;
  std::string coverage_detail;
  std::vector<NodeCheck> nodes;
};

// True when the witnessed subgroup is infinite under the combinatorial
// rules: non-spherical subsets for Coxeter scopes; vertex or Delta
// generators admitted into the scope by the membership rules for Artin.
bool subgroup_infinite(const InfiniteSubgroupWitness& witness, const ScopeDescription& scope,
                       const LabeledGraph& g);

// Left fold of a validated chain into Join nodes over leaf certificates.
// Throws broken_link / coverage / invalid_input.
RigidityCertificate chain_to_certificate(const RigidChain& chain, const LabeledGraph& g,
                                         const std::vector<std::string>& ambient_vertices);

// Re-checks every node's side conditions and the root coverage. Never
// throws; the report lists each node with a pass flag and reason.
CertCheckReport check_certificate(const RigidityCertificate& cert, const LabeledGraph& g);

// Certificate for a connected, nonamenable Coxeter system in the closure
// class, following its derivation. Throws disconnected / amenable /
// not_in_t (checked in that order).
RigidityCertificate coxeter_rigidity_certificate(const CoxeterSystem& sys);

}  // namespace rigiditykit
