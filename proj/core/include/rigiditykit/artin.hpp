#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rigiditykit/graph.hpp"
#include "rigiditykit/words.hpp"

namespace rigiditykit {

enum class WitnessCase { two_dimensional, commuting_pair, spherical_triple };

const char* witness_case_name(WitnessCase) noexcept;

// Evidence that the parabolic on the closed star of `center` is nonamenable:
// a non-commuting pair (u,w) in the link plus the case split on the label
// triple. Labels store 0 for an absent edge.
struct NonamenabilityWitness {
  std::string center;
  std::string u;  // spherical_triple: the label-2 partner of center
  std::string w;
  int m_uv = 0;
  int m_vw = 0;
  int m_uw = 0;
  WitnessCase kind = WitnessCase::two_dimensional;
  // two_dimensional: deltas of edges (center,u) and (center,w);
  // spherical_triple: delta of edge (center,w).
  std::vector<DeltaElement> deltas;
  // spherical_triple only: the power is recorded symbolically.
  std::string exponent;

  friend bool operator==(const NonamenabilityWitness&, const NonamenabilityWitness&) = default;
};

// Pair (u,w) is the lexicographically least non-commuting pair in lk(v).
NonamenabilityWitness nonamenable_vertex_witness(const LabeledGraph& g, const std::string& v);

enum class DescriptorKind { vertex_set, edge_group, vertex_delta };

const char* descriptor_kind_name(DescriptorKind) noexcept;

// A standardly generated subgroup of the Artin group of a labeled graph:
//  - vertex_set: generated by a set of vertex generators (a star group when
//    star_center is set);
//  - edge_group: the two endpoints of one edge;
//  - vertex_delta: a center v together with Delta_e for every edge at v.
struct ArtinSubgroupDescriptor {
  DescriptorKind kind = DescriptorKind::vertex_set;
  std::vector<std::string> vertices;  // vertex_set, sorted
  std::optional<std::string> star_center;
  Edge edge;  // edge_group
  std::string center;                // vertex_delta
  std::vector<Edge> incident_edges;  // vertex_delta, all edges at center, sorted

  static ArtinSubgroupDescriptor make_vertex_set(std::vector<std::string> vertices,
                                                 std::optional<std::string> star_center = {});
  static ArtinSubgroupDescriptor make_edge_group(const Edge& e);
  static ArtinSubgroupDescriptor make_vertex_delta(const LabeledGraph& g,
                                                   const std::string& center);

  std::vector<Word> generators() const;
  std::string display_name() const;

  friend bool operator==(const ArtinSubgroupDescriptor&, const ArtinSubgroupDescriptor&) = default;
};

// Infinite-intersection witness between consecutive chain entries.
struct ChainLink {
  enum class Type { vertex, delta };
  Type type = Type::vertex;
  std::string vertex;
  DeltaElement delta;

  static ChainLink of_vertex(std::string v);
  static ChainLink of_delta(DeltaElement d);

  friend bool operator==(const ChainLink&, const ChainLink&) = default;
};

struct RigidChain {
  std::vector<ArtinSubgroupDescriptor> entries;
  std::vector<ChainLink> links;  // one per consecutive pair
};

// Sound, deliberately incomplete membership rules (see the checker docs):
//  - v in vertex_set(V) iff v in V
//  - v in edge_group(e) iff v is an endpoint
//  - Delta_e in edge_group(e)
//  - v in vertex_delta(u) iff v == u or the edge (v,u) has label 2
//  - Delta_e in vertex_delta(u) iff u is an endpoint of e
bool membership_witness(const std::string& vertex, const ArtinSubgroupDescriptor& h);
bool membership_witness(const DeltaElement& d, const ArtinSubgroupDescriptor& h);
// Single-letter words act as a vertex; anything else must equal a Delta
// generator word of h.
bool membership_witness(const Word& word, const ArtinSubgroupDescriptor& h);
bool membership_witness(const ChainLink& link, const ArtinSubgroupDescriptor& h);

// Least essential vertex whose star equals `star` and whose closed star
// admits a nonamenability witness. Preconditions: |star| >= 3, star
// maximal in g, ambient component not complete-all-2.
std::string select_rigid_center(const LabeledGraph& g, const std::vector<std::string>& star);

// The generating family: one edge_group per edge with label >= 3 (edge
// order), then one vertex_delta per maximal star of size >= 3 (center
// order). Throws excluded_graph when g is complete-all-2.
std::vector<ArtinSubgroupDescriptor> build_generating_family(const LabeledGraph& g);

// All labels 2: chain of maximal-star vertex_set groups along the skeleton
// walk, linked by shared star vertices.
RigidChain raag_rigid_chain(const LabeledGraph& g);

// General case: vertex_delta entries along the skeleton walk with edge
// groups spliced in where links are missing, then unused edge groups
// spliced at the first adjacent star occurrence.
RigidChain artin_rigid_chain(const LabeledGraph& g);

struct ChainValidation {
  bool ok = true;
  std::string detail;  // first failure, empty when ok
  Errc code = Errc::invalid_input;  // broken_link when a link fails membership
};

// Checks structure (nonempty entries, link count), descriptor consistency
// against g, and that every link is a member of both adjacent entries.
ChainValidation validate_chain(const RigidChain& chain, const LabeledGraph& g);

// True when every ambient vertex is admitted by some entry.
bool chain_covers(const RigidChain& chain, const std::vector<std::string>& ambient_vertices);

}  // namespace rigiditykit
