#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "rigiditykit/graph.hpp"

namespace rigiditykit {

enum class CoxKind { spherical, affine, other_infinite };

const char* cox_kind_name(CoxKind) noexcept;

struct IrreducibleClassification {
  CoxKind kind = CoxKind::other_infinite;
  std::string family;  // "A3", "I2(5)", "~B3", ...; empty for other_infinite

  friend bool operator==(const IrreducibleClassification&,
                         const IrreducibleClassification&) = default;
};

// Table recognizer on defining-graph labels (row-major n x n, 0 = absent
// edge = infinite label, 2 = commuting). The translation to the diagram
// convention (label-2 pairs drop out, absent pairs become infinity-labeled
// diagram edges) happens here and only here. Pre: the system is
// irreducible; throws not_irreducible otherwise.
IrreducibleClassification classify_irreducible_labels(int n, const int* labels);

// A Coxeter system given by a defining graph and the subset of generators
// under consideration (full subgraph convention for parabolic subgroups).
struct CoxeterSystem {
  LabeledGraph graph;
  std::vector<std::string> subset;  // sorted subset of graph vertices
};

CoxeterSystem full_system(LabeledGraph g);
CoxeterSystem sub_system(const LabeledGraph& g, std::vector<std::string> subset);

// Connected components of the non-commuting graph on sys.subset (edge
// between s,t iff their label is not 2; absent counts as non-commuting).
// Sorted name lists ordered by least vertex; distinct components commute.
std::vector<std::vector<std::string>> irreducible_components(const CoxeterSystem& sys);

IrreducibleClassification classify_irreducible(const CoxeterSystem& sys);

struct SubsetProperties {
  bool spherical = false;
  bool affine_irreducible = false;
  bool amenable = false;
  bool minimal_nonspherical = false;
  std::map<std::string, std::vector<std::string>> perp;  // s -> label-2 partners
};

SubsetProperties subset_properties(const CoxeterSystem& sys);

// Derivation tree for membership in the operation-closed class T: seeds
// are irreducible affine systems of rank >= 3 and systems with exactly two
// irreducible components, both non-spherical; closed under vertex
// extension (op2, with s-perp non-spherical inside the old set) and union
// covers (op3, with non-spherical intersection). Masks index sys.subset in
// sorted order, bit i = vertex i.
struct TDerivation {
  enum class Rule { base_affine, base_product, op2, op3 };
  Rule rule = Rule::base_affine;
  std::uint32_t subset = 0;
  std::uint32_t part1 = 0;  // base_product / op3
  std::uint32_t part2 = 0;
  int added = -1;            // op2: universe index of the added generator
  std::uint32_t premise = 0;  // op2: S0
  std::vector<TDerivation> premises;  // op2: one entry; op3: two
};

struct TMembership {
  bool member = false;
  std::optional<TDerivation> derivation;
};

// Shared engine: classification, amenability and the T closure over all
// subsets of one system, memoized. Universe size is capped at 16.
class CoxeterAnalyzer {
public:
  explicit CoxeterAnalyzer(const CoxeterSystem& sys);

  int size() const noexcept { return n_; }
  std::uint32_t full_mask() const noexcept {
    return n_ == 0 ? 0u : (n_ == 32 ? ~0u : (1u << n_) - 1u);
  }
  const std::vector<std::string>& universe() const noexcept { return names_; }
  std::uint32_t mask_of(const std::vector<std::string>& names) const;
  std::vector<std::string> names_of(std::uint32_t mask) const;
  int label(int i, int j) const { return labels_[i * n_ + j]; }  // 0 = absent

  std::vector<std::uint32_t> components(std::uint32_t mask) const;  // by least vertex
  IrreducibleClassification classify_component(std::uint32_t component_mask) const;
  bool spherical(std::uint32_t mask) const;
  bool affine_irreducible(std::uint32_t mask) const;
  bool amenable(std::uint32_t mask) const;
  bool minimal_nonspherical(std::uint32_t mask) const;
  // Perp of vertex i inside `within` (i need not lie in `within`).
  std::uint32_t perp(int i, std::uint32_t within) const;

  bool t_member(std::uint32_t mask) const;
  int t_layer(std::uint32_t mask) const;  // -1 when not a member
  TDerivation t_derivation(std::uint32_t mask) const;  // throws not_in_t

private:
  void ensure_closure() const;
  TDerivation derive(std::uint32_t mask, std::vector<std::optional<TDerivation>>& memo) const;

  int n_ = 0;
  std::vector<std::string> names_;
  std::vector<int> labels_;
  std::vector<std::uint32_t> noncommuting_;  // adjacency masks of the non-commuting graph
  mutable std::vector<signed char> spherical_;
  mutable std::vector<signed char> amenable_;
  mutable std::vector<int> layer_;
  mutable bool closed_ = false;
};

TMembership t_membership(const CoxeterSystem& sys);

struct RelHypVerdict {
  bool not_relatively_hyperbolic = false;
  bool first_l2_betti_zero = false;
};

RelHypVerdict relative_hyperbolicity_verdict(const CoxeterSystem& sys);

}  // namespace rigiditykit
