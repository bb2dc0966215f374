#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rigiditykit/errors.hpp"

namespace rigiditykit {

enum class GraphKind { artin, coxeter };

const char* kind_name(GraphKind) noexcept;

// Edge in name form, normalized so u < v. m >= 2; absent edges are not
// represented (an absent edge means no relation between the endpoints).
struct Edge {
  std::string u;
  std::string v;
  int m = 0;

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

inline Edge normalized_edge(std::string u, std::string v, int m) {
  if (v < u) std::swap(u, v);
  return Edge{std::move(u), std::move(v), m};
}

struct EdgeInput {
  std::string u;
  std::string v;
  int m = 0;
};

// Finite simple graph with integer edge labels >= 2. Vertices are kept
// sorted by name; indices below always refer to that order.
class LabeledGraph {
public:
  LabeledGraph(GraphKind kind, std::vector<std::string> vertices,
               const std::vector<EdgeInput>& edges);

  GraphKind kind() const noexcept { return kind_; }
  std::size_t size() const noexcept { return names_.size(); }
  const std::vector<std::string>& vertex_names() const noexcept { return names_; }

  // Index of a known vertex; throws unknown_vertex otherwise.
  std::size_t index_of(const std::string& name) const;
  std::optional<std::size_t> find(const std::string& name) const noexcept;
  const std::string& name_of(std::size_t i) const { return names_.at(i); }

  // 0 encodes "no edge". Diagonal is 0.
  int label_at(std::size_t i, std::size_t j) const { return labels_[i * size() + j]; }
  int label_of(const std::string& u, const std::string& v) const {
    return label_at(index_of(u), index_of(v));
  }
  bool adjacent(std::size_t i, std::size_t j) const { return label_at(i, j) != 0; }

  // Edges sorted by (u, v) name order.
  std::vector<Edge> edge_list() const;
  std::vector<std::size_t> neighbor_indices(std::size_t i) const;
  std::size_t degree(std::size_t i) const;

  // Induced subgraph on the given vertex names (same kind, all labels kept).
  LabeledGraph full_subgraph(const std::vector<std::string>& vertices) const;

  bool connected() const;
  // True when every pair of vertices is joined by an edge labeled 2
  // (vacuously true for zero or one vertex).
  bool complete_all_two() const;

  friend bool operator==(const LabeledGraph&, const LabeledGraph&) = default;

private:
  GraphKind kind_;
  std::vector<std::string> names_;
  std::vector<int> labels_;
};

// Link, star and closed star of one vertex. star = {center} + link; the
// closed star is the induced subgraph on star, carrying all labels.
struct StarData {
  std::string center;
  std::vector<std::string> link;
  std::vector<std::string> star;
  LabeledGraph closed_star;
};

StarData star_data(const LabeledGraph& g, const std::string& vertex);

// A vertex is essential when its closed star is not properly contained in
// the closed star of any other vertex (containment compared on vertex
// sets; both are full subgraphs, so labels agree automatically). Maximal
// stars are the distinct stars of essential vertices; each is owned by its
// lexicographically least essential center.
struct EssentialData {
  std::vector<std::string> essential;
  std::vector<std::vector<std::string>> maximal_stars;  // sorted sets, in sorted order
  std::vector<std::string> representatives;             // parallel to maximal_stars
};

EssentialData essential_and_maximal(const LabeledGraph& g);

// Star-intersection skeleton: vertices are the representatives, with an
// edge where the stars (in g) intersect. The walk concatenates
// lexicographically-least shortest skeleton paths between consecutive
// representatives in lexicographic order, visiting every representative.
struct StarSkeleton {
  std::vector<std::string> representatives;
  std::vector<std::pair<std::string, std::string>> edges;
  std::vector<std::string> walk;
};

StarSkeleton star_chain_skeleton(const LabeledGraph& g);

// Connected components as sorted name lists, ordered by least vertex.
std::vector<std::vector<std::string>> connected_components(const LabeledGraph& g);

struct ComponentShape {
  LabeledGraph component;
  bool complete_all_two = false;
};

std::vector<ComponentShape> components_and_shape(const LabeledGraph& g);

}  // namespace rigiditykit
