#pragma once

#include <random>
#include <string>
#include <vector>

#include "rigiditykit/graph.hpp"

namespace rigiditykit::testing {

inline LabeledGraph make_graph(GraphKind kind, std::vector<std::string> vertices,
                               std::vector<EdgeInput> edges) {
  return LabeledGraph(kind, std::move(vertices), edges);
}

inline std::vector<std::string> letter_names(int n) {
  std::vector<std::string> out;
  for (int i = 0; i < n; ++i) out.push_back(std::string(1, char('a' + i)));
  return out;
}

// Edge with probability p, label uniform from `labels`.
inline LabeledGraph random_graph(GraphKind kind, int n, double p,
                                 const std::vector<int>& labels, std::mt19937& rng) {
  auto names = letter_names(n);
  std::vector<EdgeInput> edges;
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  std::uniform_int_distribution<std::size_t> pick(0, labels.size() - 1);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (coin(rng) < p) edges.push_back({names[i], names[j], labels[pick(rng)]});
  return LabeledGraph(kind, names, edges);
}

inline LabeledGraph random_connected_graph(GraphKind kind, int n, double p,
                                           const std::vector<int>& labels, std::mt19937& rng) {
  for (;;) {
    LabeledGraph g = random_graph(kind, n, p, labels, rng);
    if (g.connected()) return g;
  }
}

// Graph E: five vertices, six label-2 edges, the running nonamenable
// product example (a and c each commute with b, d, e).
inline LabeledGraph k23_graph(GraphKind kind = GraphKind::coxeter) {
  return make_graph(kind, {"a", "b", "c", "d", "e"},
                    {{"a", "b", 2},
                     {"a", "d", 2},
                     {"e", "a", 2},
                     {"c", "b", 2},
                     {"c", "d", 2},
                     {"e", "c", 2}});
}

inline LabeledGraph pentagon(GraphKind kind = GraphKind::artin) {
  return make_graph(kind, {"a", "b", "c", "d", "e"},
                    {{"a", "b", 2}, {"b", "c", 2}, {"c", "d", 2}, {"d", "e", 2}, {"e", "a", 2}});
}

inline LabeledGraph cycle_all_two(GraphKind kind, int n) {
  auto names = letter_names(n);
  std::vector<EdgeInput> edges;
  for (int i = 0; i < n; ++i) edges.push_back({names[i], names[(i + 1) % n], 2});
  return LabeledGraph(kind, names, edges);
}

// Two copies of K_{2,3} glued along {a,c}, primed copy on b2/d2/e2, with every
// cross pair between the unprimed and primed wings commuting.
inline LabeledGraph doubled_k23() {
  std::vector<EdgeInput> edges{
      {"a", "b", 2},  {"a", "d", 2},  {"e", "a", 2},
      {"c", "b", 2},  {"c", "d", 2},  {"e", "c", 2},
      {"a", "b2", 2}, {"a", "d2", 2}, {"e2", "a", 2},
      {"c", "b2", 2}, {"c", "d2", 2}, {"e2", "c", 2},
  };
  for (const char* x : {"b", "d", "e"})
    for (const char* y : {"b2", "d2", "e2"}) edges.push_back({x, y, 2});
  return make_graph(GraphKind::coxeter, {"a", "b", "b2", "c", "d", "d2", "e", "e2"}, edges);
}

// 4-cycle p-q-r-s plus a copy of K_{2,3} on {p,x,r,y,z} (p,r playing the
// non-commuting pair), with q,s commuting across to x,y,z.
inline LabeledGraph cycle_plus_k23() {
  std::vector<EdgeInput> edges{
      {"p", "q", 2}, {"q", "r", 2}, {"r", "s", 2}, {"s", "p", 2},
      {"p", "x", 2}, {"p", "y", 2}, {"z", "p", 2},
      {"r", "x", 2}, {"r", "y", 2}, {"z", "r", 2},
  };
  for (const char* c : {"q", "s"})
    for (const char* w : {"x", "y", "z"}) edges.push_back({c, w, 2});
  return make_graph(GraphKind::coxeter, {"p", "q", "r", "s", "x", "y", "z"}, edges);
}

}  // namespace rigiditykit::testing
