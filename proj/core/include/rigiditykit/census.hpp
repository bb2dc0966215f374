#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "rigiditykit/graph.hpp"

namespace rigiditykit {

// One connected labeled graph, canonical under vertex relabeling, classified
// under both the Artin and the Coxeter reading.
struct CensusRow {
  std::vector<std::string> vertices;
  std::vector<Edge> edges;
  bool amenable = false;
  bool in_t = false;
  bool relatively_hyperbolic = false;
  bool artin_certifiable = false;
  bool coxeter_certifiable = false;
  std::size_t component_count = 1;
};

// Connected labeled graphs with at most max_vertices vertices (<= 6) and edge
// labels drawn from the given set (subset of {2,3,4,5,6}; a missing edge
// stands for infinity). One row per relabeling class, in canonical order.
std::vector<CensusRow> census(int max_vertices, std::vector<int> labels);

}  // namespace rigiditykit
