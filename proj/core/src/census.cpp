#include "rigiditykit/census.hpp"

#include <algorithm>
#include <numeric>

#include "rigiditykit/coxeter.hpp"
#include "rigiditykit/errors.hpp"

namespace rigiditykit {

namespace {

// Upper-triangle pair order (0,1),(0,2),...,(1,2),... — the canonical key is
// the label vector in this order, minimized over all vertex relabelings.
std::vector<std::pair<int, int>> pair_list(int n) {
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  return pairs;
}

// vec must be <= its image under perm; -1 when perm produces something
// smaller (so vec is not canonical), +1 when strictly larger, 0 on equal.
int compare_relabeled(const std::vector<int>& vec, const std::vector<std::vector<int>>& mat,
                      const std::vector<std::pair<int, int>>& pairs,
                      const std::vector<int>& perm) {
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    const int c = mat[perm[pairs[k].first]][perm[pairs[k].second]];
    if (c != vec[k]) return c < vec[k] ? -1 : 1;
  }
  return 0;
}

bool is_canonical(const std::vector<int>& vec, const std::vector<std::vector<int>>& mat,
                  const std::vector<std::pair<int, int>>& pairs, int n) {
  std::vector<int> perm(n);
  // Cheap rejection first: a single adjacent transposition already lowers
  // the key for most non-canonical vectors.
  for (int t = 0; t + 1 < n; ++t) {
    std::iota(perm.begin(), perm.end(), 0);
    std::swap(perm[t], perm[t + 1]);
    if (compare_relabeled(vec, mat, pairs, perm) < 0) return false;
  }
  std::iota(perm.begin(), perm.end(), 0);
  while (std::next_permutation(perm.begin(), perm.end()))
    if (compare_relabeled(vec, mat, pairs, perm) < 0) return false;
  return true;
}

bool vector_connected(const std::vector<int>& vec,
                      const std::vector<std::pair<int, int>>& pairs, int n) {
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t k = 0; k < pairs.size(); ++k)
    if (vec[k] != 0) parent[find(pairs[k].first)] = find(pairs[k].second);
  for (int i = 1; i < n; ++i)
    if (find(i) != find(0)) return false;
  return true;
}

}  // namespace

std::vector<CensusRow> census(int max_vertices, std::vector<int> labels) {
  if (max_vertices < 1) fail(Errc::invalid_input, "census needs at least one vertex");
  if (max_vertices > 6) fail(Errc::too_large, "census is capped at 6 vertices");
  std::sort(labels.begin(), labels.end());
  labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
  for (int m : labels)
    if (m < 2 || m > 6) fail(Errc::invalid_input, "census labels must lie in {2,...,6}");

  std::vector<int> alphabet{0};
  alphabet.insert(alphabet.end(), labels.begin(), labels.end());

  std::vector<CensusRow> rows;
  for (int n = 1; n <= max_vertices; ++n) {
    const auto pairs = pair_list(n);
    std::vector<std::string> names;
    for (int i = 0; i < n; ++i) names.push_back(std::string(1, static_cast<char>('a' + i)));

    std::vector<std::size_t> digits(pairs.size(), 0);
    bool done = false;
    while (!done) {
      std::vector<int> vec(pairs.size());
      for (std::size_t k = 0; k < pairs.size(); ++k) vec[k] = alphabet[digits[k]];

      if (vector_connected(vec, pairs, n)) {
        std::vector<std::vector<int>> mat(n, std::vector<int>(n, 0));
        for (std::size_t k = 0; k < pairs.size(); ++k)
          mat[pairs[k].first][pairs[k].second] = mat[pairs[k].second][pairs[k].first] = vec[k];
        if (is_canonical(vec, mat, pairs, n)) {
          std::vector<EdgeInput> edges;
          for (std::size_t k = 0; k < pairs.size(); ++k)
            if (vec[k] != 0)
              edges.push_back(EdgeInput{names[pairs[k].first], names[pairs[k].second], vec[k]});
          const LabeledGraph g(GraphKind::coxeter, names, edges);

          CensusRow row;
          row.vertices = names;
          row.edges = g.edge_list();
          row.component_count = connected_components(g).size();
          const CoxeterSystem sys = full_system(g);
          row.amenable = subset_properties(sys).amenable;
          row.in_t = t_membership(sys).member;
          row.relatively_hyperbolic = !row.in_t;
          row.artin_certifiable = !g.complete_all_two();
          row.coxeter_certifiable = !row.amenable && row.in_t;
          rows.push_back(std::move(row));
        }
      }

      // Odometer over the label alphabet, least-significant digit last, so
      // rows come out in ascending canonical order within each size.
      std::size_t k = pairs.size();
      while (k > 0) {
        --k;
        if (++digits[k] < alphabet.size()) break;
        digits[k] = 0;
        if (k == 0) done = true;
      }
      if (pairs.empty()) done = true;
    }
  }
  return rows;
}

}  // namespace rigiditykit
