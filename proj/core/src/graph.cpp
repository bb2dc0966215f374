#include "rigiditykit/graph.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <queue>
#include <set>

namespace rigiditykit {

const char* kind_name(GraphKind k) noexcept {
  return k == GraphKind::artin ? "artin" : "coxeter";
}

namespace {

bool valid_token(const std::string& s) {
  if (s.empty()) return false;
  for (unsigned char c : s) {
    if (std::isspace(c) || !std::isprint(c)) return false;
  }
  return true;
}

}  // namespace

LabeledGraph::LabeledGraph(GraphKind kind, std::vector<std::string> vertices,
                           const std::vector<EdgeInput>& edges)
    : kind_(kind), names_(std::move(vertices)) {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (!valid_token(names_[i]))
      fail(Errc::invalid_input,
           "vertex " + std::to_string(i) + ": name must be a nonempty printable token");
  }
  std::sort(names_.begin(), names_.end());
  for (std::size_t i = 1; i < names_.size(); ++i) {
    if (names_[i] == names_[i - 1])
      fail(Errc::invalid_input, "duplicate vertex \"" + names_[i] + "\"");
  }
  const std::size_t n = names_.size();
  labels_.assign(n * n, 0);
  for (std::size_t k = 0; k < edges.size(); ++k) {
    const EdgeInput& e = edges[k];
    const std::string where = "edge " + std::to_string(k) + " (" + e.u + "," + e.v + ")";
    auto iu = find(e.u);
    auto iv = find(e.v);
    if (!iu) fail(Errc::unknown_vertex, where + ": unknown endpoint \"" + e.u + "\"");
    if (!iv) fail(Errc::unknown_vertex, where + ": unknown endpoint \"" + e.v + "\"");
    if (*iu == *iv) fail(Errc::invalid_input, where + ": self-loop");
    if (e.m < 2) fail(Errc::invalid_input, where + ": label " + std::to_string(e.m) + " is below 2");
    if (labels_[*iu * n + *iv] != 0) fail(Errc::invalid_input, where + ": duplicate edge");
    labels_[*iu * n + *iv] = e.m;
    labels_[*iv * n + *iu] = e.m;
  }
}

std::size_t LabeledGraph::index_of(const std::string& name) const {
  auto i = find(name);
  if (!i) fail(Errc::unknown_vertex, "\"" + name + "\"");
  return *i;
}

std::optional<std::size_t> LabeledGraph::find(const std::string& name) const noexcept {
  auto it = std::lower_bound(names_.begin(), names_.end(), name);
  if (it == names_.end() || *it != name) return std::nullopt;
  return static_cast<std::size_t>(it - names_.begin());
}

std::vector<Edge> LabeledGraph::edge_list() const {
  std::vector<Edge> out;
  for (std::size_t i = 0; i < size(); ++i)
    for (std::size_t j = i + 1; j < size(); ++j)
      if (int m = label_at(i, j); m != 0) out.push_back({names_[i], names_[j], m});
  return out;  // names_ is sorted, so this is (u,v)-sorted
}

std::vector<std::size_t> LabeledGraph::neighbor_indices(std::size_t i) const {
  std::vector<std::size_t> out;
  for (std::size_t j = 0; j < size(); ++j)
    if (adjacent(i, j)) out.push_back(j);
  return out;
}

std::size_t LabeledGraph::degree(std::size_t i) const { return neighbor_indices(i).size(); }

LabeledGraph LabeledGraph::full_subgraph(const std::vector<std::string>& vertices) const {
  std::vector<std::string> keep = vertices;
  std::sort(keep.begin(), keep.end());
  keep.erase(std::unique(keep.begin(), keep.end()), keep.end());
  std::vector<EdgeInput> edges;
  for (std::size_t a = 0; a < keep.size(); ++a) {
    std::size_t ia = index_of(keep[a]);
    for (std::size_t b = a + 1; b < keep.size(); ++b) {
      std::size_t ib = index_of(keep[b]);
      if (int m = label_at(ia, ib); m != 0) edges.push_back({keep[a], keep[b], m});
    }
  }
  return LabeledGraph(kind_, std::move(keep), edges);
}

bool LabeledGraph::connected() const {
  if (size() <= 1) return true;
  std::vector<char> seen(size(), 0);
  std::queue<std::size_t> q;
  q.push(0);
  seen[0] = 1;
  std::size_t count = 1;
  while (!q.empty()) {
    std::size_t i = q.front();
    q.pop();
    for (std::size_t j : neighbor_indices(i)) {
      if (!seen[j]) {
        seen[j] = 1;
        ++count;
        q.push(j);
      }
    }
  }
  return count == size();
}

bool LabeledGraph::complete_all_two() const {
  for (std::size_t i = 0; i < size(); ++i)
    for (std::size_t j = i + 1; j < size(); ++j)
      if (label_at(i, j) != 2) return false;
  return true;
}

StarData star_data(const LabeledGraph& g, const std::string& vertex) {
  std::size_t i = g.index_of(vertex);
  std::vector<std::string> link;
  for (std::size_t j : g.neighbor_indices(i)) link.push_back(g.name_of(j));
  std::vector<std::string> star = link;
  star.push_back(vertex);
  std::sort(star.begin(), star.end());
  LabeledGraph closed = g.full_subgraph(star);
  return StarData{vertex, std::move(link), std::move(star), std::move(closed)};
}

namespace {

// Star of vertex i as a sorted index list.
std::vector<std::size_t> star_indices(const LabeledGraph& g, std::size_t i) {
  std::vector<std::size_t> s = g.neighbor_indices(i);
  s.insert(std::lower_bound(s.begin(), s.end(), i), i);
  return s;
}

bool subset_of(const std::vector<std::size_t>& a, const std::vector<std::size_t>& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

}  // namespace

EssentialData essential_and_maximal(const LabeledGraph& g) {
  const std::size_t n = g.size();
  std::vector<std::vector<std::size_t>> stars(n);
  for (std::size_t i = 0; i < n; ++i) stars[i] = star_indices(g, i);

  EssentialData out;
  std::vector<char> essential(n, 0);
  for (std::size_t v = 0; v < n; ++v) {
    bool dominated = false;
    for (std::size_t w = 0; w < n && !dominated; ++w)
      if (w != v && stars[v] != stars[w] && subset_of(stars[v], stars[w])) dominated = true;
    if (!dominated) {
      essential[v] = 1;
      out.essential.push_back(g.name_of(v));
    }
  }

  // One representative per distinct maximal star: the least essential owner.
  std::map<std::vector<std::size_t>, std::size_t> rep;
  for (std::size_t v = 0; v < n; ++v)
    if (essential[v] && !rep.count(stars[v])) rep.emplace(stars[v], v);  // v ascends = lex order
  std::map<std::vector<std::string>, std::string> by_name;
  for (const auto& [star, v] : rep) {
    std::vector<std::string> names;
    for (std::size_t i : star) names.push_back(g.name_of(i));
    by_name.emplace(std::move(names), g.name_of(v));
  }
  for (auto& [star, r] : by_name) {
    out.maximal_stars.push_back(star);
    out.representatives.push_back(r);
  }
  return out;
}

std::vector<std::vector<std::string>> connected_components(const LabeledGraph& g) {
  const std::size_t n = g.size();
  std::vector<int> comp(n, -1);
  int next = 0;
  for (std::size_t s = 0; s < n; ++s) {
    if (comp[s] != -1) continue;
    comp[s] = next;
    std::queue<std::size_t> q;
    q.push(s);
    while (!q.empty()) {
      std::size_t i = q.front();
      q.pop();
      for (std::size_t j : g.neighbor_indices(i))
        if (comp[j] == -1) {
          comp[j] = next;
          q.push(j);
        }
    }
    ++next;
  }
  std::vector<std::vector<std::string>> out(next);
  for (std::size_t i = 0; i < n; ++i) out[comp[i]].push_back(g.name_of(i));
  // BFS seeds ascend, so components are already ordered by least vertex
  return out;
}

std::vector<ComponentShape> components_and_shape(const LabeledGraph& g) {
  std::vector<ComponentShape> out;
  for (const auto& comp : connected_components(g)) {
    LabeledGraph sub = g.full_subgraph(comp);
    bool flag = sub.complete_all_two();
    out.push_back(ComponentShape{std::move(sub), flag});
  }
  return out;
}

namespace {

// Lexicographically least shortest path between skeleton vertices, over the
// adjacency lists in `adj` (index space of the representatives).
std::vector<std::size_t> lex_shortest_path(const std::vector<std::vector<std::size_t>>& adj,
                                           std::size_t s, std::size_t t) {
  const std::size_t n = adj.size();
  std::vector<int> dist(n, -1);
  std::queue<std::size_t> q;
  dist[t] = 0;
  q.push(t);
  while (!q.empty()) {
    std::size_t i = q.front();
    q.pop();
    for (std::size_t j : adj[i])
      if (dist[j] == -1) {
        dist[j] = dist[i] + 1;
        q.push(j);
      }
  }
  if (dist[s] == -1) fail(Errc::internal, "skeleton unexpectedly disconnected");
  std::vector<std::size_t> path{s};
  std::size_t cur = s;
  while (cur != t) {
    std::size_t best = n;
    for (std::size_t j : adj[cur])
      if (dist[j] == dist[cur] - 1 && j < best) best = j;  // adj sorted; indices are lex order
    cur = best;
    path.push_back(cur);
  }
  return path;
}

}  // namespace

StarSkeleton star_chain_skeleton(const LabeledGraph& g) {
  if (g.size() == 0) fail(Errc::disconnected, "empty graph");
  if (!g.connected()) fail(Errc::disconnected, "apply per connected component");

  EssentialData ess = essential_and_maximal(g);
  StarSkeleton out;
  out.representatives = ess.representatives;  // sorted by star; re-sort by name
  std::sort(out.representatives.begin(), out.representatives.end());

  const std::size_t k = out.representatives.size();
  std::vector<std::set<std::string>> stars(k);
  for (std::size_t i = 0; i < k; ++i) {
    StarData sd = star_data(g, out.representatives[i]);
    stars[i] = std::set<std::string>(sd.star.begin(), sd.star.end());
  }
  std::vector<std::vector<std::size_t>> adj(k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j) {
      bool meet = std::any_of(stars[i].begin(), stars[i].end(),
                              [&](const std::string& v) { return stars[j].count(v) > 0; });
      if (meet) {
        adj[i].push_back(j);
        adj[j].push_back(i);
        out.edges.emplace_back(out.representatives[i], out.representatives[j]);
      }
    }

  out.walk.push_back(out.representatives[0]);
  for (std::size_t i = 0; i + 1 < k; ++i) {
    auto path = lex_shortest_path(adj, i, i + 1);
    for (std::size_t p = 1; p < path.size(); ++p) out.walk.push_back(out.representatives[path[p]]);
  }
  return out;
}

}  // namespace rigiditykit
