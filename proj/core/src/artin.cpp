#include "rigiditykit/artin.hpp"

#include <algorithm>
#include <cassert>
#include <set>

namespace rigiditykit {

const char* witness_case_name(WitnessCase c) noexcept {
  switch (c) {
    case WitnessCase::two_dimensional: return "two_dimensional";
    case WitnessCase::commuting_pair: return "commuting_pair";
    case WitnessCase::spherical_triple: return "spherical_triple";
  }
  return "?";
}

const char* descriptor_kind_name(DescriptorKind k) noexcept {
  switch (k) {
    case DescriptorKind::vertex_set: return "vertex_set";
    case DescriptorKind::edge_group: return "edge_group";
    case DescriptorKind::vertex_delta: return "vertex_delta";
  }
  return "?";
}

namespace {

DeltaElement graph_delta(const LabeledGraph& g, const std::string& x, const std::string& y) {
  int m = g.label_of(x, y);
  if (m == 0) fail(Errc::internal, "delta requested for absent edge (" + x + "," + y + ")");
  return delta_element(normalized_edge(x, y, m));
}

// sum 1/m_uw + 1/m_vw + 1/m_vu <= 1, exactly, with 0 encoding infinity.
bool angle_sum_at_most_one(int m_uw, int m_vw, int m_vu) {
  long long a = m_vw, b = m_vu;
  if (m_uw == 0) return a + b <= a * b;
  long long c = m_uw;
  return a * b + c * b + c * a <= a * b * c;
}

std::optional<NonamenabilityWitness> try_vertex_witness(const LabeledGraph& g,
                                                        const std::string& v) {
  StarData sd = star_data(g, v);
  const auto& link = sd.link;  // sorted
  for (std::size_t i = 0; i < link.size(); ++i) {
    for (std::size_t j = i + 1; j < link.size(); ++j) {
      int m_uw = g.label_of(link[i], link[j]);
      if (m_uw == 2) continue;  // commuting pair; 0 or >= 3 qualifies
      NonamenabilityWitness out;
      out.center = v;
      out.u = link[i];
      out.w = link[j];
      out.m_uv = g.label_of(out.u, v);
      out.m_vw = g.label_of(v, out.w);
      out.m_uw = m_uw;
      if (angle_sum_at_most_one(out.m_uw, out.m_vw, out.m_uv)) {
        out.kind = WitnessCase::two_dimensional;
        out.deltas = {graph_delta(g, v, out.u), graph_delta(g, v, out.w)};
      } else if (out.m_uv == 2 && out.m_vw == 2) {
        out.kind = WitnessCase::commuting_pair;
      } else {
        out.kind = WitnessCase::spherical_triple;
        if (out.m_uv != 2) {
          std::swap(out.u, out.w);
          std::swap(out.m_uv, out.m_vw);
        }
        assert(out.m_uv == 2 && out.m_vw >= 3 && out.m_uw >= 3);
        out.deltas = {graph_delta(g, v, out.w)};
        out.exponent = "k";
      }
      return out;
    }
  }
  return std::nullopt;
}

}  // namespace

NonamenabilityWitness nonamenable_vertex_witness(const LabeledGraph& g, const std::string& v) {
  auto w = try_vertex_witness(g, v);
  if (!w) fail(Errc::no_witness, "closed star of " + v + " has no non-commuting pair");
  return *w;
}

ArtinSubgroupDescriptor ArtinSubgroupDescriptor::make_vertex_set(
    std::vector<std::string> vertices, std::optional<std::string> star_center) {
  ArtinSubgroupDescriptor d;
  d.kind = DescriptorKind::vertex_set;
  std::sort(vertices.begin(), vertices.end());
  vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
  d.vertices = std::move(vertices);
  d.star_center = std::move(star_center);
  return d;
}

ArtinSubgroupDescriptor ArtinSubgroupDescriptor::make_edge_group(const Edge& e) {
  ArtinSubgroupDescriptor d;
  d.kind = DescriptorKind::edge_group;
  d.edge = e;
  return d;
}

ArtinSubgroupDescriptor ArtinSubgroupDescriptor::make_vertex_delta(const LabeledGraph& g,
                                                                   const std::string& center) {
  ArtinSubgroupDescriptor d;
  d.kind = DescriptorKind::vertex_delta;
  d.center = center;
  std::size_t i = g.index_of(center);
  for (std::size_t j : g.neighbor_indices(i))
    d.incident_edges.push_back(normalized_edge(center, g.name_of(j), g.label_at(i, j)));
  std::sort(d.incident_edges.begin(), d.incident_edges.end());
  return d;
}

std::vector<Word> ArtinSubgroupDescriptor::generators() const {
  std::vector<Word> out;
  auto letter = [](const std::string& v) { return Word{{Letter{v, 1}}}; };
  switch (kind) {
    case DescriptorKind::vertex_set:
      for (const auto& v : vertices) out.push_back(letter(v));
      break;
    case DescriptorKind::edge_group:
      out.push_back(letter(edge.u));
      out.push_back(letter(edge.v));
      break;
    case DescriptorKind::vertex_delta:
      out.push_back(letter(center));
      for (const Edge& e : incident_edges) out.push_back(delta_element(e).word);
      break;
  }
  return out;
}

std::string ArtinSubgroupDescriptor::display_name() const {
  switch (kind) {
    case DescriptorKind::vertex_set: {
      std::string s = "H{";
      for (std::size_t i = 0; i < vertices.size(); ++i) {
        if (i) s += ',';
        s += vertices[i];
      }
      return s + "}";
    }
    case DescriptorKind::edge_group:
      return "H(" + edge.u + "-" + edge.v + ")";
    case DescriptorKind::vertex_delta:
      return "H[" + center + "]";
  }
  return "?";
}

ChainLink ChainLink::of_vertex(std::string v) {
  ChainLink l;
  l.type = Type::vertex;
  l.vertex = std::move(v);
  return l;
}

ChainLink ChainLink::of_delta(DeltaElement d) {
  ChainLink l;
  l.type = Type::delta;
  l.delta = std::move(d);
  return l;
}

bool membership_witness(const std::string& vertex, const ArtinSubgroupDescriptor& h) {
  switch (h.kind) {
    case DescriptorKind::vertex_set:
      return std::binary_search(h.vertices.begin(), h.vertices.end(), vertex);
    case DescriptorKind::edge_group:
      return vertex == h.edge.u || vertex == h.edge.v;
    case DescriptorKind::vertex_delta: {
      if (vertex == h.center) return true;
      Edge probe = normalized_edge(vertex, h.center, 0);
      for (const Edge& e : h.incident_edges)
        if (e.u == probe.u && e.v == probe.v) return e.m == 2;
      return false;
    }
  }
  return false;
}

bool membership_witness(const DeltaElement& d, const ArtinSubgroupDescriptor& h) {
  if (d.word != delta_element(d.edge).word) return false;  // malformed delta proves nothing
  switch (h.kind) {
    case DescriptorKind::vertex_set:
      return false;  // no rule admits a Delta into a plain vertex set
    case DescriptorKind::edge_group:
      return d.edge == h.edge;
    case DescriptorKind::vertex_delta:
      return h.center == d.edge.u || h.center == d.edge.v;
  }
  return false;
}

bool membership_witness(const Word& word, const ArtinSubgroupDescriptor& h) {
  if (word.letters.size() == 1) return membership_witness(word.letters[0].vertex, h);
  switch (h.kind) {
    case DescriptorKind::vertex_set:
      return false;
    case DescriptorKind::edge_group:
      return word == delta_element(h.edge).word;
    case DescriptorKind::vertex_delta:
      for (const Edge& e : h.incident_edges)
        if (word == delta_element(e).word) return true;
      return false;
  }
  return false;
}

bool membership_witness(const ChainLink& link, const ArtinSubgroupDescriptor& h) {
  return link.type == ChainLink::Type::vertex ? membership_witness(link.vertex, h)
                                              : membership_witness(link.delta, h);
}

namespace {

std::vector<std::string> sorted_intersection(const std::vector<std::string>& a,
                                             const std::vector<std::string>& b) {
  std::vector<std::string> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

}  // namespace

std::string select_rigid_center(const LabeledGraph& g, const std::vector<std::string>& star) {
  if (star.size() < 3) fail(Errc::no_center, "star has fewer than 3 vertices");
  EssentialData ess = essential_and_maximal(g);
  std::vector<std::string> key = star;
  std::sort(key.begin(), key.end());
  if (std::find(ess.maximal_stars.begin(), ess.maximal_stars.end(), key) ==
      ess.maximal_stars.end())
    fail(Errc::no_center, "star is not maximal");
  for (const auto& comp : connected_components(g)) {
    if (!std::binary_search(comp.begin(), comp.end(), key[0])) continue;
    if (g.full_subgraph(comp).complete_all_two())
      fail(Errc::no_center, "ambient component is complete with all labels 2");
    break;
  }
  for (const std::string& v : key) {
    StarData sd = star_data(g, v);
    if (sd.star != key) continue;  // st(v') must equal the whole star
    if (try_vertex_witness(g, v)) return v;
  }
  fail(Errc::no_center, "no star vertex admits a nonamenability witness");
}

std::vector<ArtinSubgroupDescriptor> build_generating_family(const LabeledGraph& g) {
  if (!g.connected()) fail(Errc::disconnected, "family is built per connected component");
  if (g.complete_all_two())
    fail(Errc::excluded_graph, "complete graph with all labels 2");
  std::vector<ArtinSubgroupDescriptor> out;
  for (const Edge& e : g.edge_list())
    if (e.m >= 3) out.push_back(ArtinSubgroupDescriptor::make_edge_group(e));
  EssentialData ess = essential_and_maximal(g);
  std::vector<std::string> centers;
  for (const auto& star : ess.maximal_stars)
    if (star.size() >= 3) centers.push_back(select_rigid_center(g, star));
  std::sort(centers.begin(), centers.end());
  for (const auto& c : centers)
    out.push_back(ArtinSubgroupDescriptor::make_vertex_delta(g, c));
  return out;
}

RigidChain raag_rigid_chain(const LabeledGraph& g) {
  for (const Edge& e : g.edge_list())
    if (e.m != 2) fail(Errc::invalid_input, "edge (" + e.u + "," + e.v + ") is not labeled 2");
  if (!g.connected() || g.complete_all_two())
    fail(Errc::excluded_graph, "need a connected, non-complete right-angled graph");

  StarSkeleton sk = star_chain_skeleton(g);
  RigidChain chain;
  std::vector<std::vector<std::string>> stars;
  for (const std::string& w : sk.walk) {
    StarData sd = star_data(g, w);
    stars.push_back(sd.star);
    chain.entries.push_back(ArtinSubgroupDescriptor::make_vertex_set(sd.star, w));
  }
  for (std::size_t i = 0; i + 1 < chain.entries.size(); ++i) {
    auto common = sorted_intersection(stars[i], stars[i + 1]);
    if (common.empty()) fail(Errc::internal, "walk step between disjoint stars");
    chain.links.push_back(ChainLink::of_vertex(common.front()));
  }
  return chain;
}

namespace {

// Label between x and the center c, with x == c reading as a commuting
// (label-2) side for the splice case analysis.
int side_label(const LabeledGraph& g, const std::string& x, const std::string& c) {
  return x == c ? 2 : g.label_of(x, c);
}

}  // namespace

RigidChain artin_rigid_chain(const LabeledGraph& g) {
  if (!g.connected() || g.complete_all_two())
    fail(Errc::excluded_graph, "need a connected graph that is not complete-all-2");

  std::vector<ArtinSubgroupDescriptor> family = build_generating_family(g);
  StarSkeleton sk = star_chain_skeleton(g);

  // Single-edge component: the family is just the edge group.
  if (g.size() == 2) {
    RigidChain chain;
    chain.entries.push_back(ArtinSubgroupDescriptor::make_edge_group(g.edge_list().front()));
    return chain;
  }

  // Walk stars and their selected centers.
  std::vector<std::vector<std::string>> stars;
  std::vector<std::string> centers;
  for (const std::string& w : sk.walk) {
    StarData sd = star_data(g, w);
    if (sd.star.size() < 3) fail(Errc::internal, "undersized maximal star on a walk");
    stars.push_back(sd.star);
    centers.push_back(select_rigid_center(g, sd.star));
  }

  std::set<Edge> used;  // edge groups already present in the chain
  RigidChain chain;
  chain.entries.push_back(ArtinSubgroupDescriptor::make_vertex_delta(g, centers[0]));
  for (std::size_t i = 0; i + 1 < stars.size(); ++i) {
    const std::string& ci = centers[i];
    const std::string& cj = centers[i + 1];
    auto common = sorted_intersection(stars[i], stars[i + 1]);
    if (common.empty()) fail(Errc::internal, "walk step between disjoint stars");

    // Direct witness: a shared vertex commuting with (or equal to) both centers.
    std::string direct;
    for (const std::string& x : common) {
      if (side_label(g, x, ci) == 2 && side_label(g, x, cj) == 2) {
        direct = x;
        break;
      }
    }
    ArtinSubgroupDescriptor next = ArtinSubgroupDescriptor::make_vertex_delta(g, cj);
    if (!direct.empty()) {
      chain.links.push_back(ChainLink::of_vertex(direct));
      chain.entries.push_back(std::move(next));
      continue;
    }

    // Splice edge groups through the least shared vertex.
    const std::string& v = common.front();
    int a = side_label(g, v, ci);
    int b = side_label(g, v, cj);
    if (a >= 3) {
      Edge ei = normalized_edge(v, ci, a);
      chain.links.push_back(ChainLink::of_delta(delta_element(ei)));
      chain.entries.push_back(ArtinSubgroupDescriptor::make_edge_group(ei));
      used.insert(ei);
      if (b >= 3) {
        Edge ej = normalized_edge(v, cj, b);
        chain.links.push_back(ChainLink::of_vertex(v));
        chain.entries.push_back(ArtinSubgroupDescriptor::make_edge_group(ej));
        chain.links.push_back(ChainLink::of_delta(delta_element(ej)));
        used.insert(ej);
      } else {
        chain.links.push_back(ChainLink::of_vertex(v));
      }
      chain.entries.push_back(std::move(next));
    } else {
      // v commutes with c_i (or is c_i); the obstruction is on the far side.
      if (b < 3) fail(Errc::internal, "splice reached with both sides commuting");
      Edge ej = normalized_edge(v, cj, b);
      chain.links.push_back(ChainLink::of_vertex(v));
      chain.entries.push_back(ArtinSubgroupDescriptor::make_edge_group(ej));
      chain.links.push_back(ChainLink::of_delta(delta_element(ej)));
      used.insert(ej);
      chain.entries.push_back(std::move(next));
    }
  }

  // Splice every edge group that has not yet appeared.
  for (const ArtinSubgroupDescriptor& h : family) {
    if (h.kind != DescriptorKind::edge_group || used.count(h.edge)) continue;
    const Edge& e = h.edge;

    // First chain entry whose Delta-center is an endpoint of e.
    std::size_t pos = chain.entries.size();
    for (std::size_t p = 0; p < chain.entries.size(); ++p) {
      const auto& entry = chain.entries[p];
      if (entry.kind == DescriptorKind::vertex_delta &&
          (entry.center == e.u || entry.center == e.v)) {
        pos = p;
        break;
      }
    }
    if (pos < chain.entries.size()) {
      ChainLink dl = ChainLink::of_delta(delta_element(e));
      bool at_tail = pos + 1 == chain.entries.size();
      ArtinSubgroupDescriptor here = chain.entries[pos];
      if (at_tail) {
        chain.entries.push_back(ArtinSubgroupDescriptor::make_edge_group(e));
        chain.links.push_back(dl);
      } else {
        // ... H_c [Δe] H_e [Δe] H_c(copy) ... so the old outgoing link still fits.
        chain.entries.insert(chain.entries.begin() + pos + 1,
                             {ArtinSubgroupDescriptor::make_edge_group(e), here});
        chain.links.insert(chain.links.begin() + pos, {dl, dl});
      }
      used.insert(e);
      continue;
    }

    // No center is an endpoint: sandwich at the first star containing the
    // least endpoint v.
    const std::string& v = e.u;
    std::size_t p = 0;
    std::string w;
    for (; p < chain.entries.size(); ++p) {
      const auto& entry = chain.entries[p];
      if (entry.kind != DescriptorKind::vertex_delta) continue;
      StarData sd = star_data(g, entry.center);
      if (std::binary_search(sd.star.begin(), sd.star.end(), v)) {
        w = entry.center;
        break;
      }
    }
    if (w.empty()) fail(Errc::internal, "endpoint " + v + " lies in no chain star");

    ArtinSubgroupDescriptor hw = chain.entries[p];
    int mvw = g.label_of(v, w);
    std::vector<ArtinSubgroupDescriptor> seg;
    std::vector<ChainLink> seg_links;
    if (mvw == 2) {
      seg = {hw, ArtinSubgroupDescriptor::make_edge_group(e), hw};
      seg_links = {ChainLink::of_vertex(v), ChainLink::of_vertex(v)};
    } else {
      Edge f = normalized_edge(v, w, mvw);
      seg = {hw, ArtinSubgroupDescriptor::make_edge_group(f),
             ArtinSubgroupDescriptor::make_edge_group(e),
             ArtinSubgroupDescriptor::make_edge_group(f), hw};
      seg_links = {ChainLink::of_vertex(w), ChainLink::of_vertex(v), ChainLink::of_vertex(v),
                   ChainLink::of_vertex(w)};
      used.insert(f);
    }
    chain.entries.erase(chain.entries.begin() + p);
    chain.entries.insert(chain.entries.begin() + p, seg.begin(), seg.end());
    chain.links.insert(chain.links.begin() + p, seg_links.begin(), seg_links.end());
    used.insert(e);
  }
  return chain;
}

ChainValidation validate_chain(const RigidChain& chain, const LabeledGraph& g) {
  auto bad = [](std::string detail, Errc code = Errc::invalid_input) {
    return ChainValidation{false, std::move(detail), code};
  };
  if (chain.entries.empty()) return bad("chain has no entries");
  if (chain.links.size() + 1 != chain.entries.size())
    return bad("chain needs exactly one link per consecutive pair");

  try {
    for (std::size_t i = 0; i < chain.entries.size(); ++i) {
      const auto& h = chain.entries[i];
      const std::string where = "entry " + std::to_string(i) + " (" + h.display_name() + ")";
      switch (h.kind) {
        case DescriptorKind::vertex_set: {
          if (h.vertices.empty()) return bad(where + ": empty vertex set");
          for (const auto& v : h.vertices)
            if (!g.find(v)) return bad(where + ": unknown vertex " + v);
          if (h.star_center) {
            StarData sd = star_data(g, *h.star_center);
            if (sd.star != h.vertices) return bad(where + ": vertices are not st(" + *h.star_center + ")");
          }
          break;
        }
        case DescriptorKind::edge_group: {
          if (g.label_of(h.edge.u, h.edge.v) != h.edge.m)
            return bad(where + ": edge not in the graph with this label");
          break;
        }
        case DescriptorKind::vertex_delta: {
          ArtinSubgroupDescriptor fresh = ArtinSubgroupDescriptor::make_vertex_delta(g, h.center);
          if (fresh.incident_edges != h.incident_edges)
            return bad(where + ": incident edges disagree with the graph");
          break;
        }
      }
    }
    for (std::size_t i = 0; i < chain.links.size(); ++i) {
      const auto& l = chain.links[i];
      const std::string where = "link " + std::to_string(i);
      if (l.type == ChainLink::Type::delta) {
        if (g.label_of(l.delta.edge.u, l.delta.edge.v) != l.delta.edge.m)
          return bad(where + ": delta edge not in the graph");
        if (l.delta.word != delta_element(l.delta.edge).word)
          return bad(where + ": delta word does not match its edge");
      } else if (!g.find(l.vertex)) {
        return bad(where + ": unknown vertex " + l.vertex);
      }
      if (!membership_witness(l, chain.entries[i]))
        return bad(where + ": not a member of " + chain.entries[i].display_name(),
                   Errc::broken_link);
      if (!membership_witness(l, chain.entries[i + 1]))
        return bad(where + ": not a member of " + chain.entries[i + 1].display_name(),
                   Errc::broken_link);
    }
  } catch (const Error& e) {
    return bad(e.what());
  }
  return {};
}

bool chain_covers(const RigidChain& chain, const std::vector<std::string>& ambient_vertices) {
  for (const std::string& v : ambient_vertices) {
    bool hit = false;
    for (const auto& h : chain.entries)
      if (membership_witness(v, h)) {
        hit = true;
        break;
      }
    if (!hit) return false;
  }
  return true;
}

}  // namespace rigiditykit
