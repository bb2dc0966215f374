#include "rigiditykit/certificates.hpp"

#include <algorithm>

namespace rigiditykit {

const char* cert_rule_name(CertRule r) noexcept {
  switch (r) {
    case CertRule::product_split: return "product_split";
    case CertRule::infinite_center: return "infinite_center";
    case CertRule::join: return "join";
    case CertRule::wq_normalize: return "wq_normalize";
  }
  return "?";
}

const char* infinite_witness_kind_name(InfiniteWitnessKind k) noexcept {
  switch (k) {
    case InfiniteWitnessKind::non_spherical_subset: return "non_spherical_subset";
    case InfiniteWitnessKind::vertex_generator: return "vertex_generator";
    case InfiniteWitnessKind::cyclic_generator: return "cyclic_generator";
  }
  return "?";
}

const char* wq_witness_form_name(WqWitnessForm f) noexcept {
  return f == WqWitnessForm::perp ? "perp" : "component";
}

InfiniteSubgroupWitness InfiniteSubgroupWitness::of_subset(std::vector<std::string> subset) {
  InfiniteSubgroupWitness w;
  w.kind = InfiniteWitnessKind::non_spherical_subset;
  std::sort(subset.begin(), subset.end());
  subset.erase(std::unique(subset.begin(), subset.end()), subset.end());
  w.subset = std::move(subset);
  return w;
}

InfiniteSubgroupWitness InfiniteSubgroupWitness::of_vertex(std::string v) {
  InfiniteSubgroupWitness w;
  w.kind = InfiniteWitnessKind::vertex_generator;
  w.vertex = std::move(v);
  return w;
}

InfiniteSubgroupWitness InfiniteSubgroupWitness::of_delta(DeltaElement d) {
  InfiniteSubgroupWitness w;
  w.kind = InfiniteWitnessKind::cyclic_generator;
  w.word = d.word;
  w.delta = std::move(d);
  return w;
}

namespace {

std::vector<std::string> sorted_unique(std::vector<std::string> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

// All vertex names a scope mentions.
std::vector<std::string> scope_support(const ScopeDescription& scope) {
  if (scope.family == GraphKind::coxeter) return sorted_unique(scope.vertices);
  std::vector<std::string> out;
  for (const auto& d : scope.descriptors) {
    switch (d.kind) {
      case DescriptorKind::vertex_set:
        out.insert(out.end(), d.vertices.begin(), d.vertices.end());
        break;
      case DescriptorKind::edge_group:
        out.push_back(d.edge.u);
        out.push_back(d.edge.v);
        break;
      case DescriptorKind::vertex_delta:
        out.push_back(d.center);
        for (const Edge& e : d.incident_edges) {
          out.push_back(e.u);
          out.push_back(e.v);
        }
        break;
    }
  }
  return sorted_unique(std::move(out));
}

bool scope_admits(const ScopeDescription& scope, const std::string& v) {
  if (scope.family == GraphKind::coxeter)
    return std::find(scope.vertices.begin(), scope.vertices.end(), v) != scope.vertices.end();
  for (const auto& d : scope.descriptors)
    if (membership_witness(v, d)) return true;
  return false;
}

bool descriptor_in(const std::vector<ArtinSubgroupDescriptor>& list,
                   const ArtinSubgroupDescriptor& d) {
  return std::find(list.begin(), list.end(), d) != list.end();
}

bool same_scope_group(const ScopeDescription& scope, const ScopeDescription& x,
                      const ScopeDescription& y) {
  if (scope.family == GraphKind::coxeter) {
    std::vector<std::string> u = x.vertices;
    u.insert(u.end(), y.vertices.begin(), y.vertices.end());
    return sorted_unique(scope.vertices) == sorted_unique(std::move(u));
  }
  for (const auto& d : scope.descriptors)
    if (!descriptor_in(x.descriptors, d) && !descriptor_in(y.descriptors, d)) return false;
  for (const auto& d : x.descriptors)
    if (!descriptor_in(scope.descriptors, d)) return false;
  for (const auto& d : y.descriptors)
    if (!descriptor_in(scope.descriptors, d)) return false;
  return true;
}

bool subset_nonspherical(const LabeledGraph& g, const std::vector<std::string>& subset) {
  if (subset.empty()) return false;
  // A name outside the graph witnesses nothing.
  for (const auto& v : subset)
    if (!g.find(v)) return false;
  return !subset_properties(sub_system(g, subset)).spherical;
}

}  // namespace

bool subgroup_infinite(const InfiniteSubgroupWitness& witness, const ScopeDescription& scope,
                       const LabeledGraph& g) {
  switch (witness.kind) {
    case InfiniteWitnessKind::non_spherical_subset:
      if (scope.family != GraphKind::coxeter) return false;
      return subset_nonspherical(g, witness.subset);
    case InfiniteWitnessKind::vertex_generator:
      if (scope.family != GraphKind::artin) return false;
      for (const auto& d : scope.descriptors)
        if (membership_witness(witness.vertex, d)) return true;
      return false;
    case InfiniteWitnessKind::cyclic_generator:
      if (scope.family != GraphKind::artin) return false;
      for (const auto& d : scope.descriptors) {
        bool in = witness.delta ? membership_witness(*witness.delta, d)
                                : membership_witness(witness.word, d);
        if (in) return true;
      }
      return false;
  }
  return false;
}

namespace {

struct Checker {
  const LabeledGraph& g;
  std::vector<NodeCheck>& nodes;

  void check(const RigidityCertificate& c, const std::string& path) {
    NodeCheck result{path, c.rule, true, ""};
    try {
      verify(c, result);
    } catch (const Error& e) {
      result.ok = false;
      result.detail = e.what();
    }
    nodes.push_back(result);
    // Children are reported after their parent, depth-first.
    if (c.rule == CertRule::join) {
      if (c.a) check(*c.a, path + ".a");
      if (c.b) check(*c.b, path + ".b");
    } else if (c.rule == CertRule::wq_normalize) {
      if (c.inner) check(*c.inner, path + ".inner");
    }
  }

  void refuse(NodeCheck& r, const std::string& why) {
    r.ok = false;
    if (r.detail.empty()) r.detail = why;
  }

  void verify(const RigidityCertificate& c, NodeCheck& r) {
    switch (c.rule) {
      case CertRule::product_split: return verify_split(c, r);
      case CertRule::infinite_center: return verify_center(c, r);
      case CertRule::join: return verify_join(c, r);
      case CertRule::wq_normalize: return verify_wq(c, r);
    }
  }

  void verify_split(const RigidityCertificate& c, NodeCheck& r) {
    if (c.left.empty() || c.right.empty()) return refuse(r, "a factor is empty");
    auto left = sorted_unique(c.left);
    auto right = sorted_unique(c.right);
    std::vector<std::string> both;
    std::set_intersection(left.begin(), left.end(), right.begin(), right.end(),
                          std::back_inserter(both));
    if (!both.empty()) return refuse(r, "factors share the generator " + both.front());
    for (const auto& x : left)
      for (const auto& y : right)
        if (g.label_of(x, y) != 2)
          return refuse(r, "cross pair (" + x + "," + y + ") is not joined with label 2");
    std::vector<std::string> uni = left;
    uni.insert(uni.end(), right.begin(), right.end());
    uni = sorted_unique(std::move(uni));
    if (uni != scope_support(c.scope))
      return refuse(r, "factors do not cover the scope exactly");
    if (c.scope.family == GraphKind::coxeter) {
      if (!subset_nonspherical(g, left)) return refuse(r, "left factor is spherical");
      if (!subset_nonspherical(g, right)) return refuse(r, "right factor is spherical");
      if (subset_properties(sub_system(g, uni)).amenable)
        return refuse(r, "scope is amenable");
    } else {
      bool noncommuting = false;
      for (std::size_t i = 0; i < uni.size() && !noncommuting; ++i)
        for (std::size_t j = i + 1; j < uni.size() && !noncommuting; ++j)
          if (g.label_of(uni[i], uni[j]) != 2) noncommuting = true;
      if (!noncommuting) return refuse(r, "scope generators pairwise commute");
    }
  }

  void verify_center(const RigidityCertificate& c, NodeCheck& r) {
    if (c.scope.family != GraphKind::artin)
      return refuse(r, "infinite_center needs an artin scope");
    if (!c.subgroup) return refuse(r, "missing subgroup");
    const ArtinSubgroupDescriptor& h = *c.subgroup;
    if (!(c.scope.descriptors.size() == 1 && c.scope.descriptors.front() == h))
      return refuse(r, "scope is not the certified subgroup");
    switch (h.kind) {
      case DescriptorKind::vertex_set:
        return refuse(r, "a plain vertex set has no certified infinite center");
      case DescriptorKind::edge_group: {
        if (g.label_of(h.edge.u, h.edge.v) != h.edge.m)
          return refuse(r, "edge not in the graph with this label");
        if (h.edge.m < 3) return refuse(r, "label-2 edge group is abelian");
        if (c.center_witness != delta_element(h.edge).word)
          return refuse(r, "center witness is not the Delta word of the edge");
        return;
      }
      case DescriptorKind::vertex_delta: {
        ArtinSubgroupDescriptor fresh = ArtinSubgroupDescriptor::make_vertex_delta(g, h.center);
        if (fresh.incident_edges != h.incident_edges)
          return refuse(r, "incident edges disagree with the graph");
        NonamenabilityWitness w = nonamenable_vertex_witness(g, h.center);  // throws no_witness
        if (c.nonamenability && !(*c.nonamenability == w))
          return refuse(r, "stored nonamenability witness disagrees with the graph");
        Word expect{{Letter{h.center, 1}}};
        if (c.center_witness != expect)
          return refuse(r, "center witness is not the center vertex");
        return;
      }
    }
  }

  void verify_join(const RigidityCertificate& c, NodeCheck& r) {
    if (!c.a || !c.b) return refuse(r, "missing child certificate");
    if (c.a->scope.family != c.scope.family || c.b->scope.family != c.scope.family)
      return refuse(r, "child scope family mismatch");
    if (!c.witness) return refuse(r, "missing intersection witness");
    const InfiniteSubgroupWitness& w = *c.witness;
    if (c.scope.family == GraphKind::coxeter) {
      if (w.kind != InfiniteWitnessKind::non_spherical_subset)
        return refuse(r, "coxeter join needs a non-spherical subset witness");
      auto within = [&](const ScopeDescription& s) {
        auto verts = sorted_unique(s.vertices);
        return std::includes(verts.begin(), verts.end(), w.subset.begin(), w.subset.end());
      };
      if (!within(c.a->scope)) return refuse(r, "witness subset escapes the first child scope");
      if (!within(c.b->scope)) return refuse(r, "witness subset escapes the second child scope");
      if (!subgroup_infinite(w, c.scope, g)) return refuse(r, "witness subset is spherical");
    } else {
      if (w.kind == InfiniteWitnessKind::non_spherical_subset)
        return refuse(r, "artin join needs a generator witness");
      if (!subgroup_infinite(w, c.a->scope, g))
        return refuse(r, "witness is not a member of the first child scope");
      if (!subgroup_infinite(w, c.b->scope, g))
        return refuse(r, "witness is not a member of the second child scope");
    }
    if (!same_scope_group(c.scope, c.a->scope, c.b->scope))
      return refuse(r, "scope is not the union of the child scopes");
  }

  void verify_wq(const RigidityCertificate& c, NodeCheck& r) {
    if (c.scope.family != GraphKind::coxeter)
      return refuse(r, "wq_normalize is a coxeter rule here");
    if (!c.inner) return refuse(r, "missing inner certificate");
    if (c.inner->scope.family != c.scope.family)
      return refuse(r, "child scope family mismatch");
    if (c.normalizers.empty()) return refuse(r, "no normalizers");
    auto inner_vertices = sorted_unique(c.inner->scope.vertices);
    auto wit = sorted_unique(c.witness_subset);
    if (wit.empty()) return refuse(r, "empty witness subset");
    if (!std::includes(inner_vertices.begin(), inner_vertices.end(), wit.begin(), wit.end()))
      return refuse(r, "witness subset escapes the inner scope");
    if (!subset_nonspherical(g, wit)) return refuse(r, "witness subset is spherical");
    for (const auto& t : c.normalizers) {
      bool inside = std::binary_search(wit.begin(), wit.end(), t);
      if (inside) continue;
      for (const auto& x : wit)
        if (g.label_of(t, x) != 2)
          return refuse(r, "normalizer " + t + " neither lies in nor commutes with the witness");
    }
    std::vector<std::string> uni = inner_vertices;
    uni.insert(uni.end(), c.normalizers.begin(), c.normalizers.end());
    if (sorted_unique(std::move(uni)) != sorted_unique(c.scope.vertices))
      return refuse(r, "scope is not inner scope plus normalizers");
  }
};

}  // namespace

CertCheckReport check_certificate(const RigidityCertificate& cert, const LabeledGraph& g) {
  CertCheckReport report;
  Checker checker{g, report.nodes};
  checker.check(cert, "root");

  report.coverage_ok = true;
  try {
    std::vector<std::string> support = scope_support(cert.scope);
    if (support.empty()) {
      report.coverage_ok = false;
      report.coverage_detail = "empty root scope";
    } else {
      for (const auto& v : support) g.index_of(v);
      std::vector<std::string> component;
      for (const auto& comp : connected_components(g))
        if (std::binary_search(comp.begin(), comp.end(), support.front())) {
          component = comp;
          break;
        }
      if (!std::includes(component.begin(), component.end(), support.begin(), support.end())) {
        report.coverage_ok = false;
        report.coverage_detail = "root scope spans several components";
      } else if (cert.scope.family == GraphKind::coxeter) {
        if (sorted_unique(cert.scope.vertices) != component) {
          report.coverage_ok = false;
          report.coverage_detail = "root scope does not equal its component";
        }
      } else {
        for (const auto& v : component)
          if (!scope_admits(cert.scope, v)) {
            report.coverage_ok = false;
            report.coverage_detail = "vertex " + v + " is admitted by no root descriptor";
            break;
          }
      }
    }
  } catch (const Error& e) {
    report.coverage_ok = false;
    report.coverage_detail = e.what();
  }

  report.valid = report.coverage_ok;
  for (const NodeCheck& n : report.nodes)
    if (!n.ok) report.valid = false;
  return report;
}

namespace {

RigidityCertificate chain_leaf(const ArtinSubgroupDescriptor& h, const LabeledGraph& g) {
  RigidityCertificate c;
  c.scope.family = GraphKind::artin;
  c.scope.descriptors = {h};
  switch (h.kind) {
    case DescriptorKind::vertex_set: {
      if (!h.star_center)
        fail(Errc::invalid_input, "vertex-set entry without a star center cannot form a leaf");
      c.rule = CertRule::product_split;
      c.left = {*h.star_center};
      for (const auto& v : h.vertices)
        if (v != *h.star_center) c.right.push_back(v);
      break;
    }
    case DescriptorKind::edge_group:
      c.rule = CertRule::infinite_center;
      c.subgroup = h;
      c.center_witness = delta_element(h.edge).word;
      break;
    case DescriptorKind::vertex_delta:
      c.rule = CertRule::infinite_center;
      c.subgroup = h;
      c.center_witness = Word{{Letter{h.center, 1}}};
      c.nonamenability = nonamenable_vertex_witness(g, h.center);
      break;
  }
  return c;
}

}  // namespace

RigidityCertificate chain_to_certificate(const RigidChain& chain, const LabeledGraph& g,
                                         const std::vector<std::string>& ambient_vertices) {
  ChainValidation v = validate_chain(chain, g);
  if (!v.ok) fail(v.code, v.detail);
  if (!chain_covers(chain, ambient_vertices))
    fail(Errc::coverage, "chain entries admit no witness for some ambient vertex");

  RigidityCertificate acc = chain_leaf(chain.entries.front(), g);
  for (std::size_t i = 1; i < chain.entries.size(); ++i) {
    RigidityCertificate leaf = chain_leaf(chain.entries[i], g);
    RigidityCertificate join;
    join.rule = CertRule::join;
    join.scope.family = GraphKind::artin;
    join.scope.descriptors = acc.scope.descriptors;
    for (const auto& d : leaf.scope.descriptors)
      if (!descriptor_in(join.scope.descriptors, d)) join.scope.descriptors.push_back(d);
    const ChainLink& link = chain.links[i - 1];
    join.witness = link.type == ChainLink::Type::vertex
                       ? InfiniteSubgroupWitness::of_vertex(link.vertex)
                       : InfiniteSubgroupWitness::of_delta(link.delta);
    join.a = std::make_shared<RigidityCertificate>(std::move(acc));
    join.b = std::make_shared<RigidityCertificate>(std::move(leaf));
    acc = std::move(join);
  }
  return acc;
}

namespace {

RigidityCertificate build_coxeter(const CoxeterAnalyzer& an, const TDerivation& d) {
  if (an.amenable(d.subset)) fail(Errc::internal, "amenable scope inside a certificate");
  RigidityCertificate c;
  c.scope.family = GraphKind::coxeter;
  c.scope.vertices = an.names_of(d.subset);

  switch (d.rule) {
    case TDerivation::Rule::base_affine:
      fail(Errc::internal, "affine base inside a nonamenable scope");
    case TDerivation::Rule::base_product: {
      bool a1 = an.amenable(d.part1), a2 = an.amenable(d.part2);
      if (a1 && a2) fail(Errc::internal, "two amenable factors in a nonamenable scope");
      std::uint32_t lhs = d.part1, rhs = d.part2;
      if (a1 && !a2) std::swap(lhs, rhs);  // the amenable factor sits on the right
      c.rule = CertRule::product_split;
      c.left = an.names_of(lhs);
      c.right = an.names_of(rhs);
      return c;
    }
    case TDerivation::Rule::op2: {
      const std::uint32_t s0 = d.premise;
      const int s = d.added;
      const std::uint32_t perp = an.perp(s, s0);
      if (!an.amenable(s0)) {
        c.rule = CertRule::wq_normalize;
        c.inner = std::make_shared<RigidityCertificate>(build_coxeter(an, d.premises[0]));
        c.normalizers = {an.universe()[s]};
        c.witness_form = WqWitnessForm::perp;
        c.witness_subset = an.names_of(perp);
        return c;
      }
      std::uint32_t ak = 0;
      for (std::uint32_t comp : an.components(s0))
        if (!an.spherical(comp & perp)) {
          ak = comp;
          break;
        }
      if (!ak) fail(Errc::internal, "op2 side condition lost in translation");
      if (ak & ~perp) fail(Errc::internal, "minimal affine component escapes the perp");
      c.rule = CertRule::product_split;
      c.left = an.names_of(d.subset & ~ak);
      c.right = an.names_of(ak);
      return c;
    }
    case TDerivation::Rule::op3: {
      const bool a1 = an.amenable(d.part1), a2 = an.amenable(d.part2);
      if (!a1 && !a2) {
        c.rule = CertRule::join;
        c.a = std::make_shared<RigidityCertificate>(build_coxeter(an, d.premises[0]));
        c.b = std::make_shared<RigidityCertificate>(build_coxeter(an, d.premises[1]));
        c.witness = InfiniteSubgroupWitness::of_subset(an.names_of(d.part1 & d.part2));
        return c;
      }
      if (a1 != a2) {
        const std::uint32_t sa = a1 ? d.part1 : d.part2;
        const std::uint32_t sb = a1 ? d.part2 : d.part1;
        const TDerivation& inner = a1 ? d.premises[1] : d.premises[0];
        std::uint32_t ak = 0;
        for (std::uint32_t comp : an.components(sa))
          if (!an.spherical(comp & sb)) {
            ak = comp;
            break;
          }
        if (!ak) fail(Errc::internal, "op3 side condition lost in translation");
        if (ak & ~sb) fail(Errc::internal, "common component escapes the nonamenable side");
        c.rule = CertRule::wq_normalize;
        c.inner = std::make_shared<RigidityCertificate>(build_coxeter(an, inner));
        c.normalizers = an.names_of(sa);
        c.witness_form = WqWitnessForm::component;
        c.witness_subset = an.names_of(ak);
        return c;
      }
      // Both sides amenable: split off their common affine component.
      std::uint32_t ck = 0;
      for (std::uint32_t comp : an.components(d.part1))
        if (!an.spherical(comp & d.part2)) {
          ck = comp;
          break;
        }
      if (!ck) fail(Errc::internal, "op3 side condition lost in translation");
      if (ck & ~d.part2) fail(Errc::internal, "common component escapes the second side");
      bool component_of_s2 = false;
      for (std::uint32_t comp : an.components(d.part2)) component_of_s2 |= comp == ck;
      if (!component_of_s2) fail(Errc::internal, "common component is split by the second side");
      c.rule = CertRule::product_split;
      c.left = an.names_of(d.subset & ~ck);
      c.right = an.names_of(ck);
      return c;
    }
  }
  fail(Errc::internal, "unhandled derivation rule");
}

}  // namespace

RigidityCertificate coxeter_rigidity_certificate(const CoxeterSystem& sys) {
  LabeledGraph defining = sys.graph.full_subgraph(sys.subset);
  if (defining.size() == 0 || !defining.connected())
    fail(Errc::disconnected, "certificate needs a connected defining graph");
  CoxeterAnalyzer an(sys);
  const std::uint32_t full = an.full_mask();
  if (an.amenable(full))
    fail(Errc::amenable, "all irreducible components are spherical or affine");
  if (!an.t_member(full)) fail(Errc::not_in_t, "system is outside the closure class");
  return build_coxeter(an, an.t_derivation(full));
}

}  // namespace rigiditykit
