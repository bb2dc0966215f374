#include "rigiditykit/coxeter.hpp"

#include <algorithm>
#include <bit>
#include <tuple>

namespace rigiditykit {

const char* cox_kind_name(CoxKind k) noexcept {
  switch (k) {
    case CoxKind::spherical: return "spherical";
    case CoxKind::affine: return "affine";
    case CoxKind::other_infinite: return "other_infinite";
  }
  return "?";
}

namespace {

IrreducibleClassification spherical_tag(std::string family) {
  return {CoxKind::spherical, std::move(family)};
}
IrreducibleClassification affine_tag(std::string family) {
  return {CoxKind::affine, std::move(family)};
}
IrreducibleClassification other_tag() { return {CoxKind::other_infinite, ""}; }

}  // namespace

IrreducibleClassification classify_irreducible_labels(int n, const int* labels) {
  if (n <= 0) fail(Errc::invalid_input, "empty system");

  // Diagram convention: keep only non-commuting pairs; 0 marks infinity.
  std::vector<std::vector<std::pair<int, int>>> adj(n);
  int edges = 0;
  bool has_inf = false;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      int lab = labels[i * n + j];
      if (lab == 2) continue;
      adj[i].push_back({j, lab});
      adj[j].push_back({i, lab});
      ++edges;
      if (lab == 0) has_inf = true;
    }

  std::vector<char> seen(n, 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    int i = stack.back();
    stack.pop_back();
    for (auto [j, lab] : adj[i])
      if (!seen[j]) {
        seen[j] = 1;
        ++reached;
        stack.push_back(j);
      }
  }
  if (reached != n) fail(Errc::not_irreducible, "system splits into commuting parts");

  if (n == 1) return spherical_tag("A1");
  if (n == 2) {
    int lab = adj[0][0].second;
    if (lab == 0) return affine_tag("~A1");
    return spherical_tag("I2(" + std::to_string(lab) + ")");
  }

  // Rank >= 3: an infinite label fits no table entry.
  if (has_inf) return other_tag();
  if (edges > n) return other_tag();

  bool all3 = true;
  for (int i = 0; i < n; ++i)
    for (auto [j, lab] : adj[i])
      if (lab != 3) all3 = false;

  if (edges == n) {
    // A single cycle; only the all-3 cycle is listed.
    for (int i = 0; i < n; ++i)
      if (adj[i].size() != 2) return other_tag();
    return all3 ? affine_tag("~A" + std::to_string(n - 1)) : other_tag();
  }

  // Tree cases.
  std::vector<int> branch;
  for (int i = 0; i < n; ++i)
    if (adj[i].size() >= 3) branch.push_back(i);

  if (branch.empty()) {
    // Path: read labels end to end, normalize by the lex-smaller direction.
    int start = -1;
    for (int i = 0; i < n && start < 0; ++i)
      if (adj[i].size() == 1) start = i;
    std::vector<int> seq;
    int prev = -1, cur = start;
    while ((int)seq.size() < n - 1) {
      for (auto [j, lab] : adj[cur])
        if (j != prev) {
          seq.push_back(lab);
          prev = cur;
          cur = j;
          break;
        }
    }
    std::vector<int> rev(seq.rbegin(), seq.rend());
    if (rev < seq) seq = std::move(rev);

    auto tail3 = [&](std::size_t from, std::size_t to) {
      for (std::size_t i = from; i < to; ++i)
        if (seq[i] != 3) return false;
      return true;
    };
    if (all3) return spherical_tag("A" + std::to_string(n));
    if (seq.back() == 4 && tail3(0, seq.size() - 1))
      return spherical_tag("B" + std::to_string(n));
    if (seq.front() == 4 && seq.back() == 4 && tail3(1, seq.size() - 1))
      return affine_tag("~C" + std::to_string(n - 1));
    if (n == 4 && seq == std::vector<int>{3, 4, 3}) return spherical_tag("F4");
    if (n == 5 && seq == std::vector<int>{3, 3, 4, 3}) return affine_tag("~F4");
    if (n == 3 && seq == std::vector<int>{3, 5}) return spherical_tag("H3");
    if (n == 4 && seq == std::vector<int>{3, 3, 5}) return spherical_tag("H4");
    if (n == 3 && seq == std::vector<int>{3, 6}) return affine_tag("~G2");
    return other_tag();
  }

  if (branch.size() == 1) {
    int b = branch[0];
    std::size_t deg = adj[b].size();
    if (deg >= 5) return other_tag();

    // Arms from the branch vertex, labels recorded branch-to-leaf.
    std::vector<std::vector<int>> arms;
    for (auto [first, lab0] : adj[b]) {
      std::vector<int> arm{lab0};
      int prev = b, cur = first;
      while (adj[cur].size() == 2) {
        for (auto [j, lab] : adj[cur])
          if (j != prev) {
            arm.push_back(lab);
            prev = cur;
            cur = j;
            break;
          }
      }
      arms.push_back(std::move(arm));
    }
    std::sort(arms.begin(), arms.end(),
              [](const auto& x, const auto& y) { return x.size() < y.size(); });

    if (deg == 4) {
      bool star = arms.size() == 4 && arms.back().size() == 1;
      return star && all3 ? affine_tag("~D4") : other_tag();
    }

    std::size_t a1 = arms[0].size(), a2 = arms[1].size(), a3 = arms[2].size();
    if (all3) {
      if (a1 == 1 && a2 == 1) return spherical_tag("D" + std::to_string(n));
      if (a1 == 1 && a2 == 2 && a3 == 2) return spherical_tag("E6");
      if (a1 == 1 && a2 == 2 && a3 == 3) return spherical_tag("E7");
      if (a1 == 1 && a2 == 2 && a3 == 4) return spherical_tag("E8");
      if (a1 == 2 && a2 == 2 && a3 == 2) return affine_tag("~E6");
      if (a1 == 1 && a2 == 3 && a3 == 3) return affine_tag("~E7");
      if (a1 == 1 && a2 == 2 && a3 == 5) return affine_tag("~E8");
      return other_tag();
    }
    // One 4 at the leaf end of a longest arm of shape (1,1,k), rest 3.
    if (a1 != 1 || a2 != 1) return other_tag();
    int fours = 0;
    bool placed = false;
    for (const auto& arm : arms)
      for (std::size_t i = 0; i < arm.size(); ++i) {
        if (arm[i] == 3) continue;
        if (arm[i] != 4) return other_tag();
        ++fours;
        if (i + 1 == arm.size() && arm.size() == a3) placed = true;
      }
    if (fours == 1 && placed) return affine_tag("~B" + std::to_string(n - 1));
    return other_tag();
  }

  if (branch.size() == 2 && all3) {
    for (int b : branch) {
      if (adj[b].size() != 3) return other_tag();
      int leaf_neighbors = 0;
      for (auto [j, lab] : adj[b])
        if (adj[j].size() == 1) ++leaf_neighbors;
      if (leaf_neighbors != 2) return other_tag();
    }
    return affine_tag("~D" + std::to_string(n - 1));
  }
  return other_tag();
}

CoxeterSystem full_system(LabeledGraph g) {
  std::vector<std::string> subset = g.vertex_names();
  return {std::move(g), std::move(subset)};
}

CoxeterSystem sub_system(const LabeledGraph& g, std::vector<std::string> subset) {
  std::sort(subset.begin(), subset.end());
  subset.erase(std::unique(subset.begin(), subset.end()), subset.end());
  for (const auto& v : subset) g.index_of(v);  // throws on unknown names
  return {g, std::move(subset)};
}

namespace {

// Dense label matrix of a subset (0 = absent edge).
struct SmallSystem {
  int n = 0;
  std::vector<std::string> names;
  std::vector<int> labels;

  int label(int i, int j) const { return labels[i * n + j]; }
};

SmallSystem build_small(const LabeledGraph& g, std::vector<std::string> subset) {
  std::sort(subset.begin(), subset.end());
  subset.erase(std::unique(subset.begin(), subset.end()), subset.end());
  SmallSystem s;
  s.n = (int)subset.size();
  s.labels.assign((std::size_t)s.n * s.n, 0);
  std::vector<std::size_t> idx;
  for (const auto& v : subset) idx.push_back(g.index_of(v));
  for (int i = 0; i < s.n; ++i)
    for (int j = 0; j < s.n; ++j)
      if (i != j) s.labels[i * s.n + j] = g.label_at(idx[i], idx[j]);
  s.names = std::move(subset);
  return s;
}

std::vector<std::vector<int>> noncommuting_components(const SmallSystem& s) {
  std::vector<int> comp(s.n, -1);
  int next = 0;
  for (int seed = 0; seed < s.n; ++seed) {
    if (comp[seed] != -1) continue;
    comp[seed] = next;
    std::vector<int> stack{seed};
    while (!stack.empty()) {
      int i = stack.back();
      stack.pop_back();
      for (int j = 0; j < s.n; ++j)
        if (j != i && comp[j] == -1 && s.label(i, j) != 2) {
          comp[j] = next;
          stack.push_back(j);
        }
    }
    ++next;
  }
  std::vector<std::vector<int>> out(next);
  for (int i = 0; i < s.n; ++i) out[comp[i]].push_back(i);
  return out;  // seeds ascend: ordered by least vertex
}

IrreducibleClassification classify_indices(const SmallSystem& s, const std::vector<int>& part) {
  int k = (int)part.size();
  std::vector<int> sub((std::size_t)k * k, 0);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      if (i != j) sub[i * k + j] = s.label(part[i], part[j]);
  return classify_irreducible_labels(k, sub.data());
}

bool small_spherical(const SmallSystem& s) {
  if (s.n == 0) return true;
  for (const auto& part : noncommuting_components(s))
    if (classify_indices(s, part).kind != CoxKind::spherical) return false;
  return true;
}

}  // namespace

std::vector<std::vector<std::string>> irreducible_components(const CoxeterSystem& sys) {
  SmallSystem s = build_small(sys.graph, sys.subset);
  std::vector<std::vector<std::string>> out;
  for (const auto& part : noncommuting_components(s)) {
    std::vector<std::string> names;
    for (int i : part) names.push_back(s.names[i]);
    out.push_back(std::move(names));
  }
  return out;
}

IrreducibleClassification classify_irreducible(const CoxeterSystem& sys) {
  SmallSystem s = build_small(sys.graph, sys.subset);
  if (s.n == 0) fail(Errc::invalid_input, "empty system");
  return classify_irreducible_labels(s.n, s.labels.data());
}

SubsetProperties subset_properties(const CoxeterSystem& sys) {
  SmallSystem s = build_small(sys.graph, sys.subset);
  SubsetProperties out;
  auto comps = noncommuting_components(s);
  out.spherical = true;
  out.amenable = true;
  for (const auto& part : comps) {
    CoxKind k = classify_indices(s, part).kind;
    if (k != CoxKind::spherical) out.spherical = false;
    if (k == CoxKind::other_infinite) out.amenable = false;
  }
  out.affine_irreducible =
      comps.size() == 1 && classify_indices(s, comps[0]).kind == CoxKind::affine;

  out.minimal_nonspherical = !out.spherical && s.n > 0;
  if (out.minimal_nonspherical) {
    // Spherical is subset-monotone, so the co-vertex subsets decide it.
    for (int drop = 0; drop < s.n && out.minimal_nonspherical; ++drop) {
      std::vector<std::string> rest;
      for (int i = 0; i < s.n; ++i)
        if (i != drop) rest.push_back(s.names[i]);
      if (!small_spherical(build_small(sys.graph, rest))) out.minimal_nonspherical = false;
    }
  }

  for (int i = 0; i < s.n; ++i) {
    std::vector<std::string> p;
    for (int j = 0; j < s.n; ++j)
      if (j != i && s.label(i, j) == 2) p.push_back(s.names[j]);
    out.perp[s.names[i]] = std::move(p);
  }
  return out;
}

CoxeterAnalyzer::CoxeterAnalyzer(const CoxeterSystem& sys) {
  SmallSystem s = build_small(sys.graph, sys.subset);
  if (s.n > 16) fail(Errc::too_large, "subset closure is capped at 16 generators");
  n_ = s.n;
  names_ = std::move(s.names);
  labels_ = std::move(s.labels);
  noncommuting_.assign(n_, 0);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j)
      if (j != i && labels_[i * n_ + j] != 2) noncommuting_[i] |= 1u << j;
  spherical_.assign(std::size_t{1} << n_, -1);
  amenable_.assign(std::size_t{1} << n_, -1);
}

std::uint32_t CoxeterAnalyzer::mask_of(const std::vector<std::string>& names) const {
  std::uint32_t m = 0;
  for (const auto& v : names) {
    auto it = std::lower_bound(names_.begin(), names_.end(), v);
    if (it == names_.end() || *it != v) fail(Errc::unknown_vertex, "\"" + v + "\"");
    m |= 1u << (it - names_.begin());
  }
  return m;
}

std::vector<std::string> CoxeterAnalyzer::names_of(std::uint32_t mask) const {
  std::vector<std::string> out;
  for (int i = 0; i < n_; ++i)
    if (mask >> i & 1) out.push_back(names_[i]);
  return out;
}

std::vector<std::uint32_t> CoxeterAnalyzer::components(std::uint32_t mask) const {
  std::vector<std::uint32_t> out;
  std::uint32_t rest = mask;
  while (rest) {
    std::uint32_t comp = rest & (~rest + 1);  // least bit
    std::uint32_t frontier = comp;
    while (frontier) {
      std::uint32_t next = 0;
      for (int i = 0; i < n_; ++i)
        if (frontier >> i & 1) next |= noncommuting_[i] & mask;
      frontier = next & ~comp;
      comp |= frontier;
    }
    out.push_back(comp);
    rest &= ~comp;
  }
  return out;
}

IrreducibleClassification CoxeterAnalyzer::classify_component(std::uint32_t cmask) const {
  std::vector<int> part;
  for (int i = 0; i < n_; ++i)
    if (cmask >> i & 1) part.push_back(i);
  int k = (int)part.size();
  std::vector<int> sub((std::size_t)k * k, 0);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      if (i != j) sub[i * k + j] = label(part[i], part[j]);
  return classify_irreducible_labels(k, sub.data());
}

bool CoxeterAnalyzer::spherical(std::uint32_t mask) const {
  if (mask == 0) return true;
  signed char& memo = spherical_[mask];
  if (memo < 0) {
    bool s = true;
    for (std::uint32_t c : components(mask))
      if (classify_component(c).kind != CoxKind::spherical) {
        s = false;
        break;
      }
    memo = s ? 1 : 0;
  }
  return memo == 1;
}

bool CoxeterAnalyzer::affine_irreducible(std::uint32_t mask) const {
  if (mask == 0) return false;
  auto comps = components(mask);
  return comps.size() == 1 && classify_component(comps[0]).kind == CoxKind::affine;
}

bool CoxeterAnalyzer::amenable(std::uint32_t mask) const {
  if (mask == 0) return true;
  signed char& memo = amenable_[mask];
  if (memo < 0) {
    bool a = true;
    for (std::uint32_t c : components(mask))
      if (classify_component(c).kind == CoxKind::other_infinite) {
        a = false;
        break;
      }
    memo = a ? 1 : 0;
  }
  return memo == 1;
}

bool CoxeterAnalyzer::minimal_nonspherical(std::uint32_t mask) const {
  if (mask == 0 || spherical(mask)) return false;
  for (int i = 0; i < n_; ++i)
    if ((mask >> i & 1) && !spherical(mask & ~(1u << i))) return false;
  return true;
}

std::uint32_t CoxeterAnalyzer::perp(int i, std::uint32_t within) const {
  std::uint32_t m = 0;
  for (int j = 0; j < n_; ++j)
    if (j != i && (within >> j & 1) && label(i, j) == 2) m |= 1u << j;
  return m;
}

void CoxeterAnalyzer::ensure_closure() const {
  if (closed_) return;
  const std::uint32_t full = full_mask();
  layer_.assign((std::size_t{1} << n_), -1);
  std::vector<std::uint32_t> order;

  for (std::uint32_t m = 1; m <= full && full; ++m) {
    auto comps = components(m);
    bool seed = false;
    if (comps.size() == 1 && std::popcount(m) >= 3)
      seed = classify_component(comps[0]).kind == CoxKind::affine;
    else if (comps.size() == 2)
      seed = !spherical(comps[0]) && !spherical(comps[1]);
    if (seed) {
      layer_[m] = 0;
      order.push_back(m);
    }
  }

  for (std::size_t head = 0; head < order.size(); ++head) {
    const std::uint32_t m = order[head];
    const int l = layer_[m];
    // op2: extend by one generator whose perp inside m is non-spherical.
    std::uint32_t outside = full & ~m;
    while (outside) {
      int s = std::countr_zero(outside);
      outside &= outside - 1;
      std::uint32_t grown = m | (1u << s);
      if (layer_[grown] == -1 && !spherical(perp(s, m))) {
        layer_[grown] = l + 1;
        order.push_back(grown);
      }
    }
    // op3: union with every member of layer <= l (discovery order is
    // layer-sorted, so everything after the first deeper entry is too new).
    for (std::uint32_t m2 : order) {
      if (layer_[m2] > l) break;
      std::uint32_t u = m | m2;
      if (layer_[u] != -1) continue;
      if (!spherical(m & m2)) {
        layer_[u] = l + 1;
        order.push_back(u);
      }
    }
  }
  closed_ = true;
}

bool CoxeterAnalyzer::t_member(std::uint32_t mask) const {
  ensure_closure();
  if (mask > full_mask()) fail(Errc::invalid_input, "mask outside the universe");
  return mask != 0 && layer_[mask] != -1;
}

int CoxeterAnalyzer::t_layer(std::uint32_t mask) const {
  ensure_closure();
  if (mask > full_mask()) fail(Errc::invalid_input, "mask outside the universe");
  return mask == 0 ? -1 : layer_[mask];
}

TDerivation CoxeterAnalyzer::derive(std::uint32_t mask,
                                    std::vector<std::optional<TDerivation>>& memo) const {
  if (memo[mask]) return *memo[mask];
  const int l = layer_[mask];
  TDerivation d;
  d.subset = mask;
  if (l == 0) {
    auto comps = components(mask);
    if (comps.size() == 1) {
      d.rule = TDerivation::Rule::base_affine;
    } else {
      d.rule = TDerivation::Rule::base_product;
      d.part1 = comps[0];
      d.part2 = comps[1];
    }
  } else {
    bool found = false;
    for (int s = 0; s < n_ && !found; ++s) {
      if (!(mask >> s & 1)) continue;
      std::uint32_t s0 = mask & ~(1u << s);
      if (s0 == 0 || layer_[s0] < 0 || layer_[s0] >= l) continue;
      if (spherical(perp(s, s0))) continue;
      d.rule = TDerivation::Rule::op2;
      d.added = s;
      d.premise = s0;
      d.premises.push_back(derive(s0, memo));
      found = true;
    }
    if (!found) {
      // Minimal (|S1|+|S2|, S1, S2) cover with both premises strictly
      // shallower and a non-spherical intersection.
      std::tuple<int, std::uint32_t, std::uint32_t> best{-1, 0, 0};
      for (std::uint32_t s1 = mask; s1; s1 = (s1 - 1) & mask) {
        if (s1 == mask) continue;
        if (layer_[s1] < 0 || layer_[s1] >= l) continue;
        std::uint32_t base = mask & ~s1;
        for (std::uint32_t t = s1;; t = (t - 1) & s1) {
          std::uint32_t s2 = base | t;
          if (s2 != mask && layer_[s2] >= 0 && layer_[s2] < l && !spherical(s1 & s2)) {
            std::tuple<int, std::uint32_t, std::uint32_t> cand{
                std::popcount(s1) + std::popcount(s2), s1, s2};
            if (std::get<0>(best) < 0 || cand < best) best = cand;
          }
          if (t == 0) break;
        }
      }
      if (std::get<0>(best) < 0) fail(Errc::internal, "member without a reconstructible rule");
      d.rule = TDerivation::Rule::op3;
      d.part1 = std::get<1>(best);
      d.part2 = std::get<2>(best);
      d.premises.push_back(derive(d.part1, memo));
      d.premises.push_back(derive(d.part2, memo));
    }
  }
  memo[mask] = d;
  return d;
}

TDerivation CoxeterAnalyzer::t_derivation(std::uint32_t mask) const {
  if (!t_member(mask)) fail(Errc::not_in_t, "subset is not in the closure class");
  std::vector<std::optional<TDerivation>> memo(std::size_t{1} << n_);
  return derive(mask, memo);
}

TMembership t_membership(const CoxeterSystem& sys) {
  CoxeterAnalyzer a(sys);
  TMembership out;
  out.member = a.t_member(a.full_mask());
  if (out.member) out.derivation = a.t_derivation(a.full_mask());
  return out;
}

RelHypVerdict relative_hyperbolicity_verdict(const CoxeterSystem& sys) {
  CoxeterAnalyzer a(sys);
  bool member = a.t_member(a.full_mask());
  return {member, member};
}

}  // namespace rigiditykit
