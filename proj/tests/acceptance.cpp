// Acceptance suite: one line per criterion, nonzero exit when any fails.
// `acceptance --write-golden` regenerates tests/golden/ from the current
// serializers instead of checking against it.

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <bit>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "rigiditykit/artin.hpp"
#include "rigiditykit/census.hpp"
#include "rigiditykit/certificates.hpp"
#include "rigiditykit/coxeter.hpp"
#include "rigiditykit/json_io.hpp"
#include "rigiditykit/l2me.hpp"
#include "rigiditykit/reports.hpp"

#include "coxeter_tables.hpp"
#include "spectral_oracle.hpp"
#include "test_util.hpp"

using namespace rigiditykit;
using namespace rigiditykit::testing;
using Clock = std::chrono::steady_clock;

namespace {

struct CheckFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void require(bool ok, const std::string& what) {
  if (!ok) throw CheckFailure(what);
}

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string golden_path(const std::string& name) {
  return std::string(RIGIDITYKIT_TESTS_DIR) + "/golden/" + name;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  require(bool(in), "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::string describe_labels(int n, const int* labels) {
  std::string out = "n=" + std::to_string(n) + " labels=[";
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      out += (i + j == 1 ? "" : " ") + std::to_string(labels[i * n + j]);
  return out + "]";
}

int failures = 0;

void criterion(int number, const std::string& title, double budget_seconds,
               const std::function<std::string()>& body) {
  const auto t0 = Clock::now();
  std::string detail, problem;
  try {
    detail = body();
  } catch (const std::exception& e) {
    problem = e.what();
  }
  const double dt = seconds_since(t0);
  if (problem.empty() && budget_seconds > 0 && dt > budget_seconds) {
    std::ostringstream msg;
    msg << "exceeded the " << budget_seconds << "s budget";
    problem = msg.str();
  }
  if (problem.empty()) {
    std::printf("criterion %d (%s): PASS  [%.2fs]%s%s\n", number, title.c_str(), dt,
                detail.empty() ? "" : " ", detail.c_str());
  } else {
    ++failures;
    std::printf("criterion %d (%s): FAIL  [%.2fs] %s\n", number, title.c_str(), dt,
                problem.c_str());
  }
  std::fflush(stdout);
}

// ---------------------------------------------------------------------------
// 1. The worked commensurability pair.

std::string worked_pair() {
  const auto s1 = FreeProductSpec::from_factors({{2, 2}, {2, 2}});
  const auto s2 = FreeProductSpec::from_factors({{3, 2}, {2, 2}, {2, 2}});
  const auto verdict = me_witness(s1, s2);
  require(verdict.proportional && verdict.witness.has_value(),
          "the pair must come out proportional with a witness");
  const auto& w = *verdict.witness;
  require(w.ratio == Rational{1, 2}, "ratio must be 1/2");
  require(w.x == 3, "common cover rank x must be 3");
  require(w.index_1 == 8 && w.index_2 == 4, "indices must be N1=8, N2=4");
  require(w.kurosh_1 == w.kurosh_2, "both sides must reach the same subgroup");
  require(w.kurosh_1.vertex_counts == std::map<int, BigInt>{{2, 4}} && w.kurosh_1.free_rank == 5,
          "common subgroup must be (F_3 x F_3)^{*4} * F_5");

  const auto action = build_and_verify_action(s1, s2, w);
  require(action.side1.edge_count == 16 && action.side1.vertex_count == 12,
          "side 1 orbit graph must have E=16, V=12");
  require(action.side2.edge_count == 12 && action.side2.vertex_count == 8,
          "side 2 orbit graph must have E=12, V=8");
  require(action.side1.connected && action.side2.connected, "orbit graphs must be connected");

  // Euler characteristic is multiplicative in the index, as exact integers.
  require(kurosh_euler(w.kurosh_1, w.x) == w.index_1 * euler_characteristic(s1),
          "chi(H) must equal N1 * chi(G1)");
  require(kurosh_euler(w.kurosh_2, w.x) == w.index_2 * euler_characteristic(s2),
          "chi(H) must equal N2 * chi(G2)");
  return "c=1/2 x=3 N=(8,4) H=(F_3xF_3)^{*4}*F_5";
}

// ---------------------------------------------------------------------------
// 2. Alternating Betti sum against the Euler characteristic.

std::string betti_euler_oracle() {
  std::mt19937_64 rng(0x9e3779b97f4a7c15ull);
  int checked = 0;
  for (int round = 0; round < 600; ++round) {
    const int n = 1 + int(rng() % 5);
    std::vector<std::vector<long long>> factors;
    for (int i = 0; i < n; ++i) {
      const int k = 2 + int(rng() % 3);
      std::vector<long long> tuple;
      for (int j = 0; j < k; ++j) tuple.push_back(2 + static_cast<long long>(rng() % 5));
      factors.push_back(std::move(tuple));
    }
    const auto spec = FreeProductSpec::from_factors(std::move(factors));
    const auto betti = betti_vector(spec);
    BigInt alternating = 0;
    for (const auto& [m, value] : betti.values)
      alternating += (m % 2 == 0) ? value : -value;
    require(alternating == euler_characteristic(spec),
            "alternating Betti sum must equal chi exactly");
    ++checked;
  }
  return std::to_string(checked) + " random specs, exact equality";
}

// ---------------------------------------------------------------------------
// 3. The two-factor family: equal weight forces one common subgroup.

std::string proportional_family() {
  std::vector<std::array<long long, 2>> tuples;
  for (long long a = 2; a <= 5; ++a)
    for (long long b = a; b <= 5; ++b) tuples.push_back({a, b});

  struct Instance {
    FreeProductSpec spec;
    long long weight = 0;  // (a-1)(b-1) + (p-1)(q-1), the degree-2 Betti number
  };
  std::vector<Instance> instances;
  for (std::size_t i = 0; i < tuples.size(); ++i)
    for (std::size_t j = i; j < tuples.size(); ++j) {
      auto spec = FreeProductSpec::from_factors(
          {{tuples[i][0], tuples[i][1]}, {tuples[j][0], tuples[j][1]}});
      const long long weight = (tuples[i][0] - 1) * (tuples[i][1] - 1) +
                               (tuples[j][0] - 1) * (tuples[j][1] - 1);
      instances.push_back({std::move(spec), weight});
    }
  require(instances.size() == 55, "expected 55 two-factor instances with entries <= 5");

  const auto pinned_1 = FreeProductSpec::from_factors({{2, 2}, {3, 4}});
  const auto pinned_2 = FreeProductSpec::from_factors({{2, 4}, {3, 3}});
  bool pinned_seen = false;
  int pairs = 0;
  for (std::size_t i = 0; i < instances.size(); ++i)
    for (std::size_t j = i; j < instances.size(); ++j) {
      if (instances[i].weight != instances[j].weight) continue;
      const auto& s1 = instances[i].spec;
      const auto& s2 = instances[j].spec;
      const auto verdict = me_witness(s1, s2);
      require(verdict.proportional && verdict.witness.has_value(),
              "equal weight must give a witness");
      require(verdict.witness->ratio == Rational{1, 1}, "equal weight means ratio 1");
      require(verdict.witness->kurosh_1 == verdict.witness->kurosh_2,
              "both sides must reach the same subgroup");
      const auto action = build_and_verify_action(s1, s2, *verdict.witness);
      require(action.side1.connected && action.side2.connected,
              "orbit graphs must be connected");
      ++pairs;
      if ((s1 == pinned_1 && s2 == pinned_2) || (s1 == pinned_2 && s2 == pinned_1)) {
        const auto& w = *verdict.witness;
        require(w.x == 7 && w.index_1 == 36 && w.index_2 == 36,
                "pinned instance must land at x=7, N=36");
        require(w.kurosh_1.vertex_counts == std::map<int, BigInt>{{2, 7}} &&
                    w.kurosh_1.free_rank == 30,
                "pinned instance must give (F_7 x F_7)^{*7} * F_30");
        pinned_seen = true;
      }
    }
  require(pinned_seen, "the [[2,2],[3,4]] vs [[2,4],[3,3]] instance must be enumerated");
  require(pairs > 55, "the family must contain distinct equal-weight pairs");
  return std::to_string(pairs) + " equal-weight pairs verified";
}

// ---------------------------------------------------------------------------
// 4. Diagram recognizer against the spectral oracle.

// Builds the co-vertex label submatrix with vertex `drop` removed.
std::vector<int> drop_vertex(int n, const int* labels, int drop) {
  std::vector<int> sub((n - 1) * (n - 1));
  int r = 0;
  for (int i = 0; i < n; ++i) {
    if (i == drop) continue;
    int c = 0;
    for (int j = 0; j < n; ++j) {
      if (j == drop) continue;
      sub[r * (n - 1) + c] = labels[i * n + j];
      ++c;
    }
    ++r;
  }
  return sub;
}

void check_tables() {
  for (const auto& d : table_diagrams_rank_at_most_8()) {
    const auto cls = classify_irreducible_labels(d.n, d.labels.data());
    require(cls.kind == d.kind && cls.family == d.family,
            "recognizer must accept " + d.family);
    const Eigen::MatrixXd gram = gram_matrix(d.n, d.labels.data());
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(gram, Eigen::EigenvaluesOnly);
    const auto& ev = solver.eigenvalues();
    if (d.kind == CoxKind::spherical) {
      require(ev(0) > kSpectralTol, d.family + " must have a positive definite Gram matrix");
    } else {
      require(std::abs(ev(0)) <= kSpectralTol, d.family + " must have a kernel");
      require(d.n >= 2 && ev(1) > kSpectralTol, d.family + " must have a 1-dimensional kernel");
      // Minimal non-sphericality: principal submatrices of PD matrices stay
      // PD, so positive-definite co-vertex subsystems cover all proper
      // subsets.
      for (int drop = 0; drop < d.n; ++drop) {
        const auto sub = drop_vertex(d.n, d.labels.data(), drop);
        require(positive_definite(d.n - 1, sub.data()),
                d.family + ": every co-vertex subsystem must be spherical");
      }
      require(subset_properties(full_system(graph_of(d.n, d.labels))).minimal_nonspherical,
              d.family + " must be minimal non-spherical");
    }
  }
}

// Exhaustive sweep over one representative per relabeling class: a code is
// kept when no adjacent vertex transposition produces a lexicographically
// smaller label matrix, which keeps at least the least member of every class.
std::pair<long long, long long> sweep_exhaustive(int n) {
  const int pair_count = n * (n - 1) / 2;
  int pidx[6][6] = {};
  std::vector<std::pair<int, int>> vertex_pairs;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      pidx[i][j] = int(vertex_pairs.size());
      vertex_pairs.push_back({i, j});
    }

  // moved[t]: ascending positions where transposition (t, t+1) relocates a
  // pair, with the source position of the image digit.
  std::vector<std::vector<std::pair<int, int>>> moved(std::max(0, n - 1));
  for (int t = 0; t + 1 < n; ++t) {
    const auto sigma = [&](int v) { return v == t ? t + 1 : (v == t + 1 ? t : v); };
    for (int k = 0; k < pair_count; ++k) {
      int i = sigma(vertex_pairs[k].first), j = sigma(vertex_pairs[k].second);
      if (i > j) std::swap(i, j);
      if (pidx[i][j] != k) moved[t].push_back({k, pidx[i][j]});
    }
  }

  static const int digit_label[6] = {0, 2, 3, 4, 5, 6};
  std::vector<int> digits(pair_count, 0);
  int labels[36] = {};
  long long representatives = 0, irreducible = 0;
  for (;;) {
    bool canonical = true;
    for (int t = 0; t + 1 < n && canonical; ++t) {
      for (const auto& [k, m] : moved[t]) {
        const int diff = digits[m] - digits[k];
        if (diff < 0) {
          canonical = false;
          break;
        }
        if (diff > 0) break;
      }
    }
    if (canonical) {
      ++representatives;
      unsigned adjacency[6] = {};
      for (int k = 0; k < pair_count; ++k)
        if (digits[k] != 1) {
          adjacency[vertex_pairs[k].first] |= 1u << vertex_pairs[k].second;
          adjacency[vertex_pairs[k].second] |= 1u << vertex_pairs[k].first;
        }
      unsigned seen = 1, frontier = 1;
      while (frontier) {
        unsigned next = 0;
        for (unsigned rest = frontier; rest;) {
          const int v = std::countr_zero(rest);
          rest &= rest - 1;
          next |= adjacency[v];
        }
        frontier = next & ~seen;
        seen |= next;
      }
      if (seen == (1u << n) - 1u) {
        ++irreducible;
        for (int i = 0; i < n; ++i) labels[i * n + i] = 0;
        for (int k = 0; k < pair_count; ++k) {
          const int value = digit_label[digits[k]];
          labels[vertex_pairs[k].first * n + vertex_pairs[k].second] = value;
          labels[vertex_pairs[k].second * n + vertex_pairs[k].first] = value;
        }
        const auto cls = classify_irreducible_labels(n, labels);
        if (cls.kind != spectral_kind(n, labels))
          throw CheckFailure("recognizer/oracle disagreement at " + describe_labels(n, labels));
      }
    }
    int pos = 0;
    while (pos < pair_count && ++digits[pos] == 6) digits[pos++] = 0;
    if (pos == pair_count) break;
  }
  return {representatives, irreducible};
}

// Six vertices. Both sides reject any irreducible system with a non-spherical
// proper subsystem: the Gram matrix is I - C with C nonnegative and
// irreducible, the Perron value of C strictly exceeds that of every proper
// principal submatrix, so the least Gram eigenvalue goes strictly negative;
// and no table diagram contains a non-spherical proper subdiagram. A
// disagreement is therefore only possible when every co-vertex subsystem is
// spherical. Spherical systems have finite labels and forest non-commuting
// graphs, so such a system has labels in {2,..,6} and every co-vertex
// restriction of its non-commuting graph acyclic: connected, that leaves the
// spanning trees and the plain 6-cycle enumerated here.
struct SixVertexTally {
  long long candidates = 0;
  long long spherical = 0;
  long long affine = 0;
  std::set<std::string> spherical_families;
  std::set<std::string> affine_families;
};

void check_six_candidate(const std::vector<std::pair<int, int>>& edges, int edge_labels,
                         SixVertexTally& tally) {
  int labels[36];
  std::fill(labels, labels + 36, 2);
  for (int i = 0; i < 6; ++i) labels[i * 6 + i] = 0;
  for (std::size_t e = 0; e < edges.size(); ++e) {
    const int value = 3 + ((edge_labels >> (2 * e)) & 3);
    labels[edges[e].first * 6 + edges[e].second] = value;
    labels[edges[e].second * 6 + edges[e].first] = value;
  }
  const auto cls = classify_irreducible_labels(6, labels);
  const auto kind = spectral_kind(6, labels);
  if (cls.kind != kind)
    throw CheckFailure("recognizer/oracle disagreement at " + describe_labels(6, labels));
  ++tally.candidates;
  if (kind == CoxKind::spherical) {
    ++tally.spherical;
    tally.spherical_families.insert(cls.family);
  } else if (kind == CoxKind::affine) {
    ++tally.affine;
    tally.affine_families.insert(cls.family);
  }
}

SixVertexTally sweep_six_vertices() {
  SixVertexTally tally;

  // Spanning trees, one per Pruefer sequence.
  for (int seq_code = 0; seq_code < 1296; ++seq_code) {
    int seq[4], code = seq_code;
    for (int k = 0; k < 4; ++k) {
      seq[k] = code % 6;
      code /= 6;
    }
    int degree[6];
    std::fill(degree, degree + 6, 1);
    for (int k = 0; k < 4; ++k) ++degree[seq[k]];
    std::vector<std::pair<int, int>> edges;
    for (int k = 0; k < 4; ++k) {
      int leaf = 0;
      while (degree[leaf] != 1) ++leaf;
      edges.push_back({std::min(leaf, seq[k]), std::max(leaf, seq[k])});
      --degree[leaf];
      --degree[seq[k]];
    }
    int u = 0;
    while (degree[u] != 1) ++u;
    int v = u + 1;
    while (degree[v] != 1) ++v;
    edges.push_back({u, v});
    for (int edge_labels = 0; edge_labels < (1 << 10); ++edge_labels)
      check_six_candidate(edges, edge_labels, tally);
  }

  // Hamiltonian cycles, anchored at vertex 0, one direction per cycle.
  std::array<int, 5> perm{1, 2, 3, 4, 5};
  do {
    if (perm[0] > perm[4]) continue;
    std::vector<std::pair<int, int>> edges;
    int prev = 0;
    for (int v : perm) {
      edges.push_back({std::min(prev, v), std::max(prev, v)});
      prev = v;
    }
    edges.push_back({0, prev});
    for (int edge_labels = 0; edge_labels < (1 << 12); ++edge_labels)
      check_six_candidate(edges, edge_labels, tally);
  } while (std::next_permutation(perm.begin(), perm.end()));

  return tally;
}

std::string classifier_vs_spectrum() {
  check_tables();

  std::string detail = "tables ok;";
  long long swept = 0;
  for (int n = 1; n <= 5; ++n) {
    const auto [reps, irr] = sweep_exhaustive(n);
    swept += irr;
    if (n == 5) detail += " n<=5 reps irreducible=" + std::to_string(swept) + ";";
  }
  require(swept > 400000, "the exhaustive sweep must cover the full label space");

  const auto six = sweep_six_vertices();
  require(six.spherical_families == std::set<std::string>{"A6", "B6", "D6", "E6"},
          "6-vertex spherical families must be exactly A6, B6, D6, E6");
  require(six.affine_families == std::set<std::string>{"~A5", "~B5", "~C5", "~D5"},
          "6-vertex affine families must be exactly ~A5, ~B5, ~C5, ~D5");
  // 720/|Aut|, summed per family, times one labeling each (two for B6).
  require(six.spherical == 1800, "expected 1800 spherical systems on 6 labeled vertices");
  require(six.affine == 870, "expected 870 affine systems on 6 labeled vertices");
  detail += " 6-vertex candidates=" + std::to_string(six.candidates);

  // Random spot check across the full 6-vertex label space.
  std::mt19937_64 rng(0xc0ffee1234ull);
  static const int digit_label[6] = {0, 2, 3, 4, 5, 6};
  long long sampled = 0;
  for (int round = 0; round < 150000; ++round) {
    int labels[36] = {};
    unsigned adjacency[6] = {};
    for (int i = 0; i < 6; ++i)
      for (int j = i + 1; j < 6; ++j) {
        const int value = digit_label[rng() % 6];
        labels[i * 6 + j] = value;
        labels[j * 6 + i] = value;
        if (value != 2) {
          adjacency[i] |= 1u << j;
          adjacency[j] |= 1u << i;
        }
      }
    unsigned seen = 1, frontier = 1;
    while (frontier) {
      unsigned next = 0;
      for (unsigned rest = frontier; rest;) {
        const int v = std::countr_zero(rest);
        rest &= rest - 1;
        next |= adjacency[v];
      }
      frontier = next & ~seen;
      seen |= next;
    }
    if (seen != (1u << 6) - 1u) continue;
    const auto cls = classify_irreducible_labels(6, labels);
    if (cls.kind != spectral_kind(6, labels))
      throw CheckFailure("recognizer/oracle disagreement at " + describe_labels(6, labels));
    ++sampled;
  }
  require(sampled > 100000, "random sample must mostly hit irreducible systems");
  detail += " random=" + std::to_string(sampled);
  return detail;
}

// ---------------------------------------------------------------------------
// 5. Closure-class verdicts, each within one second.

std::string closure_verdicts() {
  const auto timed = [](const std::string& what, const std::function<void()>& body) {
    const auto t0 = Clock::now();
    body();
    require(seconds_since(t0) < 1.0, what + " exceeded its 1s budget");
  };

  timed("triangle(3,3,3)", [] {
    const auto g = make_graph(GraphKind::coxeter, {"a", "b", "c"},
                              {{"a", "b", 3}, {"b", "c", 3}, {"a", "c", 3}});
    const auto m = t_membership(full_system(g));
    require(m.member && m.derivation.has_value() &&
                m.derivation->rule == TDerivation::Rule::base_affine,
            "triangle(3,3,3) must enter as an affine seed");
  });

  timed("4-cycle", [] {
    const auto m = t_membership(full_system(cycle_all_two(GraphKind::coxeter, 4)));
    require(m.member && m.derivation.has_value() &&
                m.derivation->rule == TDerivation::Rule::base_product,
            "the all-2 4-cycle must enter as a product seed");
  });

  timed("5-cycle", [] {
    const auto sys = full_system(cycle_all_two(GraphKind::coxeter, 5));
    require(!t_membership(sys).member, "the all-2 5-cycle must stay outside the class");
    require(!relative_hyperbolicity_verdict(sys).not_relatively_hyperbolic,
            "the all-2 5-cycle must come out relatively hyperbolic");
  });

  timed("K_{2,3} certificate", [] {
    const auto g = k23_graph();
    require(t_membership(full_system(g)).member, "K_{2,3} must be in the class");
    const auto cert = coxeter_rigidity_certificate(full_system(g));
    require(cert.rule == CertRule::product_split, "expected a product split at the root");
    require(cert.left == std::vector<std::string>{"b", "d", "e"} &&
                cert.right == std::vector<std::string>{"a", "c"},
            "expected the split {b,d,e} x {a,c}");
    require(check_certificate(cert, g).valid, "the split certificate must check out");
  });

  return "4 verdicts, each under 1s";
}

// ---------------------------------------------------------------------------
// 6. Artin chains and their folded certificates.

std::string artin_chains() {
  int folded = 0;
  const auto fold_and_check = [&folded](const RigidChain& chain, const LabeledGraph& g) {
    const auto cert = chain_to_certificate(chain, g, g.vertex_names());
    require(check_certificate(cert, g).valid, "folded certificate must pass the checker");
    ++folded;
  };

  {
    const auto g = pentagon();
    const auto chain = raag_rigid_chain(g);
    require(chain.entries.size() == 5, "pentagon chain must have 5 entries");
    require(validate_chain(chain, g).ok, "pentagon chain must validate");
    require(chain_covers(chain, g.vertex_names()), "pentagon chain must cover every vertex");
    for (const auto& entry : chain.entries)
      require(entry.kind == DescriptorKind::vertex_set && entry.star_center.has_value(),
              "pentagon entries must be star groups");
    fold_and_check(chain, g);
  }

  {
    const auto g =
        make_graph(GraphKind::artin, {"a", "b", "c"}, {{"a", "b", 2}, {"b", "c", 3}});
    const auto chain = artin_rigid_chain(g);
    require(chain.entries.size() == 2, "path chain must be [H_b, H_bc]");
    require(chain.entries[0].kind == DescriptorKind::vertex_delta &&
                chain.entries[0].center == "b",
            "first path entry must be the Delta group at b");
    require(chain.entries[1].kind == DescriptorKind::edge_group &&
                chain.entries[1].edge == Edge{"b", "c", 3},
            "second path entry must be the edge group of (b,c)");
    require(chain.links.size() == 1 && chain.links[0].type == ChainLink::Type::delta &&
                chain.links[0].delta.word.to_string() == "b c b b c b",
            "path link must be Delta_bc");
    require(validate_chain(chain, g).ok && chain_covers(chain, g.vertex_names()),
            "path chain must validate and cover");
    fold_and_check(chain, g);
  }

  {
    const auto g = make_graph(GraphKind::artin, {"a", "b", "c"},
                              {{"a", "b", 3}, {"a", "c", 2}, {"b", "c", 2}});
    const auto chain = artin_rigid_chain(g);
    require(chain.entries.size() == 3, "triangle chain must be [H_c, H_ab, H_c]");
    require(chain.entries[0].kind == DescriptorKind::vertex_delta &&
                chain.entries[0].center == "c",
            "triangle chain must open at the Delta group of c");
    require(chain.entries[1].kind == DescriptorKind::edge_group &&
                chain.entries[1].edge == Edge{"a", "b", 3},
            "triangle chain must splice the (a,b) edge group");
    require(chain.entries[2] == chain.entries[0], "triangle chain must return to H_c");
    require(chain.links.size() == 2 && chain.links[0] == ChainLink::of_vertex("a") &&
                chain.links[1] == ChainLink::of_vertex("a"),
            "triangle links must both be the shared vertex a");
    require(validate_chain(chain, g).ok && chain_covers(chain, g.vertex_names()),
            "triangle chain must validate and cover");
    fold_and_check(chain, g);
  }

  {
    // Two components: the invariant the reports expose is their number.
    const auto g = make_graph(
        GraphKind::artin, {"a", "b", "c", "d", "e", "f", "g", "h"},
        {{"a", "b", 2}, {"b", "c", 2}, {"c", "d", 2}, {"d", "e", 2}, {"e", "a", 2},
         {"f", "g", 2}, {"g", "h", 3}});
    const auto report = artin_theorem_report(g);
    require(report.component_count == 2 && report.components.size() == 2,
            "two components must be reported");
    require(report.all_components_certifiable, "both components must certify");

    const auto g3 = make_graph(
        GraphKind::artin, {"a", "b", "c", "d", "e", "f", "g", "h", "x", "y"},
        {{"a", "b", 2}, {"b", "c", 2}, {"c", "d", 2}, {"d", "e", 2}, {"e", "a", 2},
         {"f", "g", 2}, {"g", "h", 3}, {"x", "y", 4}});
    const auto report3 = artin_theorem_report(g3);
    require(report3.component_count == 3 && report3.components.size() == 3,
            "three components must be reported");
    require(report3.all_components_certifiable, "all three components must certify");
  }

  return std::to_string(folded) + " chains folded and checked";
}

// ---------------------------------------------------------------------------
// 7. Mutation suite: each mutation must be rejected at the mutated node.

bool all_ok_except(const CertCheckReport& report, const std::string& path) {
  bool seen = false;
  for (const auto& node : report.nodes) {
    if (node.path == path) {
      seen = true;
      if (node.ok) return false;
    } else if (!node.ok) {
      return false;
    }
  }
  return seen;
}

std::string mutation_suite() {
  int applied = 0, killed = 0;
  const auto expect_kill_at = [&](const CertCheckReport& report, const std::string& path,
                                  const std::string& what) {
    ++applied;
    require(!report.valid, what + ": the mutation must invalidate the certificate");
    require(all_ok_except(report, path), what + ": must fail exactly at " + path);
    ++killed;
  };

  const auto k23_without = [](const char* drop_u, const char* drop_v, int relabel) {
    std::vector<EdgeInput> edges;
    for (const auto& e : k23_graph().edge_list()) {
      if (e.u == drop_u && e.v == drop_v) {
        if (relabel) edges.push_back({e.u, e.v, relabel});
        continue;
      }
      edges.push_back({e.u, e.v, e.m});
    }
    return make_graph(GraphKind::coxeter, {"a", "b", "c", "d", "e"}, edges);
  };

  const auto split_cert = coxeter_rigidity_certificate(full_system(k23_graph()));
  require(check_certificate(split_cert, k23_graph()).valid, "baseline split must pass");

  // 1. Delete one cross edge of the product split; the graph stays connected.
  expect_kill_at(check_certificate(split_cert, k23_without("a", "b", 0)), "root",
                 "deleted cross edge (a,b)");

  // 2. Relabel a cross edge to 3: the sides no longer commute.
  expect_kill_at(check_certificate(split_cert, k23_without("a", "e", 3)), "root",
                 "cross edge (a,e) relabeled to 3");

  // 3. Shrink a non-spherical witness to a spherical subset: once on the
  //    split's infinite factor, once on a wq-normalize witness subset.
  {
    auto cert = split_cert;
    require(cert.left == std::vector<std::string>{"b", "d", "e"},
            "split factor {b,d,e} expected");
    cert.left = {"d"};
    expect_kill_at(check_certificate(cert, k23_graph()), "root",
                   "factor {b,d,e} shrunk to {d}");
  }
  {
    const auto g = doubled_k23();
    auto cert = coxeter_rigidity_certificate(full_system(g));
    require(cert.rule == CertRule::wq_normalize &&
                cert.witness_subset == std::vector<std::string>{"b", "d"},
            "doubled K_{2,3} must normalize over the witness {b,d}");
    require(check_certificate(cert, g).valid, "baseline wq certificate must pass");
    cert.witness_subset = {"b"};
    expect_kill_at(check_certificate(cert, g), "root", "witness shrunk to {b}");
  }

  // 4. Delete a join witness at the root of a fold, and at an inner join.
  {
    const auto g =
        make_graph(GraphKind::artin, {"a", "b", "c"}, {{"a", "b", 2}, {"b", "c", 3}});
    auto cert = chain_to_certificate(artin_rigid_chain(g), g, g.vertex_names());
    require(cert.rule == CertRule::join && cert.witness.has_value(),
            "folded path chain must be a join with a witness");
    cert.witness.reset();
    expect_kill_at(check_certificate(cert, g), "root", "deleted witness (path fold)");
  }
  {
    const auto p = pentagon();
    auto cert = chain_to_certificate(raag_rigid_chain(p), p, p.vertex_names());
    require(cert.rule == CertRule::join && cert.witness.has_value(),
            "folded pentagon chain must be a join with a witness");
    cert.witness.reset();
    expect_kill_at(check_certificate(cert, p), "root", "deleted witness (pentagon fold)");
  }
  {
    const auto tri = make_graph(GraphKind::artin, {"a", "b", "c"},
                                {{"a", "b", 3}, {"b", "c", 2}, {"a", "c", 2}});
    auto cert = chain_to_certificate(artin_rigid_chain(tri), tri, tri.vertex_names());
    require(cert.rule == CertRule::join && cert.a && cert.a->rule == CertRule::join,
            "folded triangle chain must nest a join");
    auto inner = std::make_shared<RigidityCertificate>(*cert.a);
    inner->witness.reset();
    cert.a = inner;
    expect_kill_at(check_certificate(cert, tri), "root.a",
                   "deleted witness (inner join of the triangle fold)");
  }

  require(applied == 7 && killed == 7, "every mutation must be applied and killed");
  return "7/7 mutants rejected at the mutated node";
}

// ---------------------------------------------------------------------------
// 8. Deterministic serialization against golden files.

std::string census_text() {
  const std::vector<int> labels{2, 3};
  return dump_json(census_to_json(4, labels, census(4, labels)), true);
}

std::string k23_certificate_text() {
  return dump_json(
      certificate_to_json(coxeter_rigidity_certificate(full_system(k23_graph()))), true);
}

std::string pair_witness_text() {
  const auto verdict = me_witness(FreeProductSpec::from_factors({{2, 2}, {2, 2}}),
                                  FreeProductSpec::from_factors({{3, 2}, {2, 2}, {2, 2}}));
  require(verdict.witness.has_value(), "the worked pair must produce a witness");
  return dump_json(me_witness_to_json(*verdict.witness), true);
}

std::string pentagon_chain_text() {
  return dump_json(chain_to_json(raag_rigid_chain(pentagon())), true);
}

const std::pair<const char*, std::string (*)()> kGoldens[] = {
    {"census_4_23.json", census_text},
    {"k23_certificate.json", k23_certificate_text},
    {"commensurable_pair_witness.json", pair_witness_text},
    {"pentagon_chain.json", pentagon_chain_text},
};

std::string determinism() {
  for (const auto& [name, produce] : kGoldens) {
    const std::string first = produce(), second = produce();
    require(first == second, std::string(name) + ": two runs must serialize identically");
    require(first == read_file(golden_path(name)),
            std::string(name) + ": serialization must match the golden file");
  }
  return "4 golden files matched byte-for-byte";
}

int write_goldens() {
  for (const auto& [name, produce] : kGoldens) {
    const std::string path = golden_path(name);
    std::ofstream out(path, std::ios::binary);
    out << produce();
    if (!out) {
      std::fprintf(stderr, "failed to write %s\n", path.c_str());
      return 1;
    }
    std::printf("wrote %s\n", path.c_str());
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc > 1 && std::string(argv[1]) == "--write-golden") return write_goldens();

  criterion(1, "worked commensurability pair", 1.0, worked_pair);
  criterion(2, "Betti alternating sum equals Euler characteristic", 5.0, betti_euler_oracle);
  criterion(3, "equal-weight two-factor family", 30.0, proportional_family);
  criterion(4, "diagram recognizer vs spectral oracle", 60.0, classifier_vs_spectrum);
  criterion(5, "closure-class verdicts", 0.0, closure_verdicts);
  criterion(6, "Artin chains fold to passing certificates", 0.0, artin_chains);
  criterion(7, "mutation suite", 0.0, mutation_suite);
  criterion(8, "deterministic serialization", 0.0, determinism);

  if (failures > 0) {
    std::printf("%d criterion(s) FAILED\n", failures);
    return 1;
  }
  std::printf("all acceptance criteria passed\n");
  return 0;
}
