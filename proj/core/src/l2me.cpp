#include "rigiditykit/l2me.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <string>

namespace rigiditykit {

namespace mp = boost::multiprecision;

FreeProductSpec FreeProductSpec::from_factors(std::vector<std::vector<long long>> factors) {
  if (factors.empty()) fail(Errc::invalid_input, "spec needs at least one factor");
  for (std::size_t i = 0; i < factors.size(); ++i) {
    auto& tuple = factors[i];
    if (tuple.size() < 2)
      fail(Errc::invalid_input,
           "factor " + std::to_string(i) + ": dimension must be at least 2");
    for (long long a : tuple)
      if (a < 2)
        fail(Errc::invalid_input,
             "factor " + std::to_string(i) + ": free ranks must be at least 2");
    std::sort(tuple.begin(), tuple.end(), std::greater<>());
  }
  std::sort(factors.begin(), factors.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return FreeProductSpec{std::move(factors)};
}

BettiVector betti_vector(const FreeProductSpec& spec) {
  BettiVector b;
  b.values[1] = BigInt(spec.factor_count()) - 1;
  for (const auto& tuple : spec.factors) {
    BigInt term = 1;
    for (long long a : tuple) term *= a - 1;
    b.values[static_cast<int>(tuple.size())] += term;
  }
  return b;
}

BigInt euler_characteristic(const FreeProductSpec& spec) {
  BigInt chi = 1 - BigInt(spec.factor_count());
  for (const auto& tuple : spec.factors) {
    BigInt term = 1;
    for (long long a : tuple) term *= 1 - a;
    chi += term;
  }
  return chi;
}

std::optional<Rational> proportionality(const FreeProductSpec& s1, const FreeProductSpec& s2) {
  const BettiVector b1 = betti_vector(s1), b2 = betti_vector(s2);
  std::vector<int> degrees;
  for (const auto& [m, v] : b1.values) degrees.push_back(m);
  for (const auto& [m, v] : b2.values) degrees.push_back(m);
  std::sort(degrees.begin(), degrees.end());
  degrees.erase(std::unique(degrees.begin(), degrees.end()), degrees.end());

  auto value = [](const BettiVector& b, int m) -> BigInt {
    auto it = b.values.find(m);
    return it == b.values.end() ? BigInt(0) : it->second;
  };

  Rational c{0, 0};
  for (int m : degrees) {
    const BigInt z1 = value(b1, m), z2 = value(b2, m);
    if (z1 == 0 && z2 == 0) continue;
    if (z1 == 0 || z2 == 0) return std::nullopt;
    if (c.den == 0) {
      const BigInt g = mp::gcd(z1, z2);
      c = Rational{z1 / g, z2 / g};
    } else if (z1 * c.den != c.num * z2) {
      return std::nullopt;
    }
  }
  if (c.den == 0) return std::nullopt;
  return c;
}

namespace {

std::vector<BigInt> factor_indices(const FreeProductSpec& spec, const BigInt& xm1) {
  std::vector<BigInt> hs;
  for (const auto& tuple : spec.factors) {
    BigInt h = mp::pow(xm1, static_cast<unsigned>(tuple.size()));
    for (long long a : tuple) {
      if (h % (a - 1) != 0) fail(Errc::internal, "x-1 is not a common multiple");
      h /= a - 1;
    }
    hs.push_back(h);
  }
  return hs;
}

BigInt lcm_of(const std::vector<BigInt>& values) {
  BigInt l = 1;
  for (const BigInt& v : values) l = mp::lcm(l, v);
  return l;
}

}  // namespace

WitnessParameters witness_parameters(const FreeProductSpec& s1, const FreeProductSpec& s2) {
  if (!proportionality(s1, s2))
    fail(Errc::not_proportional, "l2-Betti vectors are not proportional");
  BigInt xm1 = 1;
  for (const FreeProductSpec* s : {&s1, &s2})
    for (const auto& tuple : s->factors)
      for (long long a : tuple) xm1 = mp::lcm(xm1, BigInt(a - 1));

  WitnessParameters p;
  p.x = xm1 + 1;
  p.h1 = factor_indices(s1, xm1);
  p.h2 = factor_indices(s2, xm1);
  const BigInt l1 = lcm_of(p.h1), l2 = lcm_of(p.h2);
  const BigInt n1 = s1.factor_count(), n2 = s2.factor_count();
  if (n1 == 1) {
    // Proportionality forces n2 = 1 too; the index constraint is vacuous.
    p.index_1 = l1;
    p.index_2 = l2;
  } else {
    const BigInt common = mp::lcm(l1 * (n1 - 1), l2 * (n2 - 1));
    p.index_1 = common / (n1 - 1);
    p.index_2 = common / (n2 - 1);
  }
  return p;
}

KuroshDecomposition kurosh_decomposition(const FreeProductSpec& spec, const BigInt& x,
                                         const BigInt& big_n) {
  if (x < 2 || big_n < 1) fail(Errc::invalid_input, "kurosh parameters out of range");
  const BettiVector b = betti_vector(spec);
  const BigInt xm1 = x - 1;
  KuroshDecomposition k;
  BigInt total = 0;
  for (const auto& [m, value] : b.values) {
    if (m < 2) continue;
    const BigInt numer = big_n * value;
    const BigInt denom = mp::pow(xm1, static_cast<unsigned>(m));
    if (numer % denom != 0)
      fail(Errc::internal, "vertex count fails divisibility at degree " + std::to_string(m));
    k.vertex_counts[m] = numer / denom;
    total += k.vertex_counts[m];
  }
  k.free_rank = big_n * (BigInt(spec.factor_count()) - 1) - total + 1;
  if (k.free_rank < 0) fail(Errc::internal, "negative free rank");
  return k;
}

BigInt kurosh_euler(const KuroshDecomposition& k, const BigInt& x) {
  BigInt chi = 1 - k.free_rank;
  for (const auto& [m, count] : k.vertex_counts)
    chi += count * (mp::pow(BigInt(1) - x, static_cast<unsigned>(m)) - 1);
  return chi;
}

MEVerdict me_witness(const FreeProductSpec& s1, const FreeProductSpec& s2) {
  MEVerdict verdict;
  auto ratio = proportionality(s1, s2);
  if (!ratio) {
    verdict.proportional = false;
    verdict.statement =
        "l2-Betti vectors are not proportional; the groups are neither commensurable "
        "nor measure equivalent";
    return verdict;
  }
  verdict.proportional = true;
  verdict.ratio = ratio;

  const WitnessParameters p = witness_parameters(s1, s2);
  CommensurabilityWitness w;
  w.ratio = *ratio;
  w.x = p.x;
  w.index_1 = p.index_1;
  w.index_2 = p.index_2;
  w.factor_indices_1 = p.h1;
  w.factor_indices_2 = p.h2;
  w.kurosh_1 = kurosh_decomposition(s1, p.x, p.index_1);
  w.kurosh_2 = kurosh_decomposition(s2, p.x, p.index_2);
  if (!(w.kurosh_1 == w.kurosh_2))
    fail(Errc::internal, "kurosh decompositions disagree for a proportional pair");
  if (kurosh_euler(w.kurosh_1, p.x) != p.index_1 * euler_characteristic(s1) ||
      kurosh_euler(w.kurosh_2, p.x) != p.index_2 * euler_characteristic(s2))
    fail(Errc::internal, "euler characteristic is not multiplicative over the witness");
  verdict.statement =
      "measure equivalent; equivalently, commensurable: both embed the common group with "
      "ratio " + w.ratio.num.str() + "/" + w.ratio.den.str() + " of l2-Betti vectors";
  verdict.witness = std::move(w);
  return verdict;
}

CoverAction nielsen_schreier_cover(long long a, long long k) {
  if (a < 2) fail(Errc::invalid_input, "free rank must be at least 2");
  if (k < 1) fail(Errc::invalid_input, "index must be at least 1");
  CoverAction c;
  c.free_rank = a;
  c.points = k;
  c.subgroup_rank = 1 + k * (a - 1);
  c.generator_images.assign(a, {});
  for (long long g = 0; g < a; ++g) {
    c.generator_images[g].resize(k);
    for (long long p = 0; p < k; ++p)
      c.generator_images[g][p] = g == 0 ? (p + 1) % k : p;
  }
  return c;
}

namespace {

long long verify_cap() {
  const char* raw = std::getenv("RIGIDITYKIT_MAX_VERIFY_POINTS");
  if (!raw || !*raw) return 1'000'000;
  char* end = nullptr;
  const long long value = std::strtoll(raw, &end, 10);
  if (!end || *end != '\0' || value < 1)
    fail(Errc::invalid_input, "RIGIDITYKIT_MAX_VERIFY_POINTS must be a positive integer");
  return value;
}

// One free-product factor acting on {0..N-1}: blocks of h consecutive virtual
// positions, where virt applies the conjugating transpositions, then the
// cyclic offset.
struct FactorAction {
  const std::vector<long long>* tuple = nullptr;
  long long h = 1;
  long long offset = 0;
  std::vector<std::pair<long long, long long>> swaps;

  long long virt(long long p, long long n) const {
    for (const auto& s : swaps) {
      if (p == s.first)
        p = s.second;
      else if (p == s.second)
        p = s.first;
    }
    return (p + offset) % n;
  }
  long long point_of(long long v, long long n) const {
    long long p = (v - offset % n + n) % n;
    for (auto it = swaps.rbegin(); it != swaps.rend(); ++it) {
      if (p == it->first)
        p = it->second;
      else if (p == it->second)
        p = it->first;
    }
    return p;
  }
};

struct Dsu {
  std::vector<long long> parent;
  explicit Dsu(long long n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  long long find(long long x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  void unite(long long a, long long b) { parent[find(a)] = find(b); }
  long long components() {
    long long count = 0;
    for (long long i = 0; i < static_cast<long long>(parent.size()); ++i)
      if (find(i) == i) ++count;
    return count;
  }
};

Dsu joint_orbits(const std::vector<FactorAction>& actions, long long n) {
  Dsu dsu(n);
  for (const FactorAction& act : actions)
    for (long long v = 0; v + 1 < n; ++v)
      if (v % act.h != act.h - 1) dsu.unite(act.point_of(v, n), act.point_of(v + 1, n));
  return dsu;
}

ActionSideReport verify_side(const FreeProductSpec& spec, const BigInt& x,
                             const std::vector<BigInt>& hs, const BigInt& index,
                             const KuroshDecomposition& kurosh, long long cap) {
  if (index > cap)
    fail(Errc::cap_exceeded, "index " + index.str() + " exceeds the verifier point cap");
  const long long n_points = index.convert_to<long long>();
  const long long n_factors = static_cast<long long>(spec.factor_count());

  std::vector<FactorAction> actions;
  for (std::size_t i = 0; i < spec.factors.size(); ++i) {
    if (index % hs[i] != 0)
      fail(Errc::verify_mismatch, "factor index does not divide the subgroup index");
    // Realize the factor's coset space as a product of cyclic covers and
    // cross-check the Nielsen-Schreier ranks against x.
    BigInt product = 1;
    for (long long a : spec.factors[i]) {
      const BigInt c = (x - 1) / (a - 1);
      const CoverAction cover = nielsen_schreier_cover(a, c.convert_to<long long>());
      if (BigInt(cover.subgroup_rank) != x)
        fail(Errc::verify_mismatch, "coordinate cover rank is not x");
      product *= cover.points;
    }
    if (product != hs[i])
      fail(Errc::verify_mismatch, "coordinate covers do not multiply to the factor index");
    FactorAction act;
    act.tuple = &spec.factors[i];
    act.h = hs[i].convert_to<long long>();
    act.offset = static_cast<long long>(i) % n_points;
    actions.push_back(std::move(act));
  }

  ActionSideReport report;
  report.points = n_points;

  Dsu dsu = joint_orbits(actions, n_points);
  long long components = dsu.components();
  long long repair_factor = -1;
  for (std::size_t i = 0; i < actions.size(); ++i)
    if (actions[i].h >= 2) {
      repair_factor = static_cast<long long>(i);
      break;
    }
  while (components > 1) {
    if (repair_factor < 0)
      fail(Errc::internal, "transitivity repair needs a factor moving at least two points");
    const long long anchor_root = dsu.find(0);
    long long other = -1;
    for (long long p = 1; p < n_points; ++p)
      if (dsu.find(p) != anchor_root) {
        other = p;
        break;
      }
    actions[repair_factor].swaps.emplace_back(0, other);
    ++report.repair_swaps;
    dsu = joint_orbits(actions, n_points);
    const long long merged = dsu.components();
    if (merged >= components) fail(Errc::internal, "transitivity repair failed to merge");
    components = merged;
  }
  report.connected = components == 1;
  if (!report.connected) fail(Errc::verify_mismatch, "action is not transitive");

  long long orbit_total = 0;
  for (const FactorAction& act : actions) {
    std::vector<char> seen(n_points / act.h, 0);
    for (long long p = 0; p < n_points; ++p) seen[act.virt(p, n_points) / act.h] = 1;
    const long long count = std::count(seen.begin(), seen.end(), char(1));
    if (count != n_points / act.h)
      fail(Errc::verify_mismatch, "orbit count disagrees with N/h");
    report.factors.push_back(
        FactorOrbitSummary{*act.tuple, act.h, count});
    report.vertex_groups[static_cast<int>(act.tuple->size())] += count;
    orbit_total += count;
  }

  report.edge_count = n_points * n_factors;
  report.vertex_count = n_points + orbit_total;
  report.rank = report.edge_count - report.vertex_count + 1;
  if (BigInt(report.rank) != kurosh.free_rank)
    fail(Errc::verify_mismatch, "orbit-graph rank disagrees with the free rank");
  std::map<int, long long> expected;
  for (const auto& [m, count] : kurosh.vertex_counts)
    expected[m] = count.convert_to<long long>();
  if (expected != report.vertex_groups)
    fail(Errc::verify_mismatch, "vertex-group multiset disagrees with the decomposition");
  if (kurosh_euler(kurosh, x) != index * euler_characteristic(spec))
    fail(Errc::verify_mismatch, "euler characteristic is not multiplicative");
  return report;
}

}  // namespace

ActionVerification build_and_verify_action(const FreeProductSpec& s1, const FreeProductSpec& s2,
                                           const CommensurabilityWitness& witness) {
  const long long cap = verify_cap();
  ActionVerification v;
  v.side1 = verify_side(s1, witness.x, witness.factor_indices_1, witness.index_1,
                        witness.kurosh_1, cap);
  v.side2 = verify_side(s2, witness.x, witness.factor_indices_2, witness.index_2,
                        witness.kurosh_2, cap);
  return v;
}

}  // namespace rigiditykit
