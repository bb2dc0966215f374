#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "rigiditykit/errors.hpp"

namespace rigiditykit {

using BigInt = boost::multiprecision::cpp_int;

// Free product of direct products of free groups:
// G = (F_{a_{1,1}} x ... x F_{a_{1,k_1}}) * ... * (F_{a_{n,1}} x ... ).
// Stored canonically: tuples sorted descending, factors sorted by
// (dimension, entries). Every k_i >= 2 and a_{i,j} >= 2.
struct FreeProductSpec {
  std::vector<std::vector<long long>> factors;

  static FreeProductSpec from_factors(std::vector<std::vector<long long>> factors);
  std::size_t factor_count() const noexcept { return factors.size(); }
  bool operator==(const FreeProductSpec&) const = default;
};

// l2-Betti numbers by degree. Degree 1 is always present (value n-1);
// degree m >= 2 is present exactly when some factor has dimension m.
struct BettiVector {
  std::map<int, BigInt> values;
  bool operator==(const BettiVector&) const = default;
};

BettiVector betti_vector(const FreeProductSpec& spec);

BigInt euler_characteristic(const FreeProductSpec& spec);

struct Rational {
  BigInt num;
  BigInt den;
  bool operator==(const Rational&) const = default;
};

// Reduced c > 0 with betti(s1) = c * betti(s2) in every degree, if it exists.
// Degrees where both sides vanish are skipped; zero against nonzero kills it.
std::optional<Rational> proportionality(const FreeProductSpec& s1, const FreeProductSpec& s2);

// H = *_m ((F_x)^m)^{* vertex_counts[m]} * F_{free_rank}
struct KuroshDecomposition {
  std::map<int, BigInt> vertex_counts;
  BigInt free_rank;
  bool operator==(const KuroshDecomposition&) const = default;
};

struct WitnessParameters {
  BigInt x;
  std::vector<BigInt> h1;
  std::vector<BigInt> h2;
  BigInt index_1;
  BigInt index_2;
};

// x-1 = lcm of all (a_{i,j}-1) over both specs; h per factor; N1, N2 minimal
// with h-lcm | N_i and N1(n1-1) = N2(n2-1) (vacuous when n1 = n2 = 1).
WitnessParameters witness_parameters(const FreeProductSpec& s1, const FreeProductSpec& s2);

KuroshDecomposition kurosh_decomposition(const FreeProductSpec& spec, const BigInt& x,
                                         const BigInt& big_n);

BigInt kurosh_euler(const KuroshDecomposition& k, const BigInt& x);

struct CommensurabilityWitness {
  Rational ratio;
  BigInt x;
  BigInt index_1;
  BigInt index_2;
  std::vector<BigInt> factor_indices_1;
  std::vector<BigInt> factor_indices_2;
  KuroshDecomposition kurosh_1;
  KuroshDecomposition kurosh_2;
};

struct MEVerdict {
  bool proportional = false;
  std::optional<Rational> ratio;
  std::string statement;
  std::optional<CommensurabilityWitness> witness;
};

// Full pipeline. Both outcomes return a verdict; witness present iff
// the Betti vectors are proportional. The two Kurosh decompositions are
// checked for equality before returning.
MEVerdict me_witness(const FreeProductSpec& s1, const FreeProductSpec& s2);

// Index-k subgroup of F_a realized on k points: generator 1 is the k-cycle,
// the rest act trivially. Point-1 stabilizer is free of rank 1 + k(a-1).
struct CoverAction {
  long long free_rank;
  long long points;
  long long subgroup_rank;
  std::vector<std::vector<long long>> generator_images;
};

CoverAction nielsen_schreier_cover(long long a, long long k);

struct FactorOrbitSummary {
  std::vector<long long> tuple;
  long long index = 0;        // h for this factor
  long long orbit_count = 0;  // N / h
};

struct ActionSideReport {
  long long points = 0;  // N
  std::vector<FactorOrbitSummary> factors;
  long long edge_count = 0;
  long long vertex_count = 0;
  long long rank = 0;  // E - V + 1
  std::map<int, long long> vertex_groups;
  bool connected = false;
  long long repair_swaps = 0;
};

struct ActionVerification {
  ActionSideReport side1;
  ActionSideReport side2;
};

// Materializes both permutation actions, repairs transitivity if needed, and
// checks every orbit-graph count against the closed forms in the witness.
// Throws CapExceeded when an index exceeds the point cap (10^6, overridable
// via RIGIDITYKIT_MAX_VERIFY_POINTS) and VerifyMismatch on any disagreement.
ActionVerification build_and_verify_action(const FreeProductSpec& s1, const FreeProductSpec& s2,
                                           const CommensurabilityWitness& witness);

}  // namespace rigiditykit
