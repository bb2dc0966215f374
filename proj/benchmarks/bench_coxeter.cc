#include <benchmark/benchmark.h>

#include <string>
#include <vector>

#include "rigiditykit/certificates.hpp"

namespace {

using namespace rigiditykit;

// n-cycle with all labels 2; outside the closure class for n >= 5, so the
// membership query pays for the full subset closure before answering no.
LabeledGraph cycle_graph(int n) {
  std::vector<std::string> names;
  for (int i = 0; i < n; ++i) names.push_back(std::string(1, static_cast<char>('a' + i)));
  std::vector<EdgeInput> edges;
  for (int i = 0; i < n; ++i) edges.push_back(EdgeInput{names[i], names[(i + 1) % n], 2});
  return LabeledGraph(GraphKind::coxeter, names, edges);
}

void bench_t_membership_cycle(benchmark::State& state) {
  const LabeledGraph g = cycle_graph(static_cast<int>(state.range(0)));
  const CoxeterSystem sys = full_system(g);
  for (auto _ : state) {
    benchmark::DoNotOptimize(t_membership(sys).member);
  }
}
BENCHMARK(bench_t_membership_cycle)->Arg(6)->Arg(10)->Arg(14);

// K_{2,3} plus `cones` vertices commuting with everything below them; each
// cone stacks one more wq-normalize node onto the certificate.
LabeledGraph coned_k23(int cones) {
  std::vector<std::string> names{"a", "b", "c", "d", "e"};
  std::vector<EdgeInput> edges;
  for (const char* u : {"a", "c"})
    for (const char* v : {"b", "d", "e"}) edges.push_back(EdgeInput{u, v, 2});
  for (int k = 0; k < cones; ++k) {
    const std::string z(1, static_cast<char>('u' + k));
    for (const auto& v : names) edges.push_back(EdgeInput{z, v, 2});
    names.push_back(z);
  }
  return LabeledGraph(GraphKind::coxeter, names, edges);
}

void bench_certificate_coned(benchmark::State& state) {
  const LabeledGraph g = coned_k23(static_cast<int>(state.range(0)));
  const CoxeterSystem sys = full_system(g);
  for (auto _ : state) {
    RigidityCertificate cert = coxeter_rigidity_certificate(sys);
    benchmark::DoNotOptimize(cert);
  }
}
BENCHMARK(bench_certificate_coned)->Arg(0)->Arg(3)->Arg(6);

void bench_classify_labels(benchmark::State& state) {
  // Path with labels 3,3,...,4 — a spherical B-type diagram at every size.
  const int n = static_cast<int>(state.range(0));
  std::vector<int> labels(static_cast<std::size_t>(n) * n, 2);
  for (int i = 0; i < n; ++i) labels[static_cast<std::size_t>(i) * n + i] = 0;
  for (int i = 0; i + 1 < n; ++i) {
    const int m = i + 2 == n ? 4 : 3;
    labels[static_cast<std::size_t>(i) * n + i + 1] = m;
    labels[static_cast<std::size_t>(i + 1) * n + i] = m;
  }
  for (auto _ : state) {
    benchmark::DoNotOptimize(classify_irreducible_labels(n, labels.data()));
  }
}
BENCHMARK(bench_classify_labels)->Arg(4)->Arg(8);

}  // namespace
