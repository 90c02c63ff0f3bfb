#include <benchmark/benchmark.h>

#include "testas/constructions.hpp"
#include "testas/graph.hpp"
#include "testas/kernels.hpp"
#include "testas/semigroup.hpp"

#include <map>
#include <random>

using namespace testas;
using kernels::Exec;

namespace {

TransitionGraph random_graph(std::size_t nodes, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<Node> pick(0, static_cast<Node>(nodes - 1));
  std::vector<Node> cells(nodes * 2);
  for (auto& c : cells) c = pick(rng);
  return TransitionGraph(2, nodes, std::move(cells));
}

const FiniteSemigroup& sample(std::size_t target) {
  static std::map<std::size_t, FiniteSemigroup> cache;
  auto it = cache.find(target);
  if (it != cache.end()) return it->second;
  for (std::uint64_t seed = 1;; ++seed) {
    try {
      auto ts = transition_semigroup(random_graph(6, seed), 2 * target);
      if (ts.semigroup.size() >= target / 2)
        return cache.emplace(target, std::move(ts.semigroup)).first->second;
    } catch (const std::exception&) {
    }
  }
}

// r x c rectangular band, full table as generators: every check scans all of S.
const FiniteSemigroup& band(std::size_t r) {
  static std::map<std::size_t, FiniteSemigroup> cache;
  auto it = cache.find(r);
  if (it != cache.end()) return it->second;
  const std::size_t n = r * r;
  CayleyRows rows{n, n, std::vector<Element>(n * n)};
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      rows.cells[x * n + y] = static_cast<Element>((x / r) * r + y % r);
  return cache.emplace(r, close_cayley(std::move(rows))).first->second;
}

kernels::TableView view(const FiniteSemigroup& s) {
  return {s.product_table(), s.size()};
}

Exec exec_of(const benchmark::State& st) {
  return st.range(1) ? Exec::parallel : Exec::serial;
}

void BM_Closure(benchmark::State& st) {
  const auto& s = sample(st.range(0));
  for (auto _ : st) benchmark::DoNotOptimize(close_cayley(s.cayley(), exec_of(st)));
  st.counters["n"] = static_cast<double>(s.size());
}

void BM_Light(benchmark::State& st) {
  const auto& s = sample(st.range(0));
  for (auto _ : st)
    benchmark::DoNotOptimize(
        kernels::light_violation(view(s), s.generator_count(), exec_of(st)));
}

void BM_AssociativityReference(benchmark::State& st) {
  const auto& s = sample(st.range(0));
  for (auto _ : st)
    benchmark::DoNotOptimize(kernels::associativity_violation_reference(view(s)));
}

void BM_Local(benchmark::State& st) {
  const auto& s = sample(st.range(0));
  const auto idem = idempotents(s);
  for (auto _ : st)
    benchmark::DoNotOptimize(kernels::local_violation(
        view(s), idem, kernels::LocalCondition::semilattice, exec_of(st)));
}

void BM_Exchange(benchmark::State& st) {
  const auto& s = sample(st.range(0));
  const auto idem = idempotents(s);
  for (auto _ : st)
    benchmark::DoNotOptimize(kernels::exchange_violation(view(s), idem, exec_of(st)));
}

void BM_ExchangeReference(benchmark::State& st) {
  const auto& s = sample(st.range(0));
  const auto idem = idempotents(s);
  for (auto _ : st)
    benchmark::DoNotOptimize(kernels::exchange_violation_reference(view(s), idem));
}

void BM_LocalBand(benchmark::State& st) {
  const auto& s = band(st.range(0));
  const auto idem = idempotents(s);
  for (auto _ : st)
    benchmark::DoNotOptimize(kernels::local_violation(
        view(s), idem, kernels::LocalCondition::right, exec_of(st)));
  st.counters["n"] = static_cast<double>(s.size());
}

void BM_ExchangeBand(benchmark::State& st) {
  const auto& s = band(st.range(0));
  const auto idem = idempotents(s);
  for (auto _ : st)
    benchmark::DoNotOptimize(kernels::exchange_violation(view(s), idem, exec_of(st)));
  st.counters["n"] = static_cast<double>(s.size());
}

void BM_ExchangeBandReference(benchmark::State& st) {
  const auto& s = band(st.range(0));
  const auto idem = idempotents(s);
  for (auto _ : st)
    benchmark::DoNotOptimize(kernels::exchange_violation_reference(view(s), idem));
}

}  // namespace

BENCHMARK(BM_Closure)->ArgsProduct({{64, 256, 1024}, {0, 1}});
BENCHMARK(BM_Light)->ArgsProduct({{64, 256, 1024}, {0, 1}});
BENCHMARK(BM_AssociativityReference)->Arg(64)->Arg(256);
BENCHMARK(BM_Local)->ArgsProduct({{64, 256, 1024}, {0, 1}});
BENCHMARK(BM_Exchange)->ArgsProduct({{64, 256}, {0, 1}});
BENCHMARK(BM_ExchangeReference)->Arg(32)->Arg(64);

BENCHMARK(BM_LocalBand)->ArgsProduct({{8, 16}, {0, 1}});
BENCHMARK(BM_ExchangeBand)->ArgsProduct({{4, 8, 16}, {0, 1}});
BENCHMARK(BM_ExchangeBandReference)->Arg(3)->Arg(4);

BENCHMARK_MAIN();
