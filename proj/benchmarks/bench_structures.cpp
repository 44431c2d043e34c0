// Microbenchmarks for the succ/pred/rank/access hot paths. The bench CLI is
// the harness for full experiments; these isolate per-op costs on one
// mid-sized dataset shape.

#include <benchmark/benchmark.h>

#include <vector>

#include "zombit/bit_vector.hpp"
#include "zombit/oz_vector.hpp"
#include "zombit/recursive_zombit.hpp"
#include "zombit/run_generator.hpp"
#include "zombit/sparse_array.hpp"
#include "zombit/zombit_vector.hpp"

namespace {

using namespace zombit;

BitBuffer dataset(uint64_t n, double run0) {
    GeneratorConfig cfg;
    cfg.n = n;
    cfg.run0_mean = run0;
    cfg.seed = 42;
    return generate(cfg).bits;
}

std::vector<uint64_t> queries(uint64_t n, size_t count) {
    SplitMix64 rng(7);
    std::vector<uint64_t> q(count);
    for (auto& v : q) v = rng.next_in(n);
    return q;
}

template <class S, class F>
void run_queries(benchmark::State& state, const S& s, F&& op) {
    uint64_t n = state.range(0);
    auto q = queries(n, 4096);
    size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(op(s, q[i]));
        i = (i + 1) & 4095;
    }
}

void BM_ZombitSucc(benchmark::State& state) {
    ZombitVector z(dataset(state.range(0), 1000));
    run_queries(state, z, [](const auto& s, uint64_t q) { return s.succ(q); });
}

void BM_ZombitRank(benchmark::State& state) {
    ZombitVector z(dataset(state.range(0), 1000));
    run_queries(state, z, [](const auto& s, uint64_t q) { return s.rank1(q); });
}

void BM_ZombitAccess(benchmark::State& state) {
    ZombitVector z(dataset(state.range(0), 1000));
    run_queries(state, z, [](const auto& s, uint64_t q) { return s.access(q); });
}

void BM_RecursiveSucc(benchmark::State& state) {
    RecursiveZombit z(dataset(state.range(0), 1000));
    run_queries(state, z, [](const auto& s, uint64_t q) { return s.succ(q); });
}

void BM_OzSucc(benchmark::State& state) {
    OzVector z(dataset(state.range(0), 1000));
    run_queries(state, z, [](const auto& s, uint64_t q) { return s.succ(q); });
}

void BM_SdArraySucc(benchmark::State& state) {
    SparseArray z = SparseArray::from_bits(dataset(state.range(0), 1000));
    run_queries(state, z, [](const auto& s, uint64_t q) { return s.succ(q); });
}

void BM_PlainSucc(benchmark::State& state) {
    BitVector z(dataset(state.range(0), 1000));
    run_queries(state, z, [](const auto& s, uint64_t q) { return s.succ1(q); });
}

} // namespace

BENCHMARK(BM_ZombitSucc)->Arg(1 << 20)->Arg(1 << 24);
BENCHMARK(BM_ZombitRank)->Arg(1 << 20)->Arg(1 << 24);
BENCHMARK(BM_ZombitAccess)->Arg(1 << 20)->Arg(1 << 24);
BENCHMARK(BM_RecursiveSucc)->Arg(1 << 20)->Arg(1 << 24);
BENCHMARK(BM_OzSucc)->Arg(1 << 20)->Arg(1 << 24);
BENCHMARK(BM_SdArraySucc)->Arg(1 << 20)->Arg(1 << 24);
BENCHMARK(BM_PlainSucc)->Arg(1 << 20)->Arg(1 << 24);

BENCHMARK_MAIN();
