// Parallel kernels against their serial references.

#include "hpit/batch.hpp"
#include "hpit/bench.hpp"
#include "hpit/metrics.hpp"
#include "hpit/random.hpp"

#include <benchmark/benchmark.h>

#include <vector>

namespace {

std::vector<hpit::CostMatrix> batch_of(std::size_t count, std::size_t c) {
    std::vector<hpit::CostMatrix> out;
    out.reserve(count);
    for (std::size_t t = 0; t < count; ++t) out.push_back(hpit::random_cost_matrix(c, hpit::mix_seed(17, t)));
    return out;
}

hpit::SeparationInstance instance_of(std::size_t c, std::size_t n) {
    hpit::Rng rng(23);
    hpit::SeparationInstance inst;
    inst.mixture.samples.assign(n, 0.0);
    for (std::size_t i = 0; i < c; ++i) {
        hpit::AudioSignal s, e;
        s.samples.resize(n);
        e.samples.resize(n);
        for (std::size_t k = 0; k < n; ++k) {
            s.samples[k] = rng.normal();
            e.samples[k] = s.samples[k] + 0.3 * rng.normal();
            inst.mixture.samples[k] += s.samples[k];
        }
        inst.targets.push_back(std::move(s));
        inst.estimates.push_back(std::move(e));
    }
    return inst;
}

void BM_SolveBatch(benchmark::State& state) {
    const auto batch = batch_of(64, static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(hpit::solve_batch(batch));
    state.SetItemsProcessed(state.iterations() * 64);
}

void BM_SolveBatchSerial(benchmark::State& state) {
    const auto batch = batch_of(64, static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(hpit::solve_batch_serial(batch));
    state.SetItemsProcessed(state.iterations() * 64);
}

void BM_PairwiseCost(benchmark::State& state) {
    const auto inst = instance_of(static_cast<std::size_t>(state.range(0)), 32000);
    for (auto _ : state) benchmark::DoNotOptimize(hpit::pairwise_cost_matrix(inst));
}

void BM_PairwiseCostSerial(benchmark::State& state) {
    const auto inst = instance_of(static_cast<std::size_t>(state.range(0)), 32000);
    for (auto _ : state) benchmark::DoNotOptimize(hpit::pairwise_cost_matrix_serial(inst));
}

}  // namespace

BENCHMARK(BM_SolveBatch)->Arg(10)->Arg(20)->Arg(80);
BENCHMARK(BM_SolveBatchSerial)->Arg(10)->Arg(20)->Arg(80);
BENCHMARK(BM_PairwiseCost)->Arg(5)->Arg(10)->Arg(20);
BENCHMARK(BM_PairwiseCostSerial)->Arg(5)->Arg(10)->Arg(20);

BENCHMARK_MAIN();
