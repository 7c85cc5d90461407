// Microbenchmarks for the hot paths: degree sampling, graph realization,
// label encoding/decoding, threshold sweeps, and the degree-profile
// verifiers. Graph fixtures are generated once per size and cached.
#include <benchmark/benchmark.h>

#include <cstdint>
#include <map>
#include <random>
#include <utility>
#include <vector>

#include "plab/generators.hpp"
#include "plab/graph.hpp"
#include "plab/labeling.hpp"
#include "plab/powerlaw.hpp"

namespace {

constexpr double kAlpha = 2.4;

const plab::Graph& powerlaw_graph(uint32_t n) {
    static std::map<uint32_t, plab::Graph> cache;
    auto it = cache.find(n);
    if (it == cache.end()) {
        it = cache.emplace(n, plab::generate_powerlaw_graph(n, kAlpha, 1)).first;
    }
    return it->second;
}

plab::PayloadMode mode_of(int64_t v) {
    return v ? plab::PayloadMode::BITSTRING : plab::PayloadMode::CONCAT;
}

std::vector<std::pair<uint32_t, uint32_t>> random_pairs(uint32_t n, size_t count, uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<std::pair<uint32_t, uint32_t>> pairs(count);
    for (auto& p : pairs) {
        p.first = static_cast<uint32_t>(plab::rand_below(rng, n));
        do {
            p.second = static_cast<uint32_t>(plab::rand_below(rng, n));
        } while (p.second == p.first);
    }
    return pairs;
}

} // namespace

static void BM_SamplerDraw(benchmark::State& state) {
    plab::PowerLawSampler sampler(kAlpha);
    std::mt19937_64 rng(5);
    for (auto _ : state) {
        benchmark::DoNotOptimize(sampler.draw(rng, 1u << 20));
    }
    state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_SamplerDraw);

static void BM_HavelHakimi(benchmark::State& state) {
    auto n = static_cast<uint32_t>(state.range(0));
    auto degrees = plab::sample_powerlaw_degrees(n, kAlpha, 3);
    plab::repair_degree_sequence(degrees);
    for (auto _ : state) {
        plab::Graph g = plab::havel_hakimi(degrees);
        benchmark::DoNotOptimize(g.num_edges());
    }
    state.SetItemsProcessed(state.iterations() * n);
}
BENCHMARK(BM_HavelHakimi)->Arg(1 << 12)->Arg(1 << 15)->Unit(benchmark::kMillisecond);

static void BM_GeneratePowerLawGraph(benchmark::State& state) {
    auto n = static_cast<uint32_t>(state.range(0));
    uint64_t seed = 1;
    for (auto _ : state) {
        plab::Graph g = plab::generate_powerlaw_graph(n, kAlpha, seed++);
        benchmark::DoNotOptimize(g.num_edges());
    }
    state.SetItemsProcessed(state.iterations() * n);
}
BENCHMARK(BM_GeneratePowerLawGraph)->Arg(1 << 12)->Arg(1 << 15)->Unit(benchmark::kMillisecond);

static void BM_GenerateBa(benchmark::State& state) {
    auto n = static_cast<uint32_t>(state.range(0));
    uint64_t seed = 11;
    for (auto _ : state) {
        plab::BaResult r = plab::generate_ba(n, 3, seed++);
        benchmark::DoNotOptimize(r.g.num_edges());
    }
    state.SetItemsProcessed(state.iterations() * n);
}
BENCHMARK(BM_GenerateBa)->Arg(1 << 12)->Arg(1 << 15)->Unit(benchmark::kMillisecond);

static void BM_Encode(benchmark::State& state) {
    const plab::Graph& g = powerlaw_graph(static_cast<uint32_t>(state.range(0)));
    auto mode = mode_of(state.range(1));
    uint32_t t = plab::predicted_threshold(g.num_vertices(), kAlpha);
    for (auto _ : state) {
        plab::LabelSet ls = plab::encode(g, t, mode);
        benchmark::DoNotOptimize(ls.labels.data());
    }
    state.SetItemsProcessed(state.iterations() * g.num_vertices());
}
BENCHMARK(BM_Encode)
    ->Args({1 << 15, 0})
    ->Args({1 << 15, 1})
    ->Args({1 << 18, 0})
    ->Args({1 << 18, 1})
    ->Unit(benchmark::kMillisecond);

static void BM_Decode(benchmark::State& state) {
    const plab::Graph& g = powerlaw_graph(1 << 15);
    auto mode = mode_of(state.range(0));
    uint32_t t = plab::predicted_threshold(g.num_vertices(), kAlpha);
    plab::LabelSet ls = plab::encode(g, t, mode);
    auto pairs = random_pairs(g.num_vertices(), 1024, 7);
    size_t i = 0;
    for (auto _ : state) {
        const auto& p = pairs[i++ & 1023];
        benchmark::DoNotOptimize(plab::decode(ls.labels[p.first], ls.labels[p.second], ls.scheme));
    }
    state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_Decode)->Arg(0)->Arg(1);

static void BM_BaDecode(benchmark::State& state) {
    plab::BaResult r = plab::generate_ba(1 << 15, 3, 11);
    plab::BaLabelSet ls = plab::ba_online_labels(r.log, r.g.num_vertices());
    auto pairs = random_pairs(r.g.num_vertices(), 1024, 13);
    size_t i = 0;
    for (auto _ : state) {
        const auto& p = pairs[i++ & 1023];
        benchmark::DoNotOptimize(plab::ba_decode(ls.labels[p.first], ls.labels[p.second], ls.scheme));
    }
    state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_BaDecode);

static void BM_SweepThresholds(benchmark::State& state) {
    const plab::Graph& g = powerlaw_graph(static_cast<uint32_t>(state.range(0)));
    auto mode = mode_of(state.range(1));
    for (auto _ : state) {
        plab::ThresholdSweep sweep = plab::sweep_thresholds(g, mode);
        benchmark::DoNotOptimize(sweep.empirical_max_bits);
    }
}
BENCHMARK(BM_SweepThresholds)
    ->Args({1 << 15, 0})
    ->Args({1 << 15, 1})
    ->Args({1 << 18, 0})
    ->Args({1 << 18, 1})
    ->Unit(benchmark::kMicrosecond);

static void BM_MaxLabelBitsAt(benchmark::State& state) {
    const plab::Graph& g = powerlaw_graph(1 << 18);
    uint32_t t = plab::predicted_threshold(g.num_vertices(), kAlpha);
    for (auto _ : state) {
        benchmark::DoNotOptimize(plab::max_label_bits_at(g, t, plab::PayloadMode::CONCAT));
    }
}
BENCHMARK(BM_MaxLabelBitsAt)->Unit(benchmark::kMicrosecond);

static void BM_FitAlphaMle(benchmark::State& state) {
    plab::DegreeHistogram h = plab::degree_histogram(powerlaw_graph(1 << 18));
    for (auto _ : state) {
        benchmark::DoNotOptimize(plab::fit_alpha_mle(h, 5));
    }
}
BENCHMARK(BM_FitAlphaMle)->Unit(benchmark::kMicrosecond);

static void BM_PlConstants(benchmark::State& state) {
    for (auto _ : state) {
        plab::PlConstants c = plab::constants(300000, kAlpha);
        benchmark::DoNotOptimize(c.Cprime);
    }
}
BENCHMARK(BM_PlConstants)->Unit(benchmark::kMicrosecond);

static void BM_VerifyDegreeTail(benchmark::State& state) {
    const plab::Graph& g = powerlaw_graph(1 << 18);
    plab::DegreeHistogram h = plab::degree_histogram(g);
    plab::PlConstants c = plab::constants(g.num_vertices(), kAlpha);
    for (auto _ : state) {
        plab::MembershipReport rep = plab::verify_palpha(h, c);
        benchmark::DoNotOptimize(rep.member);
    }
}
BENCHMARK(BM_VerifyDegreeTail)->Unit(benchmark::kMicrosecond);

BENCHMARK_MAIN();
