#include <benchmark/benchmark.h>

#include <string>

#include "enriques/catalog.hpp"
#include "enriques/monodromy.hpp"
#include "enriques/morse.hpp"
#include "enriques/perm.hpp"
#include "enriques/root_scheme.hpp"
#include "enriques/surface.hpp"

namespace {

void BM_ParseHalf(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(enriques::parse_half("V3 + 2V1 + Sg2 + 4S"));
}
BENCHMARK(BM_ParseHalf);

void BM_YoungClosure(benchmark::State& state) {
    const auto h = enriques::LabeledHalf::from_half(
        enriques::parse_half(std::to_string(state.range(0)) + "S"));
    for (auto _ : state)
        benchmark::DoNotOptimize(enriques::young_group(h).order());
}
BENCHMARK(BM_YoungClosure)->Arg(4)->Arg(6)->Arg(7);

void BM_PartitionStabilizer(benchmark::State& state) {
    const auto young = enriques::young_group(
        enriques::LabeledHalf::from_half(enriques::parse_half("6S")));
    const enriques::UnorderedPartition quarters{{{0, 1, 2}, {3, 4, 5}}};
    for (auto _ : state)
        benchmark::DoNotOptimize(enriques::partition_stabilizer(young, quarters).order());
}
BENCHMARK(BM_PartitionStabilizer);

void BM_DeriveDag(benchmark::State& state) {
    const enriques::HalfDecomposition root{enriques::parse_half("V3 + V1"),
                                           enriques::parse_half("V5 + Sg3 + 3S")};
    for (auto _ : state)
        benchmark::DoNotOptimize(enriques::derive_dag(root).nodes.size());
}
BENCHMARK(BM_DeriveDag);

void BM_RootSchemeCanonical(benchmark::State& state) {
    const auto s = enriques::parse_root_scheme("([a:1 d:2] . [] . [o] . [] . [a:2] . [] .)");
    for (auto _ : state)
        benchmark::DoNotOptimize(enriques::canonical_form(s).length());
}
BENCHMARK(BM_RootSchemeCanonical);

void BM_SegmentSymmetries(benchmark::State& state) {
    const auto s = enriques::segments_scheme(static_cast<int>(state.range(0)), false);
    for (auto _ : state)
        benchmark::DoNotOptimize(enriques::symmetry_group(s).segment_group.order());
}
BENCHMARK(BM_SegmentSymmetries)->Arg(4)->Arg(6);

void BM_MonodromyExceptional(benchmark::State& state) {
    const auto& catalog = enriques::embedded_default();
    const enriques::HalfDecomposition d{enriques::parse_half("V3"),
                                        enriques::parse_half("V1 + 4S")};
    for (auto _ : state)
        benchmark::DoNotOptimize(enriques::monodromy_group(d, catalog).half2.group.order());
}
BENCHMARK(BM_MonodromyExceptional);

void BM_VerifyCatalog(benchmark::State& state) {
    const auto& catalog = enriques::embedded_default();
    for (auto _ : state)
        benchmark::DoNotOptimize(enriques::verify_catalog(catalog).entries.size());
}
BENCHMARK(BM_VerifyCatalog);

void BM_CatalogLoad(benchmark::State& state) {
    const std::string text{enriques::embedded_default_text()};
    for (auto _ : state)
        benchmark::DoNotOptimize(enriques::parse_catalog(text).families.size());
}
BENCHMARK(BM_CatalogLoad);

} // namespace

BENCHMARK_MAIN();
