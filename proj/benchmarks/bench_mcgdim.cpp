#include <benchmark/benchmark.h>

#include "mcgdim/criterion.hpp"
#include "mcgdim/enumerate.hpp"
#include "mcgdim/groups.hpp"
#include "mcgdim/sigio.hpp"

using namespace mcgdim;

static void BM_EnumerateSignatures_Genus4_Order48(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(enumerate_signatures(4, 48));
}
BENCHMARK(BM_EnumerateSignatures_Genus4_Order48);

static void BM_EnumerateSignatures_Genus4_Order2(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(enumerate_signatures(4, 2));
}
BENCHMARK(BM_EnumerateSignatures_Genus4_Order2);

static void BM_EnumerateAll_Genus4(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(enumerate_all(4));
}
BENCHMARK(BM_EnumerateAll_Genus4);

static void BM_ShapeScan_Genus6_Order192(benchmark::State& state) {
    for (auto _ : state) {
        int shapes = 0;
        scan_shapes(6, 192, [](const SignatureShape&) { return true; },
                    [&](const SignatureShape&, const OrbifoldSignature&) { ++shapes; });
        benchmark::DoNotOptimize(shapes);
    }
}
BENCHMARK(BM_ShapeScan_Genus6_Order192);

static void BM_Criterion_PureRH(benchmark::State& state) {
    const int genus = static_cast<int>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(check_criterion(genus, CriterionMode::PureRH));
}
BENCHMARK(BM_Criterion_PureRH)->Arg(6)->Arg(8)->Arg(10);

static void BM_SubgroupLattice_S4(benchmark::State& state) {
    const FiniteGroup g = FiniteGroup::symmetric(4);
    for (auto _ : state) benchmark::DoNotOptimize(subgroup_lattice(g));
}
BENCHMARK(BM_SubgroupLattice_S4);

static void BM_SubgroupLattice_S5(benchmark::State& state) {
    const FiniteGroup g = FiniteGroup::symmetric(5);
    for (auto _ : state) benchmark::DoNotOptimize(subgroup_lattice(g));
}
BENCHMARK(BM_SubgroupLattice_S5);

static void BM_LambdaExact_S5(benchmark::State& state) {
    const FiniteGroup g = FiniteGroup::symmetric(5);
    const auto lattice = subgroup_lattice(g);
    for (auto _ : state) benchmark::DoNotOptimize(lambda_exact(g, lattice));
}
BENCHMARK(BM_LambdaExact_S5);

static void BM_ParseRenderRoundTrip(benchmark::State& state) {
    const std::string text = "(1; -; [2,3,12]; {(), (2,2), (2,4,6)})";
    for (auto _ : state) benchmark::DoNotOptimize(render_signature(parse_signature(text)));
}
BENCHMARK(BM_ParseRenderRoundTrip);

static void BM_OrderEquation(benchmark::State& state) {
    const OrbifoldSignature sig = parse_signature("(0; +; [-]; {(2,4,6)})");
    for (auto _ : state) benchmark::DoNotOptimize(rh_order(sig, 4));
}
BENCHMARK(BM_OrderEquation);

BENCHMARK_MAIN();
