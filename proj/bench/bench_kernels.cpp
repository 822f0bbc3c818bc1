// Parallel kernels against their serial references.
#include "cedga/augment.hpp"
#include "cedga/catalog.hpp"
#include "cedga/diagram.hpp"
#include "cedga/matrix.hpp"
#include "cedga/variety.hpp"

#include <benchmark/benchmark.h>

#include <random>

using namespace cedga;

namespace {

Matrix random_matrix(std::uint32_t p, std::size_t n) {
    std::mt19937_64 rng(7);
    Matrix m(p, n, n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c)
            m.at(r, c) = static_cast<Fp>(rng() % p);
    return m;
}

void BM_rank(benchmark::State& st) {
    Matrix m = random_matrix(101, static_cast<std::size_t>(st.range(0)));
    for (auto _ : st)
        benchmark::DoNotOptimize(rank(m));
}

void BM_rank_serial(benchmark::State& st) {
    Matrix m = random_matrix(101, static_cast<std::size_t>(st.range(0)));
    for (auto _ : st)
        benchmark::DoNotOptimize(rank_serial(m));
}

void BM_augmentations(benchmark::State& st) {
    DGA a = catalog_dga("trefoil", 7);
    for (auto _ : st)
        benchmark::DoNotOptimize(find_augmentations(a, 7, 6, 1, false));
}

void BM_augmentations_serial(benchmark::State& st) {
    DGA a = catalog_dga("trefoil", 7);
    for (auto _ : st)
        benchmark::DoNotOptimize(find_augmentations_serial(a, 7, 6, 1, false));
}

void BM_locus(benchmark::State& st) {
    LocusPolynomial f = catalog_polynomial("poly:chekanov");
    for (auto _ : st)
        benchmark::DoNotOptimize(polynomial_locus(f, static_cast<std::uint32_t>(st.range(0))));
}

void BM_locus_serial(benchmark::State& st) {
    LocusPolynomial f = catalog_polynomial("poly:chekanov");
    for (auto _ : st)
        benchmark::DoNotOptimize(polynomial_locus_serial(f, static_cast<std::uint32_t>(st.range(0))));
}

void BM_points(benchmark::State& st) {
    DGA a = catalog_spun("spun-trefoil", 5).dga;
    for (auto _ : st)
        benchmark::DoNotOptimize(augmentation_points(a, 5));
}

void BM_points_serial(benchmark::State& st) {
    DGA a = catalog_spun("spun-trefoil", 5).dga;
    for (auto _ : st)
        benchmark::DoNotOptimize(augmentation_points_serial(a, 5));
}

void BM_polygons(benchmark::State& st) {
    LagrangianDiagram d = catalog_diagram("trefoil");
    PolygonOptions opt;
    opt.parallel = st.range(0) != 0;
    for (auto _ : st)
        benchmark::DoNotOptimize(chekanov_dga(d, opt));
}

} // namespace

BENCHMARK(BM_rank)->Arg(64)->Arg(256);
BENCHMARK(BM_rank_serial)->Arg(64)->Arg(256);
BENCHMARK(BM_augmentations);
BENCHMARK(BM_augmentations_serial);
BENCHMARK(BM_locus)->Arg(503)->Arg(1009);
BENCHMARK(BM_locus_serial)->Arg(503)->Arg(1009);
BENCHMARK(BM_points);
BENCHMARK(BM_points_serial);
BENCHMARK(BM_polygons)->ArgName("parallel")->Arg(0)->Arg(1);

BENCHMARK_MAIN();
