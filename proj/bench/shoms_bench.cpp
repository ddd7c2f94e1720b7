// Serial reference kernels against their OpenMP counterparts.
// The thread count of the parallel variants is the benchmark argument.

#include "shoms/cache.hpp"
#include "shoms/fem.hpp"
#include "shoms/microgen.hpp"

#include <benchmark/benchmark.h>
#include <omp.h>

#include <random>

using namespace shoms;

namespace {

struct Fixture {
    TriMesh mesh;
    FemSpace space;
    std::vector<Mat2> k;
    std::vector<Tensor4> C;
    std::vector<double> x;

    explicit Fixture(int n)
        : mesh(structured_mesh(n, n, 0.0, 0.0, 1.0 / n, 1.0 / n, n)), space(mesh) {
        std::mt19937 gen(1);
        std::uniform_real_distribution<double> u(0.5, 2.0);
        for (std::size_t e = 0; e < mesh.element_count(); ++e) {
            k.push_back(Mat2::identity(u(gen)));
            C.push_back(Tensor4::isotropic(u(gen), u(gen)));
        }
        for (std::size_t i = 0; i < 2 * mesh.node_count(); ++i) x.push_back(u(gen));
    }
};

Fixture& fixture() {
    static Fixture f(200);
    return f;
}

class Threads {
public:
    explicit Threads(int n) : saved_(omp_get_max_threads()) { omp_set_num_threads(n); }
    ~Threads() { omp_set_num_threads(saved_); }

private:
    int saved_;
};

void BM_DiffusionSerial(benchmark::State& st) {
    auto& f = fixture();
    for (auto _ : st) benchmark::DoNotOptimize(assemble_diffusion_serial(f.space, f.k));
}
void BM_DiffusionParallel(benchmark::State& st) {
    auto& f = fixture();
    Threads t(static_cast<int>(st.range(0)));
    for (auto _ : st) benchmark::DoNotOptimize(assemble_diffusion(f.space, f.k));
}

void BM_ElasticitySerial(benchmark::State& st) {
    auto& f = fixture();
    for (auto _ : st) benchmark::DoNotOptimize(assemble_elasticity_serial(f.space, f.C));
}
void BM_ElasticityParallel(benchmark::State& st) {
    auto& f = fixture();
    Threads t(static_cast<int>(st.range(0)));
    for (auto _ : st) benchmark::DoNotOptimize(assemble_elasticity(f.space, f.C));
}

void BM_SpmvSerial(benchmark::State& st) {
    auto& f = fixture();
    auto a = assemble_elasticity(f.space, f.C);
    std::vector<double> y(f.x.size());
    for (auto _ : st) {
        a.multiply_serial(f.x, y);
        benchmark::DoNotOptimize(y.data());
    }
}
void BM_SpmvParallel(benchmark::State& st) {
    auto& f = fixture();
    auto a = assemble_elasticity(f.space, f.C);
    std::vector<double> y(f.x.size());
    Threads t(static_cast<int>(st.range(0)));
    for (auto _ : st) {
        a.multiply(f.x, y);
        benchmark::DoNotOptimize(y.data());
    }
}

void BM_RecoverySerial(benchmark::State& st) {
    auto& f = fixture();
    for (auto _ : st) benchmark::DoNotOptimize(recover_gradient_serial(f.space, f.x, 2));
}
void BM_RecoveryParallel(benchmark::State& st) {
    auto& f = fixture();
    Threads t(static_cast<int>(st.range(0)));
    for (auto _ : st) benchmark::DoNotOptimize(recover_gradient(f.space, f.x, 2));
}

/// First-order cell tables for eight random samples; samples run in parallel.
void BM_CellBatch(benchmark::State& st) {
    InclusionSpec spec;
    spec.count = 9;
    spec.a_min = spec.a_max = 0.1;
    std::vector<CellSample> samples;
    for (std::uint64_t s = 0; s < 8; ++s) {
        auto g = sample_inclusions(spec, 100 + s);
        samples.push_back({s, [g](const Vec2& y) { return g.material_at(y); }});
    }
    auto grid = TemperatureGrid::uniform(300.0, 800.0, 3);
    CellOptions opts;
    opts.second_order = false;
    auto laws = presets::ti64_zro2();
    Threads t(static_cast<int>(st.range(0)));
    for (auto _ : st) benchmark::DoNotOptimize(build_cell_tables(samples, grid, 32, laws, opts));
}

} // namespace

BENCHMARK(BM_DiffusionSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_DiffusionParallel)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ElasticitySerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ElasticityParallel)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SpmvSerial)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_SpmvParallel)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_RecoverySerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_RecoveryParallel)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CellBatch)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
