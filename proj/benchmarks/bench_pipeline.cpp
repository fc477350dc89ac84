#include <benchmark/benchmark.h>

#include "pencils/driver.hpp"
#include "pencils/parser.hpp"

namespace {

using namespace pencils;

const char* kConicInput = R"([pencil]
F = "X*Y"
G = "Z^2"
)";

const char* kCubicInput = R"([field]
generator = "g"
min_poly = "9, 0, -14, 0, 1"

[pencil]
F = "27*X^3 - 27*X^2*Y + 9*X*Y^2 - Y^3 - 8*X*Z^2 + 5*Y*Z^2"
G = "X^3 + 6*X^2*Y + 12*X*Y^2 + 8*Y^3 - 7*Y*Z^2"
)";

void run_pipeline(const char* text) {
    ParsedInput input = parse_input(text);
    Pencil pencil = make_pencil(input.field, input.F, input.G);
    DriverResult result = run_driver(pencil);
    benchmark::DoNotOptimize(result.components.size());
}

void BM_ConicPencil(benchmark::State& state) {
    for (auto _ : state) run_pipeline(kConicInput);
}
BENCHMARK(BM_ConicPencil)->Unit(benchmark::kMillisecond);

void BM_CubicPencil(benchmark::State& state) {
    for (auto _ : state) run_pipeline(kCubicInput);
}
BENCHMARK(BM_CubicPencil)->Unit(benchmark::kMillisecond);

void BM_BasePointsOnly(benchmark::State& state) {
    ParsedInput input = parse_input(kCubicInput);
    Pencil pencil = make_pencil(input.field, input.F, input.G);
    for (auto _ : state) {
        Cluster c = compute_base_points(pencil);
        benchmark::DoNotOptimize(c.size());
    }
}
BENCHMARK(BM_BasePointsOnly)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
