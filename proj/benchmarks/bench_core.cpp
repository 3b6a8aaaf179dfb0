#include "qhflow/qhflow.hpp"

#include <benchmark/benchmark.h>

#include <cmath>

using namespace qhflow;

namespace {

// dense rational matrix with mixed denominators
Matrix hilbertish(size_t n) {
    Matrix m(n, n + 1);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j <= n; ++j) m(i, j) = Rational(static_cast<long>((i * 7 + j * 3) % 11) - 5, static_cast<long>(i + j + 1));
    return m;
}

PlanarField cusp_perturbed() {
    return {parse_polynomial("y^2 + x^3 + 2*x^2*y - x*y^2 + y^3/3"),
            parse_polynomial("x^3 + 3*x^2*y + x*y^2/2 - 2*y^3")};
}

}  // namespace

static void BM_RowReduce(benchmark::State& state) {
    Matrix m = hilbertish(static_cast<size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(row_reduce(m));
}
BENCHMARK(BM_RowReduce)->Arg(8)->Arg(16)->Arg(32);

static void BM_PolynomialPow(benchmark::State& state) {
    Polynomial p = parse_polynomial("1 + x - 2/3*y + x*y");
    for (auto _ : state) benchmark::DoNotOptimize(p.pow(static_cast<int>(state.range(0))));
}
BENCHMARK(BM_PolynomialPow)->Arg(8)->Arg(16);

static void BM_OperatorFamily(benchmark::State& state) {
    Polynomial h = parse_polynomial("x^4/4 - y^3/3");
    for (auto _ : state) {
        OperatorFamily fam(h, QHType(3, 4));
        for (int j = 6; j <= state.range(0); ++j) benchmark::DoNotOptimize(fam.at(j));
    }
}
BENCHMARK(BM_OperatorFamily)->Arg(22)->Arg(40);

static void BM_NormalFormCusp(benchmark::State& state) {
    PlanarField f = cusp_perturbed();
    for (auto _ : state) benchmark::DoNotOptimize(normal_form(f, QHType(3, 4), static_cast<int>(state.range(0))));
}
BENCHMARK(BM_NormalFormCusp)->Arg(12)->Arg(22)->Arg(34)->Unit(benchmark::kMillisecond);

static void BM_ClassifyMoussu(benchmark::State& state) {
    PlanarField f{parse_polynomial("y^3"), parse_polynomial("-x^3 + x^2*y^2/2")};
    for (auto _ : state) benchmark::DoNotOptimize(classify_aiif(second_stage(normal_form(f, QHType(1, 1), 14))));
}
BENCHMARK(BM_ClassifyMoussu)->Unit(benchmark::kMillisecond);

static void BM_GeneralizedTrig(benchmark::State& state) {
    Polynomial h = parse_polynomial("(x^4+y^4)/4");
    const double tol = std::pow(10.0, -static_cast<double>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(generalized_trig(h, QHType(1, 1), tol));
}
BENCHMARK(BM_GeneralizedTrig)->Arg(6)->Arg(10)->Unit(benchmark::kMillisecond);

static void BM_PoincareIntegral(benchmark::State& state) {
    TrigTable tab = generalized_trig(parse_polynomial("(x^4+y^4)/4"), QHType(1, 1), 1e-10);
    Polynomial mu = parse_polynomial("(x^4+y^4)/4 - 8*x^2*y^2");
    for (auto _ : state) benchmark::DoNotOptimize(poincare_integral(tab, mu));
}
BENCHMARK(BM_PoincareIntegral)->Unit(benchmark::kMillisecond);

static void BM_VerifyPowerIif(benchmark::State& state) {
    PlanarField f{parse_polynomial("y^2 + x^3"), parse_polynomial("x^3 + 4/3*x^2*y")};
    IifCandidate c{parse_polynomial("4*y^3 - 3*x^4"), Rational(13, 12)};
    for (auto _ : state) benchmark::DoNotOptimize(verify_power_iif(f, c));
}
BENCHMARK(BM_VerifyPowerIif);
BENCHMARK_MAIN();
