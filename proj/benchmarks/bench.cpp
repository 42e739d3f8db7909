#include <benchmark/benchmark.h>

#include "qlogcvx/cfrac.hpp"
#include "qlogcvx/logcvx.hpp"
#include "qlogcvx/polymatrix.hpp"

using namespace qlogcvx;

namespace {

void bm_expand_bell(benchmark::State& state) {
    auto spec = family_spec(FamilyId::bell);
    for (auto _ : state) {
        auto terms = expand_jacobi(spec, 30);
        benchmark::DoNotOptimize(terms);
    }
}
BENCHMARK(bm_expand_bell);

void bm_hankel_det(benchmark::State& state) {
    auto terms = expand_jacobi(family_spec(FamilyId::alt_eulerian), 10);
    for (auto _ : state) {
        Poly d = det(hankel(terms, 5, 0));
        benchmark::DoNotOptimize(d);
    }
}
BENCHMARK(bm_hankel_det);

void bm_window_tp(benchmark::State& state) {
    auto terms = expand_jacobi(family_spec(FamilyId::alt_eulerian), 14);
    PolyMatrix m = hankel(terms, 8, 0);
    for (auto _ : state) {
        TpReport r = is_q_tp(m, 3, TpMode::all);
        benchmark::DoNotOptimize(r.minors_checked);
    }
}
BENCHMARK(bm_window_tp);

void bm_poly_mul(benchmark::State& state) {
    // dense degree-200 operands with many-digit coefficients
    std::vector<Rational> a, b;
    Rational big = Rational(1);
    for (int i = 0; i <= 200; ++i) {
        big *= Rational(31 + i % 7);
        a.push_back(big + Rational(i));
        b.push_back(big - Rational(3 * i));
    }
    Poly pa{a}, pb{b};
    for (auto _ : state) {
        Poly p = pa * pb;
        benchmark::DoNotOptimize(p);
    }
}
BENCHMARK(bm_poly_mul);

void bm_contract_expand(benchmark::State& state) {
    auto spec = family_spec(FamilyId::elliptic_cn);
    for (auto _ : state) {
        auto terms = expand_jacobi(contract(spec), 16);
        benchmark::DoNotOptimize(terms);
    }
}
BENCHMARK(bm_contract_expand);

}  // namespace

BENCHMARK_MAIN();
