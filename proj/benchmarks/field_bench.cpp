#include <benchmark/benchmark.h>

#include "kummer/cocycles.hpp"
#include "kummer/field_element.hpp"

using namespace kummer;

namespace {

FieldElement dense_element() {
    const Poly a = Poly::variable(Var::A), b = Poly::variable(Var::B);
    FieldElement f;
    for (int m = 0; m < FieldElement::kSlots; ++m)
        f.set_coeff(m, Rat(a * Poly(m + 1) + b, a * b + Poly(m + 2)));
    return f;
}

void bm_fe_mul(benchmark::State& state) {
    FieldElement x = dense_element();
    FieldElement y = x + FieldElement(1);
    for (auto _ : state) {
        FieldElement z = x * y;
        benchmark::DoNotOptimize(z);
    }
}
BENCHMARK(bm_fe_mul)->Unit(benchmark::kMicrosecond);

void bm_fe_inverse(benchmark::State& state) {
    FieldElement x = FieldElement(1) + FieldElement::root(kSqrtA) +
                     FieldElement::root(kSqrtOneMinusB) * Rat::variable(Var::A);
    for (auto _ : state) {
        FieldElement z = x.inverse();
        benchmark::DoNotOptimize(z);
    }
}
BENCHMARK(bm_fe_inverse)->Unit(benchmark::kMicrosecond);

void bm_chi(benchmark::State& state) {
    const auto& all = gx_all();
    size_t k = 0;
    for (auto _ : state) {
        FieldElement c = chi_cocycle(all[k % all.size()]);
        benchmark::DoNotOptimize(c);
        k += 769;  // stride through the group
    }
}
BENCHMARK(bm_chi)->Unit(benchmark::kMicrosecond);

}  // namespace
