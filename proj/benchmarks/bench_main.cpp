/*
   Copyright 2026 The fqgeom authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "fqgeom/altform.hpp"
#include "fqgeom/audit.hpp"
#include "fqgeom/catalog.hpp"
#include "fqgeom/sections.hpp"

using namespace fqgeom;

namespace {

const FieldCtx& f9() {
    static const FieldCtx F = field_create(3, 2);
    return F;
}

const FieldCtx& f4() {
    static const FieldCtx F = field_create(2, 2);
    return F;
}

const FieldCtx& f2() {
    static const FieldCtx F = field_create(2, 1);
    return F;
}

void BM_FieldArithmetic(benchmark::State& state) {
    const FieldCtx& F = f9();
    for (auto _ : state) {
        FieldElement acc = F.one();
        for (unsigned i = 1; i < F.q(); ++i)
            for (unsigned j = 1; j < F.q(); ++j) acc = acc * F.from_index(i) + F.from_index(j);
        benchmark::DoNotOptimize(acc);
    }
}
BENCHMARK(BM_FieldArithmetic);

void BM_CountPointsHermitian9(benchmark::State& state) {
    const auto S = hermitian(f9());
    for (auto _ : state) benchmark::DoNotOptimize(count_points(S));
}
BENCHMARK(BM_CountPointsHermitian9);

void BM_SectionCensusHyperbolic4(benchmark::State& state) {
    const auto S = hyperbolic(f4());
    for (auto _ : state) {
        const auto census = section_census(S);
        benchmark::DoNotOptimize(census.nu1);
    }
}
BENCHMARK(BM_SectionCensusHyperbolic4);

void BM_LineSpectrumHermitian4(benchmark::State& state) {
    const auto S = hermitian(f4());
    for (auto _ : state) {
        const auto spectrum = line_spectrum(S);
        benchmark::DoNotOptimize(spectrum.size());
    }
}
BENCHMARK(BM_LineSpectrumHermitian4);

void BM_EnumerateLines4(benchmark::State& state) {
    for (auto _ : state) {
        const auto lines = enumerate_lines(f4());
        benchmark::DoNotOptimize(lines.size());
    }
}
BENCHMARK(BM_EnumerateLines4);

void BM_SymplecticNormalForm4(benchmark::State& state) {
    const FieldCtx& F = f4();
    std::vector<AlternatingMatrix> mats;
    std::mt19937 rng(11);
    std::uniform_int_distribution<unsigned> dist(0, 3);
    while (mats.size() < 64) {
        std::array<FieldElement, 6> u = {F.zero(), F.zero(), F.zero(), F.zero(), F.zero(), F.zero()};
        bool nonzero = false;
        for (auto& v : u) {
            v = F.from_index(dist(rng));
            nonzero = nonzero || !v.is_zero();
        }
        if (nonzero) mats.emplace_back(F, u);
    }
    for (auto _ : state)
        for (const auto& A : mats) {
            const auto nf = symplectic_normal_form(A);
            benchmark::DoNotOptimize(nf.rank);
        }
}
BENCHMARK(BM_SymplecticNormalForm4);

void BM_QuadricCensus2(benchmark::State& state) {
    for (auto _ : state) {
        const auto rec = quadric_census(f2());
        benchmark::DoNotOptimize(rec.achievers);
    }
}
BENCHMARK(BM_QuadricCensus2);

} // namespace

int main(int argc, char** argv) {
    benchmark::Initialize(&argc, argv);
    benchmark::RunSpecifiedBenchmarks();
    return 0;
}
