// Copyright 2026 The agq Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include "agq/codes.h"
#include "agq/constructions.h"
#include "agq/field.h"

using namespace agq;

static void field_mul(benchmark::State &state) {
    Field f = Field::build(2, 8);
    Elem a = 17;
    for (auto _ : state) {
        a = f.mul(a, 12345);
        benchmark::DoNotOptimize(a);
    }
}
BENCHMARK(field_mul);

static void field_add(benchmark::State &state) {
    Field f = Field::build(2, 8);
    Elem a = 17;
    for (auto _ : state) {
        a = f.add(a, 12345);
        benchmark::DoNotOptimize(a);
    }
}
BENCHMARK(field_add);

static void hermitian_gram_q13(benchmark::State &state) {
    Field f = Field::build(13, 1);
    CertifiedCode c = deep_dimension(f, 2, true);
    for (auto _ : state) {
        benchmark::DoNotOptimize(hermitian_gram(f, c.code));
    }
}
BENCHMARK(hermitian_gram_q13);

static void mds_minors_25_7(benchmark::State &state) {
    Field f = Field::build(13, 1);
    CertifiedCode c = deep_dimension(f, 2, true);
    for (auto _ : state) {
        benchmark::DoNotOptimize(is_mds_by_minors(f, c.code, Budget{}));
    }
    state.SetLabel("C(25,7) subsets");
}
BENCHMARK(mds_minors_25_7)->Unit(benchmark::kMillisecond);

static void mds_cauchy_25_7(benchmark::State &state) {
    Field f = Field::build(13, 1);
    CertifiedCode c = deep_dimension(f, 2, true);
    for (auto _ : state) {
        benchmark::DoNotOptimize(mds_by_cauchy_form(f, c.code));
    }
}
BENCHMARK(mds_cauchy_25_7)->Unit(benchmark::kMicrosecond);

static void dual_distance_hermitian_q4(benchmark::State &state) {
    Field f = Field::build(2, 2);
    ConstructionRequest req;
    req.id = ConstructionId::C7;
    req.p = 2;
    req.m = 2;
    req.n = 16;
    req.k = 6;
    CertifiedCode c = construct(f, req);
    for (auto _ : state) {
        benchmark::DoNotOptimize(dual_distance_by_columns(f, c.code, 4, Budget{}));
    }
}
BENCHMARK(dual_distance_hermitian_q4)->Unit(benchmark::kMillisecond);

static void exhaustive_distance_as_q3(benchmark::State &state) {
    Field f = Field::build(3, 1);
    ConstructionRequest req;
    req.id = ConstructionId::C9;
    req.p = 3;
    req.t = 2;
    req.k = 4;
    CertifiedCode c = construct(f, req);
    for (auto _ : state) {
        benchmark::DoNotOptimize(exhaustive_distance(f, c.code, Budget{}));
    }
}
BENCHMARK(exhaustive_distance_as_q3)->Unit(benchmark::kMicrosecond);

BENCHMARK_MAIN();
