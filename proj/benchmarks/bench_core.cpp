// Copyright 2026 The slopekit Authors
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

#include "slopekit/binomial_matrix.hpp"
#include "slopekit/bounds.hpp"
#include "slopekit/lambda.hpp"
#include "slopekit/modular_forms.hpp"
#include "slopekit/padic.hpp"
#include "slopekit/sym_hecke.hpp"

using namespace slopekit;

static void BM_BinomialValuation(benchmark::State& state) {
  const long p = state.range(0);
  for (auto _ : state) {
    long acc = 0;
    for (long a = 1; a <= 500; ++a) {
      for (long b = 0; b <= a; ++b) acc += padic::binomial_valuation(a, b, p);
    }
    benchmark::DoNotOptimize(acc);
  }
}
BENCHMARK(BM_BinomialValuation)->Arg(2)->Arg(13);

static void BM_LambdaMatching(benchmark::State& state) {
  const long R = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(comb::lambda_coefficients(7, R, 2 * R));
}
BENCHMARK(BM_LambdaMatching)->Arg(8)->Arg(16)->Arg(30);

static void BM_LambdaInterpolation(benchmark::State& state) {
  const long R = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(comb::lambda_by_interpolation(7, R, 2 * R));
}
BENCHMARK(BM_LambdaInterpolation)->Arg(8)->Arg(16)->Arg(30);

static void BM_MatrixSuite(benchmark::State& state) {
  const long r = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(comb::check_matrix_suite(5, r, comb::rho_of(5, r) / 2));
}
BENCHMARK(BM_MatrixSuite)->Arg(50)->Arg(200);

static void BM_BoundSweepTuple(benchmark::State& state) {
  const long r = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(comb::verify_bound(comb::Bound::general_above, 7, r, comb::rho_of(7, r) + 1));
}
BENCHMARK(BM_BoundSweepTuple)->Arg(100)->Arg(400);

static void BM_HeckeT(benchmark::State& state) {
  hecke::SurrogateParams sp;
  sp.p = 7;
  sp.t = state.range(0);
  sp.delta = 2;
  const auto [h, star] = hecke::h_polys(sp, 1);
  hecke::FormalSum in(sp.p, sp.precision(), sp.t);
  in.add(hecke::Mat2::identity(), h);
  for (auto _ : state) benchmark::DoNotOptimize(hecke::hecke_T(in, sp));
}
BENCHMARK(BM_HeckeT)->Arg(4)->Arg(8);

static void BM_HeckeMatrix(benchmark::State& state) {
  const long k = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(mf::hecke_matrix(5, k));
}
BENCHMARK(BM_HeckeMatrix)->Arg(48)->Arg(120)->Unit(benchmark::kMillisecond);

static void BM_Slopes(benchmark::State& state) {
  const long k = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(mf::slopes(59, k));
}
BENCHMARK(BM_Slopes)->Arg(16)->Arg(46)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
