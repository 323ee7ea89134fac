// Copyright 2026 The modlp Authors
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

#include "modlp/campaign.hpp"

using namespace modlp;

namespace {

void BM_herm_eig(benchmark::State& state) {
  int d = static_cast<int>(state.range(0));
  Rng rng(1);
  CMat g = ginibre(d, d, rng);
  CMat a = g * g.adjoint();
  for (auto _ : state) {
    HermEig he = herm_eig(a);
    benchmark::DoNotOptimize(he.eigenvalues);
  }
}
BENCHMARK(BM_herm_eig)->Arg(2)->Arg(4)->Arg(8);

void BM_frac_power(benchmark::State& state) {
  int d = static_cast<int>(state.range(0));
  Rng rng(2);
  CMat g = ginibre(d, d, rng);
  CMat a = g * g.adjoint();
  for (auto _ : state) {
    CMat r = frac_power(a, -0.5);
    benchmark::DoNotOptimize(r);
  }
}
BENCHMARK(BM_frac_power)->Arg(2)->Arg(4)->Arg(8);

void BM_am_norm(benchmark::State& state) {
  int d = static_cast<int>(state.range(0));
  Rng rng(3);
  HSVector k(ginibre(d, d, rng));
  PositiveFunctional phi = random_state(d, rng);
  for (auto _ : state) {
    double v = am_norm(k, phi, 2.5);
    benchmark::DoNotOptimize(v);
  }
}
BENCHMARK(BM_am_norm)->Arg(2)->Arg(4)->Arg(8);

void BM_d_renyi_trace_route(benchmark::State& state) {
  int d = static_cast<int>(state.range(0));
  Rng rng(4);
  PositiveFunctional psi = random_state(d, rng);
  PositiveFunctional phi = random_state(d, rng);
  for (auto _ : state) {
    double v = d_renyi(psi, phi, 0.75).value;
    benchmark::DoNotOptimize(v);
  }
}
BENCHMARK(BM_d_renyi_trace_route)->Arg(2)->Arg(4)->Arg(8);

void BM_d_renyi_norm_route(benchmark::State& state) {
  int d = static_cast<int>(state.range(0));
  Rng rng(4);
  PositiveFunctional psi = random_state(d, rng);
  PositiveFunctional phi = random_state(d, rng);
  for (auto _ : state) {
    double v = d_renyi_norm_route(psi, phi, 0.75).value;
    benchmark::DoNotOptimize(v);
  }
}
BENCHMARK(BM_d_renyi_norm_route)->Arg(2)->Arg(4)->Arg(8);

void BM_petz_sufficiency(benchmark::State& state) {
  int d = static_cast<int>(state.range(0));
  Rng rng(5);
  KrausChannel ch = KrausChannel::random_stinespring(d, d, 2, rng);
  PositiveFunctional psi = random_state(d, rng);
  PositiveFunctional phi = random_state(d, rng);
  for (auto _ : state) {
    SufficiencyReport r = is_sufficient(ch, psi, phi, 1e-7);
    benchmark::DoNotOptimize(r.recovered_psi_error);
  }
}
BENCHMARK(BM_petz_sufficiency)->Arg(2)->Arg(4)->Arg(8);

void BM_campaign_trial(benchmark::State& state) {
  CampaignConfig config;
  config.trials = 1;
  config.dims = {static_cast<int>(state.range(0))};
  for (auto _ : state) {
    CampaignResult r = run_campaign(config);
    benchmark::DoNotOptimize(r.min_gap);
  }
}
BENCHMARK(BM_campaign_trial)->Arg(2)->Arg(3)->Arg(4);

void BM_variational_bound(benchmark::State& state) {
  Rng rng(6);
  HSVector k(ginibre(2, 2, rng));
  PositiveFunctional phi = random_state(2, rng);
  long budget = state.range(0);
  for (auto _ : state) {
    VariationalResult r = am_norm_variational(k, phi, 4.0, budget, 1);
    benchmark::DoNotOptimize(r.value);
  }
}
BENCHMARK(BM_variational_bound)->Arg(100)->Arg(1000)->Arg(5000);

}  // namespace

BENCHMARK_MAIN();
