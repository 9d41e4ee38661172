// Copyright 2026 The pdext Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include <benchmark/benchmark.h>

#include "pdext/pdext.hpp"

namespace {

using namespace pdext;

void BM_discretize(benchmark::State& state) {
  const PdFunction f = PdFunction::catalog(CatalogId::F3);
  const GridSpec grid = GridSpec::midpoint(Interval(0.0, 1.0), static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(discretize(f, grid));
}
BENCHMARK(BM_discretize)->Arg(256)->Arg(1024)->Arg(2000)->Unit(benchmark::kMillisecond);

void BM_eigensystem(benchmark::State& state) {
  const GridSpec grid = GridSpec::midpoint(Interval(0.0, 0.5), static_cast<int>(state.range(0)));
  const Eigen::MatrixXcd m = discretize(Kernel::min_kernel(), grid);
  for (auto _ : state) benchmark::DoNotOptimize(eigensystem(m, grid));
}
BENCHMARK(BM_eigensystem)->Arg(256)->Arg(1024)->Arg(2000)->Unit(benchmark::kMillisecond);

void BM_bochner_transform(benchmark::State& state) {
  const SpectralMeasure mu = SpectralMeasure::catalog(CatalogId::F3);
  QuadratureSpec q;
  q.radius = static_cast<double>(state.range(0));
  const std::vector<double> xs = closed_uniform_points(-1.0, 1.0, 40);
  for (auto _ : state) benchmark::DoNotOptimize(bochner_transform(mu, xs, q));
}
BENCHMARK(BM_bochner_transform)->Arg(50)->Arg(200)->Arg(800)->Unit(benchmark::kMillisecond);

void BM_gram_report(benchmark::State& state) {
  const PdFunction f = PdFunction::catalog(CatalogId::F5);
  const std::vector<double> pts = uniform_points(Interval(0.0, 1.0), static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(is_pd_grid(f, pts));
}
BENCHMARK(BM_gram_report)->Arg(64)->Arg(256)->Unit(benchmark::kMicrosecond);

void BM_sample_paths(benchmark::State& state) {
  std::vector<double> ts;
  for (int i = 1; i <= 20; ++i) ts.push_back(i / 20.0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(sample_paths(CovKernel::bm(), ts, static_cast<int>(state.range(0)), 1));
  }
}
BENCHMARK(BM_sample_paths)->Arg(1000)->Arg(10000)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
