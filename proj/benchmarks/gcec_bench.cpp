// Copyright 2026 The gcec Authors
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

#include "gcec/channel_builder.hpp"
#include "gcec/covariance_kernel.hpp"
#include "gcec/extremality.hpp"
#include "gcec/pipeline.hpp"

namespace {

gcec::KernelFamily family(const std::string& group, int d, std::vector<int> parts, int omega) {
  const gcec::GroupSpec spec = gcec::lookup(group, d);
  const gcec::Rep rep = gcec::materialize(spec, gcec::make_label(spec, std::move(parts)));
  return gcec::joint_nullspace(gcec::build_system(spec.kind, rep, rep, spec.irrep(omega)));
}

void BM_KernelSo3(benchmark::State& state) {
  const int l = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(family("SO3", 2 * l + 1, {l}, l));
}
BENCHMARK(BM_KernelSo3)->DenseRange(1, 4);

void BM_SolveTpA4(benchmark::State& state) {
  const auto fam = family("A4", 3, {3}, 3);
  for (auto _ : state) benchmark::DoNotOptimize(gcec::solve_tp(fam));
}
BENCHMARK(BM_SolveTpA4);

void BM_TestExtreme(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  const auto fam = family("SU2", d, {0, d - 2}, d - 2);
  const auto report = gcec::solve_tp(fam);
  const gcec::KrausSet k = gcec::kraus_at(fam, report.solutions.front());
  for (auto _ : state) benchmark::DoNotOptimize(gcec::test_extreme(k));
}
BENCHMARK(BM_TestExtreme)->DenseRange(3, 7, 2);

void BM_RunEnumeration(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(gcec::run_enumeration("D5", std::nullopt, 3));
}
BENCHMARK(BM_RunEnumeration)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
