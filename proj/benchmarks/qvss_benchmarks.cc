// Copyright 2026 The QVSS Authors
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

#include "qvss/naor.h"
#include "qvss/parity.h"
#include "qvss/protocol.h"

namespace qvss {
namespace {

void BM_Hadamard(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  StateVector s(n);
  for (auto _ : state) {
    for (int q = 1; q <= n; ++q) s.ApplyH(q);
    benchmark::DoNotOptimize(s.amplitudes().data());
  }
  state.SetItemsProcessed(state.iterations() * n);
}
BENCHMARK(BM_Hadamard)->Arg(8)->Arg(12)->Arg(16);

void BM_Cnot(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  StateVector s = PrepareParityState({n, 0});
  for (auto _ : state) {
    for (int q = 1; q < n; ++q) s.ApplyCnot(q, n);
    benchmark::DoNotOptimize(s.amplitudes().data());
  }
  state.SetItemsProcessed(state.iterations() * (n - 1));
}
BENCHMARK(BM_Cnot)->Arg(8)->Arg(12)->Arg(16);

void BM_PrepareDirect(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(PrepareParityState({n, 1}));
}
BENCHMARK(BM_PrepareDirect)->Arg(3)->Arg(6)->Arg(10)->Arg(16);

void BM_PrepareCircuit(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Circuit c = BuildParityCircuit({n, 1});
  for (auto _ : state) benchmark::DoNotOptimize(Simulate(c, StateVector(n)));
}
BENCHMARK(BM_PrepareCircuit)->Arg(3)->Arg(6)->Arg(10)->Arg(16);

void BM_MeasureAll(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const StateVector c = PrepareParityState({n, 0});
  Rng rng = MakeRng(1);
  for (auto _ : state) {
    StateVector s = c;
    benchmark::DoNotOptimize(s.MeasureAll(rng));
  }
}
BENCHMARK(BM_MeasureAll)->Arg(6)->Arg(12);

BinaryImage Checkerboard(uint32_t side) {
  BinaryImage img(side, side);
  for (uint32_t r = 0; r < side; ++r)
    for (uint32_t c = 0; c < side; ++c) img.set(r, c, FromBit(static_cast<int>((r + c) & 1u)));
  return img;
}

void BM_ShareRecover(benchmark::State& state) {
  const BinaryImage img = Checkerboard(64);
  const int n = static_cast<int>(state.range(0));
  const Backend backend = state.range(1) ? Backend::kSampled : Backend::kStatevector;
  const int workers = static_cast<int>(state.range(2));
  uint64_t seed = 0;
  for (auto _ : state) {
    SharingResult r = ShareImage(img, n, backend, ++seed, workers);
    benchmark::DoNotOptimize(RecoverImage(r.shares, r.session, seed, workers));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(img.pixel_count()));
}
BENCHMARK(BM_ShareRecover)
    ->ArgNames({"n", "sampled", "workers"})
    ->Args({3, 0, 1})
    ->Args({3, 0, 4})
    ->Args({6, 0, 1})
    ->Args({6, 0, 4})
    ->Args({6, 1, 1})
    ->Args({32, 1, 1});

void BM_ClassicalShare(benchmark::State& state) {
  const BinaryImage img = Checkerboard(64);
  const MatrixSets sets = BuildNnMatrixSets(static_cast<int>(state.range(0)));
  uint64_t seed = 0;
  for (auto _ : state) benchmark::DoNotOptimize(ClassicalShareImage(img, sets, ++seed));
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(img.pixel_count()));
}
BENCHMARK(BM_ClassicalShare)->Arg(3)->Arg(6);

}  // namespace
}  // namespace qvss

BENCHMARK_MAIN();
