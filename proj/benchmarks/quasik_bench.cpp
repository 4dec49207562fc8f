// Copyright 2026 The quasik Authors
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

#include <string>

#include "quasik/facering.hpp"
#include "quasik/io.hpp"
#include "quasik/proptest.hpp"

namespace {

using namespace quasik;

InputDocument doc_of(const std::string& name) {
  return load_input(std::string(QUASIK_DATA_DIR) + "/" + name + ".json");
}

const char* input_name(const benchmark::State& state) {
  static const char* names[] = {"cp2", "square_h2", "cp3", "cube"};
  return names[state.range(0)];
}

void BM_Snf(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  Sampler s(1);
  IntMatrix a(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a(i, j) = s.uniform(-9, 9);
  for (auto _ : state) benchmark::DoNotOptimize(snf(a));
}
BENCHMARK(BM_Snf)->Arg(4)->Arg(8)->Arg(16);

void BM_LaurentMultiply(benchmark::State& state) {
  const Profile p = Profile::character(3);
  LaurentPoly f(p);
  LaurentPoly g(p);
  Sampler s(2);
  for (long k = 0; k < state.range(0); ++k) {
    f.add_term(Exponent{s.uniform(-5, 5), s.uniform(-5, 5), s.uniform(-5, 5)}, s.nonzero(5));
    g.add_term(Exponent{s.uniform(-5, 5), s.uniform(-5, 5), s.uniform(-5, 5)}, s.nonzero(5));
  }
  for (auto _ : state) benchmark::DoNotOptimize(f * g);
}
BENCHMARK(BM_LaurentMultiply)->Arg(10)->Arg(50)->Arg(200);

void BM_InW(benchmark::State& state) {
  const auto doc = doc_of(input_name(state));
  const FaceRing ring(doc.polytope, doc.lambda);
  Sampler s(3);
  const auto tuple = s.member_tuple(ring);
  for (auto _ : state) benchmark::DoNotOptimize(in_w(ring.joins(), tuple));
  state.SetLabel(input_name(state));
}
BENCHMARK(BM_InW)->DenseRange(0, 3);

void BM_Interpolate(benchmark::State& state) {
  const auto doc = doc_of(input_name(state));
  const FaceRing ring(doc.polytope, doc.lambda);
  const auto order = resolve_order(doc);
  Sampler s(4);
  const auto image = ring.phi(s.face_ring_element(ring, 3, 2));
  for (auto _ : state) benchmark::DoNotOptimize(ring.interpolate(image, order));
  state.SetLabel(input_name(state));
}
BENCHMARK(BM_Interpolate)->DenseRange(0, 3);

void BM_OrdinaryRank(benchmark::State& state) {
  const auto doc = doc_of(input_name(state));
  const FaceRing ring(doc.polytope, doc.lambda);
  for (auto _ : state) benchmark::DoNotOptimize(ring.ordinary_rank());
  state.SetLabel(input_name(state));
}
BENCHMARK(BM_OrdinaryRank)->DenseRange(0, 3);

}  // namespace

BENCHMARK_MAIN();
