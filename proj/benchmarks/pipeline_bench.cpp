// Copyright 2026 The TalentLens Authors
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

#include <sstream>

#include "talentlens/datagen.hpp"
#include "talentlens/ingest.hpp"
#include "talentlens/pipeline.hpp"
#include "talentlens/stats.hpp"

namespace {

using namespace talentlens;

GenConfig corpus(std::int64_t records) {
  GenConfig c;
  c.record_count = static_cast<std::size_t>(records);
  c.position_count = 2000;
  return c;
}

void BM_ParseCsv(benchmark::State& state) {
  const std::string csv = generate(corpus(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(parse_dataset(csv, InputFormat::kCsv));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
  state.SetBytesProcessed(state.iterations() * static_cast<std::int64_t>(csv.size()));
}
BENCHMARK(BM_ParseCsv)->Arg(10000)->Arg(100000)->Unit(benchmark::kMillisecond);

void BM_BuildSnapshot(benchmark::State& state) {
  const auto records = generate_records(corpus(state.range(0)));
  const double fraction = static_cast<double>(state.range(1)) / 100.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(build_snapshot(records, fraction));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_BuildSnapshot)
    ->Args({100000, 1})
    ->Args({100000, 100})
    ->Unit(benchmark::kMillisecond);

void BM_CacheRoundTrip(benchmark::State& state) {
  const auto snap = build_snapshot(generate_records(corpus(100000)), 1.0);
  for (auto _ : state) {
    std::istringstream in(to_cache_bytes(*snap));
    benchmark::DoNotOptimize(read_cache(in));
  }
}
BENCHMARK(BM_CacheRoundTrip)->Unit(benchmark::kMillisecond);

void BM_Quartiles(benchmark::State& state) {
  std::vector<double> values(static_cast<std::size_t>(state.range(0)));
  for (std::size_t i = 0; i < values.size(); ++i) values[i] = static_cast<double>((i * 7919) % 1000);
  for (auto _ : state) benchmark::DoNotOptimize(iqr_bounds(values));
}
BENCHMARK(BM_Quartiles)->Range(8, 8 << 10);

}  // namespace
