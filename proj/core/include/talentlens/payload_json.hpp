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

#pragma once

#include <json.hpp>

#include "talentlens/analytics.hpp"
#include "talentlens/ingest.hpp"
#include "talentlens/snapshot.hpp"

namespace talentlens {

// JSON wire form of the view payloads: snake_case keys, money rounded to
// whole CNY, fractions as decimals, missing values as null.

nlohmann::json to_json(const SummaryStats& s);
nlohmann::json to_json(const Provenance& p);
nlohmann::json to_json(const FlowMatrix& m);
nlohmann::json to_json(const RegionBarSet& s);
nlohmann::json to_json(const PositionRowSet& s);
nlohmann::json to_json(const GlyphSet& s);
// Streams the same text as to_json(s).dump(); the scatter payload carries one
// object per record and building a json tree for it dominates request time.
std::string to_json_text(const GlyphSet& s);
nlohmann::json to_json(const BandDistribution& d);
nlohmann::json to_json(const RankedGrid& g);
nlohmann::json to_json(const FlowerSet& s);
nlohmann::json to_json(const TreemapNode& n);

// Money on the wire: nearest whole CNY.
std::int64_t money(double cny);

}  // namespace talentlens
