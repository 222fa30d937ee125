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

#include <map>
#include <memory>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "talentlens/record.hpp"
#include "talentlens/snapshot.hpp"
#include "talentlens/stats.hpp"

namespace talentlens {

inline constexpr double kDefaultTopFraction = 0.01;

// Groups smaller than this skip fencing and are kept whole.
inline constexpr std::size_t kMinFencedGroupSize = 4;

// Positions ranked by record count, descending. The cutoff is the count at
// rank ceil(fraction * distinct); every position with count >= cutoff is
// selected, so ties at the threshold can push the set past the nominal size.
// Throws DomainError for fraction outside (0,1] or empty input.
std::set<std::string> top_percent_positions(
    const std::map<std::string, std::size_t, std::less<>>& counts,
    double fraction);
std::set<std::string> top_percent_positions(
    std::span<const RecruitmentRecord> records, double fraction);

struct OutlierSplit {
  std::vector<NormalizedRecord> kept;
  std::vector<NormalizedRecord> removed;
};

// Single-pass Tukey fencing on annual midpoints, grouped by
// (province, position, employment class). Records without a convertible
// salary bypass fencing. Input order is preserved within kept and removed.
OutlierSplit remove_outliers(std::span<const NormalizedRecord> records);

// filter -> normalize -> fence. Throws PipelineError if nothing survives.
std::shared_ptr<const DatasetSnapshot> build_snapshot(
    std::span<const RecruitmentRecord> raw, double fraction = kDefaultTopFraction);

}  // namespace talentlens
