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

#include <optional>
#include <set>
#include <string>
#include <utility>

#include "talentlens/codes.hpp"
#include "talentlens/record.hpp"
#include "talentlens/snapshot.hpp"

namespace talentlens {

// Shared cross-view selection. A record matches when it satisfies every
// non-empty dimension; within a dimension any listed value suffices.
struct FilterState {
  std::set<Education> education;
  std::set<Experience> experience;
  std::set<std::pair<Education, Experience>> edu_exp_pairs;
  std::set<char> provinces;
  std::set<std::string> cities;
  std::set<std::string> industries;
  std::set<std::string> positions;
  std::optional<EmploymentClass> employment_class;

  bool empty() const;

  friend bool operator==(const FilterState&, const FilterState&) = default;
};

bool matches(const NormalizedRecord& record, const FilterState& filter);

// Matching record ordinals in ascending (snapshot) order. Candidates come
// from the most selective index; the rest of the filter is checked per record.
RecordIds match(const DatasetSnapshot& snapshot, const FilterState& filter);

}  // namespace talentlens
