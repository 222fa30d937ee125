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

#include <memory>
#include <string>
#include <vector>

#include "talentlens/pipeline.hpp"
#include "talentlens/record.hpp"

namespace talentlens::testing {

// A schema-valid record; tests override the fields they care about.
inline RecruitmentRecord make_record(std::string position = "aaaa-bbbb-cccc-0001",
                                     char province = 'K', std::string city = "K001") {
  RecruitmentRecord r;
  r.position_id = std::move(position);
  r.province = province;
  r.city = std::move(city);
  r.salary = SalaryKind{SalaryType::kMonthly, 0};
  r.salary_base = "month";
  r.lower_bound = 8000;
  r.upper_bound = 12000;
  r.company_id = "co00000001";
  r.industry_id = "vrMpBQ";
  r.education = Education::GP;
  r.experience = Experience::EdD;
  return r;
}

inline RecruitmentRecord with_salary(RecruitmentRecord r, SalaryKind kind, double lower,
                                     double upper) {
  r.salary = kind;
  r.lower_bound = lower;
  r.upper_bound = upper;
  return r;
}

// Position ids with a numeric suffix: "aaaa-bbbb-cccc-0007".
inline std::string position(int n) {
  char buf[24];
  std::snprintf(buf, sizeof(buf), "aaaa-bbbb-cccc-%04d", n);
  return buf;
}

// Snapshot keeping every position (fraction 1).
inline std::shared_ptr<const DatasetSnapshot> snapshot_of(
    const std::vector<RecruitmentRecord>& records) {
  return build_snapshot(records, 1.0);
}

}  // namespace talentlens::testing
