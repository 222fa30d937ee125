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
#include <string>

#include "talentlens/codes.hpp"

namespace talentlens {

// One validated posting row. Money amounts are CNY per salary-type period.
struct RecruitmentRecord {
  std::string position_id;
  char province = 'A';
  std::string city;
  SalaryKind salary;
  std::string salary_base;
  double lower_bound = 0.0;
  double upper_bound = 0.0;
  std::string company_id;
  std::string industry_id;
  Education education = Education::Gz;
  Experience experience = Experience::EKk;

  friend bool operator==(const RecruitmentRecord&,
                         const RecruitmentRecord&) = default;
};

// Annualized CNY/year amounts for a salary-bearing record.
struct AnnualSalary {
  double lower = 0.0;
  double upper = 0.0;
  double midpoint = 0.0;

  friend bool operator==(const AnnualSalary&, const AnnualSalary&) = default;
};

// Record enriched for analytics. `employment` and `annual` are empty for
// NEGOTIABLE records, which stay in the corpus but never enter salary
// aggregates.
struct NormalizedRecord {
  RecruitmentRecord base;
  std::optional<EmploymentClass> employment;
  std::optional<AnnualSalary> annual;
  EducationTier education_tier = EducationTier::kLow;
  ExperienceTier experience_tier = ExperienceTier::kLow;
  int education_rank = 0;
  int experience_rank = 0;

  bool has_salary() const { return annual.has_value(); }
  double midpoint() const { return annual->midpoint; }

  friend bool operator==(const NormalizedRecord&,
                         const NormalizedRecord&) = default;
};

}  // namespace talentlens
