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
#include <utility>

#include "talentlens/codes.hpp"
#include "talentlens/record.hpp"

namespace talentlens {

// Working-time constants for wage conversion: 21.75 working days and 174
// working hours per month.
inline constexpr double kWorkingDaysPerMonth = 21.75;
inline constexpr double kWorkingHoursPerMonth = 174.0;
inline constexpr double kWeeksPerYear = 52.0;

// Empty for NEGOTIABLE, which has no convertible salary.
std::optional<EmploymentClass> classify_employment(SalaryType type);

// Multiplier taking a per-period amount to CNY/year. Throws DomainError for
// NEGOTIABLE.
double annual_factor(const SalaryKind& kind);

// Throws DomainError for NEGOTIABLE or when lower > upper or either is
// negative.
std::pair<double, double> annualize(const SalaryKind& kind, double lower,
                                    double upper);

double salary_midpoint(double annual_lower, double annual_upper);

EducationTier education_tier(Education code);
ExperienceTier experience_tier(Experience code);

// Position in the ordinal chain, 0..7.
constexpr int ordinal_rank(Education code) { return static_cast<int>(code); }
constexpr int ordinal_rank(Experience code) { return static_cast<int>(code); }

NormalizedRecord normalize(const RecruitmentRecord& record);

}  // namespace talentlens
