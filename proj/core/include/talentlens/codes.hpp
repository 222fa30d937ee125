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

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace talentlens {

// Education requirement codes. Enumerator order is the ordinal chain, so
// the underlying value is the rank (0 = no requirement, 7 = doctorate).
enum class Education : std::uint8_t { Gz, GZ, Gx, Gy, GI, GP, Go, Gh };

// Experience requirement codes, ordered by required years (EKk = none,
// ESu = 10+ years).
enum class Experience : std::uint8_t { EKk, Eas, Eqh, EdD, EaZ, EzN, Eby, ESu };

inline constexpr std::array<Education, 8> kAllEducation = {
    Education::Gz, Education::GZ, Education::Gx, Education::Gy,
    Education::GI, Education::GP, Education::Go, Education::Gh};

inline constexpr std::array<Experience, 8> kAllExperience = {
    Experience::EKk, Experience::Eas, Experience::Eqh, Experience::EdD,
    Experience::EaZ, Experience::EzN, Experience::Eby, Experience::ESu};

enum class SalaryType : std::uint8_t {
  kYearly,
  kMonthly,
  kMonthlyWithBonus,
  kWeekly,
  kDaily,
  kHourly,
  kNegotiable,
};

inline constexpr std::array<SalaryType, 7> kAllSalaryTypes = {
    SalaryType::kYearly, SalaryType::kMonthly, SalaryType::kMonthlyWithBonus,
    SalaryType::kWeekly, SalaryType::kDaily,   SalaryType::kHourly,
    SalaryType::kNegotiable};

// Salary type plus the bonus-month count that only MONTHLY_WITH_BONUS carries.
struct SalaryKind {
  SalaryType type = SalaryType::kMonthly;
  int bonus_months = 0;

  friend bool operator==(const SalaryKind&, const SalaryKind&) = default;
};

enum class EmploymentClass : std::uint8_t { kPermanent, kFlexible };
enum class EducationTier : std::uint8_t { kLow, kMedium, kHigh };
enum class ExperienceTier : std::uint8_t { kLow, kHigh };

std::string_view to_string(Education e);
std::string_view to_string(Experience e);
std::string_view to_string(SalaryType t);
std::string_view to_string(EmploymentClass c);
std::string_view to_string(EducationTier t);
std::string_view to_string(ExperienceTier t);

std::optional<Education> parse_education(std::string_view code);
std::optional<Experience> parse_experience(std::string_view code);
std::optional<EmploymentClass> parse_employment_class(std::string_view text);

// Canonical salary-type tokens: YEARLY, MONTHLY, MONTHLY_WITH_BONUS:<b>
// (b >= 1), WEEKLY, DAILY, HOURLY, NEGOTIABLE.
std::optional<SalaryKind> parse_salary_kind(std::string_view token);
std::string format_salary_kind(const SalaryKind& kind);

// Identifier pattern checks for the anonymized schema.
bool is_position_id(std::string_view s);  // ([a-z0-9]{4}-){3}[a-z0-9]{4}
bool is_province(std::string_view s);     // [A-Z]
bool is_city(std::string_view s);         // [A-Z][0-9]{3}
bool is_industry_id(std::string_view s);  // [A-Za-z0-9]{6}

}  // namespace talentlens
