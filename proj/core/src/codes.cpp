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

#include "talentlens/codes.hpp"

#include <charconv>

namespace talentlens {
namespace {

constexpr std::array<std::string_view, 8> kEducationCodes = {
    "Gz", "GZ", "Gx", "Gy", "GI", "GP", "Go", "Gh"};
constexpr std::array<std::string_view, 8> kExperienceCodes = {
    "EKk", "Eas", "Eqh", "EdD", "EaZ", "EzN", "Eby", "ESu"};
constexpr std::array<std::string_view, 7> kSalaryTypeNames = {
    "YEARLY", "MONTHLY", "MONTHLY_WITH_BONUS", "WEEKLY",
    "DAILY",  "HOURLY",  "NEGOTIABLE"};

constexpr bool is_lower_alnum(char c) {
  return (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9');
}
constexpr bool is_alnum(char c) {
  return is_lower_alnum(c) || (c >= 'A' && c <= 'Z');
}
constexpr bool is_upper(char c) { return c >= 'A' && c <= 'Z'; }
constexpr bool is_digit(char c) { return c >= '0' && c <= '9'; }

}  // namespace

std::string_view to_string(Education e) {
  return kEducationCodes[static_cast<std::size_t>(e)];
}

std::string_view to_string(Experience e) {
  return kExperienceCodes[static_cast<std::size_t>(e)];
}

std::string_view to_string(SalaryType t) {
  return kSalaryTypeNames[static_cast<std::size_t>(t)];
}

std::string_view to_string(EmploymentClass c) {
  return c == EmploymentClass::kPermanent ? "PERMANENT" : "FLEXIBLE";
}

std::string_view to_string(EducationTier t) {
  switch (t) {
    case EducationTier::kHigh: return "HIGH";
    case EducationTier::kMedium: return "MEDIUM";
    case EducationTier::kLow: return "LOW";
  }
  return "LOW";
}

std::string_view to_string(ExperienceTier t) {
  return t == ExperienceTier::kHigh ? "HIGH" : "LOW";
}

std::optional<Education> parse_education(std::string_view code) {
  for (std::size_t i = 0; i < kEducationCodes.size(); ++i) {
    if (kEducationCodes[i] == code) return static_cast<Education>(i);
  }
  return std::nullopt;
}

std::optional<Experience> parse_experience(std::string_view code) {
  for (std::size_t i = 0; i < kExperienceCodes.size(); ++i) {
    if (kExperienceCodes[i] == code) return static_cast<Experience>(i);
  }
  return std::nullopt;
}

std::optional<EmploymentClass> parse_employment_class(std::string_view text) {
  if (text == "PERMANENT") return EmploymentClass::kPermanent;
  if (text == "FLEXIBLE") return EmploymentClass::kFlexible;
  return std::nullopt;
}

std::optional<SalaryKind> parse_salary_kind(std::string_view token) {
  constexpr std::string_view kBonusPrefix = "MONTHLY_WITH_BONUS:";
  if (token.starts_with(kBonusPrefix)) {
    const std::string_view digits = token.substr(kBonusPrefix.size());
    if (digits.empty() || digits.size() > 2) return std::nullopt;
    int bonus = 0;
    const auto [end, ec] =
        std::from_chars(digits.data(), digits.data() + digits.size(), bonus);
    if (ec != std::errc{} || end != digits.data() + digits.size() || bonus < 1)
      return std::nullopt;
    return SalaryKind{SalaryType::kMonthlyWithBonus, bonus};
  }
  for (SalaryType t : kAllSalaryTypes) {
    if (t == SalaryType::kMonthlyWithBonus) continue;
    if (to_string(t) == token) return SalaryKind{t, 0};
  }
  return std::nullopt;
}

std::string format_salary_kind(const SalaryKind& kind) {
  std::string out(to_string(kind.type));
  if (kind.type == SalaryType::kMonthlyWithBonus) {
    out += ':';
    out += std::to_string(kind.bonus_months);
  }
  return out;
}

bool is_position_id(std::string_view s) {
  if (s.size() != 19) return false;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i % 5 == 4) {
      if (s[i] != '-') return false;
    } else if (!is_lower_alnum(s[i])) {
      return false;
    }
  }
  return true;
}

bool is_province(std::string_view s) { return s.size() == 1 && is_upper(s[0]); }

bool is_city(std::string_view s) {
  return s.size() == 4 && is_upper(s[0]) && is_digit(s[1]) && is_digit(s[2]) &&
         is_digit(s[3]);
}

bool is_industry_id(std::string_view s) {
  if (s.size() != 6) return false;
  for (char c : s) {
    if (!is_alnum(c)) return false;
  }
  return true;
}

}  // namespace talentlens
