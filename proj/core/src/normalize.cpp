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

#include "talentlens/normalize.hpp"

#include "talentlens/error.hpp"

namespace talentlens {

std::optional<EmploymentClass> classify_employment(SalaryType type) {
  switch (type) {
    case SalaryType::kYearly:
    case SalaryType::kMonthly:
    case SalaryType::kMonthlyWithBonus:
      return EmploymentClass::kPermanent;
    case SalaryType::kWeekly:
    case SalaryType::kDaily:
    case SalaryType::kHourly:
      return EmploymentClass::kFlexible;
    case SalaryType::kNegotiable:
      return std::nullopt;
  }
  return std::nullopt;
}

double annual_factor(const SalaryKind& kind) {
  switch (kind.type) {
    case SalaryType::kYearly: return 1.0;
    case SalaryType::kMonthly: return 12.0;
    case SalaryType::kMonthlyWithBonus:
      if (kind.bonus_months < 1) throw DomainError("bonus_months must be >= 1");
      return 12.0 + kind.bonus_months;
    case SalaryType::kWeekly: return kWeeksPerYear;
    case SalaryType::kDaily: return kWorkingDaysPerMonth * 12.0;
    case SalaryType::kHourly: return kWorkingHoursPerMonth * 12.0;
    case SalaryType::kNegotiable: break;
  }
  throw DomainError("no convertible salary");
}

std::pair<double, double> annualize(const SalaryKind& kind, double lower,
                                    double upper) {
  if (!(lower >= 0.0) || !(upper >= lower)) {
    throw DomainError("salary bounds must satisfy 0 <= lower <= upper");
  }
  const double factor = annual_factor(kind);
  return {lower * factor, upper * factor};
}

double salary_midpoint(double annual_lower, double annual_upper) {
  return (annual_lower + annual_upper) / 2.0;
}

EducationTier education_tier(Education code) {
  switch (code) {
    case Education::Gh:
    case Education::Go:
    case Education::GP:
      return EducationTier::kHigh;
    case Education::GI:
    case Education::Gy:
    case Education::Gx:
      return EducationTier::kMedium;
    case Education::GZ:
    case Education::Gz:
      return EducationTier::kLow;
  }
  throw DomainError("unknown education code");
}

ExperienceTier experience_tier(Experience code) {
  switch (code) {
    case Experience::ESu:
    case Experience::Eby:
    case Experience::EzN:
    case Experience::EaZ:
      return ExperienceTier::kHigh;
    case Experience::EdD:
    case Experience::Eqh:
    case Experience::Eas:
    case Experience::EKk:
      return ExperienceTier::kLow;
  }
  throw DomainError("unknown experience code");
}

NormalizedRecord normalize(const RecruitmentRecord& record) {
  NormalizedRecord out;
  out.base = record;
  out.employment = classify_employment(record.salary.type);
  if (out.employment) {
    const auto [lo, hi] =
        annualize(record.salary, record.lower_bound, record.upper_bound);
    out.annual = AnnualSalary{lo, hi, salary_midpoint(lo, hi)};
  }
  out.education_tier = education_tier(record.education);
  out.experience_tier = experience_tier(record.experience);
  out.education_rank = ordinal_rank(record.education);
  out.experience_rank = ordinal_rank(record.experience);
  return out;
}

}  // namespace talentlens
