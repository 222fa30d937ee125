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

#include <gtest/gtest.h>

#include <random>

#include "support.hpp"
#include "talentlens/error.hpp"
#include "talentlens/normalize.hpp"

namespace talentlens {
namespace {

TEST(Normalize, AnnualFactors) {
  EXPECT_EQ(annual_factor({SalaryType::kYearly, 0}), 1.0);
  EXPECT_EQ(annual_factor({SalaryType::kMonthly, 0}), 12.0);
  EXPECT_EQ(annual_factor({SalaryType::kMonthlyWithBonus, 3}), 15.0);
  EXPECT_EQ(annual_factor({SalaryType::kWeekly, 0}), 52.0);
  EXPECT_EQ(annual_factor({SalaryType::kDaily, 0}), 261.0);
  EXPECT_EQ(annual_factor({SalaryType::kHourly, 0}), 2088.0);
  EXPECT_THROW(annual_factor({SalaryType::kNegotiable, 0}), DomainError);
  EXPECT_DOUBLE_EQ(kWorkingDaysPerMonth * 12, 261.0);
  EXPECT_DOUBLE_EQ(kWorkingHoursPerMonth * 12, 2088.0);
}

TEST(Normalize, FrozenConversions) {
  const auto bonus = annualize({SalaryType::kMonthlyWithBonus, 1}, 10000, 10000);
  EXPECT_NEAR(bonus.first, 130000.0, 1e-6);
  const auto hourly = annualize({SalaryType::kHourly, 0}, 50, 60);
  EXPECT_NEAR(hourly.first, 104400.0, 1e-6);
  EXPECT_NEAR(hourly.second, 125280.0, 1e-6);
  EXPECT_NEAR(salary_midpoint(hourly.first, hourly.second), 114840.0, 1e-6);
  EXPECT_NEAR(salary_midpoint(100000, 130000), 115000.0, 1e-6);
}

TEST(Normalize, RejectsBadBounds) {
  EXPECT_THROW(annualize({SalaryType::kMonthly, 0}, 2, 1), DomainError);
  EXPECT_THROW(annualize({SalaryType::kMonthly, 0}, -1, 1), DomainError);
  EXPECT_THROW(annualize({SalaryType::kNegotiable, 0}, 1, 2), DomainError);
}

TEST(Normalize, Classification) {
  EXPECT_EQ(classify_employment(SalaryType::kYearly), EmploymentClass::kPermanent);
  EXPECT_EQ(classify_employment(SalaryType::kMonthly), EmploymentClass::kPermanent);
  EXPECT_EQ(classify_employment(SalaryType::kMonthlyWithBonus), EmploymentClass::kPermanent);
  EXPECT_EQ(classify_employment(SalaryType::kWeekly), EmploymentClass::kFlexible);
  EXPECT_EQ(classify_employment(SalaryType::kDaily), EmploymentClass::kFlexible);
  EXPECT_EQ(classify_employment(SalaryType::kHourly), EmploymentClass::kFlexible);
  EXPECT_FALSE(classify_employment(SalaryType::kNegotiable));
}

TEST(Normalize, Tiers) {
  using E = Education;
  for (E e : {E::Gh, E::Go, E::GP}) EXPECT_EQ(education_tier(e), EducationTier::kHigh);
  for (E e : {E::GI, E::Gy, E::Gx}) EXPECT_EQ(education_tier(e), EducationTier::kMedium);
  for (E e : {E::GZ, E::Gz}) EXPECT_EQ(education_tier(e), EducationTier::kLow);
  using X = Experience;
  for (X x : {X::ESu, X::Eby, X::EzN, X::EaZ}) EXPECT_EQ(experience_tier(x), ExperienceTier::kHigh);
  for (X x : {X::EdD, X::Eqh, X::Eas, X::EKk}) EXPECT_EQ(experience_tier(x), ExperienceTier::kLow);
}

// Property: tiers never decrease along the rank chain.
TEST(Normalize, TierRankCoherence) {
  for (std::size_t i = 1; i < kAllEducation.size(); ++i) {
    EXPECT_LT(ordinal_rank(kAllEducation[i - 1]), ordinal_rank(kAllEducation[i]));
    EXPECT_LE(education_tier(kAllEducation[i - 1]), education_tier(kAllEducation[i]));
  }
  for (std::size_t i = 1; i < kAllExperience.size(); ++i) {
    EXPECT_LT(ordinal_rank(kAllExperience[i - 1]), ordinal_rank(kAllExperience[i]));
    EXPECT_LE(experience_tier(kAllExperience[i - 1]), experience_tier(kAllExperience[i]));
  }
}

// Property: annualization is monotone in both bounds and preserves order.
TEST(Normalize, MonotoneAndOrdered) {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(0, 50000);
  for (SalaryType t : kAllSalaryTypes) {
    if (t == SalaryType::kNegotiable) continue;
    const SalaryKind k{t, t == SalaryType::kMonthlyWithBonus ? 2 : 0};
    for (int i = 0; i < 200; ++i) {
      double a = u(rng), b = u(rng);
      if (a > b) std::swap(a, b);
      const auto [lo, hi] = annualize(k, a, b);
      EXPECT_LE(lo, hi);
      const auto [lo2, hi2] = annualize(k, a, b + 1);
      EXPECT_EQ(lo2, lo);
      EXPECT_GT(hi2, hi);
      const double mid = salary_midpoint(lo, hi);
      EXPECT_LE(lo, mid);
      EXPECT_LE(mid, hi);
    }
  }
}

TEST(Normalize, RecordFields) {
  auto r = testing::with_salary(testing::make_record(), {SalaryType::kHourly, 0}, 50, 60);
  r.education = Education::Gx;
  r.experience = Experience::ESu;
  const auto n = normalize(r);
  EXPECT_EQ(n.employment, EmploymentClass::kFlexible);
  ASSERT_TRUE(n.has_salary());
  EXPECT_NEAR(n.annual->lower, 104400.0, 1e-6);
  EXPECT_NEAR(n.midpoint(), 114840.0, 1e-6);
  EXPECT_EQ(n.education_tier, EducationTier::kMedium);
  EXPECT_EQ(n.experience_tier, ExperienceTier::kHigh);
  EXPECT_EQ(n.education_rank, 2);
  EXPECT_EQ(n.experience_rank, 7);

  const auto neg = normalize(testing::with_salary(r, {SalaryType::kNegotiable, 0}, 0, 0));
  EXPECT_FALSE(neg.has_salary());
  EXPECT_FALSE(neg.employment);
}

}  // namespace
}  // namespace talentlens
