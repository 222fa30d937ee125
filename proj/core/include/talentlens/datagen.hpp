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

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "talentlens/record.hpp"

namespace talentlens {

// Parameters of a synthetic corpus. Salary parameters describe the annual
// midpoint as log-normal per employment class; bounds are midpoint -/+ a
// uniform spread.
struct GenConfig {
  std::size_t record_count = 1000;
  std::size_t position_count = 200;
  std::size_t company_count = 300;
  std::size_t industry_count = 30;
  std::size_t province_count = 26;  // provinces are A, B, C, ... in order
  std::size_t cities_per_province_min = 2;
  std::size_t cities_per_province_max = 8;
  double zipf_exponent = 1.2;
  double permanent_median_salary = 90000.0;  // CNY/year
  double permanent_log_sigma = 0.35;
  double flexible_median_salary = 50000.0;  // CNY/year
  double flexible_log_sigma = 0.40;
  double salary_spread = 0.25;  // half-width of bounds relative to midpoint
  double province_salary_sigma = 0.12;
  double flexible_share = 0.15;
  double negotiable_share = 0.03;
  double bonus_share = 0.30;  // of permanent records quoting monthly
  double yearly_share = 0.15;  // of permanent records
  std::uint64_t seed = 42;

  // Throws DomainError when the configuration cannot be generated.
  void validate() const;
};

// key=value lines with '#' comments; keys are the GenConfig field names.
// Unknown keys and unparsable values throw DomainError.
GenConfig load_gen_config(std::istream& in);
GenConfig parse_gen_config(std::string_view text);

// Same config -> identical records and bytes on every platform.
std::vector<RecruitmentRecord> generate_records(const GenConfig& config);
std::string generate(const GenConfig& config);

enum class Scenario { kCase1, kCase2 };

// Identifiers planted by the scenario corpora.
inline constexpr std::string_view kCase1Position = "c7f9-349f-001e-c07f";
inline constexpr std::string_view kCase1IndustryA = "vrMpBQ";
inline constexpr std::string_view kCase1IndustryB = "YbtQwp";
inline constexpr std::string_view kCase2Position = "eb45-2371-1beb-76f6";
inline constexpr std::string_view kCase2City = "H610";

// CASE1: a dominant (GP, EdD) position concentrated in two industries, with
// provinces K and F paying the most. CASE2: one city of province H whose
// average salary dominates its siblings, and a medium-education /
// low-experience position in the top salary band.
std::vector<RecruitmentRecord> scenario_records(Scenario scenario);
std::string scenario_corpus(Scenario scenario);

// Tail exponent estimate: OLS slope of ln(count) on ln(rank) over positions
// with at least `min_count` records, negated.
double estimate_zipf_exponent(const std::map<std::string, std::size_t>& counts,
                              std::size_t min_count = 5);

}  // namespace talentlens
