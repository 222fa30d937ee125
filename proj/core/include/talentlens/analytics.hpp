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
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "talentlens/codes.hpp"
#include "talentlens/filter.hpp"
#include "talentlens/snapshot.hpp"

namespace talentlens {

// ---------------------------------------------------------------------------
// Education-experience flows (Sankey).

struct Flow {
  Education education;
  Experience experience;
  std::size_t count = 0;
};

struct FlowMatrix {
  std::vector<Flow> flows;  // non-zero cells, ordered by (education, experience)
  std::map<Education, std::size_t> education_totals;
  std::map<Experience, std::size_t> experience_totals;
  std::size_t total = 0;
};

FlowMatrix sankey_flows(const DatasetSnapshot& snapshot, const FilterState& filter);

// ---------------------------------------------------------------------------
// Per-province bars: volume on top, city count below, opacity from salary.

struct RegionBar {
  char province = 'A';
  std::size_t record_count = 0;
  std::optional<double> avg_salary;  // empty without salary-bearing records
  double salary_opacity = 0.0;
  std::size_t city_count = 0;  // distinct cities of the province in the snapshot
};

struct RegionBarSet {
  std::vector<RegionBar> bars;  // provinces with matched records, by id
};

RegionBarSet region_bars(const DatasetSnapshot& snapshot, const FilterState& filter);

// ---------------------------------------------------------------------------
// Position comparison rows.

enum class SalaryTier : std::uint8_t { kLow, kMid, kHigh };
std::string_view to_string(SalaryTier t);

struct RegionSalary {
  SalaryTier tier = SalaryTier::kMid;
  double avg_salary = 0.0;
};

struct PositionRow {
  std::string position_id;
  std::size_t record_count = 0;
  std::map<Education, double> education_proportions;
  std::map<Experience, double> experience_proportions;
  std::map<char, RegionSalary> region_salary_tiers;
};

struct PositionRowSet {
  std::vector<PositionRow> rows;  // record_count descending, then id
};

// Tercile tier of `value` among `row_values` (thresholds at the 1/3 and 2/3
// percentiles): below the first is LOW, above the second HIGH, else MID.
SalaryTier tercile_tier(std::span<const double> row_values, double value);

PositionRowSet position_rows(const DatasetSnapshot& snapshot, const FilterState& filter);

// ---------------------------------------------------------------------------
// Salary-pattern glyph scatterplot.

enum class AxisDimension : std::uint8_t { kEducation, kExperience, kProvince, kIndustry };
std::string_view to_string(AxisDimension d);
std::optional<AxisDimension> parse_axis_dimension(std::string_view text);

// One dimension split into two disjoint value sets for the two sides of the
// horizontal axis. Values are the dimension's identifiers as text.
struct AxisSpec {
  AxisDimension dimension = AxisDimension::kEducation;
  std::set<std::string> positive;
  std::set<std::string> negative;

  // Education HIGH-tier codes on the positive side, LOW-tier on the negative.
  static AxisSpec default_spec();

  // Throws DomainError for overlapping sides, an empty side, or values that
  // are not valid identifiers of the dimension.
  void validate() const;

  friend bool operator==(const AxisSpec&, const AxisSpec&) = default;
};

struct PermanentGlyph {
  double monthly_equivalent = 0.0;  // CNY/month
  int bonus_months = 0;
};

struct FlexibleGlyph {
  SalaryType wage_kind = SalaryType::kHourly;
  double percentile_arc = 0.0;  // empirical CDF within the wage kind
};

struct GlyphPoint {
  std::uint32_t record_id = 0;
  std::string position_id;
  char province = 'A';
  std::string industry_id;
  int side = 1;  // +1 or -1
  std::uint64_t jitter_key = 0;
  EmploymentClass employment = EmploymentClass::kPermanent;
  double annual_midpoint = 0.0;
  std::variant<PermanentGlyph, FlexibleGlyph> detail;
};

struct GlyphSet {
  AxisSpec axis;
  std::vector<GlyphPoint> points;  // snapshot order
};

// Stable per-record hash used by the UI for jitter placement.
std::uint64_t jitter_key(const NormalizedRecord& record, std::uint32_t record_id);

GlyphSet scatter_glyphs(const DatasetSnapshot& snapshot, const FilterState& filter,
                        const AxisSpec& axis);

// ---------------------------------------------------------------------------
// Requirement band distribution.

struct PositionBlock {
  std::string position_id;
  int education_rank_min = 0;
  int education_rank_max = 0;
  int experience_rank_min = 0;
  int experience_rank_max = 0;
  std::optional<double> salary_min;  // min annual lower bound
  std::optional<double> salary_max;  // max annual upper bound
  std::size_t record_count = 0;
};

struct BandDistribution {
  std::vector<PositionBlock> blocks;  // by position id
  std::map<Education, double> education_bands;
  std::map<Experience, double> experience_bands;
  std::size_t position_count = 0;
};

BandDistribution requirement_bands(const DatasetSnapshot& snapshot,
                                   const FilterState& filter);

// ---------------------------------------------------------------------------
// Industry x province grid ranked by average salary.

struct RankedEntry {
  std::string id;
  std::optional<double> avg_salary;
  std::size_t record_count = 0;
};

struct GridCell {
  std::string industry_id;
  char province = 'A';
  std::size_t record_count = 0;
  double opacity = 0.0;
};

struct RankedGrid {
  std::vector<RankedEntry> industry_order;
  std::vector<RankedEntry> province_order;
  std::vector<GridCell> cells;  // by (industry, province) id
};

RankedGrid industry_region_grid(const DatasetSnapshot& snapshot,
                                const FilterState& filter);

// ---------------------------------------------------------------------------
// Industry flower glyphs.

struct Flower {
  std::string industry_id;
  std::size_t record_count = 0;
  double x = 0.0;  // share of records with HIGH education tier
  double y = 0.0;  // share of records with HIGH experience tier
  double mean_education_rank = 0.0;
  double mean_experience_rank = 0.0;
  std::optional<double> mean_salary;
  // Min-max normalized across displayed industries; empty means missing.
  std::optional<double> education_petal;
  std::optional<double> experience_petal;
  std::optional<double> salary_petal;
};

struct FlowerSet {
  std::vector<Flower> flowers;  // industries with matched records, by id
};

FlowerSet industry_flowers(const DatasetSnapshot& snapshot, const FilterState& filter);

// ---------------------------------------------------------------------------
// Regional treemap with embedded donuts.

enum class TreemapLevel : std::uint8_t { kProvince, kCity };
std::string_view to_string(TreemapLevel l);
std::optional<TreemapLevel> parse_treemap_level(std::string_view text);

inline constexpr std::size_t kDonutTopN = 5;

struct Donut {
  std::vector<std::pair<std::string, double>> top_positions;
  double other_positions = 0.0;
  std::vector<std::pair<std::string, double>> top_industries;
  double other_industries = 0.0;
  double inner_opacity = 0.0;
};

struct TreemapNode {
  std::string id;  // "ALL", a province letter, or a city code
  std::string kind;  // ROOT, PROVINCE or CITY
  std::size_t posting_count = 0;
  std::optional<double> avg_salary;
  double salary_opacity = 0.0;  // relative to siblings
  Donut donut;
  std::vector<TreemapNode> children;  // by id
};

// CITY requires `parent` (DomainError otherwise); a parent province absent
// from the snapshot raises UnknownRegionError. PROVINCE rejects a parent.
TreemapNode regional_treemap(const DatasetSnapshot& snapshot, const FilterState& filter,
                             TreemapLevel level, std::optional<char> parent);

}  // namespace talentlens
