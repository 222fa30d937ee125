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

#include "talentlens/analytics.hpp"

#include <algorithm>
#include <array>
#include <unordered_map>

#include "talentlens/error.hpp"
#include "talentlens/normalize.hpp"
#include "talentlens/stats.hpp"

namespace talentlens {
namespace {

struct MeanAccumulator {
  double sum = 0.0;
  std::size_t n = 0;

  void add(double v) {
    sum += v;
    ++n;
  }
  std::optional<double> mean() const {
    if (n == 0) return std::nullopt;
    return sum / static_cast<double>(n);
  }
};

// Min-max opacities over entries that carry an average; entries without
// one get 0.
template <typename T, typename GetAvg, typename SetOpacity>
void assign_opacity(std::vector<T>& items, GetAvg get_avg, SetOpacity set_opacity) {
  std::vector<double> values;
  for (const auto& item : items) {
    if (const auto avg = get_avg(item)) values.push_back(*avg);
  }
  const auto normalized = min_max_normalize(values);
  std::size_t k = 0;
  for (auto& item : items) {
    set_opacity(item, get_avg(item) ? normalized[k++] : 0.0);
  }
}

// Descending by average; entries without an average sink to the end; ties
// break by id ascending.
bool ranked_before(const RankedEntry& a, const RankedEntry& b) {
  if (a.avg_salary.has_value() != b.avg_salary.has_value()) {
    return a.avg_salary.has_value();
  }
  if (a.avg_salary && *a.avg_salary != *b.avg_salary) {
    return *a.avg_salary > *b.avg_salary;
  }
  return a.id < b.id;
}

// Dense ordinals for a string-keyed index. Ids are numbered in ascending
// order, so comparing ordinals compares ids.
struct Ordinals {
  std::vector<std::uint32_t> of_record;
  std::vector<std::string_view> ids;
};

template <typename Index>
Ordinals ordinals(const Index& index, std::size_t record_count) {
  Ordinals o;
  o.of_record.resize(record_count);
  o.ids.reserve(index.size());
  for (const auto& [id, records] : index) {
    const auto k = static_cast<std::uint32_t>(o.ids.size());
    o.ids.push_back(id);
    for (std::uint32_t r : records) o.of_record[r] = k;
  }
  return o;
}

using CountMap = std::unordered_map<std::uint32_t, std::size_t>;

std::vector<std::pair<std::string, double>> top_shares(const CountMap& counts,
                                                       const Ordinals& names,
                                                       std::size_t total, double& remainder) {
  std::vector<std::pair<std::uint32_t, std::size_t>> ranked(counts.begin(), counts.end());
  const auto top = std::min(ranked.size(), kDonutTopN);
  std::partial_sort(ranked.begin(), ranked.begin() + static_cast<std::ptrdiff_t>(top),
                    ranked.end(), [](const auto& a, const auto& b) {
                      return a.second != b.second ? a.second > b.second : a.first < b.first;
                    });
  ranked.resize(top);

  std::vector<std::pair<std::string, double>> out;
  std::size_t covered = 0;
  for (const auto& [ordinal, n] : ranked) {
    out.emplace_back(std::string(names.ids[ordinal]),
                     static_cast<double>(n) / static_cast<double>(total));
    covered += n;
  }
  remainder = total == 0 ? 0.0
                         : static_cast<double>(total - covered) / static_cast<double>(total);
  return out;
}

// Accumulates one treemap node's counts before it is finalized. Positions
// and industries are tallied by ordinal.
struct RegionTally {
  std::size_t count = 0;
  MeanAccumulator salary;
  CountMap positions;
  CountMap industries;

  void add(const NormalizedRecord& r, std::uint32_t position, std::uint32_t industry) {
    ++count;
    if (r.has_salary()) salary.add(r.midpoint());
    ++positions[position];
    ++industries[industry];
  }
};

struct TallyNames {
  const Ordinals& positions;
  const Ordinals& industries;
};

TreemapNode make_node(std::string id, std::string kind, const RegionTally& tally,
                      const TallyNames& names) {
  TreemapNode node;
  node.id = std::move(id);
  node.kind = std::move(kind);
  node.posting_count = tally.count;
  node.avg_salary = tally.salary.mean();
  if (tally.count > 0) {
    node.donut.top_positions =
        top_shares(tally.positions, names.positions, tally.count, node.donut.other_positions);
    node.donut.top_industries =
        top_shares(tally.industries, names.industries, tally.count,
                   node.donut.other_industries);
  }
  return node;
}

void assign_sibling_opacity(std::vector<TreemapNode>& siblings) {
  assign_opacity(
      siblings, [](const TreemapNode& n) { return n.avg_salary; },
      [](TreemapNode& n, double v) {
        n.salary_opacity = v;
        n.donut.inner_opacity = v;
      });
}

std::string province_id(char p) { return std::string(1, p); }

}  // namespace

// ---------------------------------------------------------------------------

FlowMatrix sankey_flows(const DatasetSnapshot& snapshot, const FilterState& filter) {
  std::map<std::pair<Education, Experience>, std::size_t> cells;
  FlowMatrix out;
  for (std::uint32_t id : match(snapshot, filter)) {
    const auto& r = snapshot.record(id).base;
    ++cells[{r.education, r.experience}];
    ++out.education_totals[r.education];
    ++out.experience_totals[r.experience];
    ++out.total;
  }
  for (const auto& [key, n] : cells) out.flows.push_back(Flow{key.first, key.second, n});
  return out;
}

// ---------------------------------------------------------------------------

RegionBarSet region_bars(const DatasetSnapshot& snapshot, const FilterState& filter) {
  std::map<char, std::pair<std::size_t, MeanAccumulator>> per_province;
  for (std::uint32_t id : match(snapshot, filter)) {
    const auto& r = snapshot.record(id);
    auto& [count, salary] = per_province[r.base.province];
    ++count;
    if (r.has_salary()) salary.add(r.midpoint());
  }

  RegionBarSet out;
  const auto& cities = snapshot.cities_by_province();
  for (const auto& [province, agg] : per_province) {
    RegionBar bar;
    bar.province = province;
    bar.record_count = agg.first;
    bar.avg_salary = agg.second.mean();
    const auto it = cities.find(province);
    bar.city_count = it == cities.end() ? 0 : it->second.size();
    out.bars.push_back(bar);
  }
  assign_opacity(
      out.bars, [](const RegionBar& b) { return b.avg_salary; },
      [](RegionBar& b, double v) { b.salary_opacity = v; });
  return out;
}

// ---------------------------------------------------------------------------

std::string_view to_string(SalaryTier t) {
  switch (t) {
    case SalaryTier::kHigh: return "HIGH";
    case SalaryTier::kMid: return "MID";
    case SalaryTier::kLow: return "LOW";
  }
  return "MID";
}

SalaryTier tercile_tier(std::span<const double> row_values, double value) {
  std::vector<double> sorted(row_values.begin(), row_values.end());
  std::sort(sorted.begin(), sorted.end());
  const double low_cut = percentile_sorted(sorted, 1.0 / 3.0);
  const double high_cut = percentile_sorted(sorted, 2.0 / 3.0);
  if (value < low_cut) return SalaryTier::kLow;
  if (value > high_cut) return SalaryTier::kHigh;
  return SalaryTier::kMid;
}

PositionRowSet position_rows(const DatasetSnapshot& snapshot, const FilterState& filter) {
  struct Tally {
    std::uint32_t position = 0;
    std::size_t count = 0;
    std::array<std::size_t, 8> education{};
    std::array<std::size_t, 8> experience{};
    std::map<char, MeanAccumulator> salary_by_province;
  };
  const Ordinals positions = ordinals(snapshot.indexes().by_position, snapshot.size());
  constexpr std::uint32_t kUnseen = ~std::uint32_t{0};
  std::vector<std::uint32_t> slot(positions.ids.size(), kUnseen);
  std::vector<Tally> tallies;
  for (std::uint32_t id : match(snapshot, filter)) {
    const auto& r = snapshot.record(id);
    const std::uint32_t p = positions.of_record[id];
    if (slot[p] == kUnseen) {
      slot[p] = static_cast<std::uint32_t>(tallies.size());
      tallies.emplace_back().position = p;
    }
    auto& t = tallies[slot[p]];
    ++t.count;
    ++t.education[static_cast<std::size_t>(r.education_rank)];
    ++t.experience[static_cast<std::size_t>(r.experience_rank)];
    if (r.has_salary()) t.salary_by_province[r.base.province].add(r.midpoint());
  }
  // Ascending ordinal is ascending id; the stable count sort keeps it for ties.
  std::sort(tallies.begin(), tallies.end(),
            [](const Tally& a, const Tally& b) { return a.position < b.position; });

  PositionRowSet out;
  out.rows.reserve(tallies.size());
  for (const auto& t : tallies) {
    PositionRow row;
    row.position_id = std::string(positions.ids[t.position]);
    row.record_count = t.count;
    const auto n = static_cast<double>(t.count);
    for (std::size_t k = 0; k < 8; ++k) {
      if (t.education[k]) {
        row.education_proportions[kAllEducation[k]] = static_cast<double>(t.education[k]) / n;
      }
      if (t.experience[k]) {
        row.experience_proportions[kAllExperience[k]] = static_cast<double>(t.experience[k]) / n;
      }
    }
    std::vector<double> averages;
    for (const auto& [province, acc] : t.salary_by_province) averages.push_back(*acc.mean());
    for (const auto& [province, acc] : t.salary_by_province) {
      const double avg = *acc.mean();
      row.region_salary_tiers[province] = RegionSalary{tercile_tier(averages, avg), avg};
    }
    out.rows.push_back(std::move(row));
  }
  std::stable_sort(out.rows.begin(), out.rows.end(),
                   [](const PositionRow& a, const PositionRow& b) {
                     return a.record_count > b.record_count;
                   });
  return out;
}

// ---------------------------------------------------------------------------

std::string_view to_string(AxisDimension d) {
  switch (d) {
    case AxisDimension::kEducation: return "education";
    case AxisDimension::kExperience: return "experience";
    case AxisDimension::kProvince: return "province";
    case AxisDimension::kIndustry: return "industry";
  }
  return "education";
}

std::optional<AxisDimension> parse_axis_dimension(std::string_view text) {
  for (auto d : {AxisDimension::kEducation, AxisDimension::kExperience,
                 AxisDimension::kProvince, AxisDimension::kIndustry}) {
    if (to_string(d) == text) return d;
  }
  return std::nullopt;
}

AxisSpec AxisSpec::default_spec() {
  AxisSpec spec;
  spec.dimension = AxisDimension::kEducation;
  for (Education e : kAllEducation) {
    const auto tier = education_tier(e);
    if (tier == EducationTier::kHigh) spec.positive.emplace(to_string(e));
    if (tier == EducationTier::kLow) spec.negative.emplace(to_string(e));
  }
  return spec;
}

void AxisSpec::validate() const {
  if (positive.empty() || negative.empty()) {
    throw DomainError("axis sides must both be non-empty");
  }
  for (const auto& v : positive) {
    if (negative.contains(v)) throw DomainError("axis sides overlap on '" + v + "'");
  }
  auto valid = [this](const std::string& v) {
    switch (dimension) {
      case AxisDimension::kEducation: return parse_education(v).has_value();
      case AxisDimension::kExperience: return parse_experience(v).has_value();
      case AxisDimension::kProvince: return is_province(v);
      case AxisDimension::kIndustry: return is_industry_id(v);
    }
    return false;
  };
  for (const auto* side : {&positive, &negative}) {
    for (const auto& v : *side) {
      if (!valid(v)) {
        throw DomainError("'" + v + "' is not a valid " +
                          std::string(to_string(dimension)) + " value");
      }
    }
  }
}

std::uint64_t jitter_key(const NormalizedRecord& record, std::uint32_t record_id) {
  // FNV-1a over the ordinal and identifying fields.
  std::uint64_t h = 0xcbf29ce484222325ULL;
  auto mix = [&h](unsigned char byte) {
    h ^= byte;
    h *= 0x100000001b3ULL;
  };
  for (int i = 0; i < 4; ++i) mix(static_cast<unsigned char>(record_id >> (8 * i)));
  for (char c : record.base.position_id) mix(static_cast<unsigned char>(c));
  for (char c : record.base.city) mix(static_cast<unsigned char>(c));
  for (char c : record.base.company_id) mix(static_cast<unsigned char>(c));
  return h;
}

GlyphSet scatter_glyphs(const DatasetSnapshot& snapshot, const FilterState& filter,
                        const AxisSpec& axis) {
  axis.validate();
  const RecordIds ids = match(snapshot, filter);

  // Empirical CDF per wage kind over every matched flexible record.
  std::map<SalaryType, std::vector<double>> by_kind;
  for (std::uint32_t id : ids) {
    const auto& r = snapshot.record(id);
    if (r.employment == EmploymentClass::kFlexible) {
      by_kind[r.base.salary.type].push_back(r.midpoint());
    }
  }
  for (auto& [kind, values] : by_kind) std::sort(values.begin(), values.end());

  auto side_value = [&axis](const RecruitmentRecord& r) -> std::string {
    switch (axis.dimension) {
      case AxisDimension::kEducation: return std::string(to_string(r.education));
      case AxisDimension::kExperience: return std::string(to_string(r.experience));
      case AxisDimension::kProvince: return province_id(r.province);
      case AxisDimension::kIndustry: return r.industry_id;
    }
    return {};
  };

  GlyphSet out;
  out.axis = axis;
  for (std::uint32_t id : ids) {
    const auto& r = snapshot.record(id);
    if (!r.has_salary()) continue;
    const std::string value = side_value(r.base);
    int side = 0;
    if (axis.positive.contains(value)) side = 1;
    else if (axis.negative.contains(value)) side = -1;
    if (side == 0) continue;

    GlyphPoint p;
    p.record_id = id;
    p.position_id = r.base.position_id;
    p.province = r.base.province;
    p.industry_id = r.base.industry_id;
    p.side = side;
    p.jitter_key = jitter_key(r, id);
    p.employment = *r.employment;
    p.annual_midpoint = r.midpoint();
    if (*r.employment == EmploymentClass::kPermanent) {
      const int bonus = r.base.salary.bonus_months;
      p.detail = PermanentGlyph{r.midpoint() / (12.0 + bonus), bonus};
    } else {
      const auto& sorted = by_kind.at(r.base.salary.type);
      const auto rank = std::upper_bound(sorted.begin(), sorted.end(), r.midpoint()) -
                        sorted.begin();
      p.detail = FlexibleGlyph{r.base.salary.type,
                               static_cast<double>(rank) / static_cast<double>(sorted.size())};
    }
    out.points.push_back(std::move(p));
  }
  return out;
}

// ---------------------------------------------------------------------------

BandDistribution requirement_bands(const DatasetSnapshot& snapshot,
                                   const FilterState& filter) {
  std::map<std::string, PositionBlock> blocks;
  std::map<Education, std::set<std::string_view>> edu_positions;
  std::map<Experience, std::set<std::string_view>> exp_positions;

  for (std::uint32_t id : match(snapshot, filter)) {
    const auto& r = snapshot.record(id);
    const auto& pos = r.base.position_id;
    auto [it, fresh] = blocks.try_emplace(pos);
    PositionBlock& b = it->second;
    if (fresh) {
      b.position_id = pos;
      b.education_rank_min = b.education_rank_max = r.education_rank;
      b.experience_rank_min = b.experience_rank_max = r.experience_rank;
    } else {
      b.education_rank_min = std::min(b.education_rank_min, r.education_rank);
      b.education_rank_max = std::max(b.education_rank_max, r.education_rank);
      b.experience_rank_min = std::min(b.experience_rank_min, r.experience_rank);
      b.experience_rank_max = std::max(b.experience_rank_max, r.experience_rank);
    }
    if (r.has_salary()) {
      b.salary_min = b.salary_min ? std::min(*b.salary_min, r.annual->lower) : r.annual->lower;
      b.salary_max = b.salary_max ? std::max(*b.salary_max, r.annual->upper) : r.annual->upper;
    }
    ++b.record_count;
    edu_positions[r.base.education].insert(pos);
    exp_positions[r.base.experience].insert(pos);
  }

  BandDistribution out;
  out.position_count = blocks.size();
  for (auto& [id, block] : blocks) out.blocks.push_back(std::move(block));
  if (out.position_count == 0) return out;
  const auto n = static_cast<double>(out.position_count);
  for (const auto& [code, set] : edu_positions) {
    out.education_bands[code] = static_cast<double>(set.size()) / n;
  }
  for (const auto& [code, set] : exp_positions) {
    out.experience_bands[code] = static_cast<double>(set.size()) / n;
  }
  return out;
}

// ---------------------------------------------------------------------------

RankedGrid industry_region_grid(const DatasetSnapshot& snapshot,
                                const FilterState& filter) {
  std::map<std::string, std::pair<std::size_t, MeanAccumulator>> industries;
  std::map<char, std::pair<std::size_t, MeanAccumulator>> provinces;
  std::map<std::pair<std::string, char>, std::size_t> cells;

  for (std::uint32_t id : match(snapshot, filter)) {
    const auto& r = snapshot.record(id);
    auto& ind = industries[r.base.industry_id];
    auto& prov = provinces[r.base.province];
    ++ind.first;
    ++prov.first;
    if (r.has_salary()) {
      ind.second.add(r.midpoint());
      prov.second.add(r.midpoint());
    }
    ++cells[{r.base.industry_id, r.base.province}];
  }

  RankedGrid out;
  for (const auto& [id, agg] : industries) {
    out.industry_order.push_back(RankedEntry{id, agg.second.mean(), agg.first});
  }
  for (const auto& [p, agg] : provinces) {
    out.province_order.push_back(RankedEntry{province_id(p), agg.second.mean(), agg.first});
  }
  std::sort(out.industry_order.begin(), out.industry_order.end(), ranked_before);
  std::sort(out.province_order.begin(), out.province_order.end(), ranked_before);

  std::size_t max_count = 0;
  for (const auto& [key, n] : cells) max_count = std::max(max_count, n);
  for (const auto& [key, n] : cells) {
    out.cells.push_back(GridCell{key.first, key.second, n,
                                 static_cast<double>(n) / static_cast<double>(max_count)});
  }
  return out;
}

// ---------------------------------------------------------------------------

FlowerSet industry_flowers(const DatasetSnapshot& snapshot, const FilterState& filter) {
  struct Tally {
    std::size_t count = 0;
    std::size_t high_education = 0;
    std::size_t high_experience = 0;
    MeanAccumulator education_rank;
    MeanAccumulator experience_rank;
    MeanAccumulator salary;
  };
  std::map<std::string, Tally> tallies;
  for (std::uint32_t id : match(snapshot, filter)) {
    const auto& r = snapshot.record(id);
    auto& t = tallies[r.base.industry_id];
    ++t.count;
    if (r.education_tier == EducationTier::kHigh) ++t.high_education;
    if (r.experience_tier == ExperienceTier::kHigh) ++t.high_experience;
    t.education_rank.add(r.education_rank);
    t.experience_rank.add(r.experience_rank);
    if (r.has_salary()) t.salary.add(r.midpoint());
  }

  FlowerSet out;
  for (const auto& [industry, t] : tallies) {
    Flower f;
    f.industry_id = industry;
    f.record_count = t.count;
    const auto n = static_cast<double>(t.count);
    f.x = static_cast<double>(t.high_education) / n;
    f.y = static_cast<double>(t.high_experience) / n;
    f.mean_education_rank = *t.education_rank.mean();
    f.mean_experience_rank = *t.experience_rank.mean();
    f.mean_salary = t.salary.mean();
    out.flowers.push_back(std::move(f));
  }

  assign_opacity(
      out.flowers, [](const Flower& f) { return std::optional<double>(f.mean_education_rank); },
      [](Flower& f, double v) { f.education_petal = v; });
  assign_opacity(
      out.flowers, [](const Flower& f) { return std::optional<double>(f.mean_experience_rank); },
      [](Flower& f, double v) { f.experience_petal = v; });
  assign_opacity(
      out.flowers, [](const Flower& f) { return f.mean_salary; },
      [](Flower& f, double v) {
        if (f.mean_salary) f.salary_petal = v;
      });
  return out;
}

// ---------------------------------------------------------------------------

std::string_view to_string(TreemapLevel l) {
  return l == TreemapLevel::kProvince ? "PROVINCE" : "CITY";
}

std::optional<TreemapLevel> parse_treemap_level(std::string_view text) {
  if (text == "PROVINCE") return TreemapLevel::kProvince;
  if (text == "CITY") return TreemapLevel::kCity;
  return std::nullopt;
}

TreemapNode regional_treemap(const DatasetSnapshot& snapshot, const FilterState& filter,
                             TreemapLevel level, std::optional<char> parent) {
  if (level == TreemapLevel::kCity && !parent) {
    throw DomainError("level CITY requires a parent province");
  }
  if (level == TreemapLevel::kProvince && parent) {
    throw DomainError("parent is only valid with level CITY");
  }
  if (parent && !snapshot.cities_by_province().contains(*parent)) {
    throw UnknownRegionError("unknown province '" + province_id(*parent) + "'");
  }

  const Ordinals positions = ordinals(snapshot.indexes().by_position, snapshot.size());
  const Ordinals industries = ordinals(snapshot.indexes().by_industry, snapshot.size());
  const TallyNames names{positions, industries};

  RegionTally root_tally;
  std::map<char, RegionTally> province_tallies;
  std::map<char, std::map<std::string, RegionTally>> city_tallies;
  for (std::uint32_t id : match(snapshot, filter)) {
    const auto& r = snapshot.record(id);
    if (parent && r.base.province != *parent) continue;
    const std::uint32_t p = positions.of_record[id];
    const std::uint32_t i = industries.of_record[id];
    root_tally.add(r, p, i);
    province_tallies[r.base.province].add(r, p, i);
    city_tallies[r.base.province][r.base.city].add(r, p, i);
  }

  auto city_children = [&](char province) {
    std::vector<TreemapNode> children;
    for (const auto& [city, tally] : city_tallies[province]) {
      children.push_back(make_node(city, "CITY", tally, names));
    }
    assign_sibling_opacity(children);
    return children;
  };

  std::vector<TreemapNode> roots;
  if (level == TreemapLevel::kCity) {
    roots.push_back(make_node(province_id(*parent), "PROVINCE", root_tally, names));
    roots.front().children = city_children(*parent);
  } else {
    roots.push_back(make_node("ALL", "ROOT", root_tally, names));
    auto& provinces = roots.front().children;
    for (const auto& [province, tally] : province_tallies) {
      provinces.push_back(make_node(province_id(province), "PROVINCE", tally, names));
      provinces.back().children = city_children(province);
    }
    assign_sibling_opacity(provinces);
  }
  assign_sibling_opacity(roots);
  return std::move(roots.front());
}

}  // namespace talentlens
