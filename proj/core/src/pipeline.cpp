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

#include "talentlens/pipeline.hpp"

#include <algorithm>
#include <cmath>
#include <tuple>

#include "talentlens/error.hpp"
#include "talentlens/normalize.hpp"

namespace talentlens {
namespace {

void check_fraction(double fraction) {
  if (!(fraction > 0.0 && fraction <= 1.0)) {
    throw DomainError("fraction must lie in (0, 1]");
  }
}

}  // namespace

std::set<std::string> top_percent_positions(
    const std::map<std::string, std::size_t, std::less<>>& counts,
    double fraction) {
  check_fraction(fraction);
  if (counts.empty()) throw DomainError("no positions to rank");

  std::vector<std::size_t> sorted;
  sorted.reserve(counts.size());
  for (const auto& [id, n] : counts) sorted.push_back(n);
  std::sort(sorted.begin(), sorted.end(), std::greater<>());

  const double target = fraction * static_cast<double>(sorted.size());
  auto rank = static_cast<std::size_t>(std::ceil(target - 1e-9));
  rank = std::clamp<std::size_t>(rank, 1, sorted.size());
  const std::size_t cutoff = sorted[rank - 1];

  std::set<std::string> selected;
  for (const auto& [id, n] : counts) {
    if (n >= cutoff) selected.insert(id);
  }
  return selected;
}

std::set<std::string> top_percent_positions(
    std::span<const RecruitmentRecord> records, double fraction) {
  check_fraction(fraction);
  if (records.empty()) throw DomainError("no records to rank");
  std::map<std::string, std::size_t, std::less<>> counts;
  for (const auto& r : records) ++counts[r.position_id];
  return top_percent_positions(counts, fraction);
}

OutlierSplit remove_outliers(std::span<const NormalizedRecord> records) {
  using GroupKey = std::tuple<char, std::string_view, EmploymentClass>;
  std::map<GroupKey, std::vector<std::size_t>> groups;
  for (std::size_t i = 0; i < records.size(); ++i) {
    const auto& r = records[i];
    if (!r.has_salary()) continue;
    groups[{r.base.province, r.base.position_id, *r.employment}].push_back(i);
  }

  std::vector<bool> drop(records.size(), false);
  std::vector<double> mids;
  for (const auto& [key, members] : groups) {
    if (members.size() < kMinFencedGroupSize) continue;
    mids.clear();
    for (std::size_t i : members) mids.push_back(records[i].midpoint());
    const OutlierBounds fences = iqr_bounds(mids);
    for (std::size_t i : members) {
      if (!fences.contains(records[i].midpoint())) drop[i] = true;
    }
  }

  OutlierSplit split;
  for (std::size_t i = 0; i < records.size(); ++i) {
    (drop[i] ? split.removed : split.kept).push_back(records[i]);
  }
  return split;
}

std::shared_ptr<const DatasetSnapshot> build_snapshot(
    std::span<const RecruitmentRecord> raw, double fraction) {
  check_fraction(fraction);
  if (raw.empty()) throw PipelineError("pipeline produced empty snapshot");

  Provenance provenance;
  provenance.ingested = raw.size();

  auto selected = top_percent_positions(raw, fraction);
  provenance.selected_positions = selected.size();

  std::vector<NormalizedRecord> normalized;
  for (const auto& r : raw) {
    if (selected.contains(r.position_id)) normalized.push_back(normalize(r));
  }
  provenance.after_top_fraction = normalized.size();

  OutlierSplit split = remove_outliers(normalized);
  provenance.after_outliers = split.kept.size();
  if (split.kept.empty()) throw PipelineError("pipeline produced empty snapshot");

  return std::make_shared<const DatasetSnapshot>(
      std::move(split.kept), provenance, fraction, std::move(selected));
}

}  // namespace talentlens
