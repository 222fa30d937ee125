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

#include "talentlens/filter.hpp"

#include <algorithm>
#include <numeric>
#include <vector>

namespace talentlens {
namespace {

// Concatenated index lists for one dimension; merged to ascending order.
class Candidates {
 public:
  void add(const RecordIds* ids) {
    if (ids == nullptr) return;
    lists_.push_back(ids);
    size_ += ids->size();
  }
  std::size_t size() const { return size_; }

  RecordIds materialize() const {
    RecordIds out;
    out.reserve(size_);
    for (const auto* l : lists_) out.insert(out.end(), l->begin(), l->end());
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

 private:
  std::vector<const RecordIds*> lists_;
  std::size_t size_ = 0;
};

template <typename Map, typename Key>
const RecordIds* lookup(const Map& index, const Key& key) {
  const auto it = index.find(key);
  return it == index.end() ? nullptr : &it->second;
}

}  // namespace

bool FilterState::empty() const {
  return education.empty() && experience.empty() && edu_exp_pairs.empty() &&
         provinces.empty() && cities.empty() && industries.empty() &&
         positions.empty() && !employment_class;
}

bool matches(const NormalizedRecord& record, const FilterState& f) {
  const auto& r = record.base;
  if (!f.education.empty() && !f.education.contains(r.education)) return false;
  if (!f.experience.empty() && !f.experience.contains(r.experience)) return false;
  if (!f.edu_exp_pairs.empty() &&
      !f.edu_exp_pairs.contains({r.education, r.experience})) {
    return false;
  }
  if (!f.provinces.empty() && !f.provinces.contains(r.province)) return false;
  if (!f.cities.empty() && !f.cities.contains(r.city)) return false;
  if (!f.industries.empty() && !f.industries.contains(r.industry_id)) return false;
  if (!f.positions.empty() && !f.positions.contains(r.position_id)) return false;
  if (f.employment_class && record.employment != f.employment_class) return false;
  return true;
}

RecordIds match(const DatasetSnapshot& snapshot, const FilterState& f) {
  const auto& idx = snapshot.indexes();
  std::vector<Candidates> dims;

  if (!f.education.empty()) {
    auto& c = dims.emplace_back();
    for (auto e : f.education) c.add(&idx.by_education[static_cast<std::size_t>(e)]);
  }
  if (!f.experience.empty()) {
    auto& c = dims.emplace_back();
    for (auto e : f.experience) c.add(&idx.by_experience[static_cast<std::size_t>(e)]);
  }
  if (!f.edu_exp_pairs.empty()) {
    auto& c = dims.emplace_back();
    std::set<Education> seen;
    for (const auto& [e, x] : f.edu_exp_pairs) {
      if (seen.insert(e).second) c.add(&idx.by_education[static_cast<std::size_t>(e)]);
    }
  }
  if (!f.provinces.empty()) {
    auto& c = dims.emplace_back();
    for (char p : f.provinces) c.add(lookup(idx.by_province, p));
  }
  if (!f.cities.empty()) {
    auto& c = dims.emplace_back();
    for (const auto& v : f.cities) c.add(lookup(idx.by_city, v));
  }
  if (!f.industries.empty()) {
    auto& c = dims.emplace_back();
    for (const auto& v : f.industries) c.add(lookup(idx.by_industry, v));
  }
  if (!f.positions.empty()) {
    auto& c = dims.emplace_back();
    for (const auto& v : f.positions) c.add(lookup(idx.by_position, v));
  }
  if (f.employment_class) {
    auto& c = dims.emplace_back();
    c.add(&idx.by_employment[static_cast<std::size_t>(*f.employment_class)]);
  }

  RecordIds out;
  if (dims.empty()) {
    out.resize(snapshot.size());
    std::iota(out.begin(), out.end(), 0u);
    return out;
  }

  const auto best = std::min_element(
      dims.begin(), dims.end(),
      [](const Candidates& a, const Candidates& b) { return a.size() < b.size(); });
  for (std::uint32_t id : best->materialize()) {
    if (matches(snapshot.record(id), f)) out.push_back(id);
  }
  return out;
}

}  // namespace talentlens
