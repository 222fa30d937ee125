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
#include <filesystem>
#include <iosfwd>
#include <map>
#include <memory>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "talentlens/record.hpp"

namespace talentlens {

// Record counts after each pipeline stage.
struct Provenance {
  std::uint64_t ingested = 0;
  std::uint64_t after_top_fraction = 0;
  std::uint64_t after_outliers = 0;
  std::uint64_t selected_positions = 0;

  friend bool operator==(const Provenance&, const Provenance&) = default;
};

using RecordIds = std::vector<std::uint32_t>;  // ascending record ordinals

// Inverted indexes over the snapshot's records, one per filter dimension.
struct SnapshotIndexes {
  std::map<std::string, RecordIds, std::less<>> by_position;
  std::map<char, RecordIds> by_province;
  std::map<std::string, RecordIds, std::less<>> by_city;
  std::map<std::string, RecordIds, std::less<>> by_industry;
  std::array<RecordIds, 8> by_education;
  std::array<RecordIds, 8> by_experience;
  // PERMANENT, FLEXIBLE, then records without a convertible salary.
  std::array<RecordIds, 3> by_employment;
};

// Immutable post-pipeline corpus. Share it through
// std::shared_ptr<const DatasetSnapshot>; all reads are thread-safe.
class DatasetSnapshot {
 public:
  DatasetSnapshot(std::vector<NormalizedRecord> records, Provenance provenance,
                  double fraction, std::set<std::string> selected_positions);

  std::span<const NormalizedRecord> records() const { return records_; }
  const NormalizedRecord& record(std::uint32_t id) const { return records_[id]; }
  std::size_t size() const { return records_.size(); }

  const Provenance& provenance() const { return provenance_; }
  double fraction() const { return fraction_; }
  const std::set<std::string>& selected_positions() const { return selected_; }
  const SnapshotIndexes& indexes() const { return indexes_; }

  // Provinces -> distinct cities present anywhere in the snapshot.
  const std::map<char, std::set<std::string>>& cities_by_province() const {
    return cities_by_province_;
  }

 private:
  std::vector<NormalizedRecord> records_;
  Provenance provenance_;
  double fraction_;
  std::set<std::string> selected_;
  SnapshotIndexes indexes_;
  std::map<char, std::set<std::string>> cities_by_province_;
};

// Versioned binary cache: header (magic, version, fraction), record table,
// provenance block, trailer. Output is a pure function of the snapshot.
inline constexpr std::uint32_t kCacheVersion = 1;

void write_cache(std::ostream& out, const DatasetSnapshot& snapshot);
std::string to_cache_bytes(const DatasetSnapshot& snapshot);
void write_cache_file(const std::filesystem::path& path,
                      const DatasetSnapshot& snapshot);

// Throws CacheError on a truncated, corrupt or wrong-version cache.
std::shared_ptr<const DatasetSnapshot> read_cache(std::istream& in);
std::shared_ptr<const DatasetSnapshot> read_cache_file(
    const std::filesystem::path& path);

}  // namespace talentlens
