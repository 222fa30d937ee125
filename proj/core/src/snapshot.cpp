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

#include "talentlens/snapshot.hpp"

#include <algorithm>
#include <bit>
#include <cstring>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "talentlens/error.hpp"
#include "talentlens/normalize.hpp"

namespace talentlens {
namespace {

constexpr char kMagic[8] = {'T', 'L', 'S', 'N', 'A', 'P', '\0', '\0'};
constexpr std::uint32_t kTrailer = 0x444E4531;  // "1END"
constexpr std::uint32_t kMaxString = 1u << 20;

class Writer {
 public:
  explicit Writer(std::ostream& out) : out_(out) {}

  void u8(std::uint8_t v) { out_.put(static_cast<char>(v)); }
  void u32(std::uint32_t v) {
    for (int i = 0; i < 4; ++i) u8(static_cast<std::uint8_t>(v >> (8 * i)));
  }
  void u64(std::uint64_t v) {
    for (int i = 0; i < 8; ++i) u8(static_cast<std::uint8_t>(v >> (8 * i)));
  }
  void f64(double v) { u64(std::bit_cast<std::uint64_t>(v)); }
  void str(const std::string& s) {
    u32(static_cast<std::uint32_t>(s.size()));
    out_.write(s.data(), static_cast<std::streamsize>(s.size()));
  }
  void raw(const char* data, std::size_t n) {
    out_.write(data, static_cast<std::streamsize>(n));
  }

 private:
  std::ostream& out_;
};

class Reader {
 public:
  explicit Reader(std::istream& in) : in_(in) {}

  std::uint8_t u8() {
    const int c = in_.get();
    if (c == std::char_traits<char>::eof()) throw CacheError("snapshot cache is truncated");
    return static_cast<std::uint8_t>(c);
  }
  std::uint32_t u32() {
    std::uint32_t v = 0;
    for (int i = 0; i < 4; ++i) v |= static_cast<std::uint32_t>(u8()) << (8 * i);
    return v;
  }
  std::uint64_t u64() {
    std::uint64_t v = 0;
    for (int i = 0; i < 8; ++i) v |= static_cast<std::uint64_t>(u8()) << (8 * i);
    return v;
  }
  double f64() { return std::bit_cast<double>(u64()); }
  std::string str() {
    const std::uint32_t n = u32();
    if (n > kMaxString) throw CacheError("snapshot cache string length out of range");
    std::string s(n, '\0');
    in_.read(s.data(), n);
    if (static_cast<std::uint32_t>(in_.gcount()) != n) {
      throw CacheError("snapshot cache is truncated");
    }
    return s;
  }
  void raw(char* data, std::size_t n) {
    in_.read(data, static_cast<std::streamsize>(n));
    if (static_cast<std::size_t>(in_.gcount()) != n) {
      throw CacheError("snapshot cache is truncated");
    }
  }

 private:
  std::istream& in_;
};

}  // namespace

DatasetSnapshot::DatasetSnapshot(std::vector<NormalizedRecord> records,
                                 Provenance provenance, double fraction,
                                 std::set<std::string> selected_positions)
    : records_(std::move(records)),
      provenance_(provenance),
      fraction_(fraction),
      selected_(std::move(selected_positions)) {
  for (std::uint32_t id = 0; id < records_.size(); ++id) {
    const auto& r = records_[id];
    indexes_.by_position[r.base.position_id].push_back(id);
    indexes_.by_province[r.base.province].push_back(id);
    indexes_.by_city[r.base.city].push_back(id);
    indexes_.by_industry[r.base.industry_id].push_back(id);
    indexes_.by_education[static_cast<std::size_t>(r.base.education)].push_back(id);
    indexes_.by_experience[static_cast<std::size_t>(r.base.experience)].push_back(id);
    const std::size_t cls = r.employment ? static_cast<std::size_t>(*r.employment) : 2;
    indexes_.by_employment[cls].push_back(id);
    cities_by_province_[r.base.province].insert(r.base.city);
  }
}

void write_cache(std::ostream& out, const DatasetSnapshot& snapshot) {
  Writer w(out);
  w.raw(kMagic, sizeof(kMagic));
  w.u32(kCacheVersion);
  w.f64(snapshot.fraction());

  w.u64(snapshot.size());
  for (const auto& n : snapshot.records()) {
    const auto& r = n.base;
    w.str(r.position_id);
    w.u8(static_cast<std::uint8_t>(r.province));
    w.str(r.city);
    w.u8(static_cast<std::uint8_t>(r.salary.type));
    w.u8(static_cast<std::uint8_t>(r.salary.bonus_months));
    w.str(r.salary_base);
    w.f64(r.lower_bound);
    w.f64(r.upper_bound);
    w.str(r.company_id);
    w.str(r.industry_id);
    w.u8(static_cast<std::uint8_t>(r.education));
    w.u8(static_cast<std::uint8_t>(r.experience));
  }

  const auto& p = snapshot.provenance();
  w.u64(p.ingested);
  w.u64(p.after_top_fraction);
  w.u64(p.after_outliers);
  w.u64(p.selected_positions);
  w.u64(snapshot.selected_positions().size());
  for (const auto& id : snapshot.selected_positions()) w.str(id);
  w.u32(kTrailer);
  if (!out) throw CacheError("failed writing snapshot cache");
}

std::string to_cache_bytes(const DatasetSnapshot& snapshot) {
  std::ostringstream out(std::ios::binary);
  write_cache(out, snapshot);
  return std::move(out).str();
}

void write_cache_file(const std::filesystem::path& path,
                      const DatasetSnapshot& snapshot) {
  // Write to a sibling temp file and rename so readers never see a partial
  // cache.
  const auto tmp = std::filesystem::path(path.string() + ".tmp");
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw CacheError("cannot open " + tmp.string() + " for writing");
    write_cache(out, snapshot);
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) throw CacheError("cannot move cache into place: " + ec.message());
}

std::shared_ptr<const DatasetSnapshot> read_cache(std::istream& in) {
  Reader r(in);
  char magic[sizeof(kMagic)];
  r.raw(magic, sizeof(magic));
  if (std::memcmp(magic, kMagic, sizeof(kMagic)) != 0) {
    throw CacheError("not a snapshot cache (bad magic)");
  }
  const std::uint32_t version = r.u32();
  if (version != kCacheVersion) {
    throw CacheError("unsupported snapshot cache version " + std::to_string(version));
  }
  const double fraction = r.f64();

  const std::uint64_t count = r.u64();
  std::vector<NormalizedRecord> records;
  records.reserve(static_cast<std::size_t>(std::min<std::uint64_t>(count, 1u << 24)));
  for (std::uint64_t i = 0; i < count; ++i) {
    RecruitmentRecord rec;
    rec.position_id = r.str();
    rec.province = static_cast<char>(r.u8());
    rec.city = r.str();
    const std::uint8_t type = r.u8();
    if (type >= kAllSalaryTypes.size()) throw CacheError("corrupt salary type in cache");
    rec.salary.type = static_cast<SalaryType>(type);
    rec.salary.bonus_months = r.u8();
    rec.salary_base = r.str();
    rec.lower_bound = r.f64();
    rec.upper_bound = r.f64();
    rec.company_id = r.str();
    rec.industry_id = r.str();
    const std::uint8_t edu = r.u8();
    const std::uint8_t exp = r.u8();
    if (edu >= 8 || exp >= 8) throw CacheError("corrupt requirement code in cache");
    rec.education = static_cast<Education>(edu);
    rec.experience = static_cast<Experience>(exp);
    try {
      records.push_back(normalize(rec));
    } catch (const DomainError& e) {
      throw CacheError(std::string("corrupt record in cache: ") + e.what());
    }
  }

  Provenance p;
  p.ingested = r.u64();
  p.after_top_fraction = r.u64();
  p.after_outliers = r.u64();
  p.selected_positions = r.u64();
  const std::uint64_t selected_count = r.u64();
  std::set<std::string> selected;
  for (std::uint64_t i = 0; i < selected_count; ++i) selected.insert(r.str());
  if (r.u32() != kTrailer) throw CacheError("snapshot cache trailer mismatch");
  if (in.peek() != std::char_traits<char>::eof()) {
    throw CacheError("trailing bytes after snapshot cache trailer");
  }
  if (p.after_outliers != records.size()) {
    throw CacheError("snapshot cache provenance disagrees with record table");
  }
  return std::make_shared<const DatasetSnapshot>(std::move(records), p, fraction,
                                                 std::move(selected));
}

std::shared_ptr<const DatasetSnapshot> read_cache_file(
    const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CacheError("cannot open snapshot cache " + path.string());
  return read_cache(in);
}

}  // namespace talentlens
