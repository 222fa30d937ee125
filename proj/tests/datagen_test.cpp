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

#include <openssl/sha.h>

#include <cmath>
#include <cstdio>
#include <map>
#include <set>
#include <sstream>

#include "talentlens/datagen.hpp"
#include "talentlens/error.hpp"
#include "talentlens/ingest.hpp"

namespace talentlens {
namespace {

std::string sha256_hex(const std::string& bytes) {
  unsigned char digest[SHA256_DIGEST_LENGTH];
  SHA256(reinterpret_cast<const unsigned char*>(bytes.data()), bytes.size(), digest);
  std::string hex;
  char buf[3];
  for (unsigned char c : digest) {
    std::snprintf(buf, sizeof(buf), "%02x", c);
    hex += buf;
  }
  return hex;
}

std::map<std::string, std::size_t> position_counts(const std::vector<RecruitmentRecord>& recs) {
  std::map<std::string, std::size_t> counts;
  for (const auto& r : recs) ++counts[r.position_id];
  return counts;
}

TEST(Datagen, OutputIsSchemaValid) {
  const auto parsed = parse_dataset(generate(GenConfig{}), InputFormat::kCsv);
  EXPECT_EQ(parsed.records.size(), 1000u);
  EXPECT_TRUE(parsed.report.rejects.empty());
}

TEST(Datagen, SameSeedSameBytes) {
  GenConfig config;
  config.record_count = 5000;
  const std::string a = generate(config);
  const std::string b = generate(config);
  EXPECT_EQ(sha256_hex(a), sha256_hex(b));
  config.seed = 43;
  EXPECT_NE(sha256_hex(generate(config)), sha256_hex(a));
}

TEST(Datagen, HeavyTailedPositions) {
  GenConfig config;
  config.record_count = 10000;
  config.position_count = 2000;
  config.zipf_exponent = 1.2;
  const auto counts = position_counts(generate_records(config));
  std::size_t singletons = 0;
  for (const auto& [id, c] : counts) singletons += c == 1;
  EXPECT_GE(static_cast<double>(singletons) / static_cast<double>(counts.size()), 0.40);
  EXPECT_NEAR(estimate_zipf_exponent(counts), 1.2, 0.2);
}

TEST(Datagen, ExponentEstimatorOnExactPowerLaw) {
  std::map<std::string, std::size_t> counts;
  for (int rank = 1; rank <= 50; ++rank) {
    counts["p" + std::to_string(rank)] =
        static_cast<std::size_t>(std::llround(100000.0 * std::pow(rank, -1.5)));
  }
  EXPECT_NEAR(estimate_zipf_exponent(counts), 1.5, 0.01);
}

TEST(Datagen, SharesRoughlyHonoured) {
  GenConfig config;
  config.record_count = 20000;
  const auto recs = generate_records(config);
  std::size_t negotiable = 0, flexible = 0;
  for (const auto& r : recs) {
    negotiable += r.salary.type == SalaryType::kNegotiable;
    flexible += r.salary.type == SalaryType::kHourly || r.salary.type == SalaryType::kDaily ||
                r.salary.type == SalaryType::kWeekly;
    EXPECT_EQ(r.city[0], r.province);
    EXPECT_LE(r.lower_bound, r.upper_bound);
  }
  EXPECT_NEAR(negotiable / 20000.0, config.negotiable_share, 0.01);
  EXPECT_NEAR(flexible / 20000.0, config.flexible_share, 0.01);
}

TEST(Datagen, ConfigParsing) {
  const auto c = parse_gen_config("# corpus\nrecord_count = 50\nseed=9\nzipf_exponent=1.5\n");
  EXPECT_EQ(c.record_count, 50u);
  EXPECT_EQ(c.seed, 9u);
  EXPECT_EQ(c.zipf_exponent, 1.5);
  EXPECT_THROW(parse_gen_config("colour=red\n"), DomainError);
  EXPECT_THROW(parse_gen_config("record_count=lots\n"), DomainError);
  EXPECT_THROW(parse_gen_config("record_count\n"), DomainError);

  GenConfig bad;
  bad.province_count = 27;
  EXPECT_THROW(bad.validate(), DomainError);
  bad = GenConfig{};
  bad.record_count = 0;
  EXPECT_THROW(bad.validate(), DomainError);
  bad = GenConfig{};
  bad.flexible_share = 1.5;
  EXPECT_THROW(bad.validate(), DomainError);
}

TEST(Datagen, ScenarioCorporaParseCleanly) {
  for (auto s : {Scenario::kCase1, Scenario::kCase2}) {
    const std::string bytes = scenario_corpus(s);
    EXPECT_EQ(sha256_hex(bytes), sha256_hex(scenario_corpus(s)));
    const auto parsed = parse_dataset(bytes, InputFormat::kCsv);
    EXPECT_TRUE(parsed.report.rejects.empty());
    EXPECT_EQ(parsed.records, scenario_records(s));
  }
}

}  // namespace
}  // namespace talentlens
