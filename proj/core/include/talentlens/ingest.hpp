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
#include <cstddef>
#include <iosfwd>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <variant>
#include <vector>

#include "talentlens/record.hpp"

namespace talentlens {

// The twelve dataset columns, in canonical export order.
inline constexpr std::array<std::string_view, 12> kSchemaColumns = {
    "_id",         "province",    "city",    "salary",
    "salary_type", "salary_base", "upper_bound", "lower_bound",
    "company",     "industry",    "education",   "experience"};

enum class InputFormat { kCsv, kJsonl };

struct RawRecord {
  std::size_t line_number = 0;
  std::map<std::string, std::string, std::less<>> fields;
};

// Why a single line was refused. `column` names exactly one schema column,
// or "*" for row-shape problems (field count, malformed JSON).
struct RecordRejection {
  std::string column;
  std::string reason;
};

struct Reject {
  std::size_t line_number = 0;
  std::string column;
  std::string reason;
  std::string excerpt;
};

struct RejectReport {
  std::size_t total_lines = 0;
  std::size_t accepted = 0;
  std::vector<Reject> rejects;

  // line_number,column,reason,excerpt with a header row.
  std::string to_csv() const;
};

struct SummaryStats {
  std::size_t record_count = 0;
  std::size_t distinct_positions = 0;
  std::size_t distinct_companies = 0;
  std::size_t distinct_industries = 0;
  std::size_t distinct_provinces = 0;
  std::size_t distinct_cities = 0;

  friend bool operator==(const SummaryStats&, const SummaryStats&) = default;
};

// Raw salary_type code -> canonical kind, for real exports whose codes do not
// use the canonical tokens. Looked up before canonical parsing.
using SalaryTypeMap = std::unordered_map<std::string, SalaryKind>;

// Reads `raw=CANONICAL` lines; '#' starts a comment. Throws IngestError on a
// malformed line or an unknown canonical token.
SalaryTypeMap load_salary_type_map(std::istream& in);

struct IngestOptions {
  const SalaryTypeMap* salary_type_map = nullptr;
};

struct ParseResult {
  std::vector<RecruitmentRecord> records;
  RejectReport report;
};

// Checks columns in canonical order and reports the first failure.
std::variant<RecruitmentRecord, RecordRejection> validate_record(
    const RawRecord& raw, const IngestOptions& options = {});

// Throws IngestError when the stream cannot be read, is not UTF-8, or (CSV)
// the header does not name exactly the schema columns.
ParseResult parse_dataset(std::string_view bytes, InputFormat format,
                          const IngestOptions& options = {});
ParseResult parse_dataset(std::istream& in, InputFormat format,
                          const IngestOptions& options = {});

// Incremental distinct counter shared by dataset_summary and the service.
class SummaryAccumulator {
 public:
  void add(const RecruitmentRecord& r);
  SummaryStats result() const;

 private:
  std::size_t count_ = 0;
  std::unordered_set<std::string> positions_;
  std::unordered_set<std::string> companies_;
  std::unordered_set<std::string> industries_;
  std::unordered_set<char> provinces_;
  std::unordered_set<std::string> cities_;
};

SummaryStats dataset_summary(std::span<const RecruitmentRecord> records);

// Writes the canonical CSV (header plus one row per record). Amounts use the
// shortest text that parses back to the same double.
void write_csv(std::ostream& out, std::span<const RecruitmentRecord> records);
std::string to_csv(std::span<const RecruitmentRecord> records);

std::string format_amount(double value);

}  // namespace talentlens
