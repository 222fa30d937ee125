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

#include "talentlens/ingest.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <istream>
#include <iterator>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "csv.hpp"
#include "talentlens/error.hpp"

namespace talentlens {
namespace {

constexpr std::size_t kExcerptLimit = 40;

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

std::string excerpt(std::string_view value) {
  if (value.size() <= kExcerptLimit) return std::string(value);
  std::size_t cut = kExcerptLimit;
  // Do not split a multi-byte sequence.
  while (cut > 0 && (static_cast<unsigned char>(value[cut]) & 0xC0) == 0x80) --cut;
  return std::string(value.substr(0, cut));
}

enum class AmountError { kNone, kNotANumber, kNegative };

AmountError parse_amount(std::string_view text, double& out) {
  text = trim(text);
  if (text.empty()) return AmountError::kNotANumber;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  if (*first == '+') ++first;
  const auto [end, ec] = std::from_chars(first, last, out);
  if (ec != std::errc{} || end != last || !std::isfinite(out)) {
    return AmountError::kNotANumber;
  }
  if (out < 0.0) return AmountError::kNegative;
  if (out == 0.0) out = 0.0;  // fold -0
  return AmountError::kNone;
}

RecordRejection reject(std::string_view column, std::string_view reason) {
  return RecordRejection{std::string(column), std::string(reason)};
}

void record_reject(ParseResult& result, std::size_t line,
                   const RecordRejection& why, std::string_view raw_value) {
  result.report.rejects.push_back(
      Reject{line, why.column, why.reason, excerpt(raw_value)});
}

std::string read_all(std::istream& in) {
  if (!in) throw IngestError("input stream is not readable");
  std::string bytes{std::istreambuf_iterator<char>(in),
                    std::istreambuf_iterator<char>()};
  if (in.bad()) throw IngestError("read error on input stream");
  return bytes;
}

std::string_view strip_bom(std::string_view bytes) {
  if (bytes.starts_with("\xEF\xBB\xBF")) bytes.remove_prefix(3);
  return bytes;
}

void accept_or_reject(ParseResult& result, const RawRecord& raw,
                      const IngestOptions& options) {
  auto outcome = validate_record(raw, options);
  if (auto* rec = std::get_if<RecruitmentRecord>(&outcome)) {
    result.records.push_back(std::move(*rec));
    ++result.report.accepted;
    return;
  }
  const auto& why = std::get<RecordRejection>(outcome);
  const auto it = raw.fields.find(why.column);
  record_reject(result, raw.line_number, why,
                it == raw.fields.end() ? std::string_view{} : it->second);
}

ParseResult parse_csv(std::string_view bytes, const IngestOptions& options) {
  csv::Reader reader(bytes);
  auto header = reader.next();
  if (!header) throw IngestError("CSV input has no header row");

  std::vector<std::string> columns;
  for (auto& name : header->fields) columns.emplace_back(trim(name));
  for (std::string_view expected : kSchemaColumns) {
    if (std::count(columns.begin(), columns.end(), expected) != 1) {
      throw IngestError("CSV header must name column '" +
                        std::string(expected) + "' exactly once");
    }
  }
  if (columns.size() != kSchemaColumns.size()) {
    for (const auto& c : columns) {
      if (std::find(kSchemaColumns.begin(), kSchemaColumns.end(), c) ==
          kSchemaColumns.end()) {
        throw IngestError("CSV header has unknown column '" + c + "'");
      }
    }
  }

  ParseResult result;
  while (auto row = reader.next()) {
    ++result.report.total_lines;
    if (row->fields.size() != columns.size()) {
      record_reject(result, row->line_number, reject("*", "field count"),
                    row->fields.empty() ? std::string_view{} : row->fields[0]);
      continue;
    }
    RawRecord raw;
    raw.line_number = row->line_number;
    for (std::size_t i = 0; i < columns.size(); ++i) {
      raw.fields.emplace(columns[i], std::move(row->fields[i]));
    }
    accept_or_reject(result, raw, options);
  }
  return result;
}

ParseResult parse_jsonl(std::string_view bytes, const IngestOptions& options) {
  ParseResult result;
  std::size_t line_number = 0;
  std::size_t pos = 0;
  while (pos <= bytes.size()) {
    std::size_t end = bytes.find('\n', pos);
    if (end == std::string_view::npos) end = bytes.size();
    std::string_view line = bytes.substr(pos, end - pos);
    ++line_number;
    pos = end + 1;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (trim(line).empty()) {
      if (end == bytes.size()) break;
      continue;
    }
    ++result.report.total_lines;

    nlohmann::json obj;
    try {
      obj = nlohmann::json::parse(line);
    } catch (const nlohmann::json::parse_error&) {
      record_reject(result, line_number, reject("*", "malformed json"), line);
      continue;
    }
    if (!obj.is_object()) {
      record_reject(result, line_number, reject("*", "not an object"), line);
      continue;
    }

    RawRecord raw;
    raw.line_number = line_number;
    std::optional<RecordRejection> shape_error;
    std::string shape_value;
    for (auto it = obj.begin(); it != obj.end(); ++it) {
      if (std::find(kSchemaColumns.begin(), kSchemaColumns.end(), it.key()) ==
          kSchemaColumns.end()) {
        shape_error = reject(it.key(), "unknown column");
        shape_value = it.value().dump();
        break;
      }
      const auto& v = it.value();
      std::string text;
      if (v.is_string()) {
        text = v.get<std::string>();
      } else if (v.is_number_integer() || v.is_number_unsigned()) {
        text = v.dump();
      } else if (v.is_number_float()) {
        text = format_amount(v.get<double>());
      } else if (!v.is_null()) {
        shape_error = reject(it.key(), "unsupported value type");
        shape_value = v.dump();
        break;
      }
      raw.fields.emplace(it.key(), std::move(text));
    }
    if (!shape_error) {
      for (std::string_view column : kSchemaColumns) {
        if (!raw.fields.contains(column)) {
          shape_error = reject(column, "missing column");
          break;
        }
      }
    }
    if (shape_error) {
      record_reject(result, line_number, *shape_error, shape_value);
      continue;
    }
    accept_or_reject(result, raw, options);
    if (end == bytes.size()) break;
  }
  return result;
}

}  // namespace

std::string RejectReport::to_csv() const {
  std::string out = "line_number,column,reason,excerpt\n";
  for (const auto& r : rejects) {
    out += std::to_string(r.line_number);
    out += ',';
    out += csv::escape(r.column);
    out += ',';
    out += csv::escape(r.reason);
    out += ',';
    out += csv::escape(r.excerpt);
    out += '\n';
  }
  return out;
}

SalaryTypeMap load_salary_type_map(std::istream& in) {
  SalaryTypeMap map;
  std::string line;
  std::size_t n = 0;
  while (std::getline(in, line)) {
    ++n;
    std::string_view view = trim(line);
    if (!view.empty() && view.back() == '\r') view = trim(view.substr(0, view.size() - 1));
    if (view.empty() || view.front() == '#') continue;
    const auto eq = view.find('=');
    if (eq == std::string_view::npos) {
      throw IngestError("salary map line " + std::to_string(n) + ": expected raw=CANONICAL");
    }
    const std::string_view raw = trim(view.substr(0, eq));
    const std::string_view canonical = trim(view.substr(eq + 1));
    const auto kind = parse_salary_kind(canonical);
    if (raw.empty() || !kind) {
      throw IngestError("salary map line " + std::to_string(n) +
                        ": unknown canonical salary type '" + std::string(canonical) + "'");
    }
    map[std::string(raw)] = *kind;
  }
  return map;
}

std::variant<RecruitmentRecord, RecordRejection> validate_record(
    const RawRecord& raw, const IngestOptions& options) {
  for (const auto& [name, value] : raw.fields) {
    if (std::find(kSchemaColumns.begin(), kSchemaColumns.end(), name) ==
        kSchemaColumns.end()) {
      return reject(name, "unknown column");
    }
  }
  for (std::string_view column : kSchemaColumns) {
    if (!raw.fields.contains(column)) return reject(column, "missing column");
  }
  auto field = [&](std::string_view column) -> const std::string& {
    return raw.fields.find(column)->second;
  };

  RecruitmentRecord rec;

  rec.position_id = field("_id");
  if (!is_position_id(rec.position_id)) return reject("_id", "position pattern");

  const std::string& province = field("province");
  if (!is_province(province)) return reject("province", "province pattern");
  rec.province = province[0];

  rec.city = field("city");
  if (!is_city(rec.city)) return reject("city", "city pattern");
  if (rec.city[0] != rec.province) return reject("city", "province/city prefix mismatch");

  const std::string& salary_type = field("salary_type");
  std::optional<SalaryKind> kind;
  if (options.salary_type_map != nullptr) {
    if (auto it = options.salary_type_map->find(salary_type);
        it != options.salary_type_map->end()) {
      kind = it->second;
    }
  }
  if (!kind) kind = parse_salary_kind(trim(salary_type));
  if (!kind) return reject("salary_type", "unknown salary type");
  rec.salary = *kind;

  rec.salary_base = field("salary_base");

  switch (parse_amount(field("upper_bound"), rec.upper_bound)) {
    case AmountError::kNotANumber: return reject("upper_bound", "not a number");
    case AmountError::kNegative: return reject("upper_bound", "negative amount");
    case AmountError::kNone: break;
  }
  switch (parse_amount(field("lower_bound"), rec.lower_bound)) {
    case AmountError::kNotANumber: return reject("lower_bound", "not a number");
    case AmountError::kNegative: return reject("lower_bound", "negative amount");
    case AmountError::kNone: break;
  }
  if (rec.lower_bound > rec.upper_bound) return reject("lower_bound", "bounds inverted");

  rec.company_id = field("company");
  if (trim(rec.company_id).empty()) return reject("company", "empty company");

  rec.industry_id = field("industry");
  if (!is_industry_id(rec.industry_id)) return reject("industry", "industry pattern");

  const auto education = parse_education(field("education"));
  if (!education) return reject("education", "unknown education code");
  rec.education = *education;

  const auto experience = parse_experience(field("experience"));
  if (!experience) return reject("experience", "unknown experience code");
  rec.experience = *experience;

  return rec;
}

ParseResult parse_dataset(std::string_view bytes, InputFormat format,
                          const IngestOptions& options) {
  if (!csv::is_valid_utf8(bytes)) throw IngestError("input is not valid UTF-8");
  bytes = strip_bom(bytes);
  return format == InputFormat::kCsv ? parse_csv(bytes, options)
                                     : parse_jsonl(bytes, options);
}

ParseResult parse_dataset(std::istream& in, InputFormat format,
                          const IngestOptions& options) {
  const std::string bytes = read_all(in);
  return parse_dataset(std::string_view(bytes), format, options);
}

void SummaryAccumulator::add(const RecruitmentRecord& r) {
  ++count_;
  positions_.insert(r.position_id);
  companies_.insert(r.company_id);
  industries_.insert(r.industry_id);
  provinces_.insert(r.province);
  cities_.insert(r.city);
}

SummaryStats SummaryAccumulator::result() const {
  return SummaryStats{count_,
                      positions_.size(),
                      companies_.size(),
                      industries_.size(),
                      provinces_.size(),
                      cities_.size()};
}

SummaryStats dataset_summary(std::span<const RecruitmentRecord> records) {
  SummaryAccumulator acc;
  for (const auto& r : records) acc.add(r);
  return acc.result();
}

std::string format_amount(double value) {
  char buf[64];
  const auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  return std::string(buf, end);
}

void write_csv(std::ostream& out, std::span<const RecruitmentRecord> records) {
  for (std::size_t i = 0; i < kSchemaColumns.size(); ++i) {
    if (i) out << ',';
    out << kSchemaColumns[i];
  }
  out << '\n';
  for (const auto& r : records) {
    out << r.position_id << ',' << r.province << ',' << r.city << ",,"
        << format_salary_kind(r.salary) << ',' << csv::escape(r.salary_base)
        << ',' << format_amount(r.upper_bound) << ','
        << format_amount(r.lower_bound) << ',' << csv::escape(r.company_id)
        << ',' << r.industry_id << ',' << to_string(r.education) << ','
        << to_string(r.experience) << '\n';
  }
}

std::string to_csv(std::span<const RecruitmentRecord> records) {
  std::ostringstream out;
  write_csv(out, records);
  return out.str();
}

}  // namespace talentlens
