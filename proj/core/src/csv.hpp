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

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace talentlens::csv {

struct Row {
  std::size_t line_number = 0;  // 1-based physical line where the row starts
  std::vector<std::string> fields;
};

// RFC 4180 reader: comma separator, double-quote escaping, LF or CRLF line
// ends, quoted fields may span lines. Blank lines are skipped.
class Reader {
 public:
  explicit Reader(std::string_view text) : text_(text) {}

  std::optional<Row> next();

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
};

// Quotes the field only when it contains a separator, quote or line break.
std::string escape(std::string_view field);

bool is_valid_utf8(std::string_view bytes);

}  // namespace talentlens::csv
