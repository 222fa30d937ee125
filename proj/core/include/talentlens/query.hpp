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

#include <map>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "talentlens/error.hpp"
#include "talentlens/filter.hpp"

namespace talentlens {

// Malformed or unknown query parameter.
class BadFilterError : public Error {
 public:
  using Error::Error;
};

using QueryParams = std::vector<std::pair<std::string, std::string>>;

// Filter grammar: repeated keys form OR-sets, pairs use EDU:EXP.
//   education=GP&education=Go&experience=EdD&pairs=GP:EdD&province=K
//   &city=K001&industry=vrMpBQ&position=c7f9-349f-001e-c07f&class=PERMANENT
// Keys appear in that order, values in set order; the empty filter encodes
// to the empty string.
std::string encode_filter(const FilterState& filter);

// Splits and percent-decodes a query string ('+' is a space). Throws
// BadFilterError on a malformed escape or a component without '='.
QueryParams parse_query(std::string_view query);

// Builds a FilterState from parameters. Keys in `extra_keys` are skipped
// (endpoint-specific parameters); any other unknown key, empty value or
// invalid identifier throws BadFilterError.
FilterState decode_filter(const QueryParams& params,
                          const std::set<std::string, std::less<>>& extra_keys = {});
FilterState decode_filter(std::string_view query,
                          const std::set<std::string, std::less<>>& extra_keys = {});

std::string percent_encode(std::string_view text);

}  // namespace talentlens
