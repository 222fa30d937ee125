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

#include "talentlens/query.hpp"

namespace talentlens {
namespace {

int hex_value(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  return -1;
}

std::string percent_decode(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (c == '+') {
      out += ' ';
    } else if (c == '%') {
      if (i + 2 >= text.size()) {
        throw BadFilterError("truncated percent escape");
      }
      const int hi = hex_value(text[i + 1]);
      const int lo = hex_value(text[i + 2]);
      if (hi < 0 || lo < 0) throw BadFilterError("invalid percent escape");
      out += static_cast<char>(hi * 16 + lo);
      i += 2;
    } else {
      out += c;
    }
  }
  return out;
}

[[noreturn]] void bad(std::string_view key, std::string_view value,
                      std::string_view what) {
  throw BadFilterError("invalid " + std::string(key) + " value '" +
                       std::string(value) + "': " + std::string(what));
}

void append(std::string& out, std::string_view key, std::string_view value) {
  if (!out.empty()) out += '&';
  out += key;
  out += '=';
  out += percent_encode(value);
}

}  // namespace

std::string percent_encode(std::string_view text) {
  static constexpr char kHex[] = "0123456789ABCDEF";
  std::string out;
  for (char c : text) {
    const auto u = static_cast<unsigned char>(c);
    const bool unreserved = (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') ||
                            (c >= '0' && c <= '9') || c == '-' || c == '_' ||
                            c == '.' || c == '~' || c == ':';
    if (unreserved) {
      out += c;
    } else {
      out += '%';
      out += kHex[u >> 4];
      out += kHex[u & 0xF];
    }
  }
  return out;
}

std::string encode_filter(const FilterState& f) {
  std::string out;
  for (auto e : f.education) append(out, "education", to_string(e));
  for (auto e : f.experience) append(out, "experience", to_string(e));
  for (const auto& [e, x] : f.edu_exp_pairs) {
    append(out, "pairs", std::string(to_string(e)) + ":" + std::string(to_string(x)));
  }
  for (char p : f.provinces) append(out, "province", std::string(1, p));
  for (const auto& v : f.cities) append(out, "city", v);
  for (const auto& v : f.industries) append(out, "industry", v);
  for (const auto& v : f.positions) append(out, "position", v);
  if (f.employment_class) append(out, "class", to_string(*f.employment_class));
  return out;
}

QueryParams parse_query(std::string_view query) {
  QueryParams params;
  if (!query.empty() && query.front() == '?') query.remove_prefix(1);
  std::size_t pos = 0;
  while (pos < query.size()) {
    std::size_t end = query.find('&', pos);
    if (end == std::string_view::npos) end = query.size();
    const std::string_view part = query.substr(pos, end - pos);
    pos = end + 1;
    if (part.empty()) continue;
    const auto eq = part.find('=');
    if (eq == std::string_view::npos) {
      throw BadFilterError("query component '" + std::string(part) + "' has no value");
    }
    params.emplace_back(percent_decode(part.substr(0, eq)),
                        percent_decode(part.substr(eq + 1)));
  }
  return params;
}

FilterState decode_filter(const QueryParams& params,
                          const std::set<std::string, std::less<>>& extra_keys) {
  FilterState f;
  for (const auto& [key, value] : params) {
    if (extra_keys.contains(key)) continue;
    if (value.empty()) bad(key, value, "empty value");

    if (key == "education") {
      const auto e = parse_education(value);
      if (!e) bad(key, value, "unknown education code");
      f.education.insert(*e);
    } else if (key == "experience") {
      const auto x = parse_experience(value);
      if (!x) bad(key, value, "unknown experience code");
      f.experience.insert(*x);
    } else if (key == "pairs") {
      const auto colon = value.find(':');
      if (colon == std::string::npos) bad(key, value, "expected EDUCATION:EXPERIENCE");
      const auto e = parse_education(std::string_view(value).substr(0, colon));
      const auto x = parse_experience(std::string_view(value).substr(colon + 1));
      if (!e || !x) bad(key, value, "unknown code in pair");
      f.edu_exp_pairs.emplace(*e, *x);
    } else if (key == "province") {
      if (!is_province(value)) bad(key, value, "expected one letter A-Z");
      f.provinces.insert(value[0]);
    } else if (key == "city") {
      if (!is_city(value)) bad(key, value, "expected [A-Z][0-9]{3}");
      f.cities.insert(value);
    } else if (key == "industry") {
      if (!is_industry_id(value)) bad(key, value, "expected [A-Za-z0-9]{6}");
      f.industries.insert(value);
    } else if (key == "position") {
      if (!is_position_id(value)) bad(key, value, "expected xxxx-xxxx-xxxx-xxxx");
      f.positions.insert(value);
    } else if (key == "class") {
      const auto c = parse_employment_class(value);
      if (!c) bad(key, value, "expected PERMANENT or FLEXIBLE");
      if (f.employment_class && *f.employment_class != *c) {
        bad(key, value, "conflicting class values");
      }
      f.employment_class = c;
    } else {
      throw BadFilterError("unknown query parameter '" + key + "'");
    }
  }
  return f;
}

FilterState decode_filter(std::string_view query,
                          const std::set<std::string, std::less<>>& extra_keys) {
  return decode_filter(parse_query(query), extra_keys);
}

}  // namespace talentlens
