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

#include "talentlens/payload_json.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <utility>

namespace talentlens {

using nlohmann::json;

namespace {

json money_or_null(const std::optional<double>& v) {
  return v ? json(money(*v)) : json(nullptr);
}

json fraction_or_null(const std::optional<double>& v) {
  return v ? json(*v) : json(nullptr);
}

json shares(const std::vector<std::pair<std::string, double>>& items) {
  json out = json::array();
  for (const auto& [id, fraction] : items) out.push_back({{"id", id}, {"fraction", fraction}});
  return out;
}

}  // namespace

std::int64_t money(double cny) { return static_cast<std::int64_t>(std::llround(cny)); }

json to_json(const SummaryStats& s) {
  return {{"record_count", s.record_count},
          {"distinct_positions", s.distinct_positions},
          {"distinct_companies", s.distinct_companies},
          {"distinct_industries", s.distinct_industries},
          {"distinct_provinces", s.distinct_provinces},
          {"distinct_cities", s.distinct_cities}};
}

json to_json(const Provenance& p) {
  return {{"ingested", p.ingested},
          {"after_top_fraction", p.after_top_fraction},
          {"after_outliers", p.after_outliers},
          {"selected_positions", p.selected_positions}};
}

json to_json(const FlowMatrix& m) {
  json flows = json::array();
  for (const auto& f : m.flows) {
    flows.push_back({{"education", to_string(f.education)},
                     {"experience", to_string(f.experience)},
                     {"count", f.count}});
  }
  json edu = json::object();
  for (const auto& [code, n] : m.education_totals) edu[std::string(to_string(code))] = n;
  json exp = json::object();
  for (const auto& [code, n] : m.experience_totals) exp[std::string(to_string(code))] = n;
  return {{"flows", std::move(flows)},
          {"education_totals", std::move(edu)},
          {"experience_totals", std::move(exp)},
          {"total", m.total}};
}

json to_json(const RegionBarSet& s) {
  json bars = json::array();
  for (const auto& b : s.bars) {
    bars.push_back({{"province", std::string(1, b.province)},
                    {"record_count", b.record_count},
                    {"avg_salary", money_or_null(b.avg_salary)},
                    {"salary_opacity", b.salary_opacity},
                    {"city_count", b.city_count}});
  }
  return {{"bars", std::move(bars)}};
}

json to_json(const PositionRowSet& s) {
  json rows = json::array();
  for (const auto& r : s.rows) {
    json edu = json::object();
    for (const auto& [code, f] : r.education_proportions) edu[std::string(to_string(code))] = f;
    json exp = json::object();
    for (const auto& [code, f] : r.experience_proportions) exp[std::string(to_string(code))] = f;
    json tiers = json::object();
    for (const auto& [province, rs] : r.region_salary_tiers) {
      tiers[std::string(1, province)] = {{"tier", to_string(rs.tier)},
                                         {"avg_salary", money(rs.avg_salary)}};
    }
    rows.push_back({{"position_id", r.position_id},
                    {"record_count", r.record_count},
                    {"education_proportions", std::move(edu)},
                    {"experience_proportions", std::move(exp)},
                    {"region_salary_tiers", std::move(tiers)}});
  }
  return {{"rows", std::move(rows)}};
}

json to_json(const GlyphSet& s) {
  json points = json::array();
  for (const auto& p : s.points) {
    json point = {{"record_id", p.record_id},
                  {"position_id", p.position_id},
                  {"province", std::string(1, p.province)},
                  {"industry_id", p.industry_id},
                  {"side", p.side > 0 ? "+" : "-"},
                  {"jitter_key", p.jitter_key},
                  {"class", to_string(p.employment)},
                  {"annual_midpoint", money(p.annual_midpoint)}};
    if (const auto* perm = std::get_if<PermanentGlyph>(&p.detail)) {
      point["monthly_equivalent"] = money(perm->monthly_equivalent);
      point["bonus_months"] = perm->bonus_months;
    } else {
      const auto& flex = std::get<FlexibleGlyph>(p.detail);
      point["wage_kind"] = to_string(flex.wage_kind);
      point["percentile_arc"] = flex.percentile_arc;
    }
    points.push_back(std::move(point));
  }
  return {{"axis_spec",
           {{"dimension", to_string(s.axis.dimension)},
            {"positive", s.axis.positive},
            {"negative", s.axis.negative}}},
          {"points", std::move(points)}};
}

namespace {

void append_string(std::string& out, std::string_view text) {
  const bool plain = std::all_of(text.begin(), text.end(), [](char c) {
    return c != '"' && c != '\\' && static_cast<unsigned char>(c) >= 0x20;
  });
  if (plain) {
    out += '"';
    out += text;
    out += '"';
  } else {
    out += json(text).dump();
  }
}

template <typename Int>
void append_int(std::string& out, Int v) {
  char buf[24];
  const auto end = std::to_chars(buf, buf + sizeof(buf), v).ptr;
  out.append(buf, end);
}

void append_strings(std::string& out, const std::set<std::string>& values) {
  out += '[';
  bool first = true;
  for (const auto& v : values) {
    if (!first) out += ',';
    first = false;
    append_string(out, v);
  }
  out += ']';
}

}  // namespace

// Keys are written in the lexicographic order json objects use.
std::string to_json_text(const GlyphSet& s) {
  std::string out;
  out.reserve(64 + s.points.size() * 240);
  out += R"({"axis_spec":{"dimension":)";
  append_string(out, to_string(s.axis.dimension));
  out += R"(,"negative":)";
  append_strings(out, s.axis.negative);
  out += R"(,"positive":)";
  append_strings(out, s.axis.positive);
  out += R"(},"points":[)";
  bool first = true;
  for (const auto& p : s.points) {
    if (!first) out += ',';
    first = false;
    const auto* perm = std::get_if<PermanentGlyph>(&p.detail);
    out += R"({"annual_midpoint":)";
    append_int(out, money(p.annual_midpoint));
    if (perm) {
      out += R"(,"bonus_months":)";
      append_int(out, perm->bonus_months);
    }
    out += R"(,"class":)";
    append_string(out, to_string(p.employment));
    out += R"(,"industry_id":)";
    append_string(out, p.industry_id);
    out += R"(,"jitter_key":)";
    append_int(out, p.jitter_key);
    if (perm) {
      out += R"(,"monthly_equivalent":)";
      append_int(out, money(perm->monthly_equivalent));
    } else {
      out += R"(,"percentile_arc":)";
      out += json(std::get<FlexibleGlyph>(p.detail).percentile_arc).dump();
    }
    out += R"(,"position_id":)";
    append_string(out, p.position_id);
    out += R"(,"province":)";
    append_string(out, std::string_view(&p.province, 1));
    out += R"(,"record_id":)";
    append_int(out, p.record_id);
    out += R"(,"side":)";
    out += p.side > 0 ? R"("+")" : R"("-")";
    if (!perm) {
      out += R"(,"wage_kind":)";
      append_string(out, to_string(std::get<FlexibleGlyph>(p.detail).wage_kind));
    }
    out += '}';
  }
  out += "]}";
  return out;
}

json to_json(const BandDistribution& d) {
  json blocks = json::array();
  for (const auto& b : d.blocks) {
    blocks.push_back({{"position_id", b.position_id},
                      {"education_rank_min", b.education_rank_min},
                      {"education_rank_max", b.education_rank_max},
                      {"experience_rank_min", b.experience_rank_min},
                      {"experience_rank_max", b.experience_rank_max},
                      {"salary_min", money_or_null(b.salary_min)},
                      {"salary_max", money_or_null(b.salary_max)},
                      {"record_count", b.record_count}});
  }
  json edu = json::object();
  for (const auto& [code, f] : d.education_bands) edu[std::string(to_string(code))] = f;
  json exp = json::object();
  for (const auto& [code, f] : d.experience_bands) exp[std::string(to_string(code))] = f;
  return {{"blocks", std::move(blocks)},
          {"education_bands", std::move(edu)},
          {"experience_bands", std::move(exp)},
          {"position_count", d.position_count}};
}

json to_json(const RankedGrid& g) {
  auto order = [](const std::vector<RankedEntry>& entries) {
    json out = json::array();
    for (const auto& e : entries) {
      out.push_back({{"id", e.id},
                     {"avg_salary", money_or_null(e.avg_salary)},
                     {"record_count", e.record_count}});
    }
    return out;
  };
  json cells = json::array();
  for (const auto& c : g.cells) {
    cells.push_back({{"industry_id", c.industry_id},
                     {"province", std::string(1, c.province)},
                     {"record_count", c.record_count},
                     {"opacity", c.opacity}});
  }
  return {{"industry_order", order(g.industry_order)},
          {"province_order", order(g.province_order)},
          {"cells", std::move(cells)}};
}

json to_json(const FlowerSet& s) {
  json flowers = json::array();
  for (const auto& f : s.flowers) {
    flowers.push_back({{"industry_id", f.industry_id},
                       {"record_count", f.record_count},
                       {"x", f.x},
                       {"y", f.y},
                       {"mean_education_rank", f.mean_education_rank},
                       {"mean_experience_rank", f.mean_experience_rank},
                       {"mean_salary", money_or_null(f.mean_salary)},
                       {"petals",
                        {{"education", fraction_or_null(f.education_petal)},
                         {"experience", fraction_or_null(f.experience_petal)},
                         {"salary", fraction_or_null(f.salary_petal)}}}});
  }
  return {{"flowers", std::move(flowers)}};
}

json to_json(const TreemapNode& n) {
  json children = json::array();
  for (const auto& c : n.children) children.push_back(to_json(c));
  return {{"id", n.id},
          {"kind", n.kind},
          {"posting_count", n.posting_count},
          {"avg_salary", money_or_null(n.avg_salary)},
          {"salary_opacity", n.salary_opacity},
          {"donut",
           {{"top_positions", shares(n.donut.top_positions)},
            {"other_positions", n.donut.other_positions},
            {"top_industries", shares(n.donut.top_industries)},
            {"other_industries", n.donut.other_industries},
            {"inner_opacity", n.donut.inner_opacity}}},
          {"children", std::move(children)}};
}

}  // namespace talentlens
