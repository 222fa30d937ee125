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

// Linear-scan reference implementations of every analytics payload. They
// recompute from the raw record fields with their own filter predicate,
// annualization table and grouping, and share no code with the engine.

#include <algorithm>
#include <cmath>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "talentlens/filter.hpp"
#include "talentlens/snapshot.hpp"

namespace talentlens::oracle {

inline std::optional<double> factor(const SalaryKind& k) {
  switch (k.type) {
    case SalaryType::kYearly: return 1.0;
    case SalaryType::kMonthly: return 12.0;
    case SalaryType::kMonthlyWithBonus: return 12.0 + k.bonus_months;
    case SalaryType::kWeekly: return 52.0;
    case SalaryType::kDaily: return 261.0;
    case SalaryType::kHourly: return 2088.0;
    default: return std::nullopt;
  }
}

inline bool permanent(SalaryType t) {
  return t == SalaryType::kYearly || t == SalaryType::kMonthly ||
         t == SalaryType::kMonthlyWithBonus;
}

inline std::optional<double> midpoint(const RecruitmentRecord& r) {
  const auto f = factor(r.salary);
  if (!f) return std::nullopt;
  return (r.lower_bound * *f + r.upper_bound * *f) / 2.0;
}

inline int edu_rank(Education e) {
  static const std::map<std::string, int> ranks = {{"Gz", 0}, {"GZ", 1}, {"Gx", 2}, {"Gy", 3},
                                                   {"GI", 4}, {"GP", 5}, {"Go", 6}, {"Gh", 7}};
  return ranks.at(std::string(to_string(e)));
}

inline int exp_rank(Experience e) {
  static const std::map<std::string, int> ranks = {{"EKk", 0}, {"Eas", 1}, {"Eqh", 2},
                                                   {"EdD", 3}, {"EaZ", 4}, {"EzN", 5},
                                                   {"Eby", 6}, {"ESu", 7}};
  return ranks.at(std::string(to_string(e)));
}

inline bool accepts(const RecruitmentRecord& r, const FilterState& f) {
  auto ok = [](const auto& set, const auto& v) {
    return set.empty() || std::find(set.begin(), set.end(), v) != set.end();
  };
  if (!ok(f.education, r.education)) return false;
  if (!ok(f.experience, r.experience)) return false;
  if (!ok(f.edu_exp_pairs, std::make_pair(r.education, r.experience))) return false;
  if (!ok(f.provinces, r.province)) return false;
  if (!ok(f.cities, r.city)) return false;
  if (!ok(f.industries, r.industry_id)) return false;
  if (!ok(f.positions, r.position_id)) return false;
  if (f.employment_class) {
    if (!factor(r.salary)) return false;
    const auto cls = permanent(r.salary.type) ? EmploymentClass::kPermanent
                                              : EmploymentClass::kFlexible;
    if (cls != *f.employment_class) return false;
  }
  return true;
}

inline std::vector<std::uint32_t> scan(const DatasetSnapshot& s, const FilterState& f) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t i = 0; i < s.size(); ++i) {
    if (accepts(s.record(i).base, f)) out.push_back(i);
  }
  return out;
}

inline std::vector<double> minmax(const std::vector<double>& v) {
  std::vector<double> out(v.size(), 1.0);
  if (v.empty()) return out;
  const double lo = *std::min_element(v.begin(), v.end());
  const double hi = *std::max_element(v.begin(), v.end());
  if (hi == lo) return out;
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = (v[i] - lo) / (hi - lo);
  return out;
}

struct Mean {
  double sum = 0;
  std::size_t n = 0;
  void add(double v) { sum += v, ++n; }
  std::optional<double> get() const {
    return n ? std::optional<double>(sum / static_cast<double>(n)) : std::nullopt;
  }
};

// ---------------------------------------------------------------------------

using Sankey = std::map<std::pair<Education, Experience>, std::size_t>;

inline Sankey sankey(const DatasetSnapshot& s, const FilterState& f) {
  Sankey out;
  for (auto i : scan(s, f)) ++out[{s.record(i).base.education, s.record(i).base.experience}];
  return out;
}

struct Region {
  std::size_t count = 0;
  std::optional<double> avg;
  double opacity = 0;
  std::size_t cities = 0;
};

inline std::map<char, Region> regions(const DatasetSnapshot& s, const FilterState& f) {
  std::map<char, Region> out;
  std::map<char, Mean> means;
  for (auto i : scan(s, f)) {
    const auto& r = s.record(i).base;
    ++out[r.province].count;
    if (auto m = midpoint(r)) means[r.province].add(*m);
  }
  std::vector<double> avgs;
  for (auto& [p, reg] : out) {
    reg.avg = means[p].get();
    if (reg.avg) avgs.push_back(*reg.avg);
    std::set<std::string> cities;
    for (const auto& n : s.records()) {
      if (n.base.province == p) cities.insert(n.base.city);
    }
    reg.cities = cities.size();
  }
  const auto norm = minmax(avgs);
  std::size_t k = 0;
  for (auto& [p, reg] : out) reg.opacity = reg.avg ? norm[k++] : 0.0;
  return out;
}

struct Row {
  std::size_t count = 0;
  std::map<Education, double> edu;
  std::map<Experience, double> exp;
  std::map<char, std::pair<double, int>> tiers;  // avg, tier (0 low .. 2 high)
};

inline double interp(std::vector<double> v, double p) {
  std::sort(v.begin(), v.end());
  const double idx = p * static_cast<double>(v.size() - 1);
  const auto lo = static_cast<std::size_t>(idx);
  const std::size_t hi = std::min(lo + 1, v.size() - 1);
  const double w = idx - static_cast<double>(lo);
  return w == 0.0 ? v[lo] : v[lo] + w * (v[hi] - v[lo]);
}

// Rows plus the expected order (count desc, id asc).
inline std::pair<std::map<std::string, Row>, std::vector<std::string>> rows(
    const DatasetSnapshot& s, const FilterState& f) {
  std::map<std::string, Row> out;
  std::map<std::string, std::map<char, Mean>> prov;
  std::map<std::string, std::map<Education, std::size_t>> ec;
  std::map<std::string, std::map<Experience, std::size_t>> xc;
  for (auto i : scan(s, f)) {
    const auto& r = s.record(i).base;
    ++out[r.position_id].count;
    ++ec[r.position_id][r.education];
    ++xc[r.position_id][r.experience];
    if (auto m = midpoint(r)) prov[r.position_id][r.province].add(*m);
  }
  for (auto& [id, row] : out) {
    for (auto [e, c] : ec[id]) row.edu[e] = static_cast<double>(c) / static_cast<double>(row.count);
    for (auto [x, c] : xc[id]) row.exp[x] = static_cast<double>(c) / static_cast<double>(row.count);
    std::vector<double> avgs;
    for (auto& [p, m] : prov[id]) avgs.push_back(*m.get());
    for (auto& [p, m] : prov[id]) {
      const double a = *m.get();
      const double t1 = interp(avgs, 1.0 / 3.0);
      const double t2 = interp(avgs, 2.0 / 3.0);
      row.tiers[p] = {a, a < t1 ? 0 : (a > t2 ? 2 : 1)};
    }
  }
  std::vector<std::string> order;
  for (auto& [id, row] : out) order.push_back(id);
  std::stable_sort(order.begin(), order.end(), [&](const auto& a, const auto& b) {
    return out[a].count != out[b].count ? out[a].count > out[b].count : a < b;
  });
  return {out, order};
}

struct Glyph {
  int side = 0;
  bool is_permanent = true;
  double monthly = 0;
  int bonus = 0;
  double arc = 0;
};

// Keyed by record ordinal. `positive`/`negative` hold education codes here;
// other dimensions are mapped by the caller via `key_of`.
template <typename KeyOf>
std::map<std::uint32_t, Glyph> glyphs(const DatasetSnapshot& s, const FilterState& f,
                                      const std::set<std::string>& positive,
                                      const std::set<std::string>& negative, KeyOf key_of) {
  const auto ids = scan(s, f);
  std::map<SalaryType, std::vector<double>> kinds;
  for (auto i : ids) {
    const auto& r = s.record(i).base;
    if (factor(r.salary) && !permanent(r.salary.type)) kinds[r.salary.type].push_back(*midpoint(r));
  }
  std::map<std::uint32_t, Glyph> out;
  for (auto i : ids) {
    const auto& r = s.record(i).base;
    const auto m = midpoint(r);
    if (!m) continue;
    const std::string key = key_of(r);
    int side = positive.count(key) ? 1 : (negative.count(key) ? -1 : 0);
    if (!side) continue;
    Glyph g;
    g.side = side;
    g.is_permanent = permanent(r.salary.type);
    if (g.is_permanent) {
      g.bonus = r.salary.type == SalaryType::kMonthlyWithBonus ? r.salary.bonus_months : 0;
      g.monthly = *m / (12.0 + g.bonus);
    } else {
      const auto& v = kinds[r.salary.type];
      std::size_t le = 0;
      for (double x : v) le += x <= *m;
      g.arc = static_cast<double>(le) / static_cast<double>(v.size());
    }
    out[i] = g;
  }
  return out;
}

struct Block {
  int e_min = 99, e_max = -1, x_min = 99, x_max = -1;
  std::optional<double> s_min, s_max;
  std::size_t count = 0;
};

struct Bands {
  std::map<std::string, Block> blocks;
  std::map<Education, double> edu;
  std::map<Experience, double> exp;
};

inline Bands bands(const DatasetSnapshot& s, const FilterState& f) {
  Bands out;
  std::map<Education, std::set<std::string>> ep;
  std::map<Experience, std::set<std::string>> xp;
  for (auto i : scan(s, f)) {
    const auto& r = s.record(i).base;
    auto& b = out.blocks[r.position_id];
    b.e_min = std::min(b.e_min, edu_rank(r.education));
    b.e_max = std::max(b.e_max, edu_rank(r.education));
    b.x_min = std::min(b.x_min, exp_rank(r.experience));
    b.x_max = std::max(b.x_max, exp_rank(r.experience));
    if (auto fct = factor(r.salary)) {
      const double lo = r.lower_bound * *fct, hi = r.upper_bound * *fct;
      b.s_min = b.s_min ? std::min(*b.s_min, lo) : lo;
      b.s_max = b.s_max ? std::max(*b.s_max, hi) : hi;
    }
    ++b.count;
    ep[r.education].insert(r.position_id);
    xp[r.experience].insert(r.position_id);
  }
  const double n = static_cast<double>(out.blocks.size());
  for (auto& [e, set] : ep) out.edu[e] = static_cast<double>(set.size()) / n;
  for (auto& [x, set] : xp) out.exp[x] = static_cast<double>(set.size()) / n;
  return out;
}

struct Grid {
  std::vector<std::string> industry_order;
  std::vector<std::string> province_order;
  std::map<std::pair<std::string, char>, std::pair<std::size_t, double>> cells;
  std::map<std::string, std::optional<double>> industry_avg;
  std::map<std::string, std::optional<double>> province_avg;
};

inline Grid grid(const DatasetSnapshot& s, const FilterState& f) {
  Grid g;
  std::map<std::string, Mean> im, pm;
  std::size_t max_cell = 0;
  for (auto i : scan(s, f)) {
    const auto& r = s.record(i).base;
    const std::string p(1, r.province);
    im[r.industry_id];
    pm[p];
    if (auto m = midpoint(r)) {
      im[r.industry_id].add(*m);
      pm[p].add(*m);
    }
    auto& c = g.cells[{r.industry_id, r.province}];
    max_cell = std::max(max_cell, ++c.first);
  }
  for (auto& [k, c] : g.cells) c.second = static_cast<double>(c.first) / static_cast<double>(max_cell);
  auto order = [](const std::map<std::string, Mean>& m,
                  std::map<std::string, std::optional<double>>& avg_out) {
    std::vector<std::string> ids;
    for (auto& [id, mean] : m) {
      ids.push_back(id);
      avg_out[id] = mean.get();
    }
    std::sort(ids.begin(), ids.end(), [&](const std::string& a, const std::string& b) {
      const auto& x = avg_out[a];
      const auto& y = avg_out[b];
      if (x && y && *x != *y) return *x > *y;
      if (x.has_value() != y.has_value()) return x.has_value();
      return a < b;
    });
    return ids;
  };
  g.industry_order = order(im, g.industry_avg);
  g.province_order = order(pm, g.province_avg);
  return g;
}

struct FlowerRef {
  std::size_t count = 0;
  double x = 0, y = 0;
  double edu_petal = 0, exp_petal = 0;
  std::optional<double> salary_petal;
};

inline std::map<std::string, FlowerRef> flowers(const DatasetSnapshot& s, const FilterState& f) {
  std::map<std::string, FlowerRef> out;
  std::map<std::string, Mean> er, xr, sal;
  std::map<std::string, std::size_t> hi_e, hi_x;
  for (auto i : scan(s, f)) {
    const auto& r = s.record(i).base;
    auto& fl = out[r.industry_id];
    ++fl.count;
    const int e = edu_rank(r.education), x = exp_rank(r.experience);
    hi_e[r.industry_id] += e >= 5;
    hi_x[r.industry_id] += x >= 4;
    er[r.industry_id].add(e);
    xr[r.industry_id].add(x);
    if (auto m = midpoint(r)) sal[r.industry_id].add(*m);
  }
  std::vector<double> ev, xv, sv;
  for (auto& [id, fl] : out) {
    fl.x = static_cast<double>(hi_e[id]) / static_cast<double>(fl.count);
    fl.y = static_cast<double>(hi_x[id]) / static_cast<double>(fl.count);
    ev.push_back(*er[id].get());
    xv.push_back(*xr[id].get());
    if (auto m = sal[id].get()) sv.push_back(*m);
  }
  const auto en = minmax(ev), xn = minmax(xv), sn = minmax(sv);
  std::size_t k = 0, j = 0;
  for (auto& [id, fl] : out) {
    fl.edu_petal = en[k];
    fl.exp_petal = xn[k];
    ++k;
    if (sal[id].get()) fl.salary_petal = sn[j++];
  }
  return out;
}

struct TreeRef {
  std::size_t count = 0;
  std::optional<double> avg;
  double opacity = 0;
  std::vector<std::pair<std::string, double>> top_positions, top_industries;
  std::map<std::string, TreeRef> children;
};

inline std::vector<std::pair<std::string, double>> top5(const std::map<std::string, std::size_t>& c,
                                                        std::size_t total) {
  std::vector<std::pair<std::string, std::size_t>> v(c.begin(), c.end());
  std::sort(v.begin(), v.end(), [](auto& a, auto& b) {
    return a.second != b.second ? a.second > b.second : a.first < b.first;
  });
  std::vector<std::pair<std::string, double>> out;
  for (std::size_t i = 0; i < v.size() && i < 5; ++i) {
    out.emplace_back(v[i].first, static_cast<double>(v[i].second) / static_cast<double>(total));
  }
  return out;
}

// Province-level tree (root -> provinces -> cities), or city-level subtree
// for `parent`.
inline TreeRef treemap(const DatasetSnapshot& s, const FilterState& f,
                       std::optional<char> parent) {
  struct Acc {
    std::size_t n = 0;
    Mean m;
    std::map<std::string, std::size_t> pos, ind;
  };
  Acc root;
  std::map<std::string, Acc> provs;
  std::map<std::string, std::map<std::string, Acc>> cities;
  auto add = [](Acc& a, const RecruitmentRecord& r) {
    ++a.n;
    if (auto m = midpoint(r)) a.m.add(*m);
    ++a.pos[r.position_id];
    ++a.ind[r.industry_id];
  };
  for (auto i : scan(s, f)) {
    const auto& r = s.record(i).base;
    if (parent && r.province != *parent) continue;
    add(root, r);
    add(provs[std::string(1, r.province)], r);
    add(cities[std::string(1, r.province)][r.city], r);
  }
  auto make = [](const Acc& a) {
    TreeRef t;
    t.count = a.n;
    t.avg = a.m.get();
    if (a.n) {
      t.top_positions = top5(a.pos, a.n);
      t.top_industries = top5(a.ind, a.n);
    }
    return t;
  };
  auto set_opacity = [](std::map<std::string, TreeRef>& sib) {
    std::vector<double> v;
    for (auto& [id, t] : sib) if (t.avg) v.push_back(*t.avg);
    const auto n = minmax(v);
    std::size_t k = 0;
    for (auto& [id, t] : sib) t.opacity = t.avg ? n[k++] : 0.0;
  };
  TreeRef out = make(root);
  out.opacity = out.avg ? 1.0 : 0.0;
  if (parent) {
    for (auto& [c, a] : cities[std::string(1, *parent)]) out.children[c] = make(a);
    set_opacity(out.children);
  } else {
    for (auto& [p, a] : provs) {
      auto& node = out.children[p] = make(a);
      for (auto& [c, ca] : cities[p]) node.children[c] = make(ca);
      set_opacity(node.children);
    }
    set_opacity(out.children);
  }
  return out;
}

}  // namespace talentlens::oracle
