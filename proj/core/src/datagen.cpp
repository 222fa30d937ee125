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

#include "talentlens/datagen.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <functional>
#include <istream>
#include <numbers>
#include <random>
#include <set>
#include <sstream>

#include "talentlens/error.hpp"
#include "talentlens/ingest.hpp"
#include "talentlens/normalize.hpp"

namespace talentlens {
namespace {

// std::mt19937_64 is fully specified; the distributions below are written
// out so output does not depend on the standard library implementation.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  std::size_t index(std::size_t n) {
    return std::min(static_cast<std::size_t>(uniform() * static_cast<double>(n)), n - 1);
  }
  bool chance(double p) { return uniform() < p; }
  double normal() {
    const double u1 = 1.0 - uniform();  // (0, 1]
    const double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
  }

 private:
  std::mt19937_64 engine_;
};

// Inverse-CDF sampler over ranks 0..n-1 with weight (rank+1)^-s.
class ZipfSampler {
 public:
  ZipfSampler(std::size_t n, double exponent) : cumulative_(n) {
    double total = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
      total += std::pow(static_cast<double>(k + 1), -exponent);
      cumulative_[k] = total;
    }
  }
  std::size_t sample(Rng& rng) const {
    const double target = rng.uniform() * cumulative_.back();
    const auto it = std::upper_bound(cumulative_.begin(), cumulative_.end(), target);
    return std::min<std::size_t>(it - cumulative_.begin(), cumulative_.size() - 1);
  }

 private:
  std::vector<double> cumulative_;
};

constexpr std::string_view kLowerAlnum = "abcdefghijklmnopqrstuvwxyz0123456789";
constexpr std::string_view kAlnum =
    "ABCDEFGHIJKLMNOPQRSTUVWXYZabcdefghijklmnopqrstuvwxyz0123456789";

std::string random_text(Rng& rng, std::string_view alphabet, std::size_t n) {
  std::string s(n, ' ');
  for (auto& c : s) c = alphabet[rng.index(alphabet.size())];
  return s;
}

std::string random_position_id(Rng& rng) {
  std::string id;
  for (int g = 0; g < 4; ++g) {
    if (g) id += '-';
    id += random_text(rng, kLowerAlnum, 4);
  }
  return id;
}

template <typename Make>
std::vector<std::string> unique_ids(Rng& rng, std::size_t n, Make make,
                                    const std::set<std::string>& reserved = {}) {
  std::set<std::string> seen(reserved);
  std::vector<std::string> out;
  out.reserve(n);
  while (out.size() < n) {
    std::string id = make(rng);
    if (seen.insert(id).second) out.push_back(std::move(id));
  }
  return out;
}

struct Province {
  char letter;
  double salary_multiplier;
  double weight;
  std::vector<std::string> cities;
  std::vector<double> city_weights;
};

struct PositionProfile {
  std::string id;
  std::size_t industry;
  double salary_factor;
  int education_rank;
  int experience_rank;
};

int jitter_rank(Rng& rng, int base) {
  const double u = rng.uniform();
  int r = base;
  if (u < 0.2) r -= 1;
  else if (u > 0.8) r += 1;
  return std::clamp(r, 0, 7);
}

std::size_t pick_weighted(Rng& rng, const std::vector<double>& weights) {
  double total = 0.0;
  for (double w : weights) total += w;
  double target = rng.uniform() * total;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    target -= weights[i];
    if (target < 0.0) return i;
  }
  return weights.size() - 1;
}

double round_amount(double v) { return std::max(1.0, std::round(v)); }

// Fills salary fields so the annualized midpoint is close to `annual_mid`.
void set_salary(RecruitmentRecord& rec, const SalaryKind& kind, double annual_mid,
                double spread) {
  rec.salary = kind;
  if (kind.type == SalaryType::kNegotiable) {
    rec.lower_bound = 0.0;
    rec.upper_bound = 0.0;
    rec.salary_base.clear();
    return;
  }
  const double factor = annual_factor(kind);
  const double per_period = annual_mid / factor;
  rec.lower_bound = round_amount(per_period * (1.0 - spread));
  rec.upper_bound = std::max(rec.lower_bound, round_amount(per_period * (1.0 + spread)));
  switch (kind.type) {
    case SalaryType::kYearly: rec.salary_base = "year"; break;
    case SalaryType::kMonthly:
    case SalaryType::kMonthlyWithBonus: rec.salary_base = "month"; break;
    default: rec.salary_base.clear(); break;
  }
}

SalaryKind draw_permanent_kind(Rng& rng, const GenConfig& c) {
  if (rng.chance(c.yearly_share)) return {SalaryType::kYearly, 0};
  if (rng.chance(c.bonus_share)) {
    const double u = rng.uniform();
    return {SalaryType::kMonthlyWithBonus, u < 0.7 ? 1 : (u < 0.92 ? 2 : 3)};
  }
  return {SalaryType::kMonthly, 0};
}

SalaryKind draw_flexible_kind(Rng& rng) {
  const double u = rng.uniform();
  if (u < 0.25) return {SalaryType::kWeekly, 0};
  if (u < 0.6) return {SalaryType::kDaily, 0};
  return {SalaryType::kHourly, 0};
}

void check(bool ok, const char* message) {
  if (!ok) throw DomainError(message);
}

template <typename T>
T parse_number(std::string_view key, std::string_view text) {
  T value{};
  const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || end != text.data() + text.size()) {
    throw DomainError("config key '" + std::string(key) + "': cannot parse '" +
                      std::string(text) + "'");
  }
  return value;
}

// Shared state for one generation run.
struct World {
  std::vector<Province> provinces;
  std::vector<double> province_weights;
  std::vector<std::string> industries;
  std::vector<std::string> companies;
  std::vector<PositionProfile> positions;
};

World build_world(Rng& rng, const GenConfig& c, const std::set<std::string>& reserved_ids) {
  World w;
  for (std::size_t p = 0; p < c.province_count; ++p) {
    Province prov;
    prov.letter = static_cast<char>('A' + p);
    prov.salary_multiplier = std::exp(c.province_salary_sigma * rng.normal());
    prov.weight = rng.uniform(0.3, 1.7);
    const std::size_t n_cities =
        c.cities_per_province_min +
        rng.index(c.cities_per_province_max - c.cities_per_province_min + 1);
    std::set<int> numbers;
    while (numbers.size() < n_cities) numbers.insert(static_cast<int>(rng.index(1000)));
    for (int num : numbers) {
      char buf[8];
      std::snprintf(buf, sizeof(buf), "%c%03d", prov.letter, num);
      prov.cities.emplace_back(buf);
      prov.city_weights.push_back(rng.uniform(0.2, 1.8));
    }
    w.province_weights.push_back(prov.weight);
    w.provinces.push_back(std::move(prov));
  }
  w.industries = unique_ids(rng, c.industry_count,
                            [](Rng& r) { return random_text(r, kAlnum, 6); }, reserved_ids);
  w.companies = unique_ids(rng, c.company_count,
                           [](Rng& r) { return "co" + random_text(r, kLowerAlnum, 8); });
  const auto ids = unique_ids(rng, c.position_count, random_position_id, reserved_ids);
  for (const auto& id : ids) {
    PositionProfile p;
    p.id = id;
    p.industry = rng.index(w.industries.size());
    p.salary_factor = std::exp(0.25 * rng.normal());
    p.education_rank = static_cast<int>(rng.index(8));
    p.experience_rank = static_cast<int>(rng.index(8));
    w.positions.push_back(std::move(p));
  }
  return w;
}

RecruitmentRecord draw_record(Rng& rng, const GenConfig& c, const World& w,
                              const ZipfSampler& zipf) {
  const PositionProfile& pos = w.positions[zipf.sample(rng)];
  const Province& prov = w.provinces[pick_weighted(rng, w.province_weights)];

  RecruitmentRecord rec;
  rec.position_id = pos.id;
  rec.province = prov.letter;
  rec.city = prov.cities[pick_weighted(rng, prov.city_weights)];
  rec.company_id = w.companies[rng.index(w.companies.size())];
  rec.industry_id =
      rng.chance(0.8) ? w.industries[pos.industry] : w.industries[rng.index(w.industries.size())];
  const int edu = jitter_rank(rng, pos.education_rank);
  const int exp = jitter_rank(rng, pos.experience_rank);
  rec.education = static_cast<Education>(edu);
  rec.experience = static_cast<Experience>(exp);

  const double u = rng.uniform();
  const double requirement_boost = 1.0 + 0.04 * edu + 0.03 * exp;
  const double z = rng.normal();
  const double spread = rng.uniform(0.0, c.salary_spread);
  if (u < c.negotiable_share) {
    set_salary(rec, {SalaryType::kNegotiable, 0}, 0.0, 0.0);
  } else if (u < c.negotiable_share + c.flexible_share) {
    const double mid = c.flexible_median_salary * std::exp(c.flexible_log_sigma * z) *
                       prov.salary_multiplier * pos.salary_factor;
    set_salary(rec, draw_flexible_kind(rng), mid, spread);
  } else {
    const double mid = c.permanent_median_salary * std::exp(c.permanent_log_sigma * z) *
                       prov.salary_multiplier * pos.salary_factor * requirement_boost;
    set_salary(rec, draw_permanent_kind(rng, c), mid, spread);
  }
  return rec;
}

std::vector<RecruitmentRecord> generate_with(Rng& rng, const GenConfig& c, World& world) {
  const ZipfSampler zipf(c.position_count, c.zipf_exponent);
  std::vector<RecruitmentRecord> out;
  out.reserve(c.record_count);
  for (std::size_t i = 0; i < c.record_count; ++i) out.push_back(draw_record(rng, c, world, zipf));
  return out;
}

// ---------------------------------------------------------------------------
// Scenario planting.

struct Plant {
  std::string position;
  char province;
  std::string city;
  std::string industry;
  Education education;
  Experience experience;
  SalaryKind kind;
  double annual_mid;
  double spread;
};

RecruitmentRecord planted(Rng& rng, const World& w, const Plant& p) {
  RecruitmentRecord rec;
  rec.position_id = p.position;
  rec.province = p.province;
  rec.city = p.city;
  rec.company_id = w.companies[rng.index(w.companies.size())];
  rec.industry_id = p.industry;
  rec.education = p.education;
  rec.experience = p.experience;
  set_salary(rec, p.kind, p.annual_mid, p.spread);
  return rec;
}

const Province& province_of(const World& w, char letter) {
  return w.provinces[static_cast<std::size_t>(letter - 'A')];
}

// Deterministic interleave so planted rows are spread through the file.
std::vector<RecruitmentRecord> interleave(Rng& rng, std::vector<RecruitmentRecord> background,
                                          std::vector<RecruitmentRecord> plants) {
  std::vector<RecruitmentRecord> out;
  out.reserve(background.size() + plants.size());
  std::size_t b = 0;
  std::size_t p = 0;
  while (b < background.size() || p < plants.size()) {
    const std::size_t left_b = background.size() - b;
    const std::size_t left_p = plants.size() - p;
    const double take_plant =
        static_cast<double>(left_p) / static_cast<double>(left_b + left_p);
    if (left_p > 0 && (left_b == 0 || rng.chance(take_plant))) {
      out.push_back(std::move(plants[p++]));
    } else {
      out.push_back(std::move(background[b++]));
    }
  }
  return out;
}

GenConfig scenario_base_config(std::uint64_t seed) {
  GenConfig c;
  c.record_count = 20000;
  c.position_count = 2000;
  c.company_count = 3000;
  c.industry_count = 60;
  c.province_count = 26;
  c.seed = seed;
  return c;
}

std::vector<RecruitmentRecord> case1() {
  GenConfig c = scenario_base_config(20240601);
  Rng rng(c.seed);
  const std::set<std::string> reserved = {std::string(kCase1Position),
                                          std::string(kCase1IndustryA),
                                          std::string(kCase1IndustryB)};
  World w = build_world(rng, c, reserved);
  // K and F pay the most; every other province is held below them.
  for (auto& prov : w.provinces) {
    prov.salary_multiplier = std::clamp(prov.salary_multiplier, 0.8, 1.1);
  }
  w.provinces['K' - 'A'].salary_multiplier = 1.6;
  w.provinces['F' - 'A'].salary_multiplier = 1.5;

  const char others[] = {'A', 'B', 'C', 'D', 'H', 'M'};
  const std::set<char> planted_provinces = {'A', 'B', 'C', 'D', 'H', 'M', 'K', 'F'};

  auto background = generate_with(rng, c, w);
  // Keep the planted combination rare so the planted position leads, and
  // absent outside the planted provinces: a province holding one or two
  // such records would otherwise rank on a single draw.
  for (auto& rec : background) {
    if (rec.education == Education::GP && rec.experience == Experience::EdD &&
        (!planted_provinces.contains(rec.province) || rng.chance(0.9))) {
      rec.experience = Experience::Eqh;
    }
  }

  std::vector<RecruitmentRecord> plants;
  constexpr std::size_t kPlanted = 600;
  const std::string industries[] = {std::string(kCase1IndustryA),
                                    std::string(kCase1IndustryB)};
  for (std::size_t i = 0; i < kPlanted; ++i) {
    const double u = rng.uniform();
    char letter;
    double annual_mid;
    if (u < 0.35) {
      letter = 'K';
      annual_mid = rng.uniform(115000.0, 135000.0);
    } else if (u < 0.70) {
      letter = 'F';
      annual_mid = rng.uniform(110000.0, 130000.0);
    } else {
      letter = others[rng.index(std::size(others))];
      annual_mid = rng.uniform(60000.0, 80000.0);
    }
    const Province& prov = province_of(w, letter);
    const SalaryKind kind = rng.chance(0.3) ? SalaryKind{SalaryType::kMonthlyWithBonus, 1}
                                            : SalaryKind{SalaryType::kMonthly, 0};
    plants.push_back(planted(
        rng, w,
        Plant{std::string(kCase1Position), letter,
              prov.cities[pick_weighted(rng, prov.city_weights)],
              industries[rng.chance(0.6) ? 0 : 1], Education::GP, Experience::EdD, kind,
              annual_mid, rng.uniform(0.05, 0.2)}));
  }
  return interleave(rng, std::move(background), std::move(plants));
}

std::vector<RecruitmentRecord> case2() {
  GenConfig c = scenario_base_config(20240602);
  c.permanent_median_salary = 45000.0;
  c.flexible_median_salary = 30000.0;
  c.permanent_log_sigma = 0.3;
  Rng rng(c.seed);
  const std::set<std::string> reserved = {std::string(kCase2Position)};
  World w = build_world(rng, c, reserved);

  // Province H gets the planted city alongside its generated ones.
  Province& h = w.provinces['H' - 'A'];
  if (std::find(h.cities.begin(), h.cities.end(), kCase2City) == h.cities.end()) {
    h.cities.emplace_back(kCase2City);
    h.city_weights.push_back(1.0);
  }
  if (h.cities.size() < 3) {
    for (const char* extra : {"H101", "H202"}) {
      if (std::find(h.cities.begin(), h.cities.end(), extra) == h.cities.end()) {
        h.cities.emplace_back(extra);
        h.city_weights.push_back(1.0);
      }
    }
  }

  auto background = generate_with(rng, c, w);

  std::vector<RecruitmentRecord> plants;
  constexpr std::size_t kPlanted = 400;
  const std::string industry = w.industries[0];
  const Education educations[] = {Education::Gx, Education::Gy};
  const Experience experiences[] = {Experience::EKk, Experience::Eas, Experience::Eqh};
  for (std::size_t i = 0; i < kPlanted; ++i) {
    // Yearly packages between roughly 80,000 and 150,000 CNY.
    RecruitmentRecord rec = planted(
        rng, w,
        Plant{std::string(kCase2Position), 'H', std::string(kCase2City), industry,
              educations[rng.index(2)], experiences[rng.index(3)],
              SalaryKind{SalaryType::kYearly, 0}, 0.0, 0.0});
    rec.lower_bound = std::round(rng.uniform(80000.0, 95000.0));
    rec.upper_bound = std::round(rng.uniform(135000.0, 150000.0));
    plants.push_back(std::move(rec));
  }
  return interleave(rng, std::move(background), std::move(plants));
}

}  // namespace

void GenConfig::validate() const {
  check(record_count > 0, "record_count must be positive");
  check(position_count > 0, "position_count must be positive");
  check(company_count > 0, "company_count must be positive");
  check(industry_count > 0, "industry_count must be positive");
  check(province_count > 0 && province_count <= 26, "province_count must be in 1..26");
  check(cities_per_province_min >= 1, "cities_per_province_min must be >= 1");
  check(cities_per_province_max >= cities_per_province_min,
        "cities_per_province_max must be >= cities_per_province_min");
  check(cities_per_province_max <= 1000, "at most 1000 cities per province");
  check(zipf_exponent > 0.0 && std::isfinite(zipf_exponent), "zipf_exponent must be > 0");
  check(permanent_median_salary > 0.0 && flexible_median_salary > 0.0,
        "median salaries must be positive");
  check(permanent_log_sigma >= 0.0 && flexible_log_sigma >= 0.0 && province_salary_sigma >= 0.0,
        "sigmas must be non-negative");
  check(salary_spread >= 0.0 && salary_spread < 1.0, "salary_spread must be in [0,1)");
  for (double share : {flexible_share, negotiable_share, bonus_share, yearly_share}) {
    check(share >= 0.0 && share <= 1.0, "shares must lie in [0,1]");
  }
  check(flexible_share + negotiable_share <= 1.0,
        "flexible_share + negotiable_share must not exceed 1");
}

GenConfig parse_gen_config(std::string_view text) {
  std::istringstream in{std::string(text)};
  return load_gen_config(in);
}

GenConfig load_gen_config(std::istream& in) {
  GenConfig c;
  using Setter = std::function<void(std::string_view, std::string_view)>;
  auto size_field = [](std::size_t& field) -> Setter {
    return [&field](std::string_view k, std::string_view v) {
      field = parse_number<std::size_t>(k, v);
    };
  };
  auto real_field = [](double& field) -> Setter {
    return [&field](std::string_view k, std::string_view v) {
      field = parse_number<double>(k, v);
    };
  };
  const std::map<std::string, Setter, std::less<>> setters = {
      {"record_count", size_field(c.record_count)},
      {"position_count", size_field(c.position_count)},
      {"company_count", size_field(c.company_count)},
      {"industry_count", size_field(c.industry_count)},
      {"province_count", size_field(c.province_count)},
      {"cities_per_province_min", size_field(c.cities_per_province_min)},
      {"cities_per_province_max", size_field(c.cities_per_province_max)},
      {"zipf_exponent", real_field(c.zipf_exponent)},
      {"permanent_median_salary", real_field(c.permanent_median_salary)},
      {"permanent_log_sigma", real_field(c.permanent_log_sigma)},
      {"flexible_median_salary", real_field(c.flexible_median_salary)},
      {"flexible_log_sigma", real_field(c.flexible_log_sigma)},
      {"salary_spread", real_field(c.salary_spread)},
      {"province_salary_sigma", real_field(c.province_salary_sigma)},
      {"flexible_share", real_field(c.flexible_share)},
      {"negotiable_share", real_field(c.negotiable_share)},
      {"bonus_share", real_field(c.bonus_share)},
      {"yearly_share", real_field(c.yearly_share)},
      {"seed",
       [&c](std::string_view k, std::string_view v) {
         c.seed = parse_number<std::uint64_t>(k, v);
       }},
  };

  std::string line;
  while (std::getline(in, line)) {
    std::string_view view = line;
    if (const auto hash = view.find('#'); hash != std::string_view::npos) {
      view = view.substr(0, hash);
    }
    auto trim = [](std::string_view s) {
      const auto b = s.find_first_not_of(" \t\r");
      if (b == std::string_view::npos) return std::string_view{};
      const auto e = s.find_last_not_of(" \t\r");
      return s.substr(b, e - b + 1);
    };
    view = trim(view);
    if (view.empty()) continue;
    const auto eq = view.find('=');
    if (eq == std::string_view::npos) {
      throw DomainError("config line '" + std::string(view) + "' is not key=value");
    }
    const auto key = trim(view.substr(0, eq));
    const auto value = trim(view.substr(eq + 1));
    const auto it = setters.find(key);
    if (it == setters.end()) throw DomainError("unknown config key '" + std::string(key) + "'");
    it->second(key, value);
  }
  c.validate();
  return c;
}

std::vector<RecruitmentRecord> generate_records(const GenConfig& config) {
  config.validate();
  Rng rng(config.seed);
  World world = build_world(rng, config, {});
  return generate_with(rng, config, world);
}

std::string generate(const GenConfig& config) { return to_csv(generate_records(config)); }

std::vector<RecruitmentRecord> scenario_records(Scenario scenario) {
  return scenario == Scenario::kCase1 ? case1() : case2();
}

std::string scenario_corpus(Scenario scenario) { return to_csv(scenario_records(scenario)); }

double estimate_zipf_exponent(const std::map<std::string, std::size_t>& counts,
                              std::size_t min_count) {
  std::vector<std::size_t> sorted;
  for (const auto& [id, n] : counts) sorted.push_back(n);
  std::sort(sorted.begin(), sorted.end(), std::greater<>());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  std::size_t n = 0;
  for (std::size_t i = 0; i < sorted.size() && sorted[i] >= min_count; ++i) {
    const double x = std::log(static_cast<double>(i + 1));
    const double y = std::log(static_cast<double>(sorted[i]));
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
    ++n;
  }
  if (n < 2) throw DomainError("too few positions to estimate the tail exponent");
  const double dn = static_cast<double>(n);
  const double slope = (dn * sxy - sx * sy) / (dn * sxx - sx * sx);
  return -slope;
}

}  // namespace talentlens
