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

#include "talentlens/stats.hpp"

#include <algorithm>
#include <cmath>

#include "talentlens/error.hpp"

namespace talentlens {

double percentile_sorted(std::span<const double> sorted, double p) {
  if (sorted.empty()) throw DomainError("percentile of empty sequence");
  const double index = p * static_cast<double>(sorted.size() - 1);
  const auto lo = static_cast<std::size_t>(std::floor(index));
  const std::size_t hi = std::min(lo + 1, sorted.size() - 1);
  const double frac = index - static_cast<double>(lo);
  if (frac == 0.0) return sorted[lo];
  return sorted[lo] + frac * (sorted[hi] - sorted[lo]);
}

QuartilePair quartiles(std::vector<double> values) {
  if (values.empty()) throw DomainError("quartiles of empty list");
  std::sort(values.begin(), values.end());
  return QuartilePair{percentile_sorted(values, 0.25),
                      percentile_sorted(values, 0.75)};
}

OutlierBounds fences_from(const QuartilePair& q) {
  const double iqr = q.q3 - q.q1;
  return OutlierBounds{q.q1 - kTukeyMultiplier * iqr,
                       q.q3 + kTukeyMultiplier * iqr};
}

OutlierBounds iqr_bounds(std::vector<double> values) {
  if (values.empty()) throw DomainError("IQR bounds of empty list");
  return fences_from(quartiles(std::move(values)));
}

std::vector<double> min_max_normalize(std::span<const double> values) {
  std::vector<double> out(values.size(), 1.0);
  if (values.empty()) return out;
  const auto [lo, hi] = std::minmax_element(values.begin(), values.end());
  const double range = *hi - *lo;
  if (range <= 0.0) return out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    out[i] = std::clamp((values[i] - *lo) / range, 0.0, 1.0);
  }
  return out;
}

}  // namespace talentlens
