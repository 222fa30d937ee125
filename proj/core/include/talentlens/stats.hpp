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

#include <span>
#include <vector>

namespace talentlens {

struct QuartilePair {
  double q1 = 0.0;
  double q3 = 0.0;
};

// Tukey fences: [q1 - 1.5 IQR, q3 + 1.5 IQR].
struct OutlierBounds {
  double lower_fence = 0.0;
  double upper_fence = 0.0;

  bool contains(double v) const { return v >= lower_fence && v <= upper_fence; }
};

inline constexpr double kTukeyMultiplier = 1.5;

// Percentile p in [0,1] of an ascending-sorted, non-empty sequence using
// linear interpolation at index p*(n-1).
double percentile_sorted(std::span<const double> sorted, double p);

// Both throw DomainError on empty input.
QuartilePair quartiles(std::vector<double> values);
OutlierBounds iqr_bounds(std::vector<double> values);
OutlierBounds fences_from(const QuartilePair& q);

// Min-max normalization onto [0,1]; a degenerate set (max == min) maps
// every element to 1.0.
std::vector<double> min_max_normalize(std::span<const double> values);

}  // namespace talentlens
