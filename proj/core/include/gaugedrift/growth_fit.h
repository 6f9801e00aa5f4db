// Copyright 2026 The gaugedrift Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef GAUGEDRIFT_GROWTH_FIT_H
#define GAUGEDRIFT_GROWTH_FIT_H

#include <cstddef>
#include <span>
#include <stdexcept>

namespace gaugedrift {

inline constexpr double kGrowthWindowLow = 1e-10;
inline constexpr double kGrowthWindowHigh = 0.1;
inline constexpr size_t kMinGrowthPoints = 10;

class TooFewPointsError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

/// Least-squares line through (log step, log value).
struct GrowthFit {
    double slope = 0;
    double intercept = 0;
    /// 1-based, inclusive.
    size_t first_step = 0;
    size_t last_step = 0;
    size_t points = 0;
    /// RMS of the log-space residuals.
    double residual = 0;
};

/// Fits values[k] at step k+1 over the first contiguous run of steps whose
/// value lies in [low, high]. Throws TooFewPointsError if that run has
/// fewer than kMinGrowthPoints entries.
GrowthFit fit_growth(std::span<const double> values, double low = kGrowthWindowLow, double high = kGrowthWindowHigh);

}  // namespace gaugedrift

#endif
