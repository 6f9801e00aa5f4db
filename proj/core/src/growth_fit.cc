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

#include "gaugedrift/growth_fit.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "gaugedrift/tolerances.h"

namespace gaugedrift {

GrowthFit fit_growth(std::span<const double> values, double low, double high) {
    low = std::max(low, 10 * tol::kMachineNoise);
    auto in_window = [&](double v) {
        return std::isfinite(v) && v >= low && v <= high;
    };

    size_t begin = 0;
    while (begin < values.size() && !in_window(values[begin])) {
        begin++;
    }
    size_t end = begin;
    while (end < values.size() && in_window(values[end])) {
        end++;
    }
    size_t n = end - begin;
    if (n < kMinGrowthPoints) {
        throw TooFewPointsError(
            "growth fit: too few points (" + std::to_string(n) + " usable, need " + std::to_string(kMinGrowthPoints) +
            ")");
    }

    double sx = 0, sy = 0;
    for (size_t i = begin; i < end; i++) {
        sx += std::log(static_cast<double>(i + 1));
        sy += std::log(values[i]);
    }
    double mx = sx / n, my = sy / n;
    double sxx = 0, sxy = 0;
    for (size_t i = begin; i < end; i++) {
        double dx = std::log(static_cast<double>(i + 1)) - mx;
        sxx += dx * dx;
        sxy += dx * (std::log(values[i]) - my);
    }

    GrowthFit fit;
    fit.slope = sxy / sxx;
    fit.intercept = my - fit.slope * mx;
    fit.first_step = begin + 1;
    fit.last_step = end;
    fit.points = n;
    double ss = 0;
    for (size_t i = begin; i < end; i++) {
        double r = std::log(values[i]) - (fit.intercept + fit.slope * std::log(static_cast<double>(i + 1)));
        ss += r * r;
    }
    fit.residual = std::sqrt(ss / n);
    return fit;
}

}  // namespace gaugedrift
