/*
   Copyright 2026 The quartic-lab Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

#include <vector>

#include "quartic/quadrature.hpp"
#include "quartic/recurrence.hpp"

namespace quartic {

struct SeriesResult {
    double value = 0.0;
    int terms_used = 0;
    double tail_bound = 0.0;
};

struct SeriesBudgetExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Series evaluation: exact rational multipliers q_l (unrolled from the
/// verified reduced-form recurrence) against the two floating parity bases,
/// in the single scaled argument w = alpha*a/n. Requires |alpha*a| < 2.
SeriesResult series_sum(const IntegralParams& p, double tol, int max_terms = 4000);

/// The computed term sequence t_0..t_{count-1} exactly as series_sum sums it.
std::vector<double> series_terms(const IntegralParams& p, int count);

/// The recurrence behind the series (translated from the verified operator).
const Recurrence& series_recurrence();

}  // namespace quartic
