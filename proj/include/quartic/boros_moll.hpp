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

#include "quartic/rational.hpp"

namespace quartic {

/// Closed-form value of the quartic integral at (n, alpha) = (2, 2):
/// pi/2 * C(2m, m) / (4^m (2(a+1))^(m+1/2)) * 2F1(-m, m+1; 1/2-m; (a+1)/2).
/// The hypergeometric factor is summed exactly in rationals (any double is
/// a dyadic rational); one floating multiplication by the pi/power prefactor
/// follows. Requires a > -1.
double closed_form_t1(int m, double a);

/// Exact coefficients of the degree-m polynomial P_m(a) = sum_l d_l a^l.
struct PolyCoeffs {
    int m = 0;
    std::vector<Rational> coeffs;  // d_0 .. d_m
};

PolyCoeffs boros_moll_coeffs(int m);

/// P_m(a) evaluated exactly vs. the prefactored series form
///   2^(m+3/2) (a+1)^(m+1/2) / (4 pi) * sum_l (-1)^l 2^l
///   (l/2 - 3/4)! (m + l/2 - 1/4)! / (l! m!) a^l
/// truncated after `truncation` terms. |a| < 1.
struct PolypartReport {
    double exact_value = 0.0;
    double series_value = 0.0;
    double rel_deviation = 0.0;
    int terms = 0;
};

PolypartReport polypart_check(int m, const Rational& a, int truncation);

/// The coefficient-of-a^n convolution: binomial C(m+1/2, n-l) against the
/// series factor. The displayed sum stops at l = n; the full reading keeps
/// summing with C(m+1/2, k) = 0 for k < 0. Both are evaluated so tests can
/// record which reading matches the exact coefficient.
enum class DnReading { printed_finite, full_convolution };

double dn_convolution(int n_idx, int m, int truncation,
                      DnReading reading = DnReading::printed_finite);

}  // namespace quartic
