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

#include <functional>
#include <stdexcept>

namespace quartic {

/// One evaluation instance of int_0^inf dx / (x^(2n) + alpha*a*x^n + 1)^(m+1).
/// alpha = n gives the single-parameter family; (n, alpha) = (2, 2) is the
/// quartic case.
struct IntegralParams {
    int n = 2;
    double alpha = 2.0;
    int m = 0;
    double a = 0.0;

    /// Kernel positivity for z > 0 needs alpha*a > -2.
    void require_positivity() const;
    /// The power series converges for |alpha*a| < 2.
    void require_series_domain() const;
};

/// Integrand value at x > 0.
double integrand(const IntegralParams& p, double x);

struct QuadResult {
    double value = 0.0;
    double error_estimate = 0.0;
    long evaluations = 0;
};

struct QuadratureFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Adaptive 15-point Gauss-Kronrod on a finite interval; relative tolerance.
QuadResult adaptive_gk15(const std::function<double(double)>& f, double lo, double hi,
                         double rel_tol, long max_evals = 1000000);

/// Full-line evaluation through the exact fold
///   int_0^inf = int_0^1 (1 + x^(2n(m+1)-2)) * integrand(x) dx
/// obtained from x -> 1/x, then adaptive GK15 on [0, 1].
QuadResult integral_quadrature(const IntegralParams& p, double tol);

}  // namespace quartic
