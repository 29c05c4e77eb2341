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

#include "quartic/boros_moll.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "quartic/gamma.hpp"
#include "quartic/hyper.hpp"

namespace quartic {

namespace {

Rational central_binomial_over_4m(int m) {
    // C(2m, m) / 4^m
    Rational binom = binomial_rat(Rational(2 * m), m);
    return binom / Rational::pow(Rational(4), m);
}

// ln of the series factor 2^l (l/2 - 3/4)! (m + l/2 - 1/4)! / (l! m!),
// with z! read as Gamma(z+1); the sign (-1)^l is applied by the caller.
double ln_series_factor(int m, int l) {
    return l * std::numbers::ln2 + ln_gamma(l / 2.0 + 0.25) +
           ln_gamma(m + l / 2.0 + 0.75) - ln_gamma(l + 1.0) - ln_gamma(m + 1.0);
}

}  // namespace

double closed_form_t1(int m, double a) {
    if (m < 0) throw std::domain_error("closed_form_t1: m must be >= 0");
    if (!(a > -1.0)) throw std::domain_error("closed_form_t1: requires a > -1");
    Rational z = (Rational::from_double(a) + Rational(1)) / Rational(2);
    Rational exact = central_binomial_over_4m(m) *
                     hyp2f1_terminating(m, Rational(m + 1), Rational(1, 2) - Rational(m), z);
    double prefactor = std::numbers::pi / 2.0 * std::pow(2.0 * (a + 1.0), -(m + 0.5));
    return prefactor * exact.to_double();
}

PolyCoeffs boros_moll_coeffs(int m) {
    if (m < 0) throw std::domain_error("boros_moll_coeffs: m must be >= 0");
    // Terminating 2F1(-m, m+1; 1/2-m; z) as exact coefficients in z, then
    // z = (a+1)/2 expanded binomially and collected in a.
    std::vector<Rational> in_z(static_cast<size_t>(m) + 1, Rational(0));
    Rational term(1);
    for (int k = 0;; ++k) {
        in_z[static_cast<size_t>(k)] = term;
        if (k == m) break;
        Rational rk(k);
        term *= (Rational(-m) + rk) * (Rational(m + 1) + rk) /
                ((Rational(1, 2) - Rational(m) + rk) * Rational(k + 1));
    }
    std::vector<Rational> in_a(static_cast<size_t>(m) + 1, Rational(0));
    for (int k = 0; k <= m; ++k) {
        Rational scale = in_z[static_cast<size_t>(k)] / Rational::pow(Rational(2), k);
        for (int j = 0; j <= k; ++j)
            in_a[static_cast<size_t>(j)] += scale * binomial_rat(Rational(k), j);
    }
    Rational prefactor = central_binomial_over_4m(m);
    PolyCoeffs out;
    out.m = m;
    out.coeffs.reserve(static_cast<size_t>(m) + 1);
    for (auto& c : in_a) out.coeffs.push_back(prefactor * c);
    return out;
}

PolypartReport polypart_check(int m, const Rational& a, int truncation) {
    if (!(a.abs() < Rational(1)))
        throw std::domain_error("polypart_check: requires |a| < 1");
    if (truncation < 1) throw std::domain_error("polypart_check: need at least one term");

    PolyCoeffs pm = boros_moll_coeffs(m);
    Rational exact(0);
    for (int l = m; l >= 0; --l) exact = exact * a + pm.coeffs[static_cast<size_t>(l)];

    const double ad = a.to_double();
    double series = 0.0, apow = 1.0;
    for (int l = 0; l < truncation; ++l) {
        double t = std::exp(ln_series_factor(m, l)) * apow;
        series += (l % 2 == 1) ? -t : t;
        apow *= ad;
    }
    double prefactor =
        std::pow(2.0, m + 1.5) * std::pow(ad + 1.0, m + 0.5) / (4.0 * std::numbers::pi);
    PolypartReport rep;
    rep.exact_value = exact.to_double();
    rep.series_value = prefactor * series;
    rep.terms = truncation;
    rep.rel_deviation = std::fabs(rep.series_value - rep.exact_value) /
                        std::max(std::fabs(rep.exact_value), 1e-300);
    return rep;
}

double dn_convolution(int n_idx, int m, int truncation, DnReading reading) {
    if (n_idx < 0) throw std::domain_error("dn_convolution: coefficient index must be >= 0");
    if (m < 0) throw std::domain_error("dn_convolution: m must be >= 0");
    const int upper = reading == DnReading::printed_finite ? n_idx : truncation;
    const Rational mhalf = Rational(m) + Rational(1, 2);
    double sum = 0.0;
    for (int l = 0; l <= upper; ++l) {
        // C(m+1/2, n-l) via the exact rising product; zero once n-l < 0.
        int64_t k = n_idx - l;
        Rational binom = k < 0 ? Rational(0)
                               : pochhammer_exact(mhalf - Rational(k - 1), k) / factorial_rat(k);
        if (binom.is_zero()) continue;
        double t = binom.to_double() * std::exp(ln_series_factor(m, l));
        sum += (l % 2 == 1) ? -t : t;
    }
    return std::pow(2.0, m + 1.5) / (4.0 * std::numbers::pi) * sum;
}

}  // namespace quartic
