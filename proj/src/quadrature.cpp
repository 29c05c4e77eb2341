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

#include "quartic/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

namespace quartic {

void IntegralParams::require_positivity() const {
    if (n < 1) throw std::domain_error("n must be a positive integer");
    if (m < 0) throw std::domain_error("m must be a nonnegative integer");
    if (!(alpha * a > -2.0))
        throw std::domain_error("outside the positivity domain: alpha*a must exceed -2");
}

void IntegralParams::require_series_domain() const {
    require_positivity();
    if (!(std::fabs(alpha * a) < 2.0))
        throw std::domain_error("outside the series domain: |alpha*a| must be below 2");
}

double integrand(const IntegralParams& p, double x) {
    if (!(x > 0.0)) throw std::domain_error("integrand: x must be positive");
    p.require_positivity();
    double xn = std::pow(x, p.n);
    double kernel = xn * xn + p.alpha * p.a * xn + 1.0;
    return std::pow(kernel, -(p.m + 1.0));
}

namespace {

// 15-point Kronrod extension of 7-point Gauss (QUADPACK dqk15 tables).
constexpr double kXgk[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144838258730, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr double kWgk[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr double kWg[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Segment {
    double lo, hi;
    double value;
    double error;
};

// One GK15 application, with the QUADPACK error heuristic.
Segment gk15(const std::function<double(double)>& f, double lo, double hi) {
    const double centr = 0.5 * (lo + hi);
    const double hlgth = 0.5 * (hi - lo);
    const double fc = f(centr);
    double resg = fc * kWg[3];
    double resk = fc * kWgk[7];
    double resabs = std::fabs(resk);
    double fv1[7], fv2[7];
    for (int j = 0; j < 3; ++j) {
        int jtw = 2 * j + 1;
        double absc = hlgth * kXgk[jtw];
        fv1[jtw] = f(centr - absc);
        fv2[jtw] = f(centr + absc);
        double fsum = fv1[jtw] + fv2[jtw];
        resg += kWg[j] * fsum;
        resk += kWgk[jtw] * fsum;
        resabs += kWgk[jtw] * (std::fabs(fv1[jtw]) + std::fabs(fv2[jtw]));
    }
    for (int j = 0; j < 4; ++j) {
        int jtwm1 = 2 * j;
        double absc = hlgth * kXgk[jtwm1];
        fv1[jtwm1] = f(centr - absc);
        fv2[jtwm1] = f(centr + absc);
        double fsum = fv1[jtwm1] + fv2[jtwm1];
        resk += kWgk[jtwm1] * fsum;
        resabs += kWgk[jtwm1] * (std::fabs(fv1[jtwm1]) + std::fabs(fv2[jtwm1]));
    }
    const double reskh = resk * 0.5;
    double resasc = kWgk[7] * std::fabs(fc - reskh);
    for (int j = 0; j < 7; ++j)
        resasc += kWgk[j] * (std::fabs(fv1[j] - reskh) + std::fabs(fv2[j] - reskh));
    resabs *= std::fabs(hlgth);
    resasc *= std::fabs(hlgth);
    double err = std::fabs((resk - resg) * hlgth);
    if (resasc != 0.0 && err != 0.0)
        err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
    const double epmach = std::numeric_limits<double>::epsilon();
    const double uflow = std::numeric_limits<double>::min();
    if (resabs > uflow / (50.0 * epmach)) err = std::max(epmach * 50.0 * resabs, err);
    return {lo, hi, resk * hlgth, err};
}

}  // namespace

QuadResult adaptive_gk15(const std::function<double(double)>& f, double lo, double hi,
                         double rel_tol, long max_evals) {
    if (!(rel_tol >= 1e-13)) throw std::domain_error("quadrature tolerance below 1e-13");
    std::vector<Segment> segs{gk15(f, lo, hi)};
    long evals = 15;
    for (;;) {
        double total = 0.0, err = 0.0;
        for (const auto& s : segs) {
            total += s.value;
            err += s.error;
        }
        if (err <= rel_tol * std::fabs(total) && segs.size() > 1) {
            // Re-sum left to right for a schedule-independent result.
            std::sort(segs.begin(), segs.end(),
                      [](const Segment& a, const Segment& b) { return a.lo < b.lo; });
            total = 0.0;
            err = 0.0;
            for (const auto& s : segs) {
                total += s.value;
                err += s.error;
            }
            return {total, err, evals};
        }
        if (segs.size() == 1 && err <= rel_tol * std::fabs(total)) return {total, err, evals};
        if (evals + 30 > max_evals)
            throw QuadratureFailure("quadrature did not converge within the evaluation budget");
        // Split the segment with the largest error; ties break to the left.
        size_t worst = 0;
        for (size_t i = 1; i < segs.size(); ++i)
            if (segs[i].error > segs[worst].error) worst = i;
        Segment s = segs[worst];
        double mid = 0.5 * (s.lo + s.hi);
        if (!(s.lo < mid && mid < s.hi))
            throw QuadratureFailure("quadrature interval too small to split further");
        segs[worst] = gk15(f, s.lo, mid);
        segs.push_back(gk15(f, mid, s.hi));
        evals += 30;
    }
}

QuadResult integral_quadrature(const IntegralParams& p, double tol) {
    p.require_positivity();
    if (!(tol >= 1e-13)) throw std::domain_error("quadrature tolerance below 1e-13");
    const double fold_power = 2.0 * p.n * (p.m + 1.0) - 2.0;
    auto folded = [&p, fold_power](double x) {
        // Continuous limit at 0: kernel -> 1, x^fold_power -> [fold_power == 0].
        if (x <= 0.0) return fold_power == 0.0 ? 2.0 : 1.0;
        double w = integrand(p, x);
        return (1.0 + std::pow(x, fold_power)) * w;
    };
    QuadResult r = adaptive_gk15(folded, 0.0, 1.0, tol);
    if (r.error_estimate > tol * std::fabs(r.value))
        throw QuadratureFailure("quadrature error estimate exceeds the requested tolerance");
    return r;
}

}  // namespace quartic
