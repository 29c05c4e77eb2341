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

#include "quartic/series.hpp"

#include <cmath>
#include <numbers>

#include "quartic/fixtures.hpp"
#include "quartic/hyper.hpp"

namespace quartic {

const Recurrence& series_recurrence() {
    static const Recurrence rec = [] {
        const TheoremFixture* fx = find_theorem3_variant("theorem3-corrected");
        if (!fx) throw std::logic_error("missing corrected fixture");
        return ode_to_recurrence(fx->op);
    }();
    return rec;
}

namespace {

// ---------------------------------------------------------------------------
// Double-double helpers (error-free transforms). The alternating series
// cancels its partial sums by up to six orders of magnitude near the edge of
// the convergence domain, which is more than one double can absorb; two
// doubles carry the accumulation comfortably.

struct DD {
    double hi = 0.0, lo = 0.0;
};

inline DD quick_two_sum(double a, double b) {
    double s = a + b;
    return {s, b - (s - a)};
}

inline DD two_sum(double a, double b) {
    double s = a + b;
    double bb = s - a;
    return {s, (a - (s - bb)) + (b - bb)};
}

inline DD two_prod(double a, double b) {
    double p = a * b;
    return {p, std::fma(a, b, -p)};
}

inline DD dd_add(DD a, DD b) {
    DD s = two_sum(a.hi, b.hi);
    s.lo += a.lo + b.lo;
    return quick_two_sum(s.hi, s.lo);
}

inline DD dd_mul(DD a, DD b) {
    DD p = two_prod(a.hi, b.hi);
    p.lo += a.hi * b.lo + a.lo * b.hi;
    return quick_two_sum(p.hi, p.lo);
}

inline DD dd_mul(DD a, double b) {
    DD p = two_prod(a.hi, b);
    p.lo += a.lo * b;
    return quick_two_sum(p.hi, p.lo);
}

inline DD dd_div(DD a, double b) {
    double q1 = a.hi / b;
    DD p = two_prod(q1, b);
    double q2 = (a.hi - p.hi - p.lo + a.lo) / b;
    return quick_two_sum(q1, q2);
}

DD dd_from_rational(const Rational& q) {
    double hi = q.to_double();
    double lo = (q - Rational::from_double(hi)).to_double();
    return quick_two_sum(hi, lo);
}

// ---------------------------------------------------------------------------
// Exact stride-2 ratio q_{l+2}/q_l straight from the verified recurrence,
// as a pair of exact doubles (numerator, denominator).

struct StrideRatio {
    MultiPoly offset0, offset2;  // specialized to polynomials in l

    StrideRatio(int m, const Rational& u) {
        const Recurrence& rec = series_recurrence();
        offset0 = rec.offsets.at(0).substitute(Var::m, Rational(m)).substitute(Var::u, u);
        offset2 = rec.offsets.at(2).substitute(Var::m, Rational(m)).substitute(Var::u, u);
    }

    // returns {num, den} with ratio = num/den > 0
    std::pair<double, double> at(int l) const {
        std::array<std::optional<Rational>, kNumVars> pt;
        pt[static_cast<size_t>(Var::x)] = Rational(l);
        Rational r = -(offset0.eval(pt)) / offset2.eval(pt);
        if (!r.num().fits_int64() || !r.den().fits_int64())
            throw std::logic_error("stride ratio exceeds exact double range");
        return {static_cast<double>(r.num().to_int64()),
                static_cast<double>(r.den().to_int64())};
    }
};

// For n = 2 both parity bases are pi*sqrt(2) times exact rationals:
//   c0 = pi*sqrt(2)/4 * (3/4)_m / m!,   c1 = -pi*sqrt(2)/8 * (5/4)_m / m!.
// Factoring the shared transcendental out lets the cancellation happen in
// the double-double bracket, leaving one clean rounding at the end.
struct ClassMultipliers {
    DD even, odd;    // multiplier per parity class, folded into the terms
    double trans_e;  // transcendental scale applied after summation
    double trans_o;
    bool common_scale;  // trans_e == trans_o, classes may share an accumulator
};

ClassMultipliers class_multipliers(int n, int m) {
    if (n == 2) {
        Rational mfact = factorial_rat(m);
        Rational even = pochhammer_exact(Rational(3, 4), m) / (Rational(4) * mfact);
        Rational odd = -pochhammer_exact(Rational(5, 4), m) / (Rational(8) * mfact);
        double k = std::numbers::pi * std::sqrt(2.0);
        return {dd_from_rational(even), dd_from_rational(odd), k, k, true};
    }
    SeriesBases b = series_bases(n, m);
    return {DD{1.0, 0.0}, DD{1.0, 0.0}, b.c0, b.c1, false};
}

}  // namespace

std::vector<double> series_terms(const IntegralParams& p, int count) {
    p.require_series_domain();
    const SeriesBases bases = series_bases(p.n, p.m);
    const double w = p.alpha * p.a / p.n;
    CoefficientStream qs = unroll(series_recurrence(), p.m, Rational(1, p.n), count);
    std::vector<double> t;
    t.reserve(static_cast<size_t>(count));
    double wpow = 1.0;
    for (int l = 0; l < count; ++l) {
        t.push_back(qs.q[static_cast<size_t>(l)].to_double() *
                    (l % 2 == 0 ? bases.c0 : bases.c1) * wpow);
        wpow *= w;
    }
    return t;
}

SeriesResult series_sum(const IntegralParams& p, double tol, int max_terms) {
    p.require_series_domain();
    if (!(tol > 0.0)) throw std::domain_error("series tolerance must be positive");
    const double w = p.alpha * p.a / p.n;
    if (w == 0.0) return {series_bases(p.n, p.m).c0, 1, 0.0};

    const double half = p.alpha * p.a / 2.0;
    const double rho_floor = half * half;  // the exact stride-2 ratio limit

    const ClassMultipliers mult = class_multipliers(p.n, p.m);
    const StrideRatio ratio(p.m, Rational(1, p.n));
    const DD w2 = two_prod(w, w);

    // Stride the two parity chains: t_{l+2} = t_l * ratio(l) * w^2, with the
    // class multiplier folded into the start terms.
    DD term[2] = {mult.even, dd_mul(mult.odd, w)};
    DD accum[2] = {term[0], term[1]};
    double prev_abs[2] = {std::fabs(term[0].hi), std::fabs(term[1].hi)};

    auto combined = [&] {
        if (mult.common_scale) {
            DD s = dd_add(accum[0], accum[1]);
            return mult.trans_e * s.hi + mult.trans_e * s.lo;
        }
        return mult.trans_e * accum[0].hi + mult.trans_e * accum[0].lo +
               mult.trans_o * accum[1].hi + mult.trans_o * accum[1].lo;
    };

    int terms_used = 2;
    for (int l = 2; l < max_terms; ++l) {
        int parity = l % 2;
        auto [num, den] = ratio.at(l - 2);
        term[parity] = dd_div(dd_mul(dd_mul(term[parity], w2), num), den);
        accum[parity] = dd_add(accum[parity], term[parity]);
        terms_used = l + 1;
        if (parity == 1) {
            double abs_e = std::fabs(term[0].hi) * mult.trans_e;
            double abs_o = std::fabs(term[1].hi) * std::fabs(mult.trans_o);
            double r_even = prev_abs[0] > 0.0 ? std::fabs(term[0].hi) / prev_abs[0] : 0.0;
            double r_odd = prev_abs[1] > 0.0 ? std::fabs(term[1].hi) / prev_abs[1] : 0.0;
            prev_abs[0] = std::fabs(term[0].hi);
            prev_abs[1] = std::fabs(term[1].hi);
            double rho = std::max({r_even, r_odd, rho_floor});
            if (rho < 1.0) {
                double tail = (abs_e + abs_o) * rho / (1.0 - rho);
                double value = combined();
                if (tail <= tol * std::fabs(value)) return {value, terms_used, tail};
            }
        }
    }
    throw SeriesBudgetExceeded("series did not meet the tolerance within the term budget");
}

}  // namespace quartic
