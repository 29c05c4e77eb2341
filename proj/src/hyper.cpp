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

#include "quartic/hyper.hpp"

#include <cmath>
#include <stdexcept>

#include "quartic/gamma.hpp"

namespace quartic {

Rational pochhammer_exact(const Rational& z, int64_t k) {
    if (k < 0) throw std::domain_error("pochhammer: negative length");
    Rational r(1);
    for (int64_t j = 0; j < k; ++j) r *= (z + Rational(j));
    return r;
}

Rational hyp2f1_terminating(int64_t mNeg, const Rational& b, const Rational& c,
                            const Rational& z) {
    if (mNeg < 0) throw std::domain_error("hyp2f1_terminating: negative termination index");
    for (int64_t j = 0; j < mNeg; ++j)
        if ((c + Rational(j)).is_zero())
            throw std::domain_error("hyp2f1_terminating: zero denominator parameter");
    Rational sum(0);
    Rational a(-mNeg);
    // Incremental term update: t_{k+1} = t_k * (a+k)(b+k)/((c+k)(1+k)) * z.
    Rational term(1);
    for (int64_t k = 0;; ++k) {
        sum += term;
        if (k == mNeg) break;
        Rational rk(k);
        term *= (a + rk) * (b + rk) / ((c + rk) * Rational(k + 1)) * z;
    }
    return sum;
}

SeriesBases series_bases(int n, int m) {
    if (n < 1) throw std::domain_error("series_bases: n must be >= 1");
    if (m < 0) throw std::domain_error("series_bases: m must be >= 0");
    double v = 1.0 / (2.0 * n);
    double lm = ln_gamma(m + 1.0);
    double c0 = std::exp(ln_gamma(v + 1.0) + ln_gamma(m + 1.0 - v) - lm);
    double c1 = -0.5 * std::exp(ln_gamma(0.5 + v) + ln_gamma(m + 1.5 - v) - lm);
    return {c0, c1};
}

}  // namespace quartic
