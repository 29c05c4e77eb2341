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

#include "quartic/rational.hpp"

#include <cmath>
#include <stdexcept>

namespace quartic {

Rational::Rational(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::domain_error("Rational: zero denominator");
    normalize();
}

void Rational::normalize() {
    if (den_.is_negative()) {
        num_ = -num_;
        den_ = -den_;
    }
    if (num_.is_zero()) {
        den_ = BigInt(1);
        return;
    }
    BigInt g = BigInt::gcd(num_, den_);
    if (!(g == BigInt(1))) {
        num_ = num_ / g;
        den_ = den_ / g;
    }
}

Rational Rational::from_double(double v) {
    if (!std::isfinite(v)) throw std::domain_error("Rational: non-finite double");
    if (v == 0.0) return Rational();
    int exp = 0;
    double frac = std::frexp(v, &exp);   // v = frac * 2^exp, |frac| in [0.5, 1)
    int64_t mant = static_cast<int64_t>(std::ldexp(frac, 53));
    exp -= 53;
    BigInt n(mant);
    if (exp >= 0) return Rational(n.shifted_left(static_cast<size_t>(exp)), BigInt(1));
    return Rational(n, BigInt(1).shifted_left(static_cast<size_t>(-exp)));
}

Rational Rational::from_string(std::string_view s) {
    size_t slash = s.find('/');
    if (slash == std::string_view::npos) return Rational(BigInt::from_string(s), BigInt(1));
    return Rational(BigInt::from_string(s.substr(0, slash)),
                    BigInt::from_string(s.substr(slash + 1)));
}

bool Rational::is_one() const { return num_ == BigInt(1) && den_ == BigInt(1); }

Rational Rational::operator-() const {
    Rational r = *this;
    r.num_ = -r.num_;
    return r;
}

Rational operator+(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

Rational operator-(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

Rational operator*(const Rational& a, const Rational& b) {
    // Cross-reduce first to keep intermediate magnitudes down.
    BigInt g1 = BigInt::gcd(a.num_, b.den_);
    BigInt g2 = BigInt::gcd(b.num_, a.den_);
    Rational r;
    r.num_ = (a.num_ / g1) * (b.num_ / g2);
    r.den_ = (a.den_ / g2) * (b.den_ / g1);
    if (r.den_.is_negative()) {
        r.num_ = -r.num_;
        r.den_ = -r.den_;
    }
    if (r.num_.is_zero()) r.den_ = BigInt(1);
    return r;
}

Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero()) throw std::domain_error("Rational: division by zero");
    return a * b.inv();
}

Rational Rational::inv() const {
    if (is_zero()) throw std::domain_error("Rational: inverse of zero");
    Rational r;
    r.num_ = den_;
    r.den_ = num_;
    if (r.den_.is_negative()) {
        r.num_ = -r.num_;
        r.den_ = -r.den_;
    }
    return r;
}

Rational Rational::abs() const { return sign() < 0 ? -*this : *this; }

Rational Rational::pow(const Rational& base, int64_t exp) {
    if (exp < 0) return pow(base.inv(), -exp);
    Rational r(1), b = base;
    uint64_t e = static_cast<uint64_t>(exp);
    while (e) {
        if (e & 1) r *= b;
        e >>= 1;
        if (e) b *= b;
    }
    return r;
}

bool operator<(const Rational& a, const Rational& b) {
    return BigInt::cmp(a.num_ * b.den_, b.num_ * a.den_) < 0;
}

double Rational::to_double() const {
    if (is_zero()) return 0.0;
    size_t bn = num_.bit_length(), bd = den_.bit_length();
    if (bn < 900 && bd < 900) return num_.to_double() / den_.to_double();
    // Rescale so the quotient carries ~64 significant bits whatever the
    // size gap between numerator and denominator.
    long shift = static_cast<long>(bd) - static_cast<long>(bn) + 64;
    if (shift < 0) shift = 0;
    BigInt scaled = num_.shifted_left(static_cast<size_t>(shift)) / den_;
    return std::ldexp(scaled.to_double(), -static_cast<int>(shift));
}

std::string Rational::to_string() const {
    if (is_integer()) return num_.to_string();
    return num_.to_string() + "/" + den_.to_string();
}

Rational factorial_rat(int64_t n) {
    if (n < 0) throw std::domain_error("factorial of negative integer");
    BigInt r(1);
    for (int64_t i = 2; i <= n; ++i) r *= BigInt(i);
    return Rational(r, BigInt(1));
}

Rational binomial_rat(const Rational& z, int64_t k) {
    if (k < 0) return Rational(0);
    Rational prod(1);
    for (int64_t j = 0; j < k; ++j) prod *= (z - Rational(j));
    return prod / factorial_rat(k);
}

}  // namespace quartic
