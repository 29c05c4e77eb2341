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

#include <string>
#include <string_view>

#include "quartic/bigint.hpp"

namespace quartic {

/// Exact rational number, always in lowest terms with positive denominator.
/// The canonical zero is 0/1.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(int64_t v) : num_(v), den_(1) {}
    Rational(int64_t num, int64_t den) : Rational(BigInt(num), BigInt(den)) {}
    Rational(BigInt num, BigInt den);

    /// Exact conversion: every finite double is a dyadic rational.
    static Rational from_double(double v);
    /// Accepts "p", "-p", "p/q".
    static Rational from_string(std::string_view s);

    const BigInt& num() const { return num_; }
    const BigInt& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const;
    bool is_integer() const { return den_ == BigInt(1); }
    int sign() const { return num_.sign(); }

    Rational operator-() const;
    friend Rational operator+(const Rational& a, const Rational& b);
    friend Rational operator-(const Rational& a, const Rational& b);
    friend Rational operator*(const Rational& a, const Rational& b);
    friend Rational operator/(const Rational& a, const Rational& b);
    Rational& operator+=(const Rational& o) { *this = *this + o; return *this; }
    Rational& operator-=(const Rational& o) { *this = *this - o; return *this; }
    Rational& operator*=(const Rational& o) { *this = *this * o; return *this; }
    Rational& operator/=(const Rational& o) { *this = *this / o; return *this; }

    Rational inv() const;
    Rational abs() const;
    static Rational pow(const Rational& base, int64_t exp);

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b);
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
    friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

    double to_double() const;
    /// "p" for integers, "p/q" otherwise.
    std::string to_string() const;

private:
    BigInt num_;
    BigInt den_;  // > 0
    void normalize();
};

/// Exact factorial, n >= 0.
Rational factorial_rat(int64_t n);

/// Exact binomial coefficient with rational upper argument:
/// C(z, k) = z(z-1)...(z-k+1)/k!, zero for k < 0.
Rational binomial_rat(const Rational& z, int64_t k);

}  // namespace quartic
