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

#include <array>
#include <optional>
#include <stdexcept>
#include <string>

#include "quartic/multipoly.hpp"

namespace quartic {

/// Rational function num/den over Q(x, a, m, u). No gcd normalization is
/// performed anywhere: arithmetic cross-multiplies, and zero / equality
/// questions are decided by expanding numerators. That keeps the whole
/// decision procedure inside exact polynomial arithmetic.
class RatFunc {
public:
    RatFunc() : num_(Rational(0)), den_(Rational(1)) {}
    explicit RatFunc(const Rational& c) : num_(c), den_(Rational(1)) {}
    explicit RatFunc(const MultiPoly& p) : num_(p), den_(Rational(1)) {}
    RatFunc(MultiPoly num, MultiPoly den);

    const MultiPoly& num() const { return num_; }
    const MultiPoly& den() const { return den_; }

    /// f == 0 iff the numerator expands to the zero polynomial.
    bool is_zero() const { return num_.is_zero(); }
    /// f == g decided by expanding f.num*g.den - g.num*f.den.
    static bool equal(const RatFunc& f, const RatFunc& g);

    friend RatFunc operator+(const RatFunc& f, const RatFunc& g);
    friend RatFunc operator-(const RatFunc& f, const RatFunc& g);
    friend RatFunc operator*(const RatFunc& f, const RatFunc& g);
    friend RatFunc operator/(const RatFunc& f, const RatFunc& g);
    RatFunc operator-() const;
    RatFunc& operator+=(const RatFunc& o) { *this = *this + o; return *this; }
    RatFunc& operator-=(const RatFunc& o) { *this = *this - o; return *this; }
    RatFunc& operator*=(const RatFunc& o) { *this = *this * o; return *this; }

    /// Quotient-rule derivative, v in {x, a}.
    RatFunc diff(Var v) const;

    RatFunc substitute(Var v, const Rational& value) const;

    /// Exact evaluation at a rational point. Throws denominator_vanishes
    /// (std::domain_error) when the denominator is zero there.
    Rational eval(const std::array<std::optional<Rational>, kNumVars>& point) const;

    std::string to_string(const VarNames& names = kSymbolNames) const;

private:
    MultiPoly num_;
    MultiPoly den_;  // never the zero polynomial
};

struct DenominatorVanishes : std::domain_error {
    DenominatorVanishes() : std::domain_error("denominator vanishes at the point") {}
};

}  // namespace quartic
