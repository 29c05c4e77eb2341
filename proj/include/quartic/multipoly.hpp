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
#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include "quartic/rational.hpp"

namespace quartic {

/// The fixed variable universe. Slot 0 doubles as the integration variable
/// (x or z) in symbolic work and as the recurrence index l in recurrences;
/// printing takes a name table so both read naturally.
enum class Var : int { x = 0, a = 1, m = 2, u = 3 };

constexpr int kNumVars = 4;

/// Rendering style: the display name per slot, plus the order in which a
/// term's variables are written (parameters before the main variable for
/// symbolic work, the index first for recurrences).
struct VarNames {
    std::array<const char*, kNumVars> names;
    std::array<int, kNumVars> print_order;
};
inline constexpr VarNames kSymbolNames = {{"x", "a", "m", "u"}, {1, 2, 3, 0}};
inline constexpr VarNames kReducedNames = {{"z", "a", "m", "u"}, {1, 2, 3, 0}};
inline constexpr VarNames kRecurrenceNames = {{"l", "a", "m", "u"}, {0, 1, 2, 3}};

struct ExpVec {
    std::array<uint16_t, kNumVars> e{0, 0, 0, 0};
    friend bool operator==(const ExpVec& a, const ExpVec& b) { return a.e == b.e; }
};

/// Canonical term order: lexicographic descending on (x, a, m, u) exponents,
/// so x^4 > a*x^2 > 1 and printing is reproducible.
struct ExpLexGreater {
    bool operator()(const ExpVec& a, const ExpVec& b) const {
        for (int i = 0; i < kNumVars; ++i)
            if (a.e[i] != b.e[i]) return a.e[i] > b.e[i];
        return false;
    }
};

/// Sparse multivariate polynomial over Q in (x, a, m, u).
/// Invariant: the term map holds no zero coefficients.
class MultiPoly {
public:
    using TermMap = std::map<ExpVec, Rational, ExpLexGreater>;

    MultiPoly() = default;
    explicit MultiPoly(const Rational& c);
    explicit MultiPoly(int64_t c) : MultiPoly(Rational(c)) {}
    static MultiPoly variable(Var v, int power = 1);
    static MultiPoly monomial(const Rational& coeff, const ExpVec& exp);

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    /// Constant term (zero if absent).
    Rational constant_term() const;
    const TermMap& terms() const { return terms_; }
    size_t term_count() const { return terms_.size(); }

    friend MultiPoly operator+(const MultiPoly& p, const MultiPoly& q);
    friend MultiPoly operator-(const MultiPoly& p, const MultiPoly& q);
    friend MultiPoly operator*(const MultiPoly& p, const MultiPoly& q);
    MultiPoly operator-() const;
    MultiPoly& operator+=(const MultiPoly& o) { *this = *this + o; return *this; }
    MultiPoly& operator-=(const MultiPoly& o) { *this = *this - o; return *this; }
    MultiPoly& operator*=(const MultiPoly& o) { *this = *this * o; return *this; }
    MultiPoly scaled(const Rational& c) const;
    static MultiPoly pow(const MultiPoly& base, unsigned exp);

    friend bool operator==(const MultiPoly& p, const MultiPoly& q) {
        return p.terms_ == q.terms_;
    }
    friend bool operator!=(const MultiPoly& p, const MultiPoly& q) { return !(p == q); }

    /// Formal partial derivative. Only x and a are analytic variables;
    /// m and u are parameters and differentiation by them is rejected.
    MultiPoly diff(Var v) const;

    int degree(Var v) const;
    bool depends_on(Var v) const;

    /// Substitute an exact rational value for one variable.
    MultiPoly substitute(Var v, const Rational& value) const;
    /// Substitute v := v + delta (used to shift recurrence indices).
    MultiPoly substitute_shift(Var v, const Rational& delta) const;
    /// Full evaluation; every variable present must be assigned.
    Rational eval(const std::array<std::optional<Rational>, kNumVars>& point) const;

    /// Exact division attempt. Returns the quotient iff d divides *this
    /// exactly; single-divisor long division in the canonical term order.
    std::optional<MultiPoly> divided_exactly_by(const MultiPoly& d) const;

    /// Canonical rendering: terms in canonical order with explicit signs,
    /// e.g. "x^4 + 2*a*x^2 + 1".
    std::string to_string(const VarNames& names = kSymbolNames) const;

private:
    TermMap terms_;
    void add_term(const ExpVec& exp, const Rational& coeff);
};

}  // namespace quartic
