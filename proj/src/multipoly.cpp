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

#include "quartic/multipoly.hpp"

#include <stdexcept>

namespace quartic {

MultiPoly::MultiPoly(const Rational& c) {
    if (!c.is_zero()) terms_.emplace(ExpVec{}, c);
}

MultiPoly MultiPoly::variable(Var v, int power) {
    if (power < 0) throw std::invalid_argument("MultiPoly: negative exponent");
    if (power == 0) return MultiPoly(Rational(1));
    ExpVec e;
    e.e[static_cast<int>(v)] = static_cast<uint16_t>(power);
    MultiPoly p;
    p.terms_.emplace(e, Rational(1));
    return p;
}

MultiPoly MultiPoly::monomial(const Rational& coeff, const ExpVec& exp) {
    MultiPoly p;
    if (!coeff.is_zero()) p.terms_.emplace(exp, coeff);
    return p;
}

bool MultiPoly::is_constant() const {
    if (terms_.empty()) return true;
    return terms_.size() == 1 && terms_.begin()->first == ExpVec{};
}

Rational MultiPoly::constant_term() const {
    auto it = terms_.find(ExpVec{});
    return it == terms_.end() ? Rational(0) : it->second;
}

void MultiPoly::add_term(const ExpVec& exp, const Rational& coeff) {
    if (coeff.is_zero()) return;
    auto [it, inserted] = terms_.emplace(exp, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

MultiPoly operator+(const MultiPoly& p, const MultiPoly& q) {
    MultiPoly r = p;
    for (const auto& [e, c] : q.terms_) r.add_term(e, c);
    return r;
}

MultiPoly operator-(const MultiPoly& p, const MultiPoly& q) {
    MultiPoly r = p;
    for (const auto& [e, c] : q.terms_) r.add_term(e, -c);
    return r;
}

MultiPoly operator*(const MultiPoly& p, const MultiPoly& q) {
    MultiPoly r;
    for (const auto& [ep, cp] : p.terms_) {
        for (const auto& [eq, cq] : q.terms_) {
            ExpVec e;
            for (int i = 0; i < kNumVars; ++i) {
                uint32_t s = static_cast<uint32_t>(ep.e[i]) + eq.e[i];
                if (s > 0xffff) throw std::overflow_error("MultiPoly: exponent overflow");
                e.e[i] = static_cast<uint16_t>(s);
            }
            r.add_term(e, cp * cq);
        }
    }
    return r;
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly r;
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

MultiPoly MultiPoly::scaled(const Rational& c) const {
    MultiPoly r;
    if (c.is_zero()) return r;
    for (const auto& [e, coeff] : terms_) r.terms_.emplace(e, coeff * c);
    return r;
}

MultiPoly MultiPoly::pow(const MultiPoly& base, unsigned exp) {
    MultiPoly r(Rational(1)), b = base;
    while (exp) {
        if (exp & 1) r *= b;
        exp >>= 1;
        if (exp) b *= b;
    }
    return r;
}

MultiPoly MultiPoly::diff(Var v) const {
    if (v != Var::x && v != Var::a)
        throw std::domain_error("MultiPoly: differentiation only in x or a");
    int iv = static_cast<int>(v);
    MultiPoly r;
    for (const auto& [e, c] : terms_) {
        if (e.e[iv] == 0) continue;
        ExpVec d = e;
        d.e[iv] -= 1;
        r.add_term(d, c * Rational(static_cast<int64_t>(e.e[iv])));
    }
    return r;
}

int MultiPoly::degree(Var v) const {
    int iv = static_cast<int>(v), d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, static_cast<int>(e.e[iv]));
    return d;  // -1 for the zero polynomial
}

bool MultiPoly::depends_on(Var v) const {
    int iv = static_cast<int>(v);
    for (const auto& [e, c] : terms_)
        if (e.e[iv] != 0) return true;
    return false;
}

MultiPoly MultiPoly::substitute(Var v, const Rational& value) const {
    int iv = static_cast<int>(v);
    MultiPoly r;
    for (const auto& [e, c] : terms_) {
        ExpVec d = e;
        d.e[iv] = 0;
        r.add_term(d, c * Rational::pow(value, e.e[iv]));
    }
    return r;
}

MultiPoly MultiPoly::substitute_shift(Var v, const Rational& delta) const {
    int iv = static_cast<int>(v);
    MultiPoly r;
    for (const auto& [e, c] : terms_) {
        // (v + delta)^k expanded by the binomial theorem.
        MultiPoly term = MultiPoly::monomial(c, [&] {
            ExpVec d = e;
            d.e[iv] = 0;
            return d;
        }());
        MultiPoly shifted(Rational(0));
        int k = e.e[iv];
        for (int j = 0; j <= k; ++j) {
            Rational coeff = binomial_rat(Rational(k), j) * Rational::pow(delta, k - j);
            shifted += MultiPoly::variable(v, j).scaled(coeff);
        }
        if (k == 0) shifted = MultiPoly(Rational(1));
        r += term * shifted;
    }
    return r;
}

Rational MultiPoly::eval(const std::array<std::optional<Rational>, kNumVars>& point) const {
    Rational acc(0);
    for (const auto& [e, c] : terms_) {
        Rational t = c;
        for (int i = 0; i < kNumVars; ++i) {
            if (e.e[i] == 0) continue;
            if (!point[i])
                throw std::invalid_argument("MultiPoly: unassigned variable in eval");
            t *= Rational::pow(*point[i], e.e[i]);
        }
        acc += t;
    }
    return acc;
}

std::optional<MultiPoly> MultiPoly::divided_exactly_by(const MultiPoly& d) const {
    if (d.is_zero()) throw std::domain_error("MultiPoly: division by zero polynomial");
    MultiPoly rem = *this, quo;
    const auto& [dlead_e, dlead_c] = *d.terms_.begin();
    while (!rem.is_zero()) {
        const auto& [rlead_e, rlead_c] = *rem.terms_.begin();
        ExpVec q;
        for (int i = 0; i < kNumVars; ++i) {
            if (rlead_e.e[i] < dlead_e.e[i]) return std::nullopt;
            q.e[i] = static_cast<uint16_t>(rlead_e.e[i] - dlead_e.e[i]);
        }
        MultiPoly qt = MultiPoly::monomial(rlead_c / dlead_c, q);
        quo += qt;
        rem -= qt * d;
    }
    return quo;
}

std::string MultiPoly::to_string(const VarNames& names) const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        Rational mag = c.abs();
        out += first ? (c.sign() < 0 ? "-" : "") : (c.sign() < 0 ? " - " : " + ");
        std::string vars;
        for (int k = 0; k < kNumVars; ++k) {
            int i = names.print_order[k];
            if (e.e[i] == 0) continue;
            if (!vars.empty()) vars += "*";
            vars += names.names[i];
            if (e.e[i] > 1) vars += "^" + std::to_string(e.e[i]);
        }
        if (vars.empty()) {
            out += mag.to_string();
        } else if (mag.is_one()) {
            out += vars;
        } else {
            out += mag.to_string() + "*" + vars;
        }
        first = false;
    }
    return out;
}

}  // namespace quartic
