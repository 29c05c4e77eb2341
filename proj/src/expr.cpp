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

#include "quartic/expr.hpp"

#include <cctype>
#include <stdexcept>

namespace quartic {

namespace {

using DKind = ParsedExpr::DKind;

[[noreturn]] void fail(std::string_view src, size_t pos, const std::string& what) {
    throw std::invalid_argument("expression error at offset " + std::to_string(pos) + ": " +
                                what + " in \"" + std::string(src) + "\"");
}

DKind join_kind(std::string_view src, size_t pos, DKind a, DKind b) {
    if (a == DKind::none) return b;
    if (b == DKind::none || a == b) return a;
    fail(src, pos, "mixing D_a and D_x in one expression");
}

struct Parser {
    std::string_view src;
    size_t pos = 0;

    void skip_ws() {
        while (pos < src.size() && std::isspace(static_cast<unsigned char>(src[pos]))) ++pos;
    }

    bool peek(char c) {
        skip_ws();
        return pos < src.size() && src[pos] == c;
    }

    bool consume(char c) {
        if (!peek(c)) return false;
        ++pos;
        return true;
    }

    ParsedExpr parse() {
        ParsedExpr e = parse_expr();
        skip_ws();
        if (pos != src.size()) fail(src, pos, "trailing input");
        return e;
    }

    ParsedExpr parse_expr() {
        ParsedExpr acc = parse_term();
        for (;;) {
            if (consume('+')) {
                add_into(acc, parse_term(), Rational(1));
            } else if (consume('-')) {
                add_into(acc, parse_term(), Rational(-1));
            } else {
                return acc;
            }
        }
    }

    ParsedExpr parse_term() {
        ParsedExpr acc = parse_unary();
        for (;;) {
            if (consume('*')) {
                acc = multiply(acc, parse_unary());
            } else if (consume('/')) {
                acc = divide(acc, parse_unary());
            } else {
                return acc;
            }
        }
    }

    ParsedExpr parse_unary() {
        if (consume('-')) {
            ParsedExpr e = parse_unary();
            for (auto& [d, c] : e.coeffs) c = -c;
            return e;
        }
        return parse_power();
    }

    ParsedExpr parse_power() {
        ParsedExpr base = parse_atom();
        if (!consume('^')) return base;
        skip_ws();
        size_t start = pos;
        while (pos < src.size() && std::isdigit(static_cast<unsigned char>(src[pos]))) ++pos;
        if (pos == start) fail(src, pos, "expected a nonnegative integer exponent");
        int exp = std::stoi(std::string(src.substr(start, pos - start)));
        ParsedExpr acc = constant(Rational(1));
        for (int i = 0; i < exp; ++i) acc = multiply(acc, base);
        return acc;
    }

    ParsedExpr parse_atom() {
        skip_ws();
        if (pos >= src.size()) fail(src, pos, "unexpected end of input");
        char c = src[pos];
        if (c == '(') {
            ++pos;
            ParsedExpr e = parse_expr();
            if (!consume(')')) fail(src, pos, "expected ')'");
            return e;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            size_t start = pos;
            while (pos < src.size() && std::isdigit(static_cast<unsigned char>(src[pos]))) ++pos;
            return constant(Rational(BigInt::from_string(src.substr(start, pos - start)),
                                     BigInt(1)));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            size_t start = pos;
            while (pos < src.size() &&
                   (std::isalnum(static_cast<unsigned char>(src[pos])) || src[pos] == '_'))
                ++pos;
            std::string_view name = src.substr(start, pos - start);
            if (name == "D_a") return d_symbol(DKind::d_a);
            if (name == "D_x" || name == "D_z") return d_symbol(DKind::d_x);
            if (name == "x" || name == "z") return var(Var::x);
            if (name == "a") return var(Var::a);
            if (name == "m") return var(Var::m);
            if (name == "u") return var(Var::u);
            fail(src, start, "unknown symbol \"" + std::string(name) + "\"");
        }
        fail(src, pos, "unexpected character");
    }

    static ParsedExpr constant(const Rational& c) {
        ParsedExpr e;
        e.coeffs.emplace(0, RatFunc(c));
        return e;
    }

    static ParsedExpr var(Var v) {
        ParsedExpr e;
        e.coeffs.emplace(0, RatFunc(MultiPoly::variable(v)));
        return e;
    }

    static ParsedExpr d_symbol(DKind k) {
        ParsedExpr e;
        e.kind = k;
        e.coeffs.emplace(1, RatFunc(Rational(1)));
        return e;
    }

    void add_into(ParsedExpr& acc, const ParsedExpr& rhs, const Rational& sign) {
        acc.kind = join_kind(src, pos, acc.kind, rhs.kind);
        for (const auto& [d, c] : rhs.coeffs) {
            auto [it, inserted] = acc.coeffs.emplace(d, c * RatFunc(sign));
            if (!inserted) it->second += c * RatFunc(sign);
        }
        prune(acc);
    }

    ParsedExpr multiply(const ParsedExpr& a, const ParsedExpr& b) {
        ParsedExpr r;
        r.kind = join_kind(src, pos, a.kind, b.kind);
        for (const auto& [da, ca] : a.coeffs) {
            for (const auto& [db, cb] : b.coeffs) {
                auto [it, inserted] = r.coeffs.emplace(da + db, ca * cb);
                if (!inserted) it->second += ca * cb;
            }
        }
        prune(r);
        return r;
    }

    ParsedExpr divide(const ParsedExpr& a, const ParsedExpr& b) {
        if (b.coeffs.size() != 1 || b.coeffs.begin()->first != 0)
            fail(src, pos, "division by an operator expression");
        const RatFunc& divisor = b.coeffs.begin()->second;
        if (divisor.is_zero()) fail(src, pos, "division by zero");
        ParsedExpr r = a;
        for (auto& [d, c] : r.coeffs) c = c / divisor;
        r.kind = join_kind(src, pos, a.kind, b.kind);
        return r;
    }

    static void prune(ParsedExpr& e) {
        for (auto it = e.coeffs.begin(); it != e.coeffs.end();)
            it = it->second.is_zero() ? e.coeffs.erase(it) : std::next(it);
    }
};

}  // namespace

ParsedExpr parse_expression(std::string_view src) {
    Parser p{src};
    return p.parse();
}

RatFunc parse_ratfunc(std::string_view src) {
    ParsedExpr e = parse_expression(src);
    if (e.kind != DKind::none)
        throw std::invalid_argument("expected a plain rational expression, found an operator: " +
                                    std::string(src));
    if (e.coeffs.empty()) return RatFunc(Rational(0));
    return e.coeffs.begin()->second;
}

MultiPoly parse_poly(std::string_view src) {
    RatFunc f = parse_ratfunc(src);
    if (!f.den().is_constant())
        throw std::invalid_argument("expected a polynomial, found a nonconstant denominator: " +
                                    std::string(src));
    return f.num().scaled(f.den().constant_term().inv());
}

DiffOp parse_diffop(std::string_view src) {
    ParsedExpr e = parse_expression(src);
    if (e.kind == DKind::d_x)
        throw std::invalid_argument("operators act through D_a; D_x is not allowed here: " +
                                    std::string(src));
    int order = e.coeffs.empty() ? -1 : e.coeffs.rbegin()->first;
    std::vector<MultiPoly> coeffs(static_cast<size_t>(order + 1), MultiPoly(Rational(0)));
    for (const auto& [d, c] : e.coeffs) {
        if (!c.den().is_constant())
            throw std::invalid_argument(
                "operator coefficients must be polynomial: " + std::string(src));
        coeffs[static_cast<size_t>(d)] = c.num().scaled(c.den().constant_term().inv());
    }
    return DiffOp(std::move(coeffs));
}

}  // namespace quartic
