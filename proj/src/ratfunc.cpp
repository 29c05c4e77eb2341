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

#include "quartic/ratfunc.hpp"

#include <stdexcept>

namespace quartic {

RatFunc::RatFunc(MultiPoly num, MultiPoly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::domain_error("RatFunc: zero denominator polynomial");
    if (num_.is_zero()) den_ = MultiPoly(Rational(1));
}

bool RatFunc::equal(const RatFunc& f, const RatFunc& g) {
    return (f.num_ * g.den_ - g.num_ * f.den_).is_zero();
}

RatFunc operator+(const RatFunc& f, const RatFunc& g) {
    if (f.den_ == g.den_) return RatFunc(f.num_ + g.num_, f.den_);
    return RatFunc(f.num_ * g.den_ + g.num_ * f.den_, f.den_ * g.den_);
}

RatFunc operator-(const RatFunc& f, const RatFunc& g) {
    if (f.den_ == g.den_) return RatFunc(f.num_ - g.num_, f.den_);
    return RatFunc(f.num_ * g.den_ - g.num_ * f.den_, f.den_ * g.den_);
}

RatFunc operator*(const RatFunc& f, const RatFunc& g) {
    return RatFunc(f.num_ * g.num_, f.den_ * g.den_);
}

RatFunc operator/(const RatFunc& f, const RatFunc& g) {
    if (g.is_zero()) throw std::domain_error("RatFunc: division by zero function");
    return RatFunc(f.num_ * g.den_, f.den_ * g.num_);
}

RatFunc RatFunc::operator-() const {
    RatFunc r = *this;
    r.num_ = -r.num_;
    return r;
}

RatFunc RatFunc::diff(Var v) const {
    return RatFunc(num_.diff(v) * den_ - num_ * den_.diff(v), den_ * den_);
}

RatFunc RatFunc::substitute(Var v, const Rational& value) const {
    MultiPoly d = den_.substitute(v, value);
    if (d.is_zero()) throw DenominatorVanishes();
    return RatFunc(num_.substitute(v, value), d);
}

Rational RatFunc::eval(const std::array<std::optional<Rational>, kNumVars>& point) const {
    Rational d = den_.eval(point);
    if (d.is_zero()) throw DenominatorVanishes();
    return num_.eval(point) / d;
}

std::string RatFunc::to_string(const VarNames& names) const {
    if (den_ == MultiPoly(Rational(1))) return num_.to_string(names);
    return "(" + num_.to_string(names) + ") / (" + den_.to_string(names) + ")";
}

}  // namespace quartic
