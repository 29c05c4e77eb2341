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

#include "quartic/recurrence.hpp"

#include <stdexcept>

namespace quartic {

std::string Recurrence::to_string() const {
    std::string out;
    for (const auto& [offset, poly] : offsets) {
        if (!out.empty()) out += " + ";
        out += "(" + poly.to_string(kRecurrenceNames) + ")*c[l";
        if (offset > 0) out += "+" + std::to_string(offset);
        if (offset < 0) out += std::to_string(offset);
        out += "]";
    }
    out += " = 0";
    if (valid_from > 0) out += "  (l >= " + std::to_string(valid_from) + ")";
    return out;
}

Recurrence ode_to_recurrence(const DiffOp& op) {
    if (op.is_zero()) throw std::invalid_argument("ode_to_recurrence: zero operator");
    // Raw contributions keyed by offset i-j; the index variable l sits in
    // slot 0, which operator coefficients never use.
    std::map<int, MultiPoly> raw;
    const MultiPoly l = MultiPoly::variable(Var::x);
    for (int i = 0; i <= op.order(); ++i) {
        for (const auto& [e, coeff] : op.coeff(i).terms()) {
            int j = e.e[static_cast<int>(Var::a)];
            ExpVec params = e;
            params.e[static_cast<int>(Var::a)] = 0;
            MultiPoly contrib = MultiPoly::monomial(coeff, params);
            // falling product (l+i-j)(l+i-j-1)...(l-j+1)
            for (int s = 1; s <= i; ++s)
                contrib *= l + MultiPoly(Rational(s - j));
            auto [it, inserted] = raw.emplace(i - j, contrib);
            if (!inserted) it->second += contrib;
        }
    }
    for (auto it = raw.begin(); it != raw.end();)
        it = it->second.is_zero() ? raw.erase(it) : std::next(it);
    if (raw.empty()) throw std::invalid_argument("ode_to_recurrence: empty translation");

    Recurrence rec;
    int k0 = raw.begin()->first;
    if (k0 >= 0) {
        // Shift the index so the smallest offset is 0; the equation at the
        // new index l is the raw equation at l - k0, valid once l >= k0.
        for (const auto& [k, poly] : raw)
            rec.offsets.emplace(k - k0, poly.substitute_shift(Var::x, Rational(-k0)));
        rec.valid_from = k0;
    } else {
        // Offsets already reach below zero: keep the raw indexing, valid
        // from 0 with out-of-range coefficients read as zero.
        rec.offsets = std::move(raw);
        rec.valid_from = 0;
    }
    return rec;
}

CoefficientStream unroll(const Recurrence& rec, int m, const Rational& u, int count) {
    if (m < 0) throw std::domain_error("unroll: m must be >= 0");
    if (!(Rational(0) < u) || Rational(1) < u)
        throw std::domain_error("unroll: u must be in (0, 1]");
    if (rec.max_offset() != 2 || rec.valid_from != 0 || rec.offsets.begin()->first < 0)
        throw std::domain_error("unroll: expected an unshifted stride recurrence with top offset 2");

    // Specialize coefficients to univariate polynomials in l.
    std::map<int, MultiPoly> c;
    for (const auto& [k, poly] : rec.offsets)
        c.emplace(k, poly.substitute(Var::m, Rational(m)).substitute(Var::u, u));

    CoefficientStream out;
    out.q.reserve(static_cast<size_t>(std::max(count, 0)));
    for (int l = 0; l < count && l < 2; ++l) out.q.emplace_back(1);
    std::array<std::optional<Rational>, kNumVars> pt;
    for (int t = 0; t + 2 < count; ++t) {
        pt[static_cast<size_t>(Var::x)] = Rational(t);
        Rational lead = c.at(2).eval(pt);
        if (lead.is_zero()) throw LeadingCoefficientVanishes(t);
        Rational acc(0);
        for (const auto& [k, poly] : c) {
            if (k == 2) continue;
            acc += poly.eval(pt) * out.q[static_cast<size_t>(t + k)];
        }
        out.q.push_back(-acc / lead);
    }
    return out;
}

}  // namespace quartic
