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

#include "quartic/holonomic.hpp"

#include <random>
#include <stdexcept>

namespace quartic {

namespace {

const MultiPoly kOne(Rational(1));

MultiPoly sym_exponent_main() {
    // -(m+1)
    return -(MultiPoly::variable(Var::m) + kOne);
}

}  // namespace

namespace {

// The kernels here are palindromic with matching end coefficients (1 for the
// plain forms, u for the u-cleared reduced one); nonvanishing at x = 0 is
// the part the telescoping argument needs.
void check_kernel(const MultiPoly& q) {
    if (q.substitute(Var::x, Rational(0)).is_zero())
        throw std::invalid_argument("integrand kernel must not vanish at x = 0");
}

}  // namespace

CertifiedIntegrand CertifiedIntegrand::plain(MultiPoly q) {
    check_kernel(q);
    return {std::move(q), sym_exponent_main(), MultiPoly(Rational(0))};
}

CertifiedIntegrand CertifiedIntegrand::reduced(MultiPoly q) {
    check_kernel(q);
    return {std::move(q), sym_exponent_main(),
            MultiPoly::variable(Var::u) - kOne};
}

CertifiedIntegrand CertifiedIntegrand::instantiated(int m, const Rational& u) const {
    CertifiedIntegrand g;
    g.kernel = kernel.substitute(Var::m, Rational(m)).substitute(Var::u, u);
    g.exponent_main = exponent_main.substitute(Var::m, Rational(m)).substitute(Var::u, u);
    g.exponent_x = exponent_x.substitute(Var::m, Rational(m)).substitute(Var::u, u);
    return g;
}

DiffOp::DiffOp(std::vector<MultiPoly> coeffs) : coeffs_(std::move(coeffs)) {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
    for (const auto& p : coeffs_)
        if (p.depends_on(Var::x))
            throw std::invalid_argument("operator coefficients must not involve x");
}

DiffOp DiffOp::instantiated(int m, const Rational& u) const {
    std::vector<MultiPoly> c;
    c.reserve(coeffs_.size());
    for (const auto& p : coeffs_)
        c.push_back(p.substitute(Var::m, Rational(m)).substitute(Var::u, u));
    return DiffOp(std::move(c));
}

DiffOp operator+(const DiffOp& a, const DiffOp& b) {
    std::vector<MultiPoly> c(std::max(a.coeffs_.size(), b.coeffs_.size()),
                             MultiPoly(Rational(0)));
    for (size_t i = 0; i < a.coeffs_.size(); ++i) c[i] += a.coeffs_[i];
    for (size_t i = 0; i < b.coeffs_.size(); ++i) c[i] += b.coeffs_[i];
    return DiffOp(std::move(c));
}

DiffOp DiffOp::scaled(const Rational& c) const {
    std::vector<MultiPoly> out;
    out.reserve(coeffs_.size());
    for (const auto& p : coeffs_) out.push_back(p.scaled(c));
    return DiffOp(std::move(out));
}

std::string DiffOp::to_string(const VarNames& names) const {
    if (coeffs_.empty()) return "0";
    std::string out;
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i].is_zero()) continue;
        if (!out.empty()) out += " + ";
        out += "(" + coeffs_[i].to_string(names) + ")";
        if (i == 1) out += "*D_a";
        if (i > 1) out += "*D_a^" + std::to_string(i);
    }
    return out.empty() ? "0" : out;
}

Certificate make_certificate(RatFunc r, const CertifiedIntegrand& f) {
    Certificate c{std::move(r), false};
    // Divisibility of the denominator into Q^j * x^k, by exact expansion.
    const MultiPoly& den = c.r.den();
    MultiPoly qpow(Rational(1));
    for (int j = 0; j <= 4 && !c.denominator_compatible; ++j) {
        MultiPoly probe = qpow;
        for (int k = 0; k <= 6 && !c.denominator_compatible; ++k) {
            if (probe.divided_exactly_by(den)) c.denominator_compatible = true;
            probe *= MultiPoly::variable(Var::x);
        }
        qpow *= f.kernel;
    }
    return c;
}

std::vector<RatFunc> logderiv_tower(const CertifiedIntegrand& f, Var var, int order) {
    if (order < 0) throw std::invalid_argument("logderiv_tower: negative order");
    if (var != Var::x && var != Var::a)
        throw std::domain_error("logderiv_tower: tower only in x or a");

    const MultiPoly& q = f.kernel;
    const MultiPoly dq = q.diff(var);
    const bool x_factor = (var == Var::x) && f.has_x_factor();
    const MultiPoly xv = MultiPoly::variable(Var::x);

    // G_i = N_i / (Q^i * x^i)   (the x power only in the reduced x-tower)
    std::vector<RatFunc> tower;
    tower.reserve(static_cast<size_t>(order) + 1);
    MultiPoly num(Rational(1));
    MultiPoly den_pow(Rational(1));
    tower.emplace_back(num, den_pow);
    for (int i = 0; i < order; ++i) {
        MultiPoly next;
        if (x_factor) {
            next = xv * q * num.diff(var) -
                   (num * (xv * dq + q)).scaled(Rational(i)) +
                   num * (f.exponent_x * q + f.exponent_main * xv * dq);
        } else {
            next = q * num.diff(var) +
                   num * dq * (f.exponent_main - MultiPoly(Rational(i)));
        }
        num = next;
        den_pow *= x_factor ? q * xv : q;
        tower.emplace_back(num, den_pow);
    }
    return tower;
}

RatFunc telescoping_residual(const DiffOp& op, const Certificate& cert,
                             const CertifiedIntegrand& f) {
    RatFunc lhs;
    if (!op.is_zero()) {
        auto ga = logderiv_tower(f, Var::a, op.order());
        for (int i = 0; i <= op.order(); ++i)
            lhs += RatFunc(op.coeff(i)) * ga[static_cast<size_t>(i)];
    }
    RatFunc lambda_x = logderiv_tower(f, Var::x, 1)[1];
    RatFunc rhs = cert.r.diff(Var::x) + cert.r * lambda_x;
    return lhs - rhs;
}

namespace {

// Rational spot-check points with numerators and denominators below 1e4,
// from a raw mt19937_64 stream so the sequence is identical everywhere.
Rational draw_rational(std::mt19937_64& gen) {
    int64_t num = static_cast<int64_t>(gen() % 19999u) - 9999;
    int64_t den = 1 + static_cast<int64_t>(gen() % 9999u);
    return Rational(num, den);
}

}  // namespace

VerificationReport verify_certificate(const DiffOp& op, const Certificate& cert,
                                      const CertifiedIntegrand& f, uint64_t seed,
                                      const VarNames& names) {
    VerificationReport rep;
    RatFunc residual = telescoping_residual(op, cert, f);
    rep.verified = residual.is_zero();
    rep.denominator_compatible = cert.denominator_compatible;
    rep.residual_text = residual.to_string(names);

    std::mt19937_64 gen(seed);
    int attempts = 0;
    while (rep.spot_checks.size() < 5 && attempts < 200) {
        ++attempts;
        std::array<Rational, kNumVars> pt{draw_rational(gen), draw_rational(gen),
                                          draw_rational(gen), draw_rational(gen)};
        std::array<std::optional<Rational>, kNumVars> assign;
        for (int i = 0; i < kNumVars; ++i) assign[static_cast<size_t>(i)] = pt[static_cast<size_t>(i)];
        try {
            Rational v = residual.eval(assign);
            rep.spot_checks.push_back({pt, v, v.is_zero()});
        } catch (const DenominatorVanishes&) {
            continue;  // retry with the next draw
        }
    }
    return rep;
}

}  // namespace quartic
