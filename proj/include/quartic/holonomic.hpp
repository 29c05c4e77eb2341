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

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "quartic/ratfunc.hpp"

namespace quartic {

/// Symbolic description of the integrand F = Q(x,a)^exponent_main *
/// x^exponent_x. F itself is never materialized; everything downstream
/// works with logarithmic derivatives, so the fractional powers only ever
/// enter linearly through the two exponent polynomials.
struct CertifiedIntegrand {
    MultiPoly kernel;         // Q, polynomial in (x, a) and possibly u
    MultiPoly exponent_main;  // -(m+1) in the symbolic case
    MultiPoly exponent_x;     // u-1 for the reduced form, 0 for the plain form

    /// Plain form: Q^-(m+1), no x factor.
    static CertifiedIntegrand plain(MultiPoly q);
    /// Reduced form: Q^-(m+1) * x^(u-1).
    static CertifiedIntegrand reduced(MultiPoly q);

    bool has_x_factor() const { return !exponent_x.is_zero(); }
    /// Fix m to an integer and u to an exact rational.
    CertifiedIntegrand instantiated(int m, const Rational& u) const;
};

/// Differential operator sum_i p_i(a, m, u) * D_a^i. The zero operator is
/// allowed (empty coefficient list); otherwise the top coefficient is
/// nonzero and no coefficient involves x.
class DiffOp {
public:
    DiffOp() = default;
    explicit DiffOp(std::vector<MultiPoly> coeffs);

    int order() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    const MultiPoly& coeff(int i) const { return coeffs_[static_cast<size_t>(i)]; }
    const std::vector<MultiPoly>& coeffs() const { return coeffs_; }

    DiffOp instantiated(int m, const Rational& u) const;
    friend DiffOp operator+(const DiffOp& a, const DiffOp& b);
    DiffOp scaled(const Rational& c) const;

    std::string to_string(const VarNames& names = kSymbolNames) const;

private:
    std::vector<MultiPoly> coeffs_;
};

/// Telescoping certificate R(x, a, m, u). Whether the denominator divides
/// a power of Q times a power of x is decided at construction by exact
/// expansion and carried along; mismatched certificates (the printed
/// theorem-3 one) must still be constructible so their residual can be
/// computed and reported.
struct Certificate {
    RatFunc r;
    bool denominator_compatible = false;
};

Certificate make_certificate(RatFunc r, const CertifiedIntegrand& f);

/// Logarithmic-derivative tower: G_0 = 1 and D_var^i F = G_i * F.
/// G_{i+1} = D_var(G_i) + G_i * Lambda_var with
///   Lambda_a = exponent_main * (dQ/da)/Q
///   Lambda_x = exponent_x / x + exponent_main * (dQ/dx)/Q.
std::vector<RatFunc> logderiv_tower(const CertifiedIntegrand& f, Var var, int order);

/// sum_i p_i G_i^a - (D_x R + R G_1^x): identically zero exactly when
/// L(F) = D_x(R F).
RatFunc telescoping_residual(const DiffOp& op, const Certificate& cert,
                             const CertifiedIntegrand& f);

struct SpotCheck {
    std::array<Rational, kNumVars> point;  // (x, a, m, u)
    Rational value;
    bool ok = false;
};

struct VerificationReport {
    bool verified = false;
    bool denominator_compatible = false;
    std::string residual_text;
    std::vector<SpotCheck> spot_checks;
};

/// Symbolic zero test of the residual plus 5 seeded rational spot checks.
VerificationReport verify_certificate(const DiffOp& op, const Certificate& cert,
                                      const CertifiedIntegrand& f, uint64_t seed = 42,
                                      const VarNames& names = kSymbolNames);

struct SolveOutcome {
    std::optional<Certificate> certificate;
    bool underdetermined = false;
    std::string message;
};

/// Inverts verification at fixed small (m, n): ansatz R = x*P(x)/Q with
/// deg P <= degree_bound and coefficients rational in a, solved by
/// fraction-free elimination over Q[a]. Returns a verified certificate or
/// failure when the system is inconsistent at this bound.
SolveOutcome certificate_solve(const DiffOp& op, const CertifiedIntegrand& f, int m, int n,
                               int degree_bound);

}  // namespace quartic
