// Acceptance suite: one pass/fail line per criterion, nonzero exit when any
// criterion fails. Tolerances are pinned here, in code.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "quartic/boros_moll.hpp"
#include "quartic/expr.hpp"
#include "quartic/fixtures.hpp"
#include "quartic/gamma.hpp"
#include "quartic/quadrature.hpp"
#include "quartic/recurrence.hpp"
#include "quartic/series.hpp"

using namespace quartic;

namespace {

constexpr double kPi = std::numbers::pi;

int g_failures = 0;

void report(int id, bool ok, const std::string& what) {
    std::printf("%s criterion %2d: %s\n", ok ? "PASS" : "FAIL", id, what.c_str());
    if (!ok) ++g_failures;
}

bool rel_close(double v, double ref, double tol) {
    return std::fabs(v - ref) <= tol * std::fabs(ref);
}

// 1. The printed quartic triple telescopes exactly, in under a second.
void criterion_1() {
    auto t0 = std::chrono::steady_clock::now();
    const TheoremFixture& fx = theorem2_printed();
    RatFunc residual = telescoping_residual(fx.op, fx.certificate(), fx.integrand());
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - t0)
                  .count();
    bool ok = residual.is_zero() && ms < 1000;
    report(1, ok,
           "printed quartic certificate telescopes to the zero polynomial (" +
               std::to_string(ms) + " ms)");
}

// 2. The operator translates to the printed recurrence, exactly.
void criterion_2() {
    Recurrence rec = ode_to_recurrence(theorem2_printed().op);
    MultiPoly expect0 = parse_poly("-4*x^2 - 8*x*m - 8*x - 4*m - 3");  // x holds l
    MultiPoly expect2 = parse_poly("4*x^2 + 12*x + 8");
    bool ok = rec.offsets.size() == 2 && rec.valid_from == 0 &&
              rec.offsets.count(0) == 1 && rec.offsets.count(2) == 1 &&
              rec.offsets.at(0) == expect0 && rec.offsets.at(2) == expect2;
    report(2, ok, "operator-to-recurrence reproduces the printed coefficient relation");
}

// 3. Quartic three-way agreement at 1e-10.
void criterion_3() {
    bool ok = true;
    std::string detail;
    for (int m = 0; m <= 8 && ok; ++m) {
        for (double a : {-0.9, -0.5, 0.0, 0.5, 0.9}) {
            IntegralParams p{2, 2.0, m, a};
            double quad = integral_quadrature(p, 1e-12).value;
            double series = series_sum(p, 1e-12).value;
            double closed = closed_form_t1(m, a);
            if (!rel_close(series, quad, 1e-10) || !rel_close(closed, quad, 1e-10)) {
                ok = false;
                detail = " (first failure at m=" + std::to_string(m) +
                         ", a=" + std::to_string(a) + ")";
                break;
            }
        }
    }
    report(3, ok, "n=2 three-way agreement at 1e-10 over 45 grid points" + detail);
}

// 4. The printed general-n series against the printed integrand, 1e-9.
void criterion_4() {
    bool ok = true;
    std::string detail;
    for (int n : {1, 3, 4, 5}) {
        for (int m = 0; m <= 4 && ok; ++m) {
            for (double a :
                 {0.0, 0.4 / n, -0.4 / n, 1.6 / n, -1.6 / n}) {
                IntegralParams p{n, static_cast<double>(n), m, a};
                double quad = integral_quadrature(p, 1e-12).value;
                double series = series_sum(p, 1e-12).value;
                if (!rel_close(series, quad, 1e-9)) {
                    ok = false;
                    detail = " (first failure at n=" + std::to_string(n) +
                             ", m=" + std::to_string(m) + ", a=" + std::to_string(a) + ")";
                    break;
                }
            }
        }
    }
    report(4, ok, "general-n series vs quadrature at 1e-9 for n in {1,3,4,5}" + detail);
}

// 5. The inconsistent printed statements resolve to exactly one triple whose
//    recurrence reproduces the series display.
void criterion_5() {
    int verified = 0;
    std::string name;
    for (const auto& fx : theorem3_variants()) {
        if (verify_certificate(fx.op, fx.certificate(), fx.integrand()).verified) {
            ++verified;
            name = fx.name;
        }
    }
    bool ok = verified == 1 && name == "theorem3-corrected";

    const TheoremFixture* corrected = find_theorem3_variant("theorem3-corrected");
    Recurrence rec = ode_to_recurrence(corrected->op);
    for (int n : {1, 3, 5}) {
        for (int m = 0; m <= 4 && ok; ++m) {
            CoefficientStream s = unroll(rec, m, Rational(1, n), 31);
            for (int l = 0; l + 2 <= 30; ++l) {
                // ratio implied by the series display:
                // (n l + 1)(n l + 2n(m+1) - 1) / (4 (l+1)(l+2))
                Rational num = Rational(n * l + 1) * Rational(n * l + 2 * n * (m + 1) - 1);
                Rational den = Rational(4) * Rational(l + 1) * Rational(l + 2);
                if (s.q[static_cast<size_t>(l + 2)] !=
                    s.q[static_cast<size_t>(l)] * num / den) {
                    ok = false;
                    break;
                }
            }
        }
    }

    // The designated resolution tool recovers the corrected certificate.
    SolveOutcome solved = certificate_solve(corrected->op, corrected->integrand(), 1, 3, 4);
    ok = ok && solved.certificate.has_value() &&
         RatFunc::equal(solved.certificate->r,
                        corrected->certificate_expr.substitute(Var::m, Rational(1))
                            .substitute(Var::u, Rational(1, 3)));

    report(5, ok,
           "exactly one corrected triple verifies (kernel z^2+naz+1, operator n^2a^2-4, "
           "certificate re-derived by the solver) and matches the series ratios");
}

// 6. Exact anchors.
void criterion_6() {
    double v1 = integral_quadrature({2, 2.0, 0, 1.0}, 1e-12).value;
    double v2 = integral_quadrature({1, 1.0, 0, 0.0}, 1e-12).value;
    double v3 = integral_quadrature({2, 2.0, 0, 0.0}, 1e-12).value;
    bool ok = rel_close(v1, kPi / 4.0, 1e-11) && rel_close(v2, kPi / 2.0, 1e-11) &&
              rel_close(v3, kPi / (2.0 * std::sqrt(2.0)), 1e-11);
    report(6, ok, "quadrature anchors pi/4, pi/2, pi/(2 sqrt 2) at 1e-11");
}

// 7. Exact polynomial coefficients, oracle agreement, positivity and
//    log-concavity.
void criterion_7() {
    auto t0 = std::chrono::steady_clock::now();
    PolyCoeffs p0 = boros_moll_coeffs(0);
    PolyCoeffs p1 = boros_moll_coeffs(1);
    bool ok = p0.coeffs == std::vector<Rational>{Rational(1)} &&
              p1.coeffs == std::vector<Rational>{Rational(3, 2), Rational(1)};
    for (int m = 0; m <= 6 && ok; ++m) {
        PolyCoeffs p = boros_moll_coeffs(m);
        for (double a : {0.0, 0.5}) {
            double horner = 0.0;
            for (size_t l = p.coeffs.size(); l-- > 0;)
                horner = horner * a + p.coeffs[l].to_double();
            double oracle = 2.0 / kPi * std::pow(2.0 * (a + 1.0), m + 0.5) *
                            integral_quadrature({2, 2.0, m, a}, 1e-12).value;
            if (!rel_close(horner, oracle, 1e-9)) ok = false;
        }
    }
    for (int m = 0; m <= 20 && ok; ++m) {
        PolyCoeffs p = boros_moll_coeffs(m);
        if (p.coeffs.size() != static_cast<size_t>(m) + 1) ok = false;
        for (const auto& d : p.coeffs)
            if (!(d > Rational(0))) ok = false;
        for (size_t l = 1; l + 1 < p.coeffs.size(); ++l)
            if (!(p.coeffs[l] * p.coeffs[l] >= p.coeffs[l - 1] * p.coeffs[l + 1])) ok = false;
    }
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - t0)
                  .count();
    ok = ok && ms < 5000;
    report(7, ok,
           "polynomial coefficients: exact small cases, quadrature oracle at 1e-9, "
           "positive + log-concave through m=20 (" +
               std::to_string(ms) + " ms)");
}

// 8. Prefactored-series polynomial identity and the coefficient convolution.
void criterion_8() {
    bool ok = true;
    for (int m = 0; m <= 3 && ok; ++m) {
        for (auto a : {Rational(1, 4), Rational(1, 2), Rational(3, 4)}) {
            if (polypart_check(m, a, 800).rel_deviation > 1e-8) ok = false;
        }
    }
    bool printed_matches = true, full_matches = true;
    for (int m = 0; m <= 6 && ok; ++m) {
        PolyCoeffs p = boros_moll_coeffs(m);
        for (int k = 0; k <= m; ++k) {
            double exact = p.coeffs[static_cast<size_t>(k)].to_double();
            if (!rel_close(dn_convolution(k, m, 64, DnReading::printed_finite), exact, 1e-9))
                printed_matches = false;
            if (!rel_close(dn_convolution(k, m, 64, DnReading::full_convolution), exact, 1e-9))
                full_matches = false;
        }
    }
    ok = ok && (printed_matches || full_matches);
    std::string verdict =
        printed_matches && full_matches
            ? "both readings match (the binomial factor annihilates l > n, so the printed "
              "finite upper limit is exact, not a truncation)"
        : printed_matches ? "only the printed finite sum matches"
                          : "only the full convolution matches";
    report(8, ok, "prefactored series at 1e-8 and coefficient convolution at 1e-9; " + verdict);
}

// 9. The alpha generalization is an exact reparameterization of the series.
void criterion_9() {
    bool ok = true;
    struct Case {
        int n;
        double alpha, a;
    };
    // a chosen so alpha*a/n is exactly representable; the identity is then
    // bitwise on every computed term.
    const Case cases[] = {{2, 1.0, 0.25},  {2, 0.5, 0.5},  {2, 3.0, 0.25},
                          {3, 1.0, 0.375}, {3, 0.5, 0.75}, {3, 3.0, 0.25}};
    for (const Case& c : cases) {
        for (int m = 0; m <= 3; ++m) {
            IntegralParams lp{c.n, c.alpha, m, c.a};
            IntegralParams rp{c.n, static_cast<double>(c.n), m, c.alpha * c.a / c.n};
            auto lhs = series_terms(lp, 20);
            auto rhs = series_terms(rp, 20);
            for (size_t i = 0; i < lhs.size(); ++i)
                if (lhs[i] != rhs[i]) ok = false;
            if (series_sum(lp, 1e-12).value != series_sum(rp, 1e-12).value) ok = false;
        }
    }
    report(9, ok, "alpha-scaling identity holds term-for-term (exact multiplier scaling)");
}

// 10. Numerics hygiene: gamma anchors and the x -> 1/x fold.
void criterion_10() {
    bool ok = true;
    if (!rel_close(gamma_fn(0.5), std::sqrt(kPi), 1e-12)) ok = false;
    if (!rel_close(gamma_fn(0.25) * gamma_fn(0.75), kPi * std::sqrt(2.0), 1e-12)) ok = false;
    for (double x = 0.25; x <= 12.0 && ok; x += 0.125) {
        double lhs = gamma_fn(x) * gamma_fn(x + 0.5);
        double rhs = std::pow(2.0, 1.0 - 2.0 * x) * std::sqrt(kPi) * gamma_fn(2.0 * x);
        if (!rel_close(lhs, rhs, 1e-12)) ok = false;
    }

    std::mt19937_64 gen(20260808);
    for (int i = 0; i < 10 && ok; ++i) {
        IntegralParams p;
        p.n = 1 + static_cast<int>(gen() % 4);
        p.alpha = p.n;
        p.m = static_cast<int>(gen() % 5);
        p.a = (static_cast<double>(gen() % 2001) - 1000.0) / 1000.0 * (0.8 * 2.0 / p.n);
        const double X = 1000.0;
        QuadResult folded = integral_quadrature(p, 1e-12);
        QuadResult window =
            adaptive_gk15([&p](double x) { return x <= 0.0 ? 1.0 : integrand(p, x); }, 0.0, X,
                          1e-12, 4000000);
        double floor = 1.0 - std::fabs(p.alpha * p.a) * std::pow(X, -p.n);
        double tail = std::pow(X, 1.0 - 2.0 * p.n * (p.m + 1.0)) /
                      ((2.0 * p.n * (p.m + 1.0) - 1.0) * std::pow(floor, p.m + 1.0));
        double slack = tail + folded.error_estimate + window.error_estimate;
        if (!(std::fabs(folded.value - window.value) <= slack * 1.0000001)) ok = false;
    }
    report(10, ok, "gamma anchor identities at 1e-12 and the fold identity on 10 draws");
}

}  // namespace

int main() {
    criterion_1();
    criterion_2();
    criterion_3();
    criterion_4();
    criterion_5();
    criterion_6();
    criterion_7();
    criterion_8();
    criterion_9();
    criterion_10();
    if (g_failures) {
        std::printf("%d criterion(s) failed\n", g_failures);
        return 1;
    }
    std::printf("all criteria passed\n");
    return 0;
}
