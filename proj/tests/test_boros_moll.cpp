#include <cmath>
#include <numbers>

#include "doctest.h"
#include "quartic/boros_moll.hpp"
#include "quartic/quadrature.hpp"

using namespace quartic;

namespace {
constexpr double kPi = std::numbers::pi;

// Oracle: P_m(a) = (2/pi) * (2(a+1))^(m+1/2) * I(a, m), with the integral
// from quadrature. Independent of the exact expansion path.
double pm_oracle(int m, double a) {
    QuadResult q = integral_quadrature({2, 2.0, m, a}, 1e-12);
    return 2.0 / kPi * std::pow(2.0 * (a + 1.0), m + 0.5) * q.value;
}

double eval_coeffs(const PolyCoeffs& p, double a) {
    double acc = 0.0;
    for (size_t l = p.coeffs.size(); l-- > 0;) acc = acc * a + p.coeffs[l].to_double();
    return acc;
}

}  // namespace

TEST_CASE("closed form anchors") {
    CHECK(closed_form_t1(0, 1.0) == doctest::Approx(kPi / 4.0).epsilon(1e-14));
    // m=1, a=0: (pi/2) * (1/2) * 2^(-3/2) * 3
    double expected = kPi / 2.0 * 0.5 * std::pow(2.0, -1.5) * 3.0;
    CHECK(closed_form_t1(1, 0.0) == doctest::Approx(expected).epsilon(1e-14));
    CHECK_THROWS_AS(closed_form_t1(0, -1.0), std::domain_error);
}

TEST_CASE("closed form against quadrature across m and a") {
    for (int m = 0; m <= 8; ++m) {
        for (double a : {-0.9, -0.5, 0.0, 0.5, 0.9}) {
            double cf = closed_form_t1(m, a);
            double qv = integral_quadrature({2, 2.0, m, a}, 1e-12).value;
            CHECK(std::fabs(cf - qv) / qv < 1e-10);
        }
    }
}

TEST_CASE("polynomial coefficients: small cases exact") {
    PolyCoeffs p0 = boros_moll_coeffs(0);
    REQUIRE(p0.coeffs.size() == 1);
    CHECK(p0.coeffs[0] == Rational(1));

    PolyCoeffs p1 = boros_moll_coeffs(1);
    REQUIRE(p1.coeffs.size() == 2);
    CHECK(p1.coeffs[0] == Rational(3, 2));
    CHECK(p1.coeffs[1] == Rational(1));

    // m = 2 golden values, pinned after passing the quadrature oracle below.
    PolyCoeffs p2 = boros_moll_coeffs(2);
    REQUIRE(p2.coeffs.size() == 3);
    CHECK(p2.coeffs[0] == Rational(21, 8));
    CHECK(p2.coeffs[1] == Rational(15, 4));
    CHECK(p2.coeffs[2] == Rational(3, 2));
}

TEST_CASE("polynomial coefficients against the quadrature oracle") {
    for (int m = 0; m <= 6; ++m) {
        PolyCoeffs p = boros_moll_coeffs(m);
        for (double a : {0.0, 0.5}) {
            CHECK(std::fabs(eval_coeffs(p, a) - pm_oracle(m, a)) /
                      std::fabs(pm_oracle(m, a)) <
                  1e-9);
        }
    }
}

TEST_CASE("positivity and log-concavity up to m = 20, exact") {
    for (int m = 0; m <= 20; ++m) {
        PolyCoeffs p = boros_moll_coeffs(m);
        REQUIRE(p.coeffs.size() == static_cast<size_t>(m) + 1);
        for (const auto& d : p.coeffs) CHECK(d > Rational(0));
        for (size_t l = 1; l + 1 < p.coeffs.size(); ++l)
            CHECK(p.coeffs[l] * p.coeffs[l] >= p.coeffs[l - 1] * p.coeffs[l + 1]);
    }
}

TEST_CASE("prefactored series form reproduces the polynomial") {
    CHECK(polypart_check(1, Rational(1, 2), 200).rel_deviation < 1e-9);
    CHECK(polypart_check(0, Rational(0), 8).rel_deviation < 1e-12);  // closes to 1
    CHECK(polypart_check(3, Rational(3, 4), 600).rel_deviation < 1e-8);
    CHECK_THROWS_AS(polypart_check(1, Rational(1), 10), std::domain_error);
}

TEST_CASE("coefficient convolution matches exact coefficients") {
    PolyCoeffs p1 = boros_moll_coeffs(1);
    CHECK(std::fabs(dn_convolution(0, 1, 64) - 1.5) < 1e-9);
    CHECK(std::fabs(dn_convolution(1, 1, 64) - 1.0) < 1e-9);
    (void)p1;

    for (int m = 0; m <= 6; ++m) {
        PolyCoeffs p = boros_moll_coeffs(m);
        for (int k = 0; k <= m; ++k) {
            double exact = p.coeffs[static_cast<size_t>(k)].to_double();
            double printed = dn_convolution(k, m, 64, DnReading::printed_finite);
            double full = dn_convolution(k, m, 64, DnReading::full_convolution);
            CHECK(std::fabs(printed - exact) / exact < 1e-9);
            // The binomial factor kills every l > n term, so the two
            // readings coincide identically.
            CHECK(printed == full);
        }
    }
}

TEST_CASE("convolution vanishes beyond the polynomial degree") {
    for (int m = 0; m <= 4; ++m) {
        for (int k = m + 1; k <= m + 3; ++k) {
            double lead = boros_moll_coeffs(m).coeffs[0].to_double();
            CHECK(std::fabs(dn_convolution(k, m, 64)) / lead < 1e-9);
        }
    }
}
