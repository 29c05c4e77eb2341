#include <cmath>
#include <random>
#include <stdexcept>

#include "doctest.h"
#include "quartic/rational.hpp"

using namespace quartic;

TEST_CASE("bigint basic arithmetic against native") {
    std::mt19937_64 gen(12345);
    for (int i = 0; i < 2000; ++i) {
        int64_t a = static_cast<int64_t>(gen() % 2000001) - 1000000;
        int64_t b = static_cast<int64_t>(gen() % 2000001) - 1000000;
        BigInt A(a), B(b);
        CHECK((A + B).to_int64() == a + b);
        CHECK((A - B).to_int64() == a - b);
        CHECK((A * B).to_int64() == a * b);
        if (b != 0) {
            CHECK((A / B).to_int64() == a / b);
            CHECK((A % B).to_int64() == a % b);
        }
    }
}

TEST_CASE("bigint big division round-trip") {
    std::mt19937_64 gen(777);
    auto random_big = [&gen](int limbs) {
        BigInt v(0);
        for (int i = 0; i < limbs; ++i)
            v = v.shifted_left(32) + BigInt(static_cast<int64_t>(gen() & 0xffffffffu));
        if (gen() & 1) v = -v;
        return v;
    };
    for (int i = 0; i < 200; ++i) {
        BigInt a = random_big(2 + static_cast<int>(gen() % 18));
        BigInt b = random_big(1 + static_cast<int>(gen() % 8));
        if (b.is_zero()) continue;
        BigInt q, r;
        BigInt::divmod(a, b, q, r);
        CHECK(q * b + r == a);
        CHECK(BigInt::cmp(r.abs(), b.abs()) < 0);
        CHECK((a * b) / b == a);
    }
}

TEST_CASE("bigint decimal round-trip and gcd") {
    BigInt big = BigInt::from_string("123456789012345678901234567890123456789");
    CHECK(big.to_string() == "123456789012345678901234567890123456789");
    CHECK(BigInt::from_string("-987654321").to_int64() == -987654321);
    CHECK(BigInt::gcd(BigInt(48), BigInt(-18)) == BigInt(6));
    CHECK(BigInt::gcd(big * BigInt(7), big * BigInt(5)) == big);
    CHECK(BigInt::pow(BigInt(3), 20) == BigInt(3486784401LL));
}

TEST_CASE("bigint to_double on large values") {
    BigInt t = BigInt::pow(BigInt(10), 30);
    CHECK(t.to_double() == doctest::Approx(1e30).epsilon(1e-14));
    CHECK((-t).to_double() == doctest::Approx(-1e30).epsilon(1e-14));
}

TEST_CASE("rational to_double across extreme size gaps") {
    BigInt big = BigInt::pow(BigInt(3), 600);  // ~951 bits, past the fast path
    Rational tiny(BigInt(7), big);
    CHECK(tiny.to_double() == doctest::Approx(7.0 / std::pow(3.0, 600.0)).epsilon(1e-13));
    Rational huge(big, BigInt(7));
    CHECK(huge.to_double() == doctest::Approx(std::pow(3.0, 600.0) / 7.0).epsilon(1e-13));
    Rational balanced(big + BigInt(1), big);
    CHECK(balanced.to_double() == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("rational reduction and canonical zero") {
    Rational r(6, -9);
    CHECK(r.num() == BigInt(-2));
    CHECK(r.den() == BigInt(3));
    CHECK(Rational(0, 5) == Rational(0));
    CHECK(Rational(0).den() == BigInt(1));
    CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
}

TEST_CASE("rational round-trips: (a/b)*(b/a) = 1") {
    std::mt19937_64 gen(99);
    for (int i = 0; i < 500; ++i) {
        int64_t a = static_cast<int64_t>(gen() % 9999) + 1;
        int64_t b = static_cast<int64_t>(gen() % 9999) + 1;
        if (gen() & 1) a = -a;
        Rational r(a, b);
        CHECK(r * r.inv() == Rational(1));
    }
}

TEST_CASE("rational ordering and arithmetic") {
    CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
    CHECK(Rational(1, 3) - Rational(1, 2) == Rational(-1, 6));
    CHECK(Rational(2, 3) * Rational(9, 4) == Rational(3, 2));
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK(Rational(-1, 2) < Rational(-1, 3));
    CHECK(Rational::pow(Rational(2, 3), -2) == Rational(9, 4));
}

TEST_CASE("rational from_double is exact on dyadics") {
    CHECK(Rational::from_double(0.375) == Rational(3, 8));
    CHECK(Rational::from_double(-2.5) == Rational(-5, 2));
    CHECK(Rational::from_double(0.0) == Rational(0));
    double v = 0.1;  // not dyadic; conversion must still round-trip exactly
    CHECK(Rational::from_double(v).to_double() == v);
}

TEST_CASE("rational string forms") {
    CHECK(Rational(3, 2).to_string() == "3/2");
    CHECK(Rational(-7).to_string() == "-7");
    CHECK(Rational::from_string("21/8") == Rational(21, 8));
    CHECK(Rational::from_string("-5") == Rational(-5));
}

TEST_CASE("factorial and binomial helpers") {
    CHECK(factorial_rat(5) == Rational(120));
    CHECK(binomial_rat(Rational(4), 2) == Rational(6));
    CHECK(binomial_rat(Rational(3, 2), 2) == Rational(3, 8));
    CHECK(binomial_rat(Rational(3, 2), -1) == Rational(0));
}
