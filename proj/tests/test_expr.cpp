#include "doctest.h"
#include "quartic/expr.hpp"
#include "quartic/fixtures.hpp"

using namespace quartic;

TEST_CASE("polynomial parsing and canonical rendering") {
    CHECK(parse_poly("x^4 + 2*a*x^2 + 1").to_string() == "x^4 + 2*a*x^2 + 1");
    CHECK(parse_poly("-(a - a) + 0").is_zero());
    CHECK(parse_poly("(m + 1)*(m + 2)").to_string() == "m^2 + 3*m + 2");
    CHECK(parse_poly("z^2 + 2*a*z + 1").to_string(kReducedNames) == "z^2 + 2*a*z + 1");
    CHECK(parse_poly("6/3 * x").to_string() == "2*x");
}

TEST_CASE("rational function parsing") {
    RatFunc f = parse_ratfunc("(x^2 - 1) / (x + 1)");
    CHECK(RatFunc::equal(f, parse_ratfunc("x - 1")));
    CHECK_THROWS_AS(parse_ratfunc("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_ratfunc("x + D_a"), std::invalid_argument);
    CHECK_THROWS_AS(parse_ratfunc("x +"), std::invalid_argument);
    CHECK_THROWS_AS(parse_ratfunc("q + 1"), std::invalid_argument);
    CHECK_THROWS_AS(parse_ratfunc("x^-2"), std::invalid_argument);
}

TEST_CASE("operator parsing") {
    DiffOp op = parse_diffop("-4*m - 3 - 4*a*(2*m + 3)*D_a - 4*(a^2 - 1)*D_a^2");
    REQUIRE(op.order() == 2);
    CHECK(op.coeff(0).to_string() == "-4*m - 3");
    CHECK(op.coeff(1).to_string() == "-8*a*m - 12*a");
    CHECK(op.coeff(2).to_string() == "-4*a^2 + 4");
    CHECK(parse_diffop("0").is_zero());
    // D_a on both sides of a product commutes with the coefficients here.
    DiffOp op2 = parse_diffop("D_a*a + a*D_a");
    CHECK(op2.coeff(1).to_string() == "2*a");
    CHECK_THROWS_AS(parse_diffop("D_x"), std::invalid_argument);
    CHECK_THROWS_AS(parse_diffop("D_a / a"), std::invalid_argument);
    CHECK_THROWS_AS(parse_diffop("x*D_a"), std::invalid_argument);
}

TEST_CASE("division by operator expressions is rejected") {
    CHECK_THROWS_AS(parse_expression("1 / D_a"), std::invalid_argument);
    CHECK_THROWS_AS(parse_expression("D_a + D_x"), std::invalid_argument);
}

TEST_CASE("fixture files parse to the expected shapes") {
    const TheoremFixture& fx = theorem2_printed();
    CHECK(fx.name == "theorem2-printed");
    CHECK(!fx.reduced_form);
    CHECK(fx.kernel.to_string() == "x^4 + 2*a*x^2 + 1");
    CHECK(fx.op.order() == 2);

    REQUIRE(theorem3_variants().size() == 4);
    for (const auto& v : theorem3_variants()) {
        CHECK(v.reduced_form);
        CHECK(v.op.order() == 2);
        CHECK(!v.certificate_expr.is_zero());
    }
    CHECK(find_theorem3_variant("theorem3-printed") != nullptr);
    CHECK(find_theorem3_variant("nope") == nullptr);
}

TEST_CASE("fixture parser rejects malformed input") {
    CHECK_THROWS_AS(parse_fixture("form: x\nkernel: x^2 + 1\noperator: D_a"),
                    std::invalid_argument);  // missing certificate
    CHECK_THROWS_AS(parse_fixture("form: y\nkernel: 1\noperator: 1\ncertificate: 1"),
                    std::invalid_argument);
    CHECK_THROWS_AS(parse_fixture("bogus line"), std::invalid_argument);
}
