#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fubini/bipoly.hpp"
#include "generators.hpp"

using namespace fubini;

namespace {
const BiPoly X = BiPoly::X();
const BiPoly L = BiPoly::L();
BiPoly c(long v) { return BiPoly(Sqrt2Number(v)); }
} // namespace

TEST_CASE("ring operations") {
    CHECK((X + L) * (X - L) == X * X - L * L);
    CHECK(X + BiPoly() == X);
    CHECK((X * Sqrt2Number::sqrt2()).coefficient({1, 0}) == Sqrt2Number::sqrt2());
    CHECK((X - X).is_zero());
    CHECK((X - X).terms().empty());
    CHECK((X * c(0)).terms().empty());
    CHECK((X + L).pow(2) == X * X + X * L * Sqrt2Number(2) + L * L);
}

TEST_CASE("ring axioms on random polynomials") {
    testing::Gen gen(3);
    for (int i = 0; i < 100; ++i) {
        BiPoly p = gen.poly(), q = gen.poly(), r = gen.poly();
        CHECK(p + q == q + p);
        CHECK(p * q == q * p);
        CHECK(p * (q + r) == p * q + p * r);
        CHECK((p * q) * r == p * (q * r));
        BiPoly d = p * q - r;
        for (const auto& [m, coeff] : d.terms()) CHECK(!coeff.is_zero());
    }
}

TEST_CASE("evaluation") {
    CHECK(poly_eval(X * X - L, Sqrt2Number(2), Sqrt2Number(1)) == Sqrt2Number(3));
    CHECK(poly_eval(X * (X - L), Sqrt2Number(1), Sqrt2Number(1)) == Sqrt2Number(0));
    CHECK(poly_eval(c(5), Sqrt2Number(Rational(1, 3)), Sqrt2Number::sqrt2()) == Sqrt2Number(5));

    testing::Gen gen(5);
    for (int i = 0; i < 100; ++i) {
        BiPoly p = gen.poly(), q = gen.poly();
        Sqrt2Number x = gen.field(), l = gen.field();
        CHECK(poly_eval(p * q, x, l) == poly_eval(p, x, l) * poly_eval(q, x, l));
        CHECK(poly_eval(p + q, x, l) == poly_eval(p, x, l) + poly_eval(q, x, l));
    }
}

TEST_CASE("substitution for X") {
    CHECK(poly_subst_x(X * X, X + c(1)) == X * X + X * Sqrt2Number(2) + c(1));
    CHECK(poly_subst_x(X, X + L) == X + L);
    // X(X - L) at X + L: expanded independently with ring operations.
    CHECK(poly_subst_x(X * (X - L), X + L) == X * X + L * X);
    CHECK(poly_subst_x(c(7), X + c(1)) == c(7));
    CHECK(poly_subst_x(BiPoly(), X + c(1)).is_zero());

    testing::Gen gen(9);
    for (int i = 0; i < 60; ++i) {
        BiPoly p = gen.poly(4, 6), shift = gen.poly(1, 2);
        CHECK(poly_subst_x(p, X) == p);
        Sqrt2Number x = gen.field(), l = gen.field();
        // Composition agrees with evaluation at the shifted point.
        CHECK(poly_eval(poly_subst_x(p, shift), x, l) == poly_eval(p, poly_eval(shift, x, l), l));
    }
}

TEST_CASE("lambda set to zero and lambda substitution") {
    CHECK(poly_set_lambda_zero(X * (X - L) * (X - L * Sqrt2Number(2))) == X * X * X);
    CHECK(poly_set_lambda_zero(L * L).is_zero());
    CHECK(poly_set_lambda_zero(X + c(3)) == X + c(3));
    CHECK(poly_subst_lambda(X * L + L * L, Sqrt2Number(2)) == X * Sqrt2Number(2) + c(4));
}

TEST_CASE("degrees") {
    BiPoly p = X * X * L + L * L * L + c(1);
    CHECK(p.degree_x() == 2);
    CHECK(p.degree_l() == 3);
    CHECK(c(4).is_constant());
    CHECK(!X.is_constant());
    CHECK(BiPoly().is_constant());
}

TEST_CASE("json layout and round trip") {
    BiPoly p = X * X + X * L * Sqrt2Number(Rational(-1, 2)) + L * Sqrt2Number::sqrt2() + c(3);
    CHECK(to_json(p).dump() ==
          R"([{"c":"1","dl":0,"dx":2},{"c":"-1/2","dl":1,"dx":1},{"c":"1*s2","dl":1,"dx":0},{"c":"3","dl":0,"dx":0}])");
    CHECK(to_json(BiPoly()).dump() == "[]");

    testing::Gen gen(13);
    for (int i = 0; i < 100; ++i) {
        BiPoly q = gen.poly(5, 8);
        auto text = to_json(q).dump();
        BiPoly back = bipoly_from_json(nlohmann::json::parse(text));
        CHECK(back == q);
        CHECK(to_json(back).dump() == text);
    }
}

TEST_CASE("json rejects malformed terms") {
    using nlohmann::json;
    CHECK_THROWS_AS(bipoly_from_json(json::parse(R"({"dx":0})")), std::invalid_argument);
    CHECK_THROWS_AS(bipoly_from_json(json::parse(R"([{"dx":0,"dl":0,"c":"0"}])")), std::invalid_argument);
    CHECK_THROWS_AS(bipoly_from_json(json::parse(R"([{"dx":-1,"dl":0,"c":"1"}])")), std::invalid_argument);
    CHECK_THROWS_AS(bipoly_from_json(json::parse(R"([{"dx":0,"dl":0,"c":"1"},{"dx":1,"dl":0,"c":"1"}])")),
                    std::invalid_argument);
    CHECK_THROWS_AS(bipoly_from_json(json::parse(R"([{"dx":0,"dl":0,"c":"x"}])")), std::invalid_argument);
}
