#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fubini/combinatorics.hpp"
#include "fubini/series.hpp"
#include "generators.hpp"
#include "oracles.hpp"

using namespace fubini;

namespace {
const std::vector<Rational> kLambdas = {Rational(1), Rational(1, 2), Rational(-1, 3), Rational(2), Rational(5, 7)};
}

TEST_CASE("factorial and binomial") {
    CHECK(factorial(0) == 1);
    CHECK(factorial(5) == 120);
    CHECK(factorial(12) == oracle::fact(12));
    CHECK(factorial(12) == 479001600);
    CHECK(binomial(5, 2) == 10);
    CHECK(binomial(3, 5) == 0);
}

TEST_CASE("falling factorial and generalized binomial") {
    CHECK(falling_factorial(Rational(7), 0) == Rational(1));
    CHECK(falling_factorial(BiPoly::X(), 0) == BiPoly(Sqrt2Number(1)));
    CHECK(falling_factorial(Rational(-2), 2) == Rational(6));
    CHECK(falling_factorial(Rational(1, 2), 2) == Rational(-1, 4));
    CHECK(gen_binomial(Sqrt2Number::sqrt2(), 0) == Sqrt2Number(1));
    CHECK(gen_binomial(Rational(5), 2) == Rational(10));
    CHECK(gen_binomial(Rational(1, 2), 2) == Rational(-1, 8));
    for (unsigned n = 0; n <= 9; ++n)
        for (unsigned k = 0; k <= n; ++k) CHECK(gen_binomial(Rational(n), k) == Rational(binomial(n, k)));
}

TEST_CASE("degenerate falling factorial") {
    const BiPoly X = BiPoly::X(), L = BiPoly::L();
    CHECK(degenerate_falling(0) == BiPoly(Sqrt2Number(1)));
    CHECK(degenerate_falling(2) == X * X - L * X);
    CHECK(poly_set_lambda_zero(degenerate_falling(3)) == X * X * X);
    for (unsigned n = 0; n <= 6; ++n) {
        BiPoly p = degenerate_falling(n);
        CHECK(p.degree_x() == static_cast<int>(n));
        // At L = 1 it is the ordinary falling factorial of X.
        CHECK(poly_subst_lambda(p, Sqrt2Number(1)) == falling_factorial(X, n));
    }
}

TEST_CASE("Stirling numbers of the second kind") {
    const StirlingTable table(12);
    CHECK(table(0, 0) == 1);
    for (unsigned n = 1; n <= 12; ++n) {
        CHECK(table(n, 0) == 0);
        CHECK(table(n, n) == 1);
        CHECK(table(n, n + 3) == 0);
    }
    CHECK(stirling2(4, 2) == 7);
    CHECK(oracle::count_set_partitions(4, 2) == 7);
    for (unsigned n = 0; n <= 9; ++n)
        for (unsigned k = 0; k <= n; ++k) CHECK(table(n, k) == oracle::count_set_partitions(n, k));
    CHECK_THROWS_AS(table(13, 1), std::out_of_range);
}

TEST_CASE("Stirling numbers from the (e^t - 1)^k / k! series") {
    const unsigned order = 12;
    TruncSeries e_minus_one =
        ser_set_lambda_zero(ser_degenerate_exp(BiPoly(Sqrt2Number(1)), order)) - TruncSeries::one(order);
    for (unsigned k = 0; k <= order; ++k) {
        TruncSeries power = ser_pow(e_minus_one, k) * Sqrt2Number(Rational(Integer(1), factorial(k)));
        for (unsigned n = 0; n <= order; ++n)
            CHECK(ser_coeff_exp(power, n) == BiPoly(Rational(stirling2(n, k))));
    }
}

TEST_CASE("partial Bell polynomials: small cases") {
    const std::vector<Rational> none;
    CHECK(bell_partial<Rational>(0, 0, none) == Rational(1));
    CHECK(bell_partial<Rational>(3, 0, none) == Rational(0));

    // B_{3,2}(x1, x2) = 3 x1 x2, from the three partitions {a}{bc}, {b}{ac}, {c}{ab}.
    const std::vector<BiPoly> xs = {BiPoly::X(), BiPoly::L()};
    CHECK(bell_partial<BiPoly>(3, 2, xs) == BiPoly::X() * BiPoly::L() * Sqrt2Number(3));
    CHECK(oracle::bell_by_set_partitions<BiPoly>(3, 2, xs) == BiPoly::X() * BiPoly::L() * Sqrt2Number(3));

    const std::vector<Rational> short_args = {Rational(1)};
    CHECK_THROWS_AS(bell_partial<Rational>(4, 2, short_args), std::invalid_argument);
    CHECK_THROWS_AS(bell_partial<Rational>(2, 3, short_args), std::invalid_argument);
}

TEST_CASE("Bell polynomials at ones give Stirling numbers") {
    const std::vector<Rational> ones(11, Rational(1));
    for (unsigned n = 0; n <= 10; ++n)
        for (unsigned k = 0; k <= n; ++k) CHECK(bell_partial<Rational>(n, k, ones) == Rational(stirling2(n, k)));
}

TEST_CASE("recurrence, multi-index sum and set-partition enumeration agree") {
    testing::Gen gen(17);
    for (unsigned n = 0; n <= 8; ++n) {
        std::vector<Sqrt2Number> xs;
        for (unsigned i = 0; i < std::max(n, 1u); ++i) xs.push_back(gen.field());
        for (unsigned k = 0; k <= n; ++k) {
            Sqrt2Number recurrence = bell_partial<Sqrt2Number>(n, k, xs);
            CHECK(recurrence == bell_partition_sum<Sqrt2Number>(n, k, xs));
            CHECK(recurrence == oracle::bell_by_set_partitions<Sqrt2Number>(n, k, xs));
        }
    }
}

TEST_CASE("scaling law") {
    const std::vector<Sqrt2Number> ones(8, Sqrt2Number(1));
    CHECK(bell_scaling_check(Sqrt2Number(1), Sqrt2Number(1), 5, 3, ones));
    CHECK(bell_scaling_check(Sqrt2Number(2), Sqrt2Number(3), 4, 2, ones));
    auto [lhs, rhs] = bell_scaling_sides(Sqrt2Number(2), Sqrt2Number(3), 4, 2, ones);
    CHECK(lhs == Sqrt2Number(4 * 81 * 7));
    CHECK(rhs == Sqrt2Number(4 * 81 * 7));

    testing::Gen gen(23);
    for (int i = 0; i < 20; ++i) {
        unsigned n = static_cast<unsigned>(gen.integer(1, 8));
        unsigned k = static_cast<unsigned>(gen.integer(1, n));
        std::vector<Sqrt2Number> xs;
        for (unsigned j = 0; j < n - k + 1; ++j) xs.push_back(gen.field());
        CHECK(bell_scaling_check(gen.nonzero_rational(), gen.nonzero_rational(), n, k, xs));
        CHECK(bell_scaling_check(gen.nonzero_field(), gen.nonzero_field(), n, k, xs));
    }
}

TEST_CASE("closed form for B_{n,k}(1, 1-lambda, ...)") {
    CHECK(bell_closed_form_14(1, 1, Rational(3, 5)) == Rational(1));
    CHECK(bell_closed_form_14(2, 1, Rational(1, 3)) == Rational(2, 3));
    CHECK(bell_closed_form_14(2, 2, Rational(-7)) == Rational(1));
    CHECK_THROWS_AS(bell_closed_form_14(2, 0, Rational(1)), std::invalid_argument);
    for (const Rational& lambda : kLambdas)
        for (unsigned n = 1; n <= 8; ++n)
            for (unsigned k = 1; k <= n; ++k) {
                auto args = degenerate_unit_args(lambda, n - k + 1);
                CHECK(bell_closed_form_14(n, k, lambda) == oracle::bell_by_set_partitions<Rational>(n, k, args));
            }
}

TEST_CASE("closed forms for B_{n,k}(<lambda>_1, <lambda>_2, ...)") {
    CHECK(bell_closed_form_15(1, 1, Rational(2, 9)) == Rational(2, 9));
    CHECK(bell_closed_form_15(2, 1, Rational(3)) == Rational(6));
    CHECK(bell_closed_form_15(5, 5, Rational(-2, 3)) == Rational(-2, 3).pow(5));
    CHECK(bell_closed_form_17(1, 1, Rational(4)) == Rational(4));
    CHECK(bell_closed_form_17(2, 1, Rational(1, 2)) == Rational(-1, 4));
    CHECK(bell_closed_form_17(3, 2, Rational(2)) == Rational(12));
    const std::vector<Rational> falling_two = {Rational(2), Rational(2)};
    CHECK(oracle::bell_by_set_partitions<Rational>(3, 2, falling_two) == Rational(12));

    for (const Rational& lambda : kLambdas)
        for (unsigned n = 1; n <= 8; ++n)
            for (unsigned k = 1; k <= n; ++k) {
                auto args = falling_args(lambda, n - k + 1);
                Rational brute = oracle::bell_by_set_partitions<Rational>(n, k, args);
                CHECK(bell_closed_form_15(n, k, lambda) == brute);
                CHECK(bell_closed_form_17(n, k, lambda) == brute);
            }
}
