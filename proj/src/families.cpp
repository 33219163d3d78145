#include "fubini/families.hpp"

#include <stdexcept>

#include "fubini/combinatorics.hpp"
#include "fubini/series.hpp"

namespace fubini {

namespace {

void require_nonnegative(HalfInt alpha) {
    if (alpha.is_negative()) throw std::invalid_argument("order must be nonnegative, got " + alpha.to_string());
}

unsigned as_power(HalfInt alpha) { return static_cast<unsigned>(alpha.twice()); }

Rational sign_pow(unsigned e) { return Rational(e % 2 == 0 ? 1 : -1); }

std::vector<BiPoly> exp_coefficients(const TruncSeries& f, unsigned n_max) {
    std::vector<BiPoly> values;
    values.reserve(n_max + 1);
    for (unsigned n = 0; n <= n_max; ++n) values.push_back(ser_coeff_exp(f, n));
    return values;
}

FamilyTable apostol_table(Family family, unsigned m, const Sqrt2Number& gamma, unsigned n_max,
                          const TruncSeries& ratio) {
    TruncSeries f = ser_pow(ratio, m) * ser_degenerate_exp(BiPoly::X(), n_max);
    return {family, HalfInt::integer(m), gamma, n_max, exp_coefficients(f, n_max)};
}

} // namespace

std::string_view family_name(Family family) {
    switch (family) {
    case Family::DegFubini: return "deg-fubini";
    case Family::Fubini: return "fubini";
    case Family::DegApostolBernoulli: return "deg-apostol-bernoulli";
    case Family::DegApostolEuler: return "deg-apostol-euler";
    }
    throw std::logic_error("unknown family");
}

Family parse_family(std::string_view name) {
    for (Family f : {Family::DegFubini, Family::Fubini, Family::DegApostolBernoulli, Family::DegApostolEuler})
        if (family_name(f) == name) return f;
    throw std::invalid_argument("unknown family '" + std::string(name) + "'");
}

bool is_apostol(Family family) {
    return family == Family::DegApostolBernoulli || family == Family::DegApostolEuler;
}

FamilyTable degenerate_fubini(HalfInt alpha, unsigned n_max) {
    require_nonnegative(alpha);
    TruncSeries base = TruncSeries::constant(BiPoly(Sqrt2Number(2)), n_max) -
                       ser_degenerate_exp(BiPoly(Sqrt2Number(1)), n_max);
    // base has constant term 2 - 1 = 1, so every power of it is invertible.
    TruncSeries f = ser_inverse(ser_pow(base, as_power(alpha))) * two_pow(alpha);
    f = f * ser_degenerate_exp(BiPoly::X(), n_max);
    return {Family::DegFubini, alpha, std::nullopt, n_max, exp_coefficients(f, n_max)};
}

FamilyTable fubini_type(HalfInt alpha, unsigned n_max) {
    FamilyTable out = degenerate_fubini(alpha, n_max);
    out.family = Family::Fubini;
    for (auto& v : out.values) v = poly_set_lambda_zero(v);
    return out;
}

FamilyTable deg_apostol_bernoulli(unsigned m, const Sqrt2Number& gamma, unsigned n_max) {
    if (gamma.is_zero()) throw std::invalid_argument("Apostol-Bernoulli parameter gamma must be nonzero");
    TruncSeries ratio(n_max);
    if (gamma == Sqrt2Number(1)) {
        // e_L(t) - 1 = t (1 + ...): cancel t first, then invert.
        TruncSeries denom = ser_degenerate_exp(BiPoly(Sqrt2Number(1)), n_max + 1) -
                            TruncSeries::one(n_max + 1);
        ratio = ser_inverse(ser_shift_div_t(denom, 1));
    } else {
        TruncSeries denom = ser_degenerate_exp(BiPoly(Sqrt2Number(1)), n_max) * gamma - TruncSeries::one(n_max);
        ratio = TruncSeries::t(n_max) * ser_inverse(denom);
    }
    return apostol_table(Family::DegApostolBernoulli, m, gamma, n_max, ratio);
}

FamilyTable deg_apostol_euler(unsigned m, const Sqrt2Number& gamma, unsigned n_max) {
    if (gamma == Sqrt2Number(-1))
        throw std::invalid_argument("Apostol-Euler parameter gamma = -1 makes the constant term vanish");
    TruncSeries denom = ser_degenerate_exp(BiPoly(Sqrt2Number(1)), n_max) * gamma + TruncSeries::one(n_max);
    TruncSeries ratio = ser_inverse(denom) * Sqrt2Number(2);
    return apostol_table(Family::DegApostolEuler, m, gamma, n_max, ratio);
}

FamilyTable make_family(Family family, HalfInt order, const std::optional<Sqrt2Number>& gamma, unsigned n_max) {
    require_nonnegative(order);
    switch (family) {
    case Family::DegFubini: return degenerate_fubini(order, n_max);
    case Family::Fubini: return fubini_type(order, n_max);
    case Family::DegApostolBernoulli:
    case Family::DegApostolEuler: {
        if (!order.is_integer())
            throw std::invalid_argument("Apostol families need an integral order, got " + order.to_string());
        auto m = static_cast<unsigned>(order.twice() / 2);
        Sqrt2Number g = gamma.value_or(Sqrt2Number(1));
        return family == Family::DegApostolBernoulli ? deg_apostol_bernoulli(m, g, n_max)
                                                     : deg_apostol_euler(m, g, n_max);
    }
    }
    throw std::logic_error("unknown family");
}

BiPoly fubini_explicit_thm2(HalfInt alpha, unsigned n) {
    require_nonnegative(alpha);
    const StirlingTable stirling(n);
    const Rational minus_two_alpha(-alpha.twice());
    BiPoly out;
    for (unsigned k = 0; k <= n; ++k) {
        Rational inner;
        for (unsigned i = 0; i <= k; ++i)
            inner += falling_factorial(minus_two_alpha, i) * sign_pow(i) * Rational(stirling(k, i));
        out += BiPoly::monomial({static_cast<int>(n - k), 0}, Rational(binomial(n, k)) * inner);
    }
    return out * two_pow(alpha);
}

Sqrt2Number fubini_numbers_closed_form(HalfInt alpha, unsigned n, const Rational& lambda, ClosedForm form) {
    require_nonnegative(alpha);
    if (lambda.is_zero()) throw std::invalid_argument("closed form needs lambda != 0");
    if (n == 0) throw std::invalid_argument("closed form needs n >= 1");
    const Rational minus_two_alpha(-alpha.twice());

    if (form == ClosedForm::Corrected) {
        Rational sum;
        for (unsigned k = 1; k <= n; ++k) {
            Rational inner;
            for (unsigned l = 1; l <= k; ++l)
                inner += sign_pow(l) * Rational(l) * Rational(binomial(k, l)) *
                         gen_binomial(Rational(l) / lambda - Rational(1), n - 1);
            sum += falling_factorial(minus_two_alpha, k) / Rational(factorial(k)) * inner;
        }
        return two_pow(alpha) * (Rational(factorial(n - 1)) * lambda.pow(n - 1) * sum);
    }

    Sqrt2Number sum;
    for (unsigned k = 1; k <= n; ++k) {
        Rational inner;
        for (unsigned l = 1; l <= k; ++l)
            inner += sign_pow(l) * Rational(l) * Rational(binomial(k, l)) *
                     gen_binomial(lambda * Rational(l) - Rational(1), n - 1);
        Rational rational_part = falling_factorial(minus_two_alpha, k) * sign_pow(k) /
                                 (lambda.pow(k - 1) * Rational(factorial(k))) * inner;
        sum += two_pow(-(alpha + HalfInt::integer(k))) * rational_part;
    }
    return sum * Rational(factorial(n - 1));
}

std::pair<BiPoly, BiPoly> fubini_recurrence_sides_thm3(HalfInt alpha, unsigned n) {
    const FamilyTable table = fubini_type(alpha, n);
    const StirlingTable stirling(n);
    const Rational two_alpha(alpha.twice());
    BiPoly lhs;
    for (unsigned k = 0; k <= n; ++k) {
        Rational weight;
        for (unsigned i = 0; i <= n - k; ++i)
            weight += falling_factorial(two_alpha, i) * sign_pow(i) * Rational(stirling(n - k, i));
        lhs += table.values[k] * Sqrt2Number(Rational(binomial(n, k)) * weight);
    }
    BiPoly rhs = BiPoly::monomial({static_cast<int>(n), 0}, two_pow(alpha));
    return {std::move(lhs), std::move(rhs)};
}

IdentityReport fubini_recurrence_check_thm3(HalfInt alpha, unsigned n) {
    auto [lhs, rhs] = fubini_recurrence_sides_thm3(alpha, n);
    return compare_sides("thm3", {{"alpha", alpha.to_string()}, {"n", std::to_string(n)}}, lhs, rhs);
}

nlohmann::json to_json(const FamilyTable& table) {
    nlohmann::json values = nlohmann::json::array();
    for (const auto& v : table.values) values.push_back(to_json(v));
    return {
        {"family", std::string(family_name(table.family))},
        {"order", table.order.to_string()},
        {"gamma", table.gamma ? nlohmann::json(table.gamma->to_string()) : nlohmann::json(nullptr)},
        {"n_max", table.n_max},
        {"values", std::move(values)},
    };
}

FamilyTable family_table_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("family") || !j.contains("order") || !j.contains("n_max") ||
        !j.contains("values") || !j["values"].is_array())
        throw std::invalid_argument("family table JSON needs family, order, n_max and values");
    FamilyTable out;
    out.family = parse_family(j["family"].get<std::string>());
    out.order = HalfInt::parse(j["order"].get<std::string>());
    if (j.contains("gamma") && !j["gamma"].is_null()) out.gamma = Sqrt2Number::parse(j["gamma"].get<std::string>());
    out.n_max = j["n_max"].get<unsigned>();
    for (const auto& v : j["values"]) out.values.push_back(bipoly_from_json(v));
    if (out.values.size() != out.n_max + 1) throw std::invalid_argument("family table has wrong number of values");
    return out;
}

} // namespace fubini
