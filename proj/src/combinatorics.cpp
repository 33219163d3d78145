#include "fubini/combinatorics.hpp"

namespace fubini {

namespace {

void require_closed_form_range(unsigned n, unsigned k) {
    if (k < 1 || k > n) throw std::invalid_argument("closed forms need 1 <= k <= n");
}

Rational sign_pow(unsigned e) { return Rational(e % 2 == 0 ? 1 : -1); }

} // namespace

Integer factorial(unsigned n) {
    Integer out;
    mpz_fac_ui(out.get_mpz_t(), n);
    return out;
}

Integer binomial(unsigned n, unsigned k) {
    if (k > n) return 0;
    Integer out;
    mpz_bin_uiui(out.get_mpz_t(), n, k);
    return out;
}

BiPoly degenerate_falling(unsigned n) {
    BiPoly out(Sqrt2Number(1));
    for (unsigned l = 0; l < n; ++l)
        out *= BiPoly::X() - BiPoly::L() * Sqrt2Number(static_cast<long>(l));
    return out;
}

StirlingTable::StirlingTable(unsigned max_n) : max_n_(max_n), rows_(max_n + 1) {
    rows_[0] = {Integer(1)};
    for (unsigned n = 1; n <= max_n; ++n) {
        auto& row = rows_[n];
        const auto& prev = rows_[n - 1];
        row.assign(n + 1, Integer(0));
        for (unsigned k = 1; k <= n; ++k) {
            Integer carried = k < n ? Integer(k * prev[k]) : Integer(0);
            row[k] = carried + prev[k - 1];
        }
    }
}

const Integer& StirlingTable::operator()(unsigned n, unsigned k) const {
    if (n > max_n_) throw std::out_of_range("Stirling table holds n <= " + std::to_string(max_n_));
    return k > n ? zero_ : rows_[n][k];
}

Integer stirling2(unsigned n, unsigned k) {
    if (k > n) return 0;
    return StirlingTable(n)(n, k);
}

std::pair<Sqrt2Number, Sqrt2Number> bell_scaling_sides(const Sqrt2Number& a, const Sqrt2Number& b, unsigned n,
                                                       unsigned k, std::span<const Sqrt2Number> xs) {
    detail::check_bell_args(n, k, xs.size());
    std::vector<Sqrt2Number> scaled(xs.begin(), xs.end());
    Sqrt2Number b_power = b;
    for (auto& x : scaled) {
        x = a * b_power * x;
        b_power *= b;
    }
    Sqrt2Number lhs = bell_partial<Sqrt2Number>(n, k, scaled);
    Sqrt2Number rhs = a.pow(k) * b.pow(n) * bell_partial<Sqrt2Number>(n, k, xs);
    return {std::move(lhs), std::move(rhs)};
}

bool bell_scaling_check(const Sqrt2Number& a, const Sqrt2Number& b, unsigned n, unsigned k,
                        std::span<const Sqrt2Number> xs) {
    auto [lhs, rhs] = bell_scaling_sides(a, b, n, k, xs);
    return lhs == rhs;
}

Rational bell_closed_form_14(unsigned n, unsigned k, const Rational& lambda) {
    require_closed_form_range(n, k);
    Rational sum;
    for (unsigned l = 0; l <= k; ++l) {
        Rational product(1);
        for (unsigned q = 0; q < n; ++q) product *= Rational(l) - Rational(q) * lambda;
        sum += sign_pow(l) * Rational(binomial(k, l)) * product;
    }
    return sign_pow(k) * sum / Rational(factorial(k));
}

Rational bell_closed_form_15(unsigned n, unsigned k, const Rational& lambda) {
    require_closed_form_range(n, k);
    Rational sum;
    for (unsigned l = 0; l <= k; ++l)
        sum += sign_pow(l) * Rational(binomial(k, l)) * falling_factorial(lambda * Rational(l), n);
    return sign_pow(k) * sum / Rational(factorial(k));
}

Rational bell_closed_form_17(unsigned n, unsigned k, const Rational& lambda) {
    require_closed_form_range(n, k);
    Rational sum;
    for (unsigned l = 1; l <= k; ++l)
        sum += sign_pow(l) * Rational(l) * Rational(binomial(k, l)) *
               gen_binomial(lambda * Rational(l) - Rational(1), n - 1);
    return sign_pow(k) * lambda * Rational(factorial(n - 1), factorial(k)) * sum;
}

std::vector<Rational> degenerate_unit_args(const Rational& lambda, unsigned count) {
    std::vector<Rational> out;
    out.reserve(count);
    Rational product(1);
    for (unsigned m = 1; m <= count; ++m) {
        out.push_back(product);
        product *= Rational(1) - Rational(m) * lambda;
    }
    return out;
}

std::vector<Rational> falling_args(const Rational& lambda, unsigned count) {
    std::vector<Rational> out;
    out.reserve(count);
    for (unsigned m = 1; m <= count; ++m) out.push_back(falling_factorial(lambda, m));
    return out;
}

} // namespace fubini
