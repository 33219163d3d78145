#include "fubini/series.hpp"

#include <stdexcept>
#include <string>

#include "fubini/combinatorics.hpp"

namespace fubini {

namespace {

void require_same_order(const TruncSeries& f, const TruncSeries& g) {
    if (f.order() != g.order())
        throw std::invalid_argument("series order mismatch: " + std::to_string(f.order()) + " vs " +
                                    std::to_string(g.order()));
}

} // namespace

TruncSeries::TruncSeries(unsigned order) : coeffs_(order + 1) {}

TruncSeries::TruncSeries(std::vector<BiPoly> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) throw std::invalid_argument("series needs at least the constant coefficient");
}

TruncSeries TruncSeries::constant(const BiPoly& c, unsigned order) {
    TruncSeries out(order);
    out.coeffs_[0] = c;
    return out;
}

TruncSeries TruncSeries::t(unsigned order) {
    TruncSeries out(order);
    if (order >= 1) out.coeffs_[1] = BiPoly(Sqrt2Number(1));
    return out;
}

TruncSeries TruncSeries::truncate(unsigned order) const {
    if (order > this->order()) throw std::invalid_argument("cannot raise the order of a truncated series");
    return TruncSeries(std::vector<BiPoly>(coeffs_.begin(), coeffs_.begin() + order + 1));
}

TruncSeries TruncSeries::operator-() const {
    TruncSeries out = *this;
    for (auto& c : out.coeffs_) c = -c;
    return out;
}

TruncSeries& TruncSeries::operator+=(const TruncSeries& rhs) {
    require_same_order(*this, rhs);
    for (std::size_t n = 0; n < coeffs_.size(); ++n) coeffs_[n] += rhs.coeffs_[n];
    return *this;
}

TruncSeries& TruncSeries::operator-=(const TruncSeries& rhs) {
    require_same_order(*this, rhs);
    for (std::size_t n = 0; n < coeffs_.size(); ++n) coeffs_[n] -= rhs.coeffs_[n];
    return *this;
}

TruncSeries& TruncSeries::operator*=(const BiPoly& scalar) {
    for (auto& c : coeffs_) c *= scalar;
    return *this;
}

TruncSeries& TruncSeries::operator*=(const Sqrt2Number& scalar) {
    for (auto& c : coeffs_) c *= scalar;
    return *this;
}

TruncSeries operator*(const TruncSeries& lhs, const TruncSeries& rhs) {
    require_same_order(lhs, rhs);
    const std::size_t len = lhs.coeffs_.size();
    TruncSeries out(lhs.order());
    for (std::size_t i = 0; i < len; ++i) {
        if (lhs.coeffs_[i].is_zero()) continue;
        for (std::size_t j = 0; i + j < len; ++j) {
            if (rhs.coeffs_[j].is_zero()) continue;
            out.coeffs_[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
        }
    }
    return out;
}

TruncSeries ser_inverse(const TruncSeries& f) {
    const BiPoly& c0 = f[0];
    if (c0.is_zero() || !c0.is_constant())
        throw std::domain_error("series is not invertible: constant coefficient " + c0.to_string() +
                                " is not a nonzero constant");
    const Sqrt2Number c0_inv = c0.constant_term().inverse();
    std::vector<BiPoly> g(f.order() + 1);
    g[0] = BiPoly(c0_inv);
    for (unsigned n = 1; n <= f.order(); ++n) {
        BiPoly acc;
        for (unsigned i = 1; i <= n; ++i)
            if (!f[i].is_zero() && !g[n - i].is_zero()) acc += f[i] * g[n - i];
        g[n] = -(acc * c0_inv);
    }
    return TruncSeries(std::move(g));
}

TruncSeries ser_pow(const TruncSeries& f, unsigned m) {
    TruncSeries out = TruncSeries::one(f.order());
    TruncSeries base = f;
    while (m > 0) {
        if (m & 1u) out = out * base;
        m >>= 1;
        if (m > 0) base = base * base;
    }
    return out;
}

TruncSeries ser_shift_div_t(const TruncSeries& f, unsigned m) {
    if (m > f.order()) throw std::invalid_argument("cannot divide by t^" + std::to_string(m) + " at order " +
                                                   std::to_string(f.order()));
    for (unsigned i = 0; i < m; ++i)
        if (!f[i].is_zero())
            throw std::domain_error("cannot divide by t^" + std::to_string(m) + ": coefficient " +
                                    std::to_string(i) + " is " + f[i].to_string());
    return TruncSeries(std::vector<BiPoly>(f.coeffs().begin() + m, f.coeffs().end()));
}

TruncSeries ser_degenerate_exp(const BiPoly& y, unsigned order) {
    std::vector<BiPoly> coeffs(order + 1);
    BiPoly falling(Sqrt2Number(1));
    for (unsigned n = 0; n <= order; ++n) {
        if (n > 0) falling *= y - BiPoly::L() * Sqrt2Number(static_cast<long>(n - 1));
        coeffs[n] = falling * Sqrt2Number(Rational(Integer(1), factorial(n)));
    }
    return TruncSeries(std::move(coeffs));
}

BiPoly ser_coeff_exp(const TruncSeries& f, unsigned n) {
    if (n > f.order())
        throw std::out_of_range("coefficient " + std::to_string(n) + " beyond series order " +
                                std::to_string(f.order()));
    return f[n] * Sqrt2Number(Rational(factorial(n)));
}

TruncSeries ser_set_lambda_zero(const TruncSeries& f) {
    std::vector<BiPoly> coeffs;
    coeffs.reserve(f.order() + 1);
    for (const auto& c : f.coeffs()) coeffs.push_back(poly_set_lambda_zero(c));
    return TruncSeries(std::move(coeffs));
}

} // namespace fubini
