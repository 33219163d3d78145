#pragma once

// Truncated power series sum_{n<=N} c_n t^n with BiPoly coefficients, used as
// the generating-function oracle. Coefficients are stored ordinary (c_n); the
// exponential coefficient n! c_n is extracted on demand.

#include <cstddef>
#include <vector>

#include "fubini/bipoly.hpp"

namespace fubini {

class TruncSeries {
public:
    /// The zero series of the given order.
    explicit TruncSeries(unsigned order);
    /// Coefficients c_0..c_N; order is coeffs.size() - 1. Throws on an empty vector.
    explicit TruncSeries(std::vector<BiPoly> coeffs);

    static TruncSeries constant(const BiPoly& c, unsigned order);
    static TruncSeries one(unsigned order) { return constant(BiPoly(Sqrt2Number(1)), order); }
    /// The series t (zero when order is 0).
    static TruncSeries t(unsigned order);

    unsigned order() const { return static_cast<unsigned>(coeffs_.size() - 1); }
    const std::vector<BiPoly>& coeffs() const { return coeffs_; }
    const BiPoly& operator[](std::size_t n) const { return coeffs_.at(n); }

    /// Same series truncated to a lower order.
    TruncSeries truncate(unsigned order) const;

    TruncSeries operator-() const;
    TruncSeries& operator+=(const TruncSeries& rhs);
    TruncSeries& operator-=(const TruncSeries& rhs);
    TruncSeries& operator*=(const BiPoly& scalar);
    TruncSeries& operator*=(const Sqrt2Number& scalar);

    friend TruncSeries operator+(TruncSeries lhs, const TruncSeries& rhs) { return lhs += rhs; }
    friend TruncSeries operator-(TruncSeries lhs, const TruncSeries& rhs) { return lhs -= rhs; }
    friend TruncSeries operator*(const TruncSeries& lhs, const TruncSeries& rhs);
    friend TruncSeries operator*(TruncSeries lhs, const BiPoly& rhs) { return lhs *= rhs; }
    friend TruncSeries operator*(TruncSeries lhs, const Sqrt2Number& rhs) { return lhs *= rhs; }

    friend bool operator==(const TruncSeries&, const TruncSeries&) = default;

private:
    std::vector<BiPoly> coeffs_;
};

/// Multiplicative inverse. The constant coefficient must be a nonzero
/// constant polynomial; otherwise std::domain_error naming it.
TruncSeries ser_inverse(const TruncSeries& f);

/// f^m by repeated squaring; f^0 = 1.
TruncSeries ser_pow(const TruncSeries& f, unsigned m);

/// f / t^m. Requires c_0 = ... = c_{m-1} = 0; the result has order N - m.
TruncSeries ser_shift_div_t(const TruncSeries& f, unsigned m);

/// (1 + L t)^{y/L}: the series with n! c_n = y (y - L) ... (y - (n-1) L).
TruncSeries ser_degenerate_exp(const BiPoly& y, unsigned order);

/// n! c_n.
BiPoly ser_coeff_exp(const TruncSeries& f, unsigned n);

/// Applies poly_set_lambda_zero to every coefficient.
TruncSeries ser_set_lambda_zero(const TruncSeries& f);

} // namespace fubini
