#pragma once

// Factorials, binomials, falling factorials, Stirling numbers of the second
// kind and partial Bell polynomials. The ring-generic routines accept
// Rational, Sqrt2Number or BiPoly uniformly.

#include <concepts>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "fubini/bipoly.hpp"
#include "fubini/numeric.hpp"

namespace fubini {

template <typename T>
concept ExactRing = requires(const T& a, const T& b, const Rational& r) {
    T(r);
    { a + b } -> std::convertible_to<T>;
    { a - b } -> std::convertible_to<T>;
    { a * b } -> std::convertible_to<T>;
    { a * r } -> std::convertible_to<T>;
    { a == b } -> std::convertible_to<bool>;
};

Integer factorial(unsigned n);
Integer binomial(unsigned n, unsigned k);

/// <z>_n = z (z-1) ... (z-n+1), with <z>_0 = 1.
template <ExactRing T>
T falling_factorial(const T& z, unsigned n) {
    T out(Rational(1));
    for (unsigned k = 0; k < n; ++k) out = out * (z - T(Rational(static_cast<long>(k))));
    return out;
}

/// C(z, m) = <z>_m / m! for a nonnegative integer lower index.
template <ExactRing T>
T gen_binomial(const T& z, unsigned m) {
    return falling_factorial(z, m) * Rational(Integer(1), factorial(m));
}

/// (x)_{n,lambda} = X (X - L) ... (X - (n-1) L).
BiPoly degenerate_falling(unsigned n);

/// Triangle S(n, k) for 0 <= k <= n <= max_n.
class StirlingTable {
public:
    explicit StirlingTable(unsigned max_n);

    unsigned max_n() const { return max_n_; }
    /// Zero for k > n; throws std::out_of_range for n > max_n.
    const Integer& operator()(unsigned n, unsigned k) const;

private:
    unsigned max_n_;
    std::vector<std::vector<Integer>> rows_;
    Integer zero_;
};

Integer stirling2(unsigned n, unsigned k);

namespace detail {
inline void check_bell_args(unsigned n, unsigned k, std::size_t available) {
    if (k > n) throw std::invalid_argument("Bell polynomial needs k <= n");
    if (k > 0 && available < n - k + 1)
        throw std::invalid_argument("Bell polynomial B_{" + std::to_string(n) + "," + std::to_string(k) + "} needs " +
                                    std::to_string(n - k + 1) + " arguments, got " + std::to_string(available));
}
} // namespace detail

/// Partial Bell polynomial B_{n,k}(x_1, ..., x_{n-k+1}) via
/// B_{n,k} = sum_{i=1}^{n-k+1} C(n-1, i-1) x_i B_{n-i,k-1}.
template <ExactRing T>
T bell_partial(unsigned n, unsigned k, std::span<const T> xs) {
    detail::check_bell_args(n, k, xs.size());
    const T zero(Rational(0));
    if (k == 0) return n == 0 ? T(Rational(1)) : zero;

    // table[j][m] = B_{m,j}; only m <= n - k + j is ever reached.
    std::vector<std::vector<T>> table(k + 1, std::vector<T>(n + 1, zero));
    table[0][0] = T(Rational(1));
    for (unsigned j = 1; j <= k; ++j) {
        for (unsigned m = j; m <= n - k + j; ++m) {
            T acc = zero;
            for (unsigned i = 1; i <= m - j + 1; ++i) {
                const T& prev = table[j - 1][m - i];
                if (prev == zero) continue;
                acc = acc + xs[i - 1] * prev * Rational(binomial(m - 1, i - 1));
            }
            table[j][m] = std::move(acc);
        }
    }
    return table[k][n];
}

template <ExactRing T>
T bell_partial(unsigned n, unsigned k, const std::vector<T>& xs) {
    return bell_partial<T>(n, k, std::span<const T>(xs));
}

/// Partial Bell polynomial straight from the multi-index definition
/// sum over l_1..l_n with sum i l_i = n, sum l_i = k of
/// n! / prod l_i! * prod (x_i / i!)^{l_i}. Exponential cost; for cross-checks.
template <ExactRing T>
T bell_partition_sum(unsigned n, unsigned k, std::span<const T> xs) {
    detail::check_bell_args(n, k, xs.size());
    if (k == 0) return n == 0 ? T(Rational(1)) : T(Rational(0));
    const unsigned parts = n - k + 1;
    std::vector<unsigned> l(parts + 1, 0);
    T total(Rational(0));
    // Depth-first over l_i, i = 1..parts, tracking remaining weight and count.
    auto visit = [&](auto&& self, unsigned i, unsigned weight_left, unsigned count_left) -> void {
        if (i > parts) {
            if (weight_left != 0 || count_left != 0) return;
            Integer denom = 1;
            T term(Rational(factorial(n)));
            for (unsigned q = 1; q <= parts; ++q) {
                denom *= factorial(l[q]);
                Rational scale(Integer(1), factorial(q));
                for (unsigned e = 0; e < l[q]; ++e) term = term * (xs[q - 1] * scale);
            }
            total = total + term * Rational(Integer(1), denom);
            return;
        }
        for (unsigned c = 0; c * i <= weight_left && c <= count_left; ++c) {
            l[i] = c;
            self(self, i + 1, weight_left - c * i, count_left - c);
        }
        l[i] = 0;
    };
    visit(visit, 1, n, k);
    return total;
}

template <ExactRing T>
T bell_partition_sum(unsigned n, unsigned k, const std::vector<T>& xs) {
    return bell_partition_sum<T>(n, k, std::span<const T>(xs));
}

/// Left side B_{n,k}(a b x_1, a b^2 x_2, ...) and right side a^k b^n B_{n,k}(x_1, x_2, ...).
std::pair<Sqrt2Number, Sqrt2Number> bell_scaling_sides(const Sqrt2Number& a, const Sqrt2Number& b, unsigned n,
                                                       unsigned k, std::span<const Sqrt2Number> xs);

/// Whether B_{n,k}(a b x_1, a b^2 x_2, ...) == a^k b^n B_{n,k}(x_1, x_2, ...).
bool bell_scaling_check(const Sqrt2Number& a, const Sqrt2Number& b, unsigned n, unsigned k,
                        std::span<const Sqrt2Number> xs);

/// ((-1)^k / k!) sum_{l=0}^k (-1)^l C(k,l) prod_{q=0}^{n-1} (l - q lambda),
/// the closed form of B_{n,k}(1, 1-lambda, (1-lambda)(1-2lambda), ...).
Rational bell_closed_form_14(unsigned n, unsigned k, const Rational& lambda);

/// ((-1)^k / k!) sum_{l=0}^k (-1)^l C(k,l) <lambda l>_n,
/// the closed form of B_{n,k}(<lambda>_1, ..., <lambda>_{n-k+1}).
Rational bell_closed_form_15(unsigned n, unsigned k, const Rational& lambda);

/// (-1)^k lambda ((n-1)!/k!) sum_{l=1}^k (-1)^l l C(k,l) C(lambda l - 1, n-1),
/// the rearranged closed form of B_{n,k}(<lambda>_1, ..., <lambda>_{n-k+1}).
Rational bell_closed_form_17(unsigned n, unsigned k, const Rational& lambda);

/// Arguments x_m = prod_{l=0}^{m-1} (1 - l lambda), m = 1..count.
std::vector<Rational> degenerate_unit_args(const Rational& lambda, unsigned count);
/// Arguments x_m = <lambda>_m, m = 1..count.
std::vector<Rational> falling_args(const Rational& lambda, unsigned count);

} // namespace fubini
