#pragma once

// Independent reference computations. Nothing here calls the library's
// Bell, series or family code; only the scalar types are shared.

#include <functional>
#include <vector>

#include "fubini/bipoly.hpp"
#include "fubini/numeric.hpp"

namespace fubini::oracle {

inline Integer fact(unsigned n) {
    Integer out = 1;
    for (unsigned i = 2; i <= n; ++i) out *= i;
    return out;
}

inline Integer choose(unsigned n, unsigned k) {
    if (k > n) return 0;
    return fact(n) / (fact(k) * fact(n - k));
}

/// Visits every set partition of {0..n-1} as a restricted growth string.
inline void for_each_set_partition(unsigned n, const std::function<void(const std::vector<unsigned>&, unsigned)>& fn) {
    std::vector<unsigned> block(n, 0);
    auto rec = [&](auto&& self, unsigned i, unsigned blocks) -> void {
        if (i == n) {
            fn(block, blocks);
            return;
        }
        for (unsigned b = 0; b <= blocks; ++b) {
            block[i] = b;
            self(self, i + 1, b == blocks ? blocks + 1 : blocks);
        }
    };
    if (n == 0) {
        fn(block, 0);
        return;
    }
    rec(rec, 0, 0);
}

inline Integer count_set_partitions(unsigned n, unsigned k) {
    Integer count = 0;
    for_each_set_partition(n, [&](const std::vector<unsigned>&, unsigned blocks) {
        if (blocks == k) ++count;
    });
    return count;
}

/// B_{n,k}(x_1, ...) as the sum over set partitions into k blocks of prod x_{|block|}.
template <typename T>
T bell_by_set_partitions(unsigned n, unsigned k, const std::vector<T>& xs) {
    T total(Rational(0));
    for_each_set_partition(n, [&](const std::vector<unsigned>& block, unsigned blocks) {
        if (blocks != k) return;
        std::vector<unsigned> sizes(blocks, 0);
        for (unsigned b : block) ++sizes[b];
        T term(Rational(1));
        for (unsigned s : sizes) term = term * xs.at(s - 1);
        total = total + term;
    });
    return total;
}

// Plain dense series over Q(sqrt 2), truncated at the vectors' common length.
using Series = std::vector<Sqrt2Number>;

inline Series mul(const Series& f, const Series& g) {
    Series out(f.size());
    for (std::size_t i = 0; i < f.size(); ++i)
        for (std::size_t j = 0; i + j < f.size(); ++j) out[i + j] += f[i] * g[j];
    return out;
}

inline Series inv(const Series& f) {
    Series g(f.size());
    g[0] = f[0].inverse();
    for (std::size_t n = 1; n < f.size(); ++n) {
        Sqrt2Number acc;
        for (std::size_t i = 1; i <= n; ++i) acc += f[i] * g[n - i];
        g[n] = -acc * g[0];
    }
    return g;
}

inline Series power(const Series& f, unsigned m) {
    Series out(f.size());
    out[0] = Sqrt2Number(1);
    for (unsigned i = 0; i < m; ++i) out = mul(out, f);
    return out;
}

/// (1 + lambda t)^{y / lambda} with lambda possibly zero (then e^{y t}).
inline Series degenerate_exp(const Rational& y, const Rational& lambda, unsigned order) {
    Series out(order + 1);
    Rational falling(1);
    for (unsigned n = 0; n <= order; ++n) {
        if (n > 0) falling *= y - Rational(n - 1) * lambda;
        out[n] = Sqrt2Number(falling / Rational(fact(n)));
    }
    return out;
}

inline Sqrt2Number exp_coeff(const Series& f, unsigned n) { return f.at(n) * Sqrt2Number(Rational(fact(n))); }

/// a_n^(alpha)(x; lambda) at rational x and lambda, n = 0..order.
inline std::vector<Sqrt2Number> degenerate_fubini_at(HalfInt alpha, const Rational& x, const Rational& lambda,
                                                     unsigned order) {
    Series base = degenerate_exp(Rational(1), lambda, order);
    for (auto& c : base) c = -c;
    base[0] += Sqrt2Number(2);
    Series f = mul(inv(power(base, static_cast<unsigned>(alpha.twice()))), degenerate_exp(x, lambda, order));
    std::vector<Sqrt2Number> out;
    for (unsigned n = 0; n <= order; ++n) out.push_back(exp_coeff(f, n) * two_pow(alpha));
    return out;
}

/// Exponential coefficients of a series, then the Appell polynomials
/// P_n(x) = sum_k C(n,k) p_k x^{n-k} as BiPoly in X.
inline std::vector<BiPoly> appell_polynomials(const Series& f, unsigned order) {
    std::vector<BiPoly> out;
    for (unsigned n = 0; n <= order; ++n) {
        BiPoly p;
        for (unsigned k = 0; k <= n; ++k)
            p += BiPoly::monomial({static_cast<int>(n - k), 0}, exp_coeff(f, k) * Sqrt2Number(Rational(choose(n, k))));
        out.push_back(std::move(p));
    }
    return out;
}

/// Classical Bernoulli polynomials from t / (e^t - 1) = 1 / ((e^t - 1) / t).
inline std::vector<BiPoly> classical_bernoulli(unsigned order) {
    Series shifted(order + 1);
    for (unsigned n = 0; n <= order; ++n) shifted[n] = Sqrt2Number(Rational(Integer(1), fact(n + 1)));
    return appell_polynomials(inv(shifted), order);
}

/// Classical Euler polynomials from 2 / (e^t + 1).
inline std::vector<BiPoly> classical_euler(unsigned order) {
    Series denom = degenerate_exp(Rational(1), Rational(0), order);
    denom[0] += Sqrt2Number(1);
    Series f = inv(denom);
    for (auto& c : f) c *= Sqrt2Number(2);
    return appell_polynomials(f, order);
}

} // namespace fubini::oracle
