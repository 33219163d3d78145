#pragma once

// Seeded random values for property tests.

#include <cstdint>
#include <random>

#include "fubini/bipoly.hpp"
#include "fubini/numeric.hpp"
#include "fubini/series.hpp"

namespace fubini::testing {

class Gen {
public:
    explicit Gen(std::uint64_t seed) : engine_(seed) {}

    long integer(long lo, long hi) { return lo + static_cast<long>(engine_() % static_cast<std::uint64_t>(hi - lo + 1)); }

    Rational rational(long span = 7, long max_den = 6) {
        return Rational(Integer(integer(-span, span)), Integer(integer(1, max_den)));
    }

    Rational nonzero_rational() {
        Rational r = rational();
        return r.is_zero() ? Rational(1) : r;
    }

    Sqrt2Number field() { return {rational(), rational()}; }

    Sqrt2Number nonzero_field() {
        Sqrt2Number x = field();
        return x.is_zero() ? Sqrt2Number(Rational(1), Rational(1)) : x;
    }

    BiPoly poly(int max_deg = 3, int terms = 4) {
        BiPoly p;
        for (int i = 0; i < terms; ++i)
            p += BiPoly::monomial({static_cast<int>(integer(0, max_deg)), static_cast<int>(integer(0, max_deg))}, field());
        return p;
    }

    TruncSeries series(unsigned order, bool unit_constant) {
        std::vector<BiPoly> coeffs;
        for (unsigned n = 0; n <= order; ++n) coeffs.push_back(poly(2, 3));
        if (unit_constant) coeffs[0] = BiPoly(Sqrt2Number(1));
        return TruncSeries(std::move(coeffs));
    }

private:
    std::mt19937_64 engine_;
};

} // namespace fubini::testing
