#pragma once

// Sparse bivariate polynomials over Q(sqrt 2) in X (the argument x) and L (the
// degeneracy parameter lambda).

#include <compare>
#include <functional>
#include <iosfwd>
#include <map>
#include <string>

#include <nlohmann/json.hpp>

#include "fubini/numeric.hpp"

namespace fubini {

struct Monomial {
    int dx = 0;
    int dl = 0;

    auto operator<=>(const Monomial&) const = default;
};

class BiPoly {
public:
    // Terms iterate in (dx desc, dl desc) order, which is also the serialized order.
    using TermMap = std::map<Monomial, Sqrt2Number, std::greater<Monomial>>;

    BiPoly() = default;
    explicit BiPoly(Sqrt2Number constant);
    explicit BiPoly(Rational constant) : BiPoly(Sqrt2Number(std::move(constant))) {}

    static BiPoly X() { return monomial({1, 0}); }
    static BiPoly L() { return monomial({0, 1}); }
    static BiPoly monomial(Monomial m, Sqrt2Number c = Sqrt2Number(1));

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    /// Constant term (zero when absent).
    Sqrt2Number constant_term() const;
    Sqrt2Number coefficient(Monomial m) const;

    int degree_x() const;
    int degree_l() const;

    BiPoly operator-() const;
    BiPoly& operator+=(const BiPoly& rhs);
    BiPoly& operator-=(const BiPoly& rhs);
    BiPoly& operator*=(const BiPoly& rhs);
    BiPoly& operator*=(const Sqrt2Number& scalar);

    friend BiPoly operator+(BiPoly lhs, const BiPoly& rhs) { return lhs += rhs; }
    friend BiPoly operator-(BiPoly lhs, const BiPoly& rhs) { return lhs -= rhs; }
    friend BiPoly operator*(const BiPoly& lhs, const BiPoly& rhs);
    friend BiPoly operator*(BiPoly lhs, const Sqrt2Number& rhs) { return lhs *= rhs; }
    friend BiPoly operator*(const Sqrt2Number& lhs, BiPoly rhs) { return rhs *= lhs; }

    friend bool operator==(const BiPoly&, const BiPoly&) = default;

    BiPoly pow(unsigned exponent) const;

    std::string to_string() const;

private:
    void add_term(const Monomial& m, const Sqrt2Number& c);

    TermMap terms_;
};

std::ostream& operator<<(std::ostream& os, const BiPoly& p);

/// Substitutes X := x, L := lambda.
Sqrt2Number poly_eval(const BiPoly& p, const Sqrt2Number& x, const Sqrt2Number& lambda);

/// Substitutes X := shift by Horner reassembly in X.
BiPoly poly_subst_x(const BiPoly& p, const BiPoly& shift);

/// Substitutes L := lambda, leaving a polynomial in X.
BiPoly poly_subst_lambda(const BiPoly& p, const Sqrt2Number& lambda);

/// Drops every term with a positive power of L.
BiPoly poly_set_lambda_zero(const BiPoly& p);

/// [{"dx":..,"dl":..,"c":"..."}, ...] in (dx desc, dl desc) order.
nlohmann::json to_json(const BiPoly& p);
/// Throws std::invalid_argument on malformed input (bad coefficient text,
/// negative or repeated exponents, zero coefficients, wrong term order).
BiPoly bipoly_from_json(const nlohmann::json& j);

} // namespace fubini
