#pragma once

// Exact scalars: arbitrary-precision rationals, the quadratic field Q(sqrt 2),
// and half-integer orders.

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace fubini {

using Integer = mpz_class;

/// Reduced fraction p/q with q > 0. Zero is 0/1.
class Rational {
public:
    Rational() = default;
    Rational(long value) : value_(value) {}
    Rational(const Integer& value) : value_(value) {}
    Rational(const Integer& num, const Integer& den);

    Integer num() const { return value_.get_num(); }
    Integer den() const { return value_.get_den(); }

    bool is_zero() const { return sgn(value_) == 0; }
    bool is_integer() const { return value_.get_den() == 1; }
    int sign() const { return sgn(value_); }

    Rational inverse() const;
    Rational pow(long exponent) const;

    Rational operator-() const;
    Rational& operator+=(const Rational& rhs);
    Rational& operator-=(const Rational& rhs);
    Rational& operator*=(const Rational& rhs);
    Rational& operator/=(const Rational& rhs);

    friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
    friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
    friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
    friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

    friend bool operator==(const Rational& lhs, const Rational& rhs) { return lhs.value_ == rhs.value_; }
    friend std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs);

    /// "p/q", or "p" when q == 1.
    std::string to_string() const;
    /// Accepts "p" or "p/q" with an optional leading sign; non-reduced input is reduced.
    static Rational parse(std::string_view text);

    // Post-hoc check of the canonical-form invariant.
    bool is_canonical() const;

private:
    explicit Rational(mpq_class value) : value_(std::move(value)) {}

    mpq_class value_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

/// a + b*sqrt(2) with a, b rational.
class Sqrt2Number {
public:
    Sqrt2Number() = default;
    Sqrt2Number(long a) : a_(a) {}
    Sqrt2Number(Rational a) : a_(std::move(a)) {}
    Sqrt2Number(Rational a, Rational b) : a_(std::move(a)), b_(std::move(b)) {}

    static Sqrt2Number sqrt2() { return {Rational(0), Rational(1)}; }

    const Rational& rational_part() const { return a_; }
    const Rational& sqrt2_part() const { return b_; }

    bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
    bool is_rational() const { return b_.is_zero(); }

    /// a^2 - 2b^2; nonzero for every nonzero element.
    Rational norm() const { return a_ * a_ - Rational(2) * b_ * b_; }
    Sqrt2Number conjugate() const { return {a_, -b_}; }
    /// Throws std::domain_error on zero.
    Sqrt2Number inverse() const;
    Sqrt2Number pow(long exponent) const;

    Sqrt2Number operator-() const { return {-a_, -b_}; }
    Sqrt2Number& operator+=(const Sqrt2Number& rhs);
    Sqrt2Number& operator-=(const Sqrt2Number& rhs);
    Sqrt2Number& operator*=(const Sqrt2Number& rhs);
    Sqrt2Number& operator/=(const Sqrt2Number& rhs);

    friend Sqrt2Number operator+(Sqrt2Number lhs, const Sqrt2Number& rhs) { return lhs += rhs; }
    friend Sqrt2Number operator-(Sqrt2Number lhs, const Sqrt2Number& rhs) { return lhs -= rhs; }
    friend Sqrt2Number operator*(Sqrt2Number lhs, const Sqrt2Number& rhs) { return lhs *= rhs; }
    friend Sqrt2Number operator/(Sqrt2Number lhs, const Sqrt2Number& rhs) { return lhs /= rhs; }

    friend bool operator==(const Sqrt2Number&, const Sqrt2Number&) = default;

    /// "p/q+r/s*s2" with zero components omitted; zero is "0".
    std::string to_string() const;
    static Sqrt2Number parse(std::string_view text);

private:
    Rational a_;
    Rational b_;
};

std::ostream& operator<<(std::ostream& os, const Sqrt2Number& x);

/// Half-integer stored as twice its value, so 2*alpha is always integral.
class HalfInt {
public:
    constexpr HalfInt() = default;
    static constexpr HalfInt from_twice(std::int64_t twice) { return HalfInt(twice); }
    static constexpr HalfInt integer(std::int64_t value) { return HalfInt(2 * value); }

    constexpr std::int64_t twice() const { return twice_; }
    constexpr bool is_integer() const { return twice_ % 2 == 0; }
    constexpr bool is_negative() const { return twice_ < 0; }
    Rational value() const { return Rational(Integer(static_cast<long>(twice_)), Integer(2)); }

    constexpr HalfInt operator-() const { return HalfInt(-twice_); }
    constexpr HalfInt operator+(HalfInt rhs) const { return HalfInt(twice_ + rhs.twice_); }
    constexpr HalfInt operator-(HalfInt rhs) const { return HalfInt(twice_ - rhs.twice_); }
    constexpr auto operator<=>(const HalfInt&) const = default;

    /// "3/2" or "2".
    std::string to_string() const;
    /// Accepts an integer "k" or "p/2"; "p/q" for any other q is rejected.
    static HalfInt parse(std::string_view text);

private:
    constexpr explicit HalfInt(std::int64_t twice) : twice_(twice) {}

    std::int64_t twice_ = 0;
};

inline constexpr HalfInt kHalf = HalfInt::from_twice(1);

std::ostream& operator<<(std::ostream& os, const HalfInt& h);

/// 2^alpha = 2^floor(alpha) * sqrt(2)^(2 alpha mod 2), exact in Q(sqrt 2).
Sqrt2Number two_pow(HalfInt alpha);

} // namespace fubini
