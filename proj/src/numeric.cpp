#include "fubini/numeric.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

namespace fubini {

namespace {

bool is_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

Integer parse_integer(std::string_view text) {
    std::string_view digits = text;
    if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) digits.remove_prefix(1);
    if (!is_digits(digits)) throw std::invalid_argument("malformed integer: '" + std::string(text) + "'");
    Integer out;
    out.set_str(std::string(digits), 10);
    if (text.front() == '-') out = -out;
    return out;
}

} // namespace

// ---------------------------------------------------------------------------
// Rational

Rational::Rational(const Integer& num, const Integer& den) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    value_ = mpq_class(num, den);
    value_.canonicalize();
}

Rational Rational::inverse() const {
    if (is_zero()) throw std::domain_error("inverse of rational zero");
    mpq_class out;
    mpq_inv(out.get_mpq_t(), value_.get_mpq_t());
    return Rational(std::move(out));
}

Rational Rational::pow(long exponent) const {
    if (exponent < 0) return inverse().pow(-exponent);
    Integer n, d;
    mpz_pow_ui(n.get_mpz_t(), value_.get_num_mpz_t(), static_cast<unsigned long>(exponent));
    mpz_pow_ui(d.get_mpz_t(), value_.get_den_mpz_t(), static_cast<unsigned long>(exponent));
    return Rational(n, d);
}

Rational Rational::operator-() const { return Rational(mpq_class(-value_)); }

Rational& Rational::operator+=(const Rational& rhs) {
    value_ += rhs.value_;
    return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
    value_ -= rhs.value_;
    return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
    value_ *= rhs.value_;
    return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
    if (rhs.is_zero()) throw std::domain_error("rational division by zero");
    value_ /= rhs.value_;
    return *this;
}

std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs) {
    int c = cmp(lhs.value_, rhs.value_);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

std::string Rational::to_string() const {
    if (is_integer()) return value_.get_num().get_str();
    return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rational Rational::parse(std::string_view text) {
    auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(parse_integer(text));
    auto den_text = text.substr(slash + 1);
    if (!is_digits(den_text)) throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
    Integer den;
    den.set_str(std::string(den_text), 10);
    if (den == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    return Rational(parse_integer(text.substr(0, slash)), den);
}

bool Rational::is_canonical() const {
    if (value_.get_den() <= 0) return false;
    Integer g;
    mpz_gcd(g.get_mpz_t(), value_.get_num_mpz_t(), value_.get_den_mpz_t());
    return g == 1 || (value_.get_num() == 0 && value_.get_den() == 1);
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

// ---------------------------------------------------------------------------
// Sqrt2Number

Sqrt2Number Sqrt2Number::inverse() const {
    if (is_zero()) throw std::domain_error("inverse of zero in Q(sqrt2)");
    Rational n = norm();
    return {a_ / n, -b_ / n};
}

Sqrt2Number Sqrt2Number::pow(long exponent) const {
    if (exponent < 0) return inverse().pow(-exponent);
    Sqrt2Number base = *this;
    Sqrt2Number out(1);
    while (exponent > 0) {
        if (exponent & 1) out *= base;
        exponent >>= 1;
        if (exponent > 0) base *= base;
    }
    return out;
}

Sqrt2Number& Sqrt2Number::operator+=(const Sqrt2Number& rhs) {
    a_ += rhs.a_;
    b_ += rhs.b_;
    return *this;
}

Sqrt2Number& Sqrt2Number::operator-=(const Sqrt2Number& rhs) {
    a_ -= rhs.a_;
    b_ -= rhs.b_;
    return *this;
}

Sqrt2Number& Sqrt2Number::operator*=(const Sqrt2Number& rhs) {
    if (rhs.is_rational()) {
        a_ *= rhs.a_;
        b_ *= rhs.a_;
        return *this;
    }
    Rational a = a_ * rhs.a_ + Rational(2) * b_ * rhs.b_;
    Rational b = a_ * rhs.b_ + b_ * rhs.a_;
    a_ = std::move(a);
    b_ = std::move(b);
    return *this;
}

Sqrt2Number& Sqrt2Number::operator/=(const Sqrt2Number& rhs) {
    if (rhs.is_zero()) throw std::domain_error("division by zero in Q(sqrt2)");
    return *this *= rhs.inverse();
}

std::string Sqrt2Number::to_string() const {
    if (b_.is_zero()) return a_.to_string();
    std::string out;
    if (!a_.is_zero()) {
        out = a_.to_string();
        out += b_.sign() < 0 ? "-" : "+";
        out += (b_.sign() < 0 ? -b_ : b_).to_string();
    } else {
        out = b_.to_string();
    }
    return out + "*s2";
}

Sqrt2Number Sqrt2Number::parse(std::string_view text) {
    constexpr std::string_view suffix = "*s2";
    if (text.size() < suffix.size() || text.substr(text.size() - suffix.size()) != suffix)
        return Sqrt2Number(Rational::parse(text));
    std::string_view body = text.substr(0, text.size() - suffix.size());
    auto split = body.find_last_of("+-");
    if (split == std::string_view::npos || split == 0) return {Rational(0), Rational::parse(body)};
    Rational a = Rational::parse(body.substr(0, split));
    std::string_view b_text = body.substr(split + 1);
    if (b_text.empty() || b_text.front() == '-' || b_text.front() == '+')
        throw std::invalid_argument("malformed Q(sqrt2) value: '" + std::string(text) + "'");
    Rational b = Rational::parse(b_text);
    return {a, body[split] == '-' ? -b : b};
}

std::ostream& operator<<(std::ostream& os, const Sqrt2Number& x) { return os << x.to_string(); }

// ---------------------------------------------------------------------------
// HalfInt

std::string HalfInt::to_string() const {
    if (is_integer()) return std::to_string(twice_ / 2);
    return std::to_string(twice_) + "/2";
}

HalfInt HalfInt::parse(std::string_view text) {
    Rational r = Rational::parse(text);
    if (r.den() != 1 && r.den() != 2)
        throw std::invalid_argument("order must be an integer or a half-integer: '" + std::string(text) + "'");
    Integer twice = r.num() * (2 / r.den());
    if (!twice.fits_slong_p()) throw std::invalid_argument("order out of range: '" + std::string(text) + "'");
    return HalfInt(twice.get_si());
}

std::ostream& operator<<(std::ostream& os, const HalfInt& h) { return os << h.to_string(); }

Sqrt2Number two_pow(HalfInt alpha) {
    // twice = 2q + r with r in {0, 1}
    std::int64_t twice = alpha.twice();
    std::int64_t r = ((twice % 2) + 2) % 2;
    std::int64_t q = (twice - r) / 2;
    Sqrt2Number out(Rational(2).pow(q));
    if (r == 1) out *= Sqrt2Number::sqrt2();
    return out;
}

} // namespace fubini
