#include "fubini/bipoly.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace fubini {

BiPoly::BiPoly(Sqrt2Number constant) {
    if (!constant.is_zero()) terms_.emplace(Monomial{0, 0}, std::move(constant));
}

BiPoly BiPoly::monomial(Monomial m, Sqrt2Number c) {
    if (m.dx < 0 || m.dl < 0) throw std::invalid_argument("negative exponent in monomial");
    BiPoly out;
    if (!c.is_zero()) out.terms_.emplace(m, std::move(c));
    return out;
}

bool BiPoly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Monomial{0, 0});
}

Sqrt2Number BiPoly::constant_term() const { return coefficient({0, 0}); }

Sqrt2Number BiPoly::coefficient(Monomial m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Sqrt2Number() : it->second;
}

int BiPoly::degree_x() const {
    // Map order puts the largest dx first.
    return terms_.empty() ? 0 : terms_.begin()->first.dx;
}

int BiPoly::degree_l() const {
    int d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.dl);
    return d;
}

void BiPoly::add_term(const Monomial& m, const Sqrt2Number& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (inserted) return;
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

BiPoly BiPoly::operator-() const {
    BiPoly out = *this;
    for (auto& [m, c] : out.terms_) c = -c;
    return out;
}

BiPoly& BiPoly::operator+=(const BiPoly& rhs) {
    for (const auto& [m, c] : rhs.terms_) add_term(m, c);
    return *this;
}

BiPoly& BiPoly::operator-=(const BiPoly& rhs) {
    for (const auto& [m, c] : rhs.terms_) add_term(m, -c);
    return *this;
}

BiPoly operator*(const BiPoly& lhs, const BiPoly& rhs) {
    BiPoly out;
    for (const auto& [ml, cl] : lhs.terms_)
        for (const auto& [mr, cr] : rhs.terms_) out.add_term({ml.dx + mr.dx, ml.dl + mr.dl}, cl * cr);
    return out;
}

BiPoly& BiPoly::operator*=(const BiPoly& rhs) { return *this = *this * rhs; }

BiPoly& BiPoly::operator*=(const Sqrt2Number& scalar) {
    if (scalar.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, c] : terms_) c *= scalar;
    return *this;
}

BiPoly BiPoly::pow(unsigned exponent) const {
    BiPoly out(Sqrt2Number(1));
    BiPoly base = *this;
    while (exponent > 0) {
        if (exponent & 1u) out *= base;
        exponent >>= 1;
        if (exponent > 0) base *= base;
    }
    return out;
}

std::string BiPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        bool bare = m.dx == 0 && m.dl == 0;
        if (bare || !(c == Sqrt2Number(1))) os << '(' << c << ')';
        if (m.dx > 0) os << "X" << (m.dx > 1 ? "^" + std::to_string(m.dx) : "");
        if (m.dl > 0) os << "L" << (m.dl > 1 ? "^" + std::to_string(m.dl) : "");
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const BiPoly& p) { return os << p.to_string(); }

Sqrt2Number poly_eval(const BiPoly& p, const Sqrt2Number& x, const Sqrt2Number& lambda) {
    Sqrt2Number out;
    for (const auto& [m, c] : p.terms()) out += c * x.pow(m.dx) * lambda.pow(m.dl);
    return out;
}

BiPoly poly_subst_x(const BiPoly& p, const BiPoly& shift) {
    if (p.is_zero()) return p;
    // p = sum_k X^k q_k(L), reassembled as (...(q_K * shift + q_{K-1}) * shift + ...) + q_0.
    std::vector<BiPoly> by_x(static_cast<std::size_t>(p.degree_x()) + 1);
    for (const auto& [m, c] : p.terms()) by_x[m.dx] += BiPoly::monomial({0, m.dl}, c);
    BiPoly out = by_x.back();
    for (auto k = by_x.size() - 1; k-- > 0;) out = out * shift + by_x[k];
    return out;
}

BiPoly poly_subst_lambda(const BiPoly& p, const Sqrt2Number& lambda) {
    BiPoly out;
    for (const auto& [m, c] : p.terms()) out += BiPoly::monomial({m.dx, 0}, c * lambda.pow(m.dl));
    return out;
}

BiPoly poly_set_lambda_zero(const BiPoly& p) {
    BiPoly out;
    for (const auto& [m, c] : p.terms())
        if (m.dl == 0) out += BiPoly::monomial(m, c);
    return out;
}

nlohmann::json to_json(const BiPoly& p) {
    auto out = nlohmann::json::array();
    for (const auto& [m, c] : p.terms()) out.push_back({{"dx", m.dx}, {"dl", m.dl}, {"c", c.to_string()}});
    return out;
}

BiPoly bipoly_from_json(const nlohmann::json& j) {
    if (!j.is_array()) throw std::invalid_argument("polynomial JSON must be an array of terms");
    BiPoly out;
    bool have_prev = false;
    Monomial prev;
    for (const auto& term : j) {
        if (!term.is_object() || !term.contains("dx") || !term.contains("dl") || !term.contains("c") ||
            !term["dx"].is_number_integer() || !term["dl"].is_number_integer() || !term["c"].is_string())
            throw std::invalid_argument("polynomial term must be {dx:int, dl:int, c:string}");
        Monomial m{term["dx"].get<int>(), term["dl"].get<int>()};
        if (m.dx < 0 || m.dl < 0) throw std::invalid_argument("negative exponent in polynomial term");
        if (have_prev && !(m < prev)) throw std::invalid_argument("polynomial terms out of order or repeated");
        Sqrt2Number c = Sqrt2Number::parse(term["c"].get<std::string>());
        if (c.is_zero()) throw std::invalid_argument("zero coefficient stored in polynomial term");
        out += BiPoly::monomial(m, std::move(c));
        prev = m;
        have_prev = true;
    }
    return out;
}

} // namespace fubini
