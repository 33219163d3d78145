#pragma once

// Polynomial families defined by generating functions in t:
//
//   degenerate Fubini-type     2^a (2 - e_L(t))^{-2a} e_L(t)^X
//   Fubini-type                the same with L = 0
//   degenerate Apostol-Bernoulli of order m   (t / (g e_L(t) - 1))^m e_L(t)^X
//   degenerate Apostol-Euler of order m       (2 / (g e_L(t) + 1))^m e_L(t)^X
//
// where e_L(t)^y = (1 + L t)^{y/L}. Every table entry is n! [t^n] of the
// series, computed in exact arithmetic with L kept symbolic.

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "fubini/bipoly.hpp"
#include "fubini/numeric.hpp"
#include "fubini/report.hpp"

namespace fubini {

enum class Family { DegFubini, Fubini, DegApostolBernoulli, DegApostolEuler };

std::string_view family_name(Family family);
/// Accepts "deg-fubini", "fubini", "deg-apostol-bernoulli", "deg-apostol-euler".
Family parse_family(std::string_view name);
bool is_apostol(Family family);

struct FamilyTable {
    Family family = Family::DegFubini;
    /// alpha for the Fubini families; the integral order m for the Apostol ones.
    HalfInt order;
    /// Present for the Apostol families only.
    std::optional<Sqrt2Number> gamma;
    unsigned n_max = 0;
    std::vector<BiPoly> values;

    friend bool operator==(const FamilyTable&, const FamilyTable&) = default;
};

/// a_n^(alpha)(x; lambda), alpha a nonnegative half-integer.
FamilyTable degenerate_fubini(HalfInt alpha, unsigned n_max);

/// a_n^(alpha)(x): degenerate_fubini with L set to zero.
FamilyTable fubini_type(HalfInt alpha, unsigned n_max);

/// B_n^(m)(x; lambda; gamma). gamma must be nonzero; gamma = 1 cancels the
/// factor t explicitly before inverting.
FamilyTable deg_apostol_bernoulli(unsigned m, const Sqrt2Number& gamma, unsigned n_max);

/// E_n^(m)(x; lambda; gamma). gamma = -1 is rejected.
FamilyTable deg_apostol_euler(unsigned m, const Sqrt2Number& gamma, unsigned n_max);

/// Dispatches on family; Apostol families need an integral order and gamma.
FamilyTable make_family(Family family, HalfInt order, const std::optional<Sqrt2Number>& gamma, unsigned n_max);

/// 2^a sum_{k=0}^n C(n,k) sum_{i=0}^k <-2a>_i (-1)^i S(k,i) X^{n-k}.
BiPoly fubini_explicit_thm2(HalfInt alpha, unsigned n);

enum class ClosedForm {
    /// Faa di Bruno over the composition (2-u)^{-2a} o e_L(t), with the
    /// l/lambda closed form of B_{n,k}(1, 1-lambda, ...). Agrees with the
    /// generating function.
    Corrected,
    /// Term-for-term uncorrected form: 2^{alpha+k} in the denominator, lambda^{k-1}
    /// divisor, C(lambda l - 1, n - 1). Disagrees already at n = 1.
    Verbatim,
};

/// Degenerate Fubini-type number a_n^(alpha)(lambda) for rational lambda != 0, n >= 1.
Sqrt2Number fubini_numbers_closed_form(HalfInt alpha, unsigned n, const Rational& lambda,
                                       ClosedForm form = ClosedForm::Corrected);

/// Both sides of sum_k C(n,k) sum_i <2a>_i (-1)^i S(n-k,i) a_k(X) = 2^a X^n.
std::pair<BiPoly, BiPoly> fubini_recurrence_sides_thm3(HalfInt alpha, unsigned n);
IdentityReport fubini_recurrence_check_thm3(HalfInt alpha, unsigned n);

nlohmann::json to_json(const FamilyTable& table);
FamilyTable family_table_from_json(const nlohmann::json& j);

} // namespace fubini
