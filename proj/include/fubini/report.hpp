#pragma once

#include <map>
#include <optional>
#include <string>

#include <nlohmann/json.hpp>

#include "fubini/bipoly.hpp"
#include "fubini/numeric.hpp"

namespace fubini {

enum class Status { Pass, Fail, Skipped };

std::string to_string(Status status);
Status parse_status(const std::string& text);

/// Serialized left and right sides of a failed comparison.
struct Witness {
    std::string lhs;
    std::string rhs;

    friend bool operator==(const Witness&, const Witness&) = default;
};

/// One identity checked at one parameter point. A witness is present iff the
/// status is Fail. expected_fail marks points where an uncorrected formula is
/// known to disagree with the generating function.
struct IdentityReport {
    std::string identity_id;
    std::map<std::string, std::string> params;
    Status status = Status::Skipped;
    std::optional<Witness> witness;
    bool expected_fail = false;

    bool unexpected_failure() const { return status == Status::Fail && !expected_fail; }

    friend bool operator==(const IdentityReport&, const IdentityReport&) = default;
};

std::string serialize_value(const BiPoly& p);
std::string serialize_value(const Sqrt2Number& x);
std::string serialize_value(const Rational& x);

/// Exact comparison of lhs and rhs; the witness is filled on mismatch.
template <typename T>
IdentityReport compare_sides(std::string id, std::map<std::string, std::string> params, const T& lhs, const T& rhs) {
    IdentityReport out{std::move(id), std::move(params), Status::Pass, std::nullopt, false};
    if (!(lhs == rhs)) {
        out.status = Status::Fail;
        out.witness = Witness{serialize_value(lhs), serialize_value(rhs)};
    }
    return out;
}

nlohmann::json to_json(const IdentityReport& report);
IdentityReport identity_report_from_json(const nlohmann::json& j);

} // namespace fubini
