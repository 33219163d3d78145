#include "fubini/report.hpp"

#include <stdexcept>

namespace fubini {

std::string to_string(Status status) {
    switch (status) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::Skipped: return "skipped";
    }
    throw std::logic_error("unknown status");
}

Status parse_status(const std::string& text) {
    if (text == "pass") return Status::Pass;
    if (text == "fail") return Status::Fail;
    if (text == "skipped") return Status::Skipped;
    throw std::invalid_argument("unknown status '" + text + "'");
}

std::string serialize_value(const BiPoly& p) { return to_json(p).dump(); }
std::string serialize_value(const Sqrt2Number& x) { return x.to_string(); }
std::string serialize_value(const Rational& x) { return x.to_string(); }

nlohmann::json to_json(const IdentityReport& report) {
    nlohmann::json params = nlohmann::json::object();
    for (const auto& [k, v] : report.params) params[k] = v;
    nlohmann::json out = {
        {"identity_id", report.identity_id},
        {"params", std::move(params)},
        {"status", to_string(report.status)},
        {"expected_fail", report.expected_fail},
    };
    out["witness"] = report.witness ? nlohmann::json{{"lhs", report.witness->lhs}, {"rhs", report.witness->rhs}}
                                    : nlohmann::json(nullptr);
    return out;
}

IdentityReport identity_report_from_json(const nlohmann::json& j) {
    IdentityReport out;
    out.identity_id = j.at("identity_id").get<std::string>();
    for (const auto& [k, v] : j.at("params").items()) out.params[k] = v.get<std::string>();
    out.status = parse_status(j.at("status").get<std::string>());
    out.expected_fail = j.value("expected_fail", false);
    if (j.contains("witness") && !j["witness"].is_null())
        out.witness = Witness{j["witness"].at("lhs").get<std::string>(), j["witness"].at("rhs").get<std::string>()};
    if ((out.status == Status::Fail) != out.witness.has_value())
        throw std::invalid_argument("report for " + out.identity_id + ": witness must be present iff status is fail");
    return out;
}

} // namespace fubini
