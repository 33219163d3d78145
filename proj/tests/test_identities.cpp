#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "fubini/families.hpp"
#include "fubini/identities.hpp"

using namespace fubini;

namespace {

const std::vector<IdentityReport>& default_run() {
    static const std::vector<IdentityReport> reports = run_suite(SuiteConfig{});
    return reports;
}

SuiteConfig only(std::vector<std::string> ids, unsigned n_max = 10) {
    SuiteConfig config;
    config.only = std::move(ids);
    config.n_max = n_max;
    return config;
}

} // namespace

TEST_CASE("default suite: every failure is expected") {
    const auto& reports = default_run();
    REQUIRE(!reports.empty());
    CHECK(exit_status(reports) == 0);
    for (const auto& r : reports) {
        INFO(r.identity_id, " ", nlohmann::json(r.params).dump());
        CHECK(!r.unexpected_failure());
        CHECK((r.status == Status::Fail) == r.witness.has_value());
        if (r.expected_fail) CHECK(r.identity_id.ends_with("-verbatim"));
    }
}

TEST_CASE("default suite covers every registered identity") {
    std::set<std::string> seen;
    for (const auto& r : default_run()) seen.insert(r.identity_id);
    for (std::string_view id : identity_ids()) CHECK(seen.count(std::string(id)) == 1);
    for (const char* required : {"thm1", "thm2", "thm3", "thm5", "thm6", "thm7", "eq5", "eq11", "eq12", "eq16",
                                 "eq22", "eq23-verbatim", "eq27", "cf14-vs-bell", "cf15-vs-bell", "cf17-vs-cf15"})
        CHECK(seen.count(required) == 1);
    CHECK(std::is_sorted(identity_ids().begin(), identity_ids().end()));
}

TEST_CASE("corrected forms pass where the uncorrected ones fail") {
    const auto& reports = default_run();
    auto count = [&](std::string_view id, Status status) {
        return std::count_if(reports.begin(), reports.end(),
                             [&](const auto& r) { return r.identity_id == id && r.status == status; });
    };
    for (const char* id : {"thm1", "eq24", "eq27"}) {
        CHECK(count(id, Status::Pass) > 0);
        CHECK(count(id, Status::Fail) == 0);
    }
    CHECK(count("eq23-verbatim", Status::Pass) == 0);
    CHECK(count("eq23-verbatim", Status::Fail) > 0);
    CHECK(count("eq27-verbatim", Status::Pass) > 0);
    CHECK(count("eq27-verbatim", Status::Fail) > 0);
    for (const auto& r : reports) {
        if (r.identity_id != "eq27-verbatim") continue;
        bool odd = HalfInt::parse(r.params.at("alpha")).twice() % 2 != 0;
        CHECK((r.status == Status::Fail) == odd);
    }
}

TEST_CASE("uncorrected closed form witness at alpha = 1, n = 1, lambda = 1") {
    auto reports = run_suite(only({"eq23-verbatim"}));
    auto it = std::find_if(reports.begin(), reports.end(), [](const auto& r) {
        return r.params.at("alpha") == "1" && r.params.at("n") == "1" && r.params.at("lambda") == "1";
    });
    REQUIRE(it != reports.end());
    CHECK(it->status == Status::Fail);
    CHECK(it->expected_fail);
    REQUIRE(it->witness);
    CHECK(it->witness->lhs == "-1/2");
    CHECK(it->witness->rhs == "4");
}

TEST_CASE("runs are deterministic and ordered") {
    SuiteConfig config = only({"cf14-vs-bell", "eq5", "thm6"}, 6);
    auto first = run_suite(config);
    auto second = run_suite(config);
    CHECK(first == second);
    CHECK(render_json(first).dump() == render_json(second).dump());
    for (std::size_t i = 1; i < first.size(); ++i) CHECK(first[i - 1].identity_id <= first[i].identity_id);

    // n sorts numerically, not as text.
    auto thm2 = run_suite(only({"thm2"}, 10));
    std::vector<int> ns;
    for (const auto& r : thm2)
        if (r.params.at("alpha") == "0") ns.push_back(std::stoi(r.params.at("n")));
    CHECK(std::is_sorted(ns.begin(), ns.end()));
    CHECK(ns.back() == 10);
}

TEST_CASE("the seed changes only the random instances") {
    SuiteConfig a = only({"eq5"}, 6), b = a;
    b.seed = 7;
    auto ra = run_suite(a), rb = run_suite(b);
    CHECK(ra.size() == rb.size());
    CHECK(ra != rb);
    CHECK(exit_status(rb) == 0);
    auto thm2a = run_suite(only({"thm2"}, 6));
    SuiteConfig c = only({"thm2"}, 6);
    c.seed = 99;
    CHECK(run_suite(c) == thm2a);
}

TEST_CASE("n_max bounds the grids") {
    for (const auto& r : run_suite(only({"thm2", "thm3", "eq11"}, 4)))
        CHECK(std::stoi(r.params.at("n")) <= 4);
    auto eq27 = run_suite(only({"eq27"}, 2));
    CHECK(std::any_of(eq27.begin(), eq27.end(), [](const auto& r) { return r.status == Status::Skipped; }));
}

TEST_CASE("configuration validation") {
    SuiteConfig bad;
    bad.suite = "quick";
    CHECK_THROWS_AS(validate(bad), std::invalid_argument);
    bad = SuiteConfig{};
    bad.n_max = 13;
    CHECK_THROWS_AS(validate(bad), std::invalid_argument);
    bad.ceiling = kMaxCeiling + 1;
    CHECK_THROWS_AS(validate(bad), std::invalid_argument);
    bad = SuiteConfig{};
    bad.only = {"thm99"};
    CHECK_THROWS_WITH_AS(validate(bad), doctest::Contains("thm99"), std::invalid_argument);
    bad = SuiteConfig{};
    bad.lambdas.push_back(Rational(0));
    CHECK_THROWS_AS(run_suite(bad), std::invalid_argument);
    CHECK_NOTHROW(validate(SuiteConfig{}));
}

TEST_CASE("summary line and table") {
    std::vector<IdentityReport> none;
    CHECK(summary_line(none) == "0/0: 0 pass, 0 fail (0 expected), 0 skipped");
    CHECK(exit_status(none) == 0);

    std::vector<IdentityReport> one{{"eq5", {{"n", "2"}}, Status::Pass, std::nullopt, false}};
    CHECK(summary_line(one) == "1/1: 1 pass, 0 fail (0 expected), 0 skipped");

    one.push_back({"eq12", {}, Status::Fail, Witness{"1", "2"}, false});
    one.push_back({"eq23-verbatim", {}, Status::Fail, Witness{"3", "4"}, true});
    one.push_back({"eq27", {}, Status::Skipped, std::nullopt, false});
    CHECK(summary_line(one) == "1/4: 1 pass, 2 fail (1 expected), 1 skipped");
    CHECK(exit_status(one) == 1);
    one.erase(one.begin() + 1);
    CHECK(exit_status(one) == 0);

    std::string table = render_table(one);
    CHECK(table.find("xfail") != std::string::npos);
    CHECK(table.find("lhs=3 rhs=4") != std::string::npos);
    CHECK(table.ends_with(summary_line(one) + "\n"));
}

TEST_CASE("report JSON round trip") {
    SuiteConfig config = only({"eq23-verbatim", "eq12", "eq27"}, 4);
    auto reports = run_suite(config);
    nlohmann::json doc = nlohmann::json::parse(render_json(reports).dump());
    REQUIRE(doc.size() == reports.size());
    for (std::size_t i = 0; i < reports.size(); ++i) CHECK(identity_report_from_json(doc[i]) == reports[i]);

    auto fail_without_witness = nlohmann::json::parse(
        R"({"identity_id":"eq5","params":{},"status":"fail","expected_fail":false,"witness":null})");
    CHECK_THROWS_AS(identity_report_from_json(fail_without_witness), std::invalid_argument);
    auto pass_with_witness = nlohmann::json::parse(
        R"({"identity_id":"eq5","params":{},"status":"pass","witness":{"lhs":"1","rhs":"1"}})");
    CHECK_THROWS_AS(identity_report_from_json(pass_with_witness), std::invalid_argument);
    CHECK_THROWS_AS(parse_status("passed"), std::invalid_argument);
}

TEST_CASE("compare_sides fills the witness on mismatch") {
    auto ok = compare_sides("x", {}, Rational(1, 2), Rational(2, 4));
    CHECK(ok.status == Status::Pass);
    CHECK(!ok.witness);
    auto bad = compare_sides("x", {}, BiPoly::X(), BiPoly::L());
    CHECK(bad.status == Status::Fail);
    REQUIRE(bad.witness);
    CHECK(bad.witness->lhs == R"([{"c":"1","dl":0,"dx":1}])");
    CHECK(bad.witness->rhs == R"([{"c":"1","dl":1,"dx":0}])");
}
