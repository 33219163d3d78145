#pragma once

// Exact verification of every identity over fixed parameter grids.

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "fubini/numeric.hpp"
#include "fubini/report.hpp"

namespace fubini {

struct SuiteConfig {
    /// Only "full" is defined; every registered identity runs unless `only` narrows it.
    std::string suite = "full";
    /// Upper bound on the index n of every grid. The Bell brute-force grids stop at 8.
    unsigned n_max = 10;
    unsigned ceiling = 12;
    /// Seed for the randomized scaling-law instances.
    std::uint64_t seed = 42;
    unsigned random_instances = 20;
    /// Rational lambda values for the Bell closed forms; must be nonzero.
    std::vector<Rational> lambdas = {Rational(1), Rational(1, 2), Rational(-1, 3), Rational(2), Rational(5, 7)};
    /// Identity ids to run; empty means all.
    std::vector<std::string> only;
};

inline constexpr unsigned kMaxCeiling = 24;

/// Every identity id the suite knows, in canonical order.
std::span<const std::string_view> identity_ids();

/// Throws std::invalid_argument describing the first problem found.
void validate(const SuiteConfig& config);

/// One report per (identity, parameter point), sorted by identity id then
/// parameters. Deterministic for a given config.
std::vector<IdentityReport> run_suite(const SuiteConfig& config);

nlohmann::json render_json(std::span<const IdentityReport> reports);
/// Fixed-width table, one line per report, followed by the summary line.
std::string render_table(std::span<const IdentityReport> reports);
/// "<pass>/<total>: <p> pass, <f> fail (<x> expected), <s> skipped".
std::string summary_line(std::span<const IdentityReport> reports);
/// 0 iff no failure outside the expected-fail set, else 1.
int exit_status(std::span<const IdentityReport> reports);

} // namespace fubini
