#include "fubini/cli.hpp"

#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>

#include "fubini/combinatorics.hpp"
#include "fubini/families.hpp"
#include "fubini/identities.hpp"

namespace fubini::cli {

namespace {

struct CliConfig {
    std::string family;
    std::string alpha = "1";
    std::string gamma = "1";
    unsigned n_max = 10;
    unsigned n = 0;
    unsigned k = 0;
    std::string lambda = "symbolic";
    std::optional<std::string> x;
    std::string format = "json";
    std::string args;
    std::string suite = "full";
    std::uint64_t seed = 42;
    std::vector<std::string> only;
    std::string output;
};

/// Parsed and checked family parameters.
struct FamilyRequest {
    Family family;
    HalfInt order;
    std::optional<Sqrt2Number> gamma;
    std::optional<Sqrt2Number> lambda;
    std::optional<Sqrt2Number> x;
    bool csv = false;
};

constexpr unsigned kMaxStirling = 2000;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

FamilyRequest check_family_request(const CliConfig& config, unsigned n_max) {
    FamilyRequest req{};
    try {
        req.family = parse_family(config.family);
        req.order = HalfInt::parse(config.alpha);
        if (is_apostol(req.family)) req.gamma = Sqrt2Number::parse(config.gamma);
        if (config.lambda != "symbolic") req.lambda = Sqrt2Number(Rational::parse(config.lambda));
        if (config.x) req.x = Sqrt2Number(Rational::parse(*config.x));
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    if (req.order.is_negative()) throw UsageError("--alpha must be nonnegative");
    if (is_apostol(req.family) && !req.order.is_integer())
        throw UsageError("Apostol families take an integral order, got " + req.order.to_string());
    if (req.family == Family::DegApostolEuler && *req.gamma == Sqrt2Number(-1))
        throw UsageError("--gamma -1 is not allowed for deg-apostol-euler");
    if (req.family == Family::DegApostolBernoulli && req.gamma->is_zero())
        throw UsageError("--gamma 0 is not allowed for deg-apostol-bernoulli");
    if (n_max > kMaxOrder) throw UsageError("order " + std::to_string(n_max) + " exceeds " + std::to_string(kMaxOrder));
    req.csv = config.format == "csv";
    bool needs_lambda = req.family != Family::Fubini;
    if (req.csv && ((needs_lambda && !req.lambda) || !req.x))
        throw UsageError(needs_lambda ? "csv output needs a rational --lambda and --x" : "csv output needs --x");
    return req;
}

// Applies whatever substitutions were requested; a fully evaluated value
// becomes a string, anything else stays a polynomial.
nlohmann::json render_entry(const BiPoly& p, const FamilyRequest& req) {
    BiPoly q = p;
    if (req.lambda) q = poly_subst_lambda(q, *req.lambda);
    if (req.x) q = poly_subst_x(q, BiPoly(*req.x));
    if ((req.lambda || req.family == Family::Fubini) && req.x) return q.constant_term().to_string();
    return to_json(q);
}

std::string entry_text(const BiPoly& p, const FamilyRequest& req) {
    auto j = render_entry(p, req);
    return j.is_string() ? j.get<std::string>() : j.dump();
}

std::string run_table(const CliConfig& config) {
    FamilyRequest req = check_family_request(config, config.n_max);
    FamilyTable table = make_family(req.family, req.order, req.gamma, config.n_max);
    std::ostringstream os;
    if (req.csv) {
        os << "n,value\n";
        for (unsigned n = 0; n <= table.n_max; ++n) os << n << ',' << entry_text(table.values[n], req) << '\n';
        return os.str();
    }
    nlohmann::json doc = to_json(table);
    if (req.lambda || req.x) {
        nlohmann::json values = nlohmann::json::array();
        for (const auto& v : table.values) values.push_back(render_entry(v, req));
        doc["values"] = std::move(values);
        if (req.family == Family::Fubini) doc["lambda"] = "0";
        else doc["lambda"] = req.lambda ? req.lambda->to_string() : "symbolic";
        if (req.x) doc["x"] = req.x->to_string();
    }
    os << doc.dump() << '\n';
    return os.str();
}

std::string run_value(const CliConfig& config) {
    FamilyRequest req = check_family_request(config, config.n);
    FamilyTable table = make_family(req.family, req.order, req.gamma, config.n);
    const BiPoly& v = table.values[config.n];
    if (req.csv) return "n,value\n" + std::to_string(config.n) + "," + entry_text(v, req) + "\n";
    return render_entry(v, req).dump() + "\n";
}

std::string run_bell(const CliConfig& config) {
    std::vector<Sqrt2Number> xs;
    try {
        std::stringstream ss(config.args);
        for (std::string item; std::getline(ss, item, ',');) xs.push_back(Sqrt2Number::parse(item));
        return bell_partial<Sqrt2Number>(config.n, config.k, xs).to_string() + "\n";
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
}

std::string run_stirling(const CliConfig& config) {
    if (config.n > kMaxStirling) throw UsageError("--n exceeds " + std::to_string(kMaxStirling));
    return stirling2(config.n, config.k).get_str() + "\n"; }

int run_verify(const CliConfig& config, std::string& text, std::ostream& err) {
    SuiteConfig suite;
    suite.suite = config.suite;
    suite.n_max = config.n_max;
    suite.seed = config.seed;
    suite.only = config.only;
    try {
        validate(suite);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    auto reports = run_suite(suite);
    text = config.format == "table" ? render_table(reports) : render_json(reports).dump(2) + "\n";
    err << summary_line(reports) << '\n';
    return exit_status(reports);
}

void add_family_options(CLI::App& sub, CliConfig& config) {
    sub.add_option("--family", config.family, "deg-fubini | fubini | deg-apostol-bernoulli | deg-apostol-euler")
        ->required();
    sub.add_option("--alpha", config.alpha, "order: integer or p/2 (integral for Apostol families)");
    sub.add_option("--gamma", config.gamma, "Apostol parameter in Q(sqrt2), e.g. 1/2 or 1+1*s2");
    sub.add_option("--lambda", config.lambda, "'symbolic' or a rational value");
    sub.add_option("--x", config.x, "rational value substituted for x");
    sub.add_option("--format", config.format)->check(CLI::IsMember({"json", "csv"}));
    sub.add_option("--output", config.output, "write the result here instead of standard output");
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CliConfig config;
    CLI::App app{"Exact degenerate Fubini-type, Apostol-Bernoulli and Apostol-Euler polynomials", "fubini"};
    app.require_subcommand(1);

    auto* table = app.add_subcommand("table", "tabulate a polynomial family for n = 0..n-max");
    add_family_options(*table, config);
    table->add_option("--n-max", config.n_max);

    auto* value = app.add_subcommand("value", "one entry of a polynomial family");
    add_family_options(*value, config);
    value->add_option("--n", config.n)->required();

    auto* bell = app.add_subcommand("bell", "partial Bell polynomial B_{n,k} at given arguments");
    bell->add_option("--n", config.n)->required();
    bell->add_option("--k", config.k)->required();
    bell->add_option("--args", config.args, "comma-separated x1,x2,... in Q(sqrt2)");

    auto* stirling = app.add_subcommand("stirling", "Stirling number of the second kind S(n,k)");
    stirling->add_option("--n", config.n)->required();
    stirling->add_option("--k", config.k)->required();

    auto* verify = app.add_subcommand("verify", "run the identity verification suite");
    verify->add_option("--suite", config.suite);
    verify->add_option("--n-max", config.n_max);
    verify->add_option("--seed", config.seed);
    verify->add_option("--only", config.only, "restrict to these identity ids");
    verify->add_option("--format", config.format)->check(CLI::IsMember({"json", "table"}));
    verify->add_option("--output", config.output);

    std::vector<const char*> argv{"fubini"};
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err) == 0 ? kExitOk : kExitUsage;
    }

    std::string text;
    int status = kExitOk;
    try {
        if (*table) text = run_table(config);
        else if (*value) text = run_value(config);
        else if (*bell) text = run_bell(config);
        else if (*stirling) text = run_stirling(config);
        else status = run_verify(config, text, err);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }

    if (config.output.empty()) {
        out << text;
    } else {
        std::ofstream file(config.output, std::ios::binary);
        if (!(file << text)) {
            err << "error: cannot write " << config.output << '\n';
            return kExitUsage;
        }
    }
    return status;
}

} // namespace fubini::cli
