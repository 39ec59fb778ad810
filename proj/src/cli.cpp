#include "smallcover/cli.hpp"

#include <cmath>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "smallcover/asymptotics.hpp"
#include "smallcover/correspondence.hpp"
#include "smallcover/counting.hpp"
#include "smallcover/text_format.hpp"
#include "smallcover/verify.hpp"

namespace smallcover::cli {

namespace {

using json = nlohmann::ordered_json;

class UsageError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct GlobalFlags {
    std::string format;  // empty: the command's default
    unsigned jobs = 1;
    std::size_t enum_cap = kDefaultEnumerationCap;

    std::string format_or(const std::string& fallback) const { return format.empty() ? fallback : format; }
};

std::string fixed(double v, int digits) {
    std::ostringstream s;
    s << std::fixed << std::setprecision(digits) << v;
    return s.str();
}

// Scientific rendering of exp(log_value) that works beyond double range.
std::string from_log(double log_value, int digits) {
    const double log10_value = log_value / std::log(10.0);
    double exponent = std::floor(log10_value);
    double mantissa = std::pow(10.0, log10_value - exponent);
    // Rounding can push the mantissa to 10.0.
    if (std::stod(fixed(mantissa, digits)) >= 10.0) {
        mantissa /= 10.0;
        exponent += 1.0;
    }
    std::string exp_digits = std::to_string(static_cast<long long>(std::fabs(exponent)));
    if (exp_digits.size() < 2) exp_digits.insert(0, "0");
    return fixed(mantissa, digits) + "e" + (exponent < 0 ? "-" : "+") + exp_digits;
}

void require_format(const std::string& format, std::initializer_list<const char*> allowed,
                    const char* command) {
    for (const char* a : allowed) {
        if (format == a) return;
    }
    throw UsageError(std::string("--format ") + format + " is not supported by '" + command + "'");
}

int cmd_count(const GlobalFlags& g, const std::string& kind, std::size_t n, std::ostream& out) {
    const std::string format = g.format_or("text");
    require_format(format, {"text", "json", "csv"}, "count");
    const BigCount value = kind == "r" ? robinson_R(n) : orientable_O(n);
    if (format == "json") {
        json j;
        j["kind"] = kind;
        j["n"] = n;
        j["value"] = value.str();
        out << j.dump() << "\n";
    } else if (format == "csv") {
        out << "kind,n,value\n" << kind << "," << n << "," << value << "\n";
    } else {
        out << value << "\n";
    }
    return kSuccess;
}

int cmd_table(const GlobalFlags& g, std::size_t max_n, std::ostream& out) {
    const std::string format = g.format_or("text");
    require_format(format, {"text", "json", "csv"}, "table");
    const auto rows = sequence_table(max_n);
    if (format == "json") {
        json j;
        j["max_n"] = max_n;
        auto& arr = j["rows"] = json::array();
        for (const auto& row : rows) arr.push_back({{"n", row.n}, {"R", row.r.str()}, {"O", row.o.str()}});
        out << j.dump(2) << "\n";
    } else if (format == "csv") {
        out << "n,R_n,O_n\n";
        for (const auto& row : rows) out << row.n << "," << row.r << "," << row.o << "\n";
    } else {
        const std::size_t width = std::max<std::size_t>(3, rows.back().r.str().size());
        out << std::setw(3) << "n" << "  " << std::setw(static_cast<int>(width)) << "R_n" << "  "
            << std::setw(static_cast<int>(width)) << "O_n" << "\n";
        for (const auto& row : rows) {
            out << std::setw(3) << row.n << "  " << std::setw(static_cast<int>(width)) << row.r.str()
                << "  " << std::setw(static_cast<int>(width)) << row.o.str() << "\n";
        }
    }
    return kSuccess;
}

int cmd_enumerate(const GlobalFlags& g, std::size_t n, bool orientable_only, bool matrices,
                  std::ostream& out) {
    const std::string format = g.format_or("text");
    require_format(format, {"text", "json"}, "enumerate");
    std::uint64_t count = 0;
    json graphs = json::array();
    for (const Digraph& graph : enumerate_acyclic(n, g.enum_cap)) {
        if (orientable_only && !all_out_degrees_even(graph)) continue;
        ++count;
        if (format == "json") {
            json item;
            item["code"] = encode(graph);
            auto& edges = item["edges"] = json::array();
            for (const auto& [u, v] : graph.edges()) edges.push_back({u, v});
            if (matrices) {
                auto& rows = item["matrix"] = json::array();
                const BitMatrix m = phi(graph);
                std::istringstream lines(format_matrix(m));
                for (std::string line; std::getline(lines, line);) rows.push_back(line);
            }
            graphs.push_back(std::move(item));
        } else {
            out << encode(graph) << ":";
            for (const auto& [u, v] : graph.edges()) out << " " << u << "->" << v;
            if (matrices) {
                const BitMatrix m = phi(graph);
                out << " | phi:";
                for (std::size_t i = 0; i < n; ++i) {
                    out << (i == 0 ? " " : "/");
                    for (std::size_t j = 0; j < n; ++j) out << (m.at(i, j) ? '1' : '0');
                }
            }
            out << "\n";
        }
    }
    if (format == "json") {
        json j;
        j["n"] = n;
        j["orientable_only"] = orientable_only;
        j["graphs"] = std::move(graphs);
        j["count"] = std::to_string(count);
        out << j.dump(2) << "\n";
    } else {
        out << "count: " << count << "\n";
    }
    return kSuccess;
}

int cmd_verify(const GlobalFlags& g, const VerifyOptions& base, std::ostream& out, std::ostream& err) {
    const std::string format = g.format_or("json");
    require_format(format, {"text", "json"}, "verify");
    VerifyOptions options = base;
    options.brute_force.jobs = g.jobs;
    options.brute_force.enumeration_cap = g.enum_cap;
    const VerifyReport report = run_verification(options);
    if (format == "json") {
        out << to_json(report, options).dump(2) << "\n";
    } else {
        for (const auto& c : report.checks) {
            out << (c.pass ? "PASS" : "FAIL") << "  " << c.identity;
            if (c.n_max) out << "  [n<=" << *c.n_max << "]";
            if (c.order) out << "  [order " << *c.order << "]";
            if (c.first_failure) out << "  first failure: " << *c.first_failure;
            out << "\n";
        }
    }
    if (const VerifyCheck* failed = report.first_failed()) {
        err << "verification failed: " << failed->identity;
        if (failed->first_failure) err << " (" << *failed->first_failure << ")";
        err << "\n";
        return kVerificationFailed;
    }
    return kSuccess;
}

int cmd_constants(const GlobalFlags& g, int digits, std::size_t truncation, double tolerance,
                  std::ostream& out) {
    const std::string format = g.format_or("text");
    require_format(format, {"text", "json"}, "constants");
    const AsymptoticConstants c = compute_constants(truncation, tolerance);
    const std::vector<std::pair<const char*, double>> values = {
        {"alpha", c.alpha}, {"C", c.C}, {"K", c.K}, {"K/C", c.ratio_factor}};
    if (format == "json") {
        json j;
        for (const auto& [name, v] : values) j[name] = fixed(v, digits);
        j["one_minus_F_2alpha"] = fixed(c.ratio_closed_form, digits);
        j["truncation"] = c.truncation;
        j["tolerance"] = c.tolerance;
        j["iterations"] = c.iterations;
        out << j.dump(2) << "\n";
    } else {
        for (const auto& [name, v] : values) {
            out << std::left << std::setw(6) << name << std::right << " = " << fixed(v, digits) << "\n";
        }
        out << "# truncation " << c.truncation << ", tolerance " << c.tolerance << ", newton iterations "
            << c.iterations << "\n";
    }
    return kSuccess;
}

int cmd_asymptotic(const GlobalFlags& g, std::size_t n, int digits, std::ostream& out) {
    const std::string format = g.format_or("text");
    require_format(format, {"text", "json"}, "asymptotic");
    const AsymptoticConstants c = compute_constants();
    const BigCount r = robinson_R(n);
    const BigCount o = orientable_O(n);
    const double log_r_est = asymptotic_log_R(n, c);
    const double log_o_est = asymptotic_log_O(n, c);
    const double r_ratio = std::exp(log_big(r) - log_r_est);
    const double o_ratio = std::exp(log_big(o) - log_o_est);
    const double exact_fraction = std::exp(log_big(o) - log_big(r));
    const double estimated_fraction = ratio_estimate(n, c);

    if (format == "json") {
        json j;
        j["n"] = n;
        j["R_exact"] = r.str();
        j["R_estimate"] = from_log(log_r_est, digits);
        j["R_exact_over_estimate"] = fixed(r_ratio, digits);
        j["O_exact"] = o.str();
        j["O_estimate"] = from_log(log_o_est, digits);
        j["O_exact_over_estimate"] = fixed(o_ratio, digits);
        j["O_over_R_exact"] = from_log(std::log(exact_fraction), digits);
        j["O_over_R_estimate"] = from_log(std::log(estimated_fraction), digits);
        out << j.dump(2) << "\n";
    } else {
        out << "n = " << n << "\n";
        out << "R_n exact     " << r << "\n";
        out << "R_n estimate  " << from_log(log_r_est, digits) << "  (exact/estimate "
            << fixed(r_ratio, digits) << ")\n";
        out << "O_n exact     " << o << "\n";
        out << "O_n estimate  " << from_log(log_o_est, digits) << "  (exact/estimate "
            << fixed(o_ratio, digits) << ")\n";
        out << "O_n/R_n exact     " << from_log(std::log(exact_fraction), digits) << "\n";
        out << "O_n/R_n estimate  " << from_log(std::log(estimated_fraction), digits)
            << "  ((K/C) / 2^n)\n";
    }
    return kSuccess;
}

} // namespace

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err, const Hooks& hooks) {
    CLI::App app{"Exact counts of orientable small covers over cubes (acyclic digraphs with even "
                 "out-degrees), with brute-force oracles and asymptotic constants",
                 "smallcover"};
    app.require_subcommand(1);
    app.fallthrough();

    GlobalFlags g;
    app.add_option("--format", g.format, "Output format")
        ->check(CLI::IsMember({"text", "json", "csv"}));
    app.add_option("--jobs", g.jobs, "Worker threads for brute-force counting")
        ->check(CLI::Range(1u, 1024u));
    app.add_option("--enum-cap", g.enum_cap, "Largest n allowed for exhaustive enumeration")
        ->check(CLI::Range(std::size_t{0}, kMaxEnumerableVertices));

    std::string kind;
    std::size_t count_n = 0;
    auto* count = app.add_subcommand("count", "Print R_n (kind r) or O_n (kind o)");
    count->add_option("kind", kind, "r or o")->required()->check(CLI::IsMember({"r", "o"}));
    count->add_option("--n", count_n, "Number of vertices / cube dimension")->required();

    std::size_t table_max = 0;
    auto* table = app.add_subcommand("table", "Print n, R_n, O_n for n = 0..max-n");
    table->add_option("--max-n", table_max)->required();

    std::size_t enum_n = 0;
    bool orientable_only = false;
    bool matrices = false;
    auto* enumerate = app.add_subcommand("enumerate", "List acyclic digraphs in code order");
    enumerate->add_option("--n", enum_n)->required();
    enumerate->add_flag("--orientable", orientable_only, "Only digraphs with all out-degrees even");
    enumerate->add_flag("--matrices", matrices, "Also print phi(G)");

    VerifyOptions verify_options;
    verify_options.source = hooks.source;
    auto* verify = app.add_subcommand("verify", "Check closed forms and identities against oracles");
    verify->add_option("--n-max", verify_options.n_max, "Largest n for brute-force checks");
    verify->add_option("--series-order,--order", verify_options.series_order,
                       "Truncation order for series identities");
    verify->add_flag("--series", verify_options.series_only, "Only run the series identities");

    int digits = 6;
    std::size_t truncation = kDefaultTruncation;
    double tolerance = kDefaultNewtonTolerance;
    auto* constants = app.add_subcommand("constants", "Print alpha, C, K and K/C");
    constants->add_option("--digits", digits)->check(CLI::Range(0, 17));
    constants->add_option("--truncation", truncation)->check(CLI::Range(std::size_t{25}, std::size_t{200}));
    constants->add_option("--tol", tolerance)->check(CLI::Range(1e-14, 1e-3));

    std::size_t asym_n = 0;
    int asym_digits = 6;
    auto* asymptotic = app.add_subcommand("asymptotic", "Compare asymptotic estimates with exact values");
    asymptotic->add_option("--n", asym_n)->required();
    asymptotic->add_option("--digits", asym_digits)->check(CLI::Range(0, 17));

    std::vector<std::string> rest(args.begin() + (args.empty() ? 0 : 1), args.end());
    std::reverse(rest.begin(), rest.end());
    try {
        app.parse(rest);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err) == 0 ? kSuccess : kUsageError;
    }

    try {
        if (*count) return cmd_count(g, kind, count_n, out);
        if (*table) return cmd_table(g, table_max, out);
        if (*enumerate) return cmd_enumerate(g, enum_n, orientable_only, matrices, out);
        if (*verify) return cmd_verify(g, verify_options, out, err);
        if (*constants) return cmd_constants(g, digits, truncation, tolerance, out);
        if (*asymptotic) return cmd_asymptotic(g, asym_n, asym_digits, out);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return kUsageError;
    } catch (const std::out_of_range& e) {
        err << "error: " << e.what() << "\n";
        return kUsageError;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kUsageError;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kVerificationFailed;
    }
    return kUsageError;
}

} // namespace smallcover::cli
