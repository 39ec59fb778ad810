// End-to-end acceptance run: one PASS/FAIL line per criterion, nonzero exit if
// any criterion fails. `--long` adds the n = 6 brute-force comparison.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include "smallcover/asymptotics.hpp"
#include "smallcover/cli.hpp"
#include "smallcover/correspondence.hpp"
#include "smallcover/counting.hpp"
#include "smallcover/series.hpp"

using namespace smallcover;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;

    void require(bool ok, const std::string& what) {
        if (!ok && pass) {
            pass = false;
            detail = what;
        }
    }
};

struct Criterion {
    int id;
    std::string title;
    double time_limit_seconds;
    std::function<Outcome()> body;
};

std::string fmt(double v, int digits = 6) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", digits, v);
    return buf;
}

Outcome exact_table() {
    Outcome o;
    const std::vector<BigCount> r = {1, 3, 25, 543, 29281, 3781503, 1138779265};
    const std::vector<BigCount> orient = {1, 1, 4, 43, 1156, 74581, 11226874};
    for (std::size_t n = 1; n <= 7; ++n) {
        o.require(robinson_R(n) == r[n - 1], "R_" + std::to_string(n) + " = " + robinson_R(n).str());
        o.require(orientable_O(n) == orient[n - 1], "O_" + std::to_string(n) + " = " + orientable_O(n).str());
    }
    if (o.pass) o.detail = "R_1..R_7 and O_1..O_7 exact";
    return o;
}

Outcome oracle_equivalence(std::size_t max_n) {
    Outcome o;
    for (std::size_t n = 0; n <= max_n; ++n) {
        BruteForceOptions opts;
        opts.enumeration_cap = std::max<std::size_t>(max_n, kDefaultEnumerationCap);
        opts.jobs = n >= 6 ? std::max(1u, std::thread::hardware_concurrency()) : 1;
        const RangeTally t = tally_all(n, opts);
        o.require(robinson_R(n) == t.acyclic, "n=" + std::to_string(n) + ": acyclic " + std::to_string(t.acyclic));
        o.require(orientable_O(n) == t.orientable,
                  "n=" + std::to_string(n) + ": orientable " + std::to_string(t.orientable));
    }
    if (o.pass) o.detail = "brute force = closed form for n <= " + std::to_string(max_n);
    return o;
}

Outcome bijection() {
    Outcome o;
    for (std::size_t n = 0; n <= 4; ++n) {
        const BijectionCheck b = check_bijection(n);
        o.require(b.pass(), "n=" + std::to_string(n) + ": " + b.counterexample.value_or("image != M(n)"));
        o.require(b.image_size == b.acyclic, "n=" + std::to_string(n) + ": phi not injective");
    }
    o.require(phi(figure1_graph()) == figure1_matrix(), "figure graph does not map to figure matrix");
    if (o.pass) o.detail = "phi(acyclic) = M(n) for n <= 4; figure example bit-exact";
    return o;
}

Outcome orientability() {
    Outcome o;
    std::uint64_t graphs = 0;
    for (std::size_t n = 0; n <= 4; ++n) {
        const auto bad = orientability_counterexample(n);
        o.require(!bad, "n=" + std::to_string(n) + ": digraph code " + std::to_string(bad.value_or(0)));
        graphs += digraph_count(n);
    }
    if (o.pass) o.detail = std::to_string(graphs) + " digraphs checked";
    return o;
}

Outcome series_identities() {
    Outcome o;
    const std::size_t order = 12;
    for (const IdentityCheck& c : verify_identities(order)) {
        o.require(c.pass, c.identity + " fails at coefficient " + std::to_string(c.first_failure.value_or(0)));
    }
    const ChromSeries from_identity = O_series_from_identity(order);
    for (std::size_t n = 1; n <= order; ++n) {
        o.require(denominator(from_identity[n]) == 1, "non-integral O coefficient at " + std::to_string(n));
        o.require(numerator(from_identity[n]) == orientable_O(n), "O coefficient mismatch at " + std::to_string(n));
    }
    if (o.pass) o.detail = "exact through order 12";
    return o;
}

Outcome derivative_identity() {
    Outcome o;
    for (std::size_t n = 1; n <= 40; ++n) {
        o.require(derivative_identity_holds(n), "fails at n=" + std::to_string(n));
    }
    if (o.pass) o.detail = "n = 1..40";
    return o;
}

Outcome constants() {
    Outcome o;
    const AsymptoticConstants c = compute_constants();
    o.require(std::fabs(c.alpha - (-1.488)) <= 5e-3, "alpha = " + fmt(c.alpha, 10));
    o.require(std::fabs(c.C - 1.739) <= 5e-3, "C = " + fmt(c.C, 10));
    o.require(std::fabs(c.K - 2.197) <= 5e-3, "K = " + fmt(c.K, 10));
    o.require(std::fabs(c.ratio_factor - 1.262) <= 5e-3, "K/C = " + fmt(c.ratio_factor, 10));
    const double exact = std::exp(log_big(orientable_O(7)) - log_big(robinson_R(7)));
    const double rel = std::fabs(ratio_estimate(7, c) / exact - 1.0);
    o.require(rel < 0.01, "ratio_estimate(7) off by " + fmt(rel));
    if (o.pass) {
        o.detail = "alpha=" + fmt(c.alpha, 7) + " C=" + fmt(c.C, 7) + " K=" + fmt(c.K, 7) +
                   " K/C=" + fmt(c.ratio_factor, 7) + "; n=7 ratio error " + fmt(rel, 3);
    }
    return o;
}

Outcome convergence() {
    Outcome o;
    const AsymptoticConstants c = compute_constants();
    const auto r = robinson_R_values(30);
    const auto orient = orientable_O_values(30);
    auto gap = [](const BigCount& exact, double log_estimate) {
        return std::fabs(std::exp(log_big(exact) - log_estimate) - 1.0);
    };
    const double r15 = gap(r[15], asymptotic_log_R(15, c));
    const double r30 = gap(r[30], asymptotic_log_R(30, c));
    const double o15 = gap(orient[15], asymptotic_log_O(15, c));
    const double o30 = gap(orient[30], asymptotic_log_O(30, c));
    o.require(r30 < r15, "R: |ratio-1| at 30 = " + fmt(r30) + " vs 15 = " + fmt(r15));
    o.require(o30 < o15, "O: |ratio-1| at 30 = " + fmt(o30) + " vs 15 = " + fmt(o15));
    if (o.pass) {
        o.detail = "R gap " + fmt(r15, 3) + " -> " + fmt(r30, 3) + ", O gap " + fmt(o15, 3) + " -> " + fmt(o30, 3);
    }
    return o;
}

Outcome parallel_determinism() {
    Outcome o;
    const std::size_t n = 5;
    const RangeTally serial = tally_all(n, {.jobs = 1});
    o.require(tally_all(n, {.jobs = 4}) == serial, "--jobs 4 differs from --jobs 1");

    std::mt19937_64 rng(2024);
    const std::uint64_t total = digraph_count(n);
    for (int trial = 0; trial < 8; ++trial) {
        std::vector<std::uint64_t> cuts{0, total};
        for (int k = 0; k < 1 + trial; ++k) cuts.push_back(rng() % total);
        std::sort(cuts.begin(), cuts.end());
        RangeTally sum;
        for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
            const RangeTally t = tally_code_range(n, cuts[i], cuts[i + 1]);
            sum.acyclic += t.acyclic;
            sum.orientable += t.orientable;
        }
        o.require(sum == serial, "random partition " + std::to_string(trial) + " differs");
    }

    auto cli_output = [](const std::string& jobs) {
        std::vector<std::string> args = {"smallcover", "--jobs", jobs, "verify", "--n-max", "5"};
        std::ostringstream out, err;
        const int code = cli::run(args, out, err);
        return std::to_string(code) + out.str();
    };
    o.require(cli_output("1") == cli_output("4"), "CLI verify output depends on --jobs");
    if (o.pass) {
        o.detail = "acyclic=" + std::to_string(serial.acyclic) + " orientable=" +
                   std::to_string(serial.orientable) + " for jobs 1/4 and random partitions";
    }
    return o;
}

} // namespace

int main(int argc, char** argv) {
    bool long_run = false;
    for (int i = 1; i < argc; ++i) {
        if (std::string_view(argv[i]) == "--long") long_run = true;
    }

    std::vector<Criterion> criteria = {
        {1, "exact table reproduction", 1.0, exact_table},
        {2, "brute-force oracle equivalence (n <= 5)", 60.0, [] { return oracle_equivalence(5); }},
        {3, "bijection phi onto M(n) (n <= 4)", 60.0, bijection},
        {4, "orientability equivalence on all digraphs (n <= 4)", 60.0, orientability},
        {5, "series identities to order 12", 1.0, series_identities},
        {6, "derivative identity F' = F(x/2) (n <= 40)", 1.0, derivative_identity},
        {7, "asymptotic constants and n = 7 ratio", 1.0, constants},
        {8, "asymptotic convergence (n = 15 vs 30)", 1.0, convergence},
        {9, "determinism under parallel partitioning (n = 5)", 60.0, parallel_determinism},
    };
    if (long_run) {
        // Tens of minutes at most; single-threaded it is well under that here.
        criteria.push_back({2, "brute-force oracle equivalence (n = 6, long)", 3600.0,
                            [] { return oracle_equivalence(6); }});
    }

    int failures = 0;
    for (const Criterion& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome outcome;
        try {
            outcome = c.body();
        } catch (const std::exception& e) {
            outcome.pass = false;
            outcome.detail = std::string("exception: ") + e.what();
        }
        const double seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (outcome.pass && seconds > c.time_limit_seconds) {
            outcome.pass = false;
            outcome.detail = "took " + fmt(seconds, 3) + " s, limit " + fmt(c.time_limit_seconds) + " s";
        }
        if (!outcome.pass) ++failures;
        std::cout << (outcome.pass ? "[PASS] " : "[FAIL] ") << "criterion " << c.id << ": " << c.title
                  << " -- " << outcome.detail << " (" << fmt(seconds, 3) << " s)\n";
    }
    std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed")
              << "\n";
    return failures == 0 ? 0 : 1;
}
