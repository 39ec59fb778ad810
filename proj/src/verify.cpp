#include "smallcover/verify.hpp"

#include <algorithm>
#include <stdexcept>

namespace smallcover {

namespace {

VerifyCheck passing(std::string identity, std::optional<std::size_t> n_max,
                    std::optional<std::size_t> order = std::nullopt) {
    return VerifyCheck{std::move(identity), n_max, order, true, std::nullopt};
}

// Compares oracle(n) with formula(n) for n = 0..n_max and names the first
// mismatch.
template <class Oracle, class Formula>
VerifyCheck compare_counts(std::string identity, std::size_t n_max, Oracle oracle, Formula formula) {
    VerifyCheck check = passing(std::move(identity), n_max);
    for (std::size_t n = 0; n <= n_max; ++n) {
        const BigCount lhs = oracle(n);
        const BigCount rhs = formula(n);
        if (lhs != rhs) {
            check.pass = false;
            check.first_failure = "n=" + std::to_string(n) + ": brute force " + lhs.str() +
                                  " != formula " + rhs.str();
            break;
        }
    }
    return check;
}

} // namespace

bool VerifyReport::pass() const {
    return std::ranges::all_of(checks, [](const VerifyCheck& c) { return c.pass; });
}

const VerifyCheck* VerifyReport::first_failed() const {
    auto it = std::ranges::find_if(checks, [](const VerifyCheck& c) { return !c.pass; });
    return it == checks.end() ? nullptr : &*it;
}

VerifyReport run_verification(const VerifyOptions& options) {
    VerifyReport report;
    const SequenceSource& src = options.source;

    if (!options.series_only) {
        check_enumeration_cap(options.n_max, options.brute_force.enumeration_cap);
        std::vector<RangeTally> tallies;
        for (std::size_t n = 0; n <= options.n_max; ++n) {
            tallies.push_back(tally_all(n, options.brute_force));
        }
        auto acyclic = [&](std::size_t n) { return BigCount(tallies[n].acyclic); };
        auto orientable = [&](std::size_t n) { return BigCount(tallies[n].orientable); };

        report.checks.push_back(compare_counts("acyclic digraph count = R_n", options.n_max, acyclic, src.r));
        report.checks.push_back(compare_counts("even out-degree acyclic digraph count = O_n",
                                               options.n_max, orientable, src.o));

        const std::size_t matrix_max = std::min(options.n_max, kMatrixOracleCap);
        report.checks.push_back(compare_counts("|M(n)| = R_n", matrix_max,
                                               [](std::size_t n) { return count_Mn_bruteforce(n); }, src.r));
        report.checks.push_back(compare_counts(
            "orientable members of M(n) = O_n", matrix_max,
            [](std::size_t n) { return count_orientable_Mn_bruteforce(n); }, src.o));

        VerifyCheck bijection = passing("phi is a bijection from acyclic digraphs onto M(n)", matrix_max);
        for (std::size_t n = 0; n <= matrix_max && bijection.pass; ++n) {
            const BijectionCheck b = check_bijection(n);
            if (!b.pass()) {
                bijection.pass = false;
                bijection.first_failure = "n=" + std::to_string(n) + ": " +
                                          b.counterexample.value_or("image differs from M(n)");
            }
        }
        report.checks.push_back(std::move(bijection));

        VerifyCheck orient = passing("even out-degrees <=> odd column sums of phi(G)", matrix_max);
        for (std::size_t n = 0; n <= matrix_max && orient.pass; ++n) {
            if (auto code = orientability_counterexample(n)) {
                orient.pass = false;
                orient.first_failure = "n=" + std::to_string(n) + ": digraph code " + std::to_string(*code);
            }
        }
        report.checks.push_back(std::move(orient));

        VerifyCheck figure = passing("phi(figure graph) = figure matrix", 4);
        if (phi(figure1_graph()) != figure1_matrix()) {
            figure.pass = false;
            figure.first_failure = "phi(figure graph) differs from the figure matrix";
        }
        report.checks.push_back(std::move(figure));
    }

    for (const IdentityCheck& id : verify_identities(options.series_order, src)) {
        VerifyCheck check{id.identity, std::nullopt, id.order, id.pass, std::nullopt};
        if (id.first_failure) check.first_failure = "coefficient " + std::to_string(*id.first_failure);
        report.checks.push_back(std::move(check));
    }

    VerifyCheck derivative = passing("F'(x) = F(x/2) termwise", std::nullopt, options.series_order);
    for (std::size_t n = 1; n <= options.series_order; ++n) {
        if (!derivative_identity_holds(n)) {
            derivative.pass = false;
            derivative.first_failure = "coefficient " + std::to_string(n);
            break;
        }
    }
    report.checks.push_back(std::move(derivative));
    return report;
}

nlohmann::ordered_json to_json(const VerifyReport& report, const VerifyOptions& options) {
    nlohmann::ordered_json out;
    out["n_max"] = options.series_only ? nlohmann::ordered_json(nullptr)
                                        : nlohmann::ordered_json(options.n_max);
    out["series_order"] = options.series_order;
    out["pass"] = report.pass();
    auto& checks = out["checks"] = nlohmann::ordered_json::array();
    for (const VerifyCheck& c : report.checks) {
        nlohmann::ordered_json j;
        j["identity"] = c.identity;
        j["n_max"] = c.n_max ? nlohmann::ordered_json(*c.n_max) : nlohmann::ordered_json(nullptr);
        j["order"] = c.order ? nlohmann::ordered_json(*c.order) : nlohmann::ordered_json(nullptr);
        j["pass"] = c.pass;
        j["first_failure"] = c.first_failure ? nlohmann::ordered_json(*c.first_failure)
                                             : nlohmann::ordered_json(nullptr);
        checks.push_back(std::move(j));
    }
    return out;
}

} // namespace smallcover
