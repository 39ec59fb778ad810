#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "smallcover/correspondence.hpp"
#include "smallcover/series.hpp"

namespace smallcover {

struct VerifyOptions {
    std::size_t n_max = 4;
    std::size_t series_order = 12;
    bool series_only = false;
    BruteForceOptions brute_force;
    SequenceSource source;
};

struct VerifyCheck {
    std::string identity;
    // Oracle checks cover n = 0..n_max; series checks hold up to `order`.
    std::optional<std::size_t> n_max;
    std::optional<std::size_t> order;
    bool pass = true;
    std::optional<std::string> first_failure;
};

struct VerifyReport {
    std::vector<VerifyCheck> checks;

    bool pass() const;
    const VerifyCheck* first_failed() const;
};

// Runs every oracle-versus-formula comparison and series identity.
VerifyReport run_verification(const VerifyOptions& options);

nlohmann::ordered_json to_json(const VerifyReport& report, const VerifyOptions& options);

} // namespace smallcover
