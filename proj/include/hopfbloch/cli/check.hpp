#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hopfbloch/cli/records.hpp"
#include "hopfbloch/state.hpp"

namespace hopfbloch::cli {

struct CheckResult {
    std::string name;
    double max_error = 0.0;
    bool pass = true;
};

struct CheckReport {
    std::uint64_t seed = 0;
    int count = 0;
    int south_pole = 0;  // states checked through the |1>_A (x) |psi_B> fallback only
    double tolerance = 0.0;
    std::vector<CheckResult> results;

    bool pass() const;
    Json to_json() const;
};

/// Invariant suite on `state` if given, else on `count` random states drawn from `seed`.
CheckReport run_checks(const std::optional<TwoQubitState>& state, std::uint64_t seed, int count, double tolerance);

}  // namespace hopfbloch::cli
