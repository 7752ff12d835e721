#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

namespace permrank {

struct VerifyFailure {
    std::string inputs;
    std::string expected;
    std::string actual;
    std::string claim;  // the identity being checked
};

struct VerifyReport {
    std::string suite;
    std::size_t cases = 0;
    std::vector<VerifyFailure> failures;
    double elapsed_ms = 0.0;

    bool passed() const { return failures.empty(); }
};

struct VerifyOptions {
    /// Overrides the suite's default size limit when positive.
    int n_limit = 0;
    /// Caps every size limit at n = 6 (k = 6 for ranks).
    bool quick = false;
    int threads = 1;
    std::uint64_t seed = 42;
};

/// Suite names accepted by run_suite, in the order "all" runs them.
const std::vector<std::string>& suite_names();

/// Runs one suite, or every suite for "all". Throws std::invalid_argument for
/// an unknown name. Failures are sorted by their inputs.
std::vector<VerifyReport> run_suite(const std::string& name, const VerifyOptions& options = {});

nlohmann::json to_json(const VerifyReport& report);
std::string format_plain(const VerifyReport& report);

}  // namespace permrank
