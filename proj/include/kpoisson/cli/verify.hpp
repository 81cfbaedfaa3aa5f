#ifndef KPOISSON_CLI_VERIFY_HPP
#define KPOISSON_CLI_VERIFY_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace kpoisson::cli {

struct VerifyOptions {
    int k_max = 8;
    int n_max = 12;
    /// When set, a short Monte Carlo check is added to the grid.
    std::optional<std::uint64_t> seed;
    /// Test hook: the engine runs with kappa_1 off by one, so every moment
    /// with n >= 1 must disagree with the oracles.
    bool corrupt_kappa = false;
    /// 0 means hardware concurrency. Output never depends on it.
    unsigned workers = 0;
};

struct CheckFamily {
    std::string name;
    std::uint64_t checks = 0;
    std::uint64_t failures = 0;
};

struct Counterexample {
    std::string check;
    int k = 0;
    int n = 0;
    std::string expected;
    std::string actual;
};

struct VerifyReport {
    std::vector<CheckFamily> families; // fixed order
    /// First failure in grid order (k ascending, then n ascending).
    std::optional<Counterexample> first_failure;

    bool passed() const { return !first_failure.has_value(); }
    std::uint64_t total_checks() const;
    std::uint64_t total_failures() const;
};

/// Runs every module invariant for 1 <= k <= k_max and 0 <= n <= n_max.
/// Throws PreconditionError for k_max < 1 or n_max < 0.
VerifyReport run_verification(const VerifyOptions& options);

} // namespace kpoisson::cli

#endif
