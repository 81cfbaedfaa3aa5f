#ifndef KPOISSON_CLI_COMMANDS_HPP
#define KPOISSON_CLI_COMMANDS_HPP

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "kpoisson/cli/records.hpp"
#include "kpoisson/cli/verify.hpp"

namespace kpoisson::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitMismatch = 2;

struct CommandOutput {
    std::vector<OutputRecord> records;
    int exit_code = kExitOk;
};

struct MomentArgs {
    int k = 1;
    int n = 0;
    std::optional<std::string> lambda; // exact: `p/q` or decimal
    bool exact = false;
};

struct PmfArgs {
    int k = 1;
    std::string lambda;
    int n_max = 0;
};

struct CoeffArgs {
    int k = 1;
    int n = 1;
    int power = 1;
};

struct SampleArgs {
    int k = 1;
    std::string lambda;
    std::uint64_t trials = 0;
    int n_max = 1;
    std::uint64_t seed = 0;
    unsigned workers = 0;
};

// Each command throws ParseError, DomainError, PreconditionError or
// NotSupported for bad input; run_cli maps those to kExitUsage.
CommandOutput cmd_moment(const MomentArgs& args);
CommandOutput cmd_pmf(const PmfArgs& args);
CommandOutput cmd_coeff(const CoeffArgs& args);
CommandOutput cmd_verify(const VerifyOptions& args);
CommandOutput cmd_sample(const SampleArgs& args);

/// Human-readable rendering of a command's records.
void render_text(std::ostream& out, const std::vector<OutputRecord>& records);

/// Full command line (argv[0] is the program name). Returns the exit code.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace kpoisson::cli

#endif
