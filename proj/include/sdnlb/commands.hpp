#ifndef SDNLB_COMMANDS_HPP
#define SDNLB_COMMANDS_HPP

// Subcommand implementations shared by the command-line tool and the test
// suites. Exit codes: 0 success, 2 scenario validation failure, 3 runtime
// failure, 4 I/O failure.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace sdnlb {

inline constexpr int kExitOk = 0;
inline constexpr int kExitValidation = 2;
inline constexpr int kExitRuntime = 3;
inline constexpr int kExitIo = 4;

struct RunOptions {
    std::string scenario_path;
    std::string policy = "RL_LBM";
    std::optional<std::uint64_t> seed;  // defaults to the scenario's seed
    std::string out_dir;
};

struct CompareOptions {
    std::string scenario_path;
    std::vector<std::string> policies = {"RL_LBM", "DC_LBM", "MMO_LBM", "NONE"};
    std::string seeds = "1..20";  // "a..b", "a,b,c" or a single seed
    std::string out_dir;
    bool serial = false;  // reference executor instead of the OpenMP one
};

// "5" -> {5}; "1..4" -> {1,2,3,4}; "1,9,12" -> {1,9,12}.
std::vector<std::uint64_t> parse_seed_spec(const std::string& spec);

int cmd_validate(const std::string& scenario_path);
int cmd_run(const RunOptions& options);
int cmd_compare(const CompareOptions& options);

}  // namespace sdnlb

#endif  // SDNLB_COMMANDS_HPP
