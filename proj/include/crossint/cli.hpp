#pragma once

// Command-line front end. `run` takes the arguments after the program name and
// returns the process exit code: 0 success, 1 a condition fails or two methods
// disagree, 2 usage error, 3 capacity exceeded.

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace crossint {

inline constexpr const char* kSchemaVersion = "crossint/1";

enum ExitCode : int { kExitOk = 0, kExitFails = 1, kExitUsage = 2, kExitCapacity = 3 };

struct RunConfig {
    double tolerance = 1e-12;
    int j_cap = 64;
    int i_max = 1000;
    std::uint64_t sweep_budget = 100'000'000;
    std::string output = "json";
    std::uint64_t seed = 1;
    bool timing = false;
};

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace crossint
