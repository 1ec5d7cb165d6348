#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace toricdeg::cli {

namespace exit_code {
inline constexpr int ok = 0;
inline constexpr int mismatch = 1;
inline constexpr int failure = 2; ///< genericity or certificate failure
inline constexpr int usage = 64;
} // namespace exit_code

enum class OutputFormat { json, table };

struct RunConfig {
    std::uint64_t seed = 1;
    int samples = 3;
    long bound = 1000;
    OutputFormat output = OutputFormat::json;
};

struct Result {
    int exit_code = exit_code::ok;
    std::string out;
    std::string err;
};

/// Runs one invocation; `args` excludes the program name.
Result run(const std::vector<std::string>& args);

} // namespace toricdeg::cli
