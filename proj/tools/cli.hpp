#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

namespace sqcolor::cli {

enum ExitCode : int { kOk = 0, kBadInput = 1, kPrecondition = 2, kInternal = 3 };

struct RunConfig {
    /// A path, or `@name` for a built-in fixture.
    std::string input;
    std::optional<std::string> lists_path;
    std::optional<int> uniform_k;
    /// `--random k seed`: each list a uniform k-subset of {1..3k}.
    std::optional<int> random_k;
    std::uint64_t seed = 0;
    /// auto, 8, 7, 6 or oracle.
    std::string solver = "auto";
    bool verify = false;
    std::optional<std::string> trace_path;
};

int run_cli(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Parses argv and runs; usage errors exit with kBadInput.
int cli_main(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace sqcolor::cli
