#pragma once

#include <optional>
#include <ostream>
#include <string>

#include "isofam/excdata.hpp"

namespace isofam {

enum class Command { Enumerate, Phi, Verify, Basis, Kostka, Exceptional, Report };
enum class OutputFormat { Json, Csv, Text };

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;

/// Environment variable holding the worker count for `verify` and `report`.
inline constexpr const char* kWorkersEnv = "ISOFAM_WORKERS";

struct RunConfig {
    Command command = Command::Report;
    std::optional<int> d;
    int d_max = 5;
    std::optional<WeylType> weyl_type;
    std::optional<int> n_c;
    std::optional<int> m;  // kostka only
    OutputFormat format = OutputFormat::Text;
    std::optional<std::string> output_path;
    unsigned workers = 1;
};

/// Dispatches one command. Returns kExitOk, kExitCheckFailed or kExitUsage.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Parses argv (CLI11) and runs. Usage errors exit with kExitUsage.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace isofam
