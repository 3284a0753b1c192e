#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

namespace siet {

/// Parsed command line for one run.
struct RunSpec {
    std::string command;                  // design | bounds | simulate | sweep
    std::string input_path;
    std::string output_path;
    std::vector<std::string> overrides;   // key=value applied to the input JSON
    std::uint64_t seed = 1;
    std::uint64_t trials = 1000000;
    std::string decoder = "regions";      // min-distance | regions
    std::string packing = "strict";       // paper | strict
    int grid_step = 1;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerdict = 1;  // infeasible targets / violated preconditions
inline constexpr int kExitInput = 2;    // unparseable or invalid input

/// Dispatches the run. Results go to `out`, diagnostics to `err`; the return
/// value is the process exit code.
int run_command(const RunSpec& spec, std::ostream& out, std::ostream& err);

}  // namespace siet
