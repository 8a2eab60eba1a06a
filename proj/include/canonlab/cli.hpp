#pragma once

// Command-line front end: poly, verify, sweep, gamma, extensions.

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "canonlab/poset.hpp"

namespace canonlab {

enum class Command { Poly, Verify, Sweep, Gamma, Extensions };
enum class OutputFormat { Json, Csv, Plain };

struct RunConfig {
    Command command = Command::Poly;
    std::string target;  // polynomial or statement name; "gamma" for sweep
    std::size_t m = 2;
    std::size_t n = 2;
    std::optional<std::string> poset_file;
    std::optional<std::vector<Label>> labels;  // labeling of the base poset
    std::optional<std::vector<CopyEdge>> removed_edges;
    OutputFormat output_format = OutputFormat::Plain;
    unsigned jobs = 1;
    std::optional<std::size_t> cap_override;
    std::size_t max_size = 6;  // verify all: every (m, n) with m * n <= max_size
    bool repair = false;
};

namespace exit_code {
inline constexpr int ok = 0;
inline constexpr int failed = 1;
inline constexpr int usage = 2;
}  // namespace exit_code

const std::vector<std::string>& poly_names();

// Exit status per exit_code; reports go to `out`, diagnostics to `err`.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

// Parses argv (CLI11) and runs. Parse errors exit with exit_code::usage.
int run_command_line(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace canonlab
