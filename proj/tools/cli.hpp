#pragma once

// Command-line front end. `run` executes one parsed command and returns the
// serialized report; `main_entry` adds argument parsing, the precision
// environment override and stream/file output.

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace kpt::cli {

enum class Command { seq, sums, norms, bounds, eig, det, invert, scan, bench, table1 };
enum class Format { json, csv, plain };

/// Process exit codes.
enum ExitCode : int {
    kExitOk = 0,
    kExitFailure = 1,            // unexpected internal error
    kExitPrecondition = 2,       // invalid arguments or violated precondition
    kExitNoConvergence = 3,
    kExitParseError = 4,         // malformed scalar
    kExitZeroR = 5,
    kExitPrecisionExhausted = 6,
    kExitDegenerateCase = 7,
};

struct CliConfig {
    Command command = Command::seq;
    unsigned k = 1;
    std::size_t n = 4;
    std::string r = "1";
    /// Unset: KPT_PRECISION_BITS, then the command default (512 for scan,
    /// 256 otherwise).
    std::optional<unsigned> precision_bits;
    /// Unset: csv for table1/scan/bench, plain otherwise.
    std::optional<Format> output;
    std::optional<std::string> out_path;
    /// Significant digits for high-precision values in reports.
    int digits = 25;
    /// Power-iteration tolerance (norms, bounds, table1).
    double tol = 1e-10;
    /// seq: list every term up to n instead of the last one.
    bool all_terms = false;
    /// norms, det: include the matrix itself in the report.
    bool include_matrix = false;
    // scan
    unsigned k_min = 1, k_max = 10;
    std::size_t n_min = 2, n_max = 30;
    std::string sign = "+";   // "+", "-" or "both"
    // bench
    std::vector<std::size_t> sizes{64, 256, 1024, 4096};
    double min_seconds = 0.05;
};

struct Outcome {
    int exit_code = kExitOk;
    /// Report (or, for JSON output, the error object).
    std::string text;
    /// One-line message for stderr; empty on success.
    std::string diagnostic;
};

std::string_view command_name(Command c);
unsigned effective_precision(const CliConfig& config);
Format effective_format(const CliConfig& config);

Outcome run(const CliConfig& config);

/// Full command line: parse, run, write the report to `out` (or --out) and
/// diagnostics to `err`. Returns the process exit code.
int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace kpt::cli
