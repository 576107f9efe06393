#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "isorep/kernel.hpp"

namespace isorep::cli {

enum class Command {
    Validate,
    Isometries,
    KernelCheck,
    Bochner,
    Gns,
    Separate,
    Faithful,
    Report,
};

struct Tolerances {
    double psd_tol = kDefaultPsdTol;
    double rank_tol = kDefaultRankTol;
};

/// One reproducible run. All randomness flows through `seed`; identical
/// configs produce byte-identical reports.
struct RunConfig {
    Command command = Command::Report;
    std::string input_path;
    std::string kernel = "gaussian";  // "gaussian" or "table:<path>"
    std::optional<double> epsilon;    // default: half the minimum distance
    std::optional<std::vector<int>> basepoints;  // default: all points
    std::uint64_t seed = 42;
    Tolerances tolerances;
    std::string output_path;

    // bochner quadrature controls
    std::vector<double> grid = {-2.0, -1.0, -0.5, 0.0, 0.5, 1.0, 2.0};
    double halfwidth = 6.0;
    double step = 1e-3;
    double bochner_tol = 1e-6;

    // random-cloud PSD suite (kernel-check without --input)
    int trials = 100;
    std::vector<int> cloud_dims = {1, 2, 4, 8};
    std::vector<int> cloud_sizes = {2, 5, 12};
};

/// Executes the configured pipeline, prints the JSON report to `out` and
/// writes it to config.output_path when set. Returns 0 when every
/// certificate passed, 1 when one failed, 2 on input errors (diagnostic
/// goes to `err`).
int run(const RunConfig& config, std::ostream& out, std::ostream& err);
int run(const RunConfig& config);

/// Parses argv (subcommand + flags) and runs. Used by the isorep binary.
int main_cli(int argc, const char* const* argv);

/// Loads "gaussian" or "table:<path>" (JSON array of [distance, value]).
KernelFunction resolve_kernel(const std::string& kernel_arg);

}  // namespace isorep::cli
