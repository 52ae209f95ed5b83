#pragma once

#include <string>
#include <vector>

#include "hyppl/geometry.hpp"
#include "hyppl/spectral_grid.hpp"

namespace hyppl::cli {

enum class Command {
    verify_plancherel,
    verify_inversion,
    jacobi_roundtrip,
    identity_suite,
    casimir_check,
    spectral_density,
};

enum class OutputFormat { json, csv };

struct RunConfig {
    Command command = Command::verify_plancherel;
    int epsilon = 0;
    double lambda_imag = 0.0;
    std::vector<geometry::KTypeTerm> ktypes;
    SpectralGridSpec grid;
    double tolerance = 1e-3;
    std::string output_path;
    OutputFormat format = OutputFormat::json;
    bool ablate_discrete = false;
};

/// Malformed configuration; carries the offending line number (0 = global).
class ConfigError : public std::runtime_error {
  public:
    ConfigError(int line, const std::string& what)
        : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
          line_number(line) {}
    int line_number;
};

/// Parses the flat key-value config text. Recognized keys:
///   command, epsilon, lambda_imag, s_max, n_points, rule, tolerance,
///   ktype (repeatable): "<m> gaussian <width> [center]"
///                     | "<m> hermite <width> <center> <degree>"
/// Unknown or duplicate scalar keys and parity violations raise ConfigError.
RunConfig parse_config(const std::string& text);

/// Executes the configured command and serializes the report.
/// Exit codes: 0 pass, 1 check failure, 2 configuration error, 3 numerical failure.
int run(const RunConfig& config);

int main(int argc, char** argv);

}  // namespace hyppl::cli
