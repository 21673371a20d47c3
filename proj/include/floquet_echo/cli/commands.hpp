#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "floquet_echo/cli/config.hpp"

namespace floquet_echo::cli {

/// Exit statuses of the command-line tool.
enum ExitCode : int { kOk = 0, kInputError = 1, kToleranceFailure = 2, kIoError = 3 };

/// A CSV table with '#' comment lines and enough metadata to emit a plot script.
struct CsvDocument {
    std::string name;  ///< file stem, e.g. "sweep_frequency"
    std::vector<std::string> comments;
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows;

    std::size_t x_column = 0;
    std::vector<std::size_t> y_columns;
    bool log_x = false;
    bool points = false;  ///< scatter instead of lines

    /// Comment lines, header row, data rows; LF endings.
    [[nodiscard]] std::string render() const;
    /// gnuplot script reading `<name>.csv` and writing `<name>.png`.
    [[nodiscard]] std::string plot_script() const;
};

/// Writes <dir>/<name>.csv and <dir>/<name>.gp, creating dir if needed. Throws IoError.
void write_document(const CsvDocument& doc, const std::filesystem::path& dir);

/// omega0, one g column per n, g_dec, g_inf; one row per frequency sample.
CsvDocument sweep_frequency(const RunConfig& config);

/// n, g_n at the model's omega0; g_dec and g_inf as comment metadata.
CsvDocument sweep_n(const RunConfig& config);

/// Chain: k, mu_k, integrand. Dirac: kx, ky, mu_k, integrand.
CsvDocument integrand(const RunConfig& config);

/// kind, order, omega0, abs_j0 for Bessel-zero peaks and 4/m dips in [omega_min, omega_max].
CsvDocument peaks_dips(const RunConfig& config);

struct OracleReport {
    CsvDocument table;
    double max_discrepancy = 0.0;
    bool passed = false;
};

/// Compares Floquet g_n at the configured step count against direct continuous-stepping
/// evolution at twice the default step count, over the sweep frequencies and n list.
OracleReport oracle(const RunConfig& config);

/// Entry point behind the executable; returns the process exit status.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace floquet_echo::cli
