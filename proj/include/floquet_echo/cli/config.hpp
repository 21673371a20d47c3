#pragma once

// Run configuration for the command-line tool: INI-style text with sections, built-in presets
// and key overrides.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "floquet_echo/fidelity.hpp"
#include "floquet_echo/models.hpp"

namespace floquet_echo::cli {

inline constexpr std::string_view kToolVersion = "1.0.0";

struct RunConfig {
    ModelKind model = ModelKind::ising;
    DriveParams drive;
    DiracParams dirac;
    std::size_t L = 1000;

    std::vector<std::uint64_t> ns{1};
    std::vector<double> omegas;  ///< explicit frequency list; overrides the sampled range
    double omega_min = 0.1;
    double omega_max = 100.0;
    std::size_t samples = 0;
    bool densify_dips = false;

    std::optional<std::uint64_t> integrand_n;  ///< empty: infinite-time integrand
    double resonance_threshold = 0.0;          ///< 0 selects the default

    std::size_t steps = 0;  ///< sub-steps per period, 0 = automatic
    std::size_t workers = 1;
    std::string output_dir = ".";
    double oracle_tolerance = 1e-8;

    /// Drive frequency of the selected model.
    [[nodiscard]] double omega0() const;
    void set_omega0(double omega0);
    /// Throws InputError on an inconsistent configuration.
    void validate() const;
};

/// Applies one "section.key = value" setting. Throws InputError on unknown keys or bad values.
void apply_setting(RunConfig& config, const std::string& key, const std::string& value);

/// Parses INI text ("[section]" headers, "key = value" lines, ';' or '#' comments) on top of
/// `config`. Throws InputError on syntax errors.
void apply_ini(RunConfig& config, const std::string& text);

void apply_ini_file(RunConfig& config, const std::string& path);

/// Names of the bundled presets: fig1 .. fig4 and oracle.
std::vector<std::string> preset_names();

/// INI text of a bundled preset. Throws InputError for unknown names.
std::string preset_text(const std::string& name);

/// Every result-affecting setting as sorted "section.key" / value pairs. Scheduling and output
/// location (run.workers, run.out) are excluded so reruns compare byte for byte.
std::vector<std::pair<std::string, std::string>> describe(const RunConfig& config);

/// Explicit list if given, else `samples` log-spaced points on [omega_min, omega_max], plus
/// extra points around every 4/m dip when densify_dips is set. Ascending, no duplicates.
std::vector<double> frequency_samples(const RunConfig& config);

/// Parses "1,2,12,100" and ranges "0:200" / "0:200:10" (inclusive). Throws InputError.
std::vector<std::uint64_t> parse_count_list(const std::string& text);
std::vector<double> parse_real_list(const std::string& text);

/// Shortest representation that round-trips to the same double.
std::string format_number(double value);

}  // namespace floquet_echo::cli
