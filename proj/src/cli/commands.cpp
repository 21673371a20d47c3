#include "floquet_echo/cli/commands.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <ostream>
#include <sstream>

#include "floquet_echo/analysis.hpp"
#include "floquet_echo/errors.hpp"
#include "floquet_echo/parallel.hpp"

namespace floquet_echo::cli {

namespace {

CsvDocument new_document(const std::string& command, const RunConfig& config) {
    CsvDocument doc;
    doc.name = [&] {
        std::string stem = command;
        std::replace(stem.begin(), stem.end(), '-', '_');
        return stem;
    }();
    doc.comments.push_back("floquet-echo " + std::string(kToolVersion));
    doc.comments.push_back("command: " + command);
    for (const auto& [key, value] : describe(config)) doc.comments.push_back("config: " + key + " = " + value);
    return doc;
}

BuildOptions build_options(const RunConfig& config, std::size_t workers) {
    BuildOptions options;
    options.steps = config.steps;
    options.workers = workers;
    return options;
}

FloquetTable build_table(const RunConfig& config, double omega0, std::size_t workers) {
    if (config.model == ModelKind::ising) {
        DriveParams drive = config.drive;
        drive.omega0 = omega0;
        return build_ising_table(grid_1d(config.L), drive, build_options(config, workers));
    }
    DiracParams params = config.dirac;
    params.omega0 = omega0;
    return build_dirac_table(grid_2d(config.L, params.a), params, build_options(config, workers));
}

std::string csv_escape(const std::string& cell) {
    if (cell.find_first_of(",\"\n") == std::string::npos) return cell;
    std::string out = "\"";
    for (char ch : cell) {
        if (ch == '"') out += '"';
        out += ch;
    }
    return out + "\"";
}

}  // namespace

std::string CsvDocument::render() const {
    std::string out;
    for (const auto& line : comments) out += "# " + line + "\n";
    auto emit = [&out](const std::vector<std::string>& cells) {
        for (std::size_t i = 0; i < cells.size(); ++i) {
            if (i) out += ',';
            out += csv_escape(cells[i]);
        }
        out += '\n';
    };
    emit(columns);
    for (const auto& row : rows) emit(row);
    return out;
}

std::string CsvDocument::plot_script() const {
    std::ostringstream gp;
    gp << "# gnuplot script for " << name << ".csv\n";
    gp << "set datafile separator ','\n";
    gp << "set datafile commentschars '#'\n";
    gp << "set terminal pngcairo size 900,600\n";
    gp << "set output '" << name << ".png'\n";
    gp << "set key outside right\n";
    if (log_x) gp << "set logscale x\n";
    gp << "set xlabel '" << columns.at(x_column) << "'\n";
    gp << "plot ";
    for (std::size_t i = 0; i < y_columns.size(); ++i) {
        const std::size_t y = y_columns[i];
        if (i) gp << ", \\\n     ";
        // gnuplot columns are 1-based; the header row is skipped via 'every ::1'.
        gp << "'" << name << ".csv' every ::1 using " << (x_column + 1) << ":" << (y + 1) << " with "
           << (points ? "points" : "lines") << " title '" << columns.at(y) << "'";
    }
    gp << "\n";
    return gp.str();
}

void write_document(const CsvDocument& doc, const std::filesystem::path& dir) {
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec) throw IoError("cannot create output directory '" + dir.string() + "': " + ec.message());
    const auto write = [](const std::filesystem::path& path, const std::string& text) {
        std::ofstream out(path, std::ios::binary | std::ios::trunc);
        if (!out) throw IoError("cannot open '" + path.string() + "' for writing");
        out << text;
        out.flush();
        if (!out) throw IoError("write failed for '" + path.string() + "'");
    };
    write(dir / (doc.name + ".csv"), doc.render());
    write(dir / (doc.name + ".gp"), doc.plot_script());
}

CsvDocument sweep_frequency(const RunConfig& config) {
    config.validate();
    if (config.ns.empty()) throw InputError("sweep-frequency needs a non-empty n list");
    const std::vector<double> omegas = frequency_samples(config);

    struct Row {
        std::vector<double> g;
        double g_dec = 0.0;
        double g_inf = 0.0;
        std::size_t clamps = 0;
    };
    std::vector<Row> rows(omegas.size());
    parallel_for(omegas.size(), config.workers, [&](std::size_t i) {
        const FloquetTable table = build_table(config, omegas[i], 1);
        const FidelityCurve curve = fidelity_curve(table, config.ns);
        Row& row = rows[i];
        for (const auto& e : curve.entries) row.g.push_back(e.g);
        row.g_dec = curve.g_dec;
        row.g_inf = curve.g_inf;
        row.clamps = curve.clamp_events;
    });

    CsvDocument doc = new_document("sweep-frequency", config);
    std::size_t clamps = 0;
    for (const auto& r : rows) clamps += r.clamps;
    doc.comments.push_back("clamp_events = " + std::to_string(clamps));
    doc.columns.push_back("omega0");
    for (std::uint64_t n : config.ns) doc.columns.push_back("g_" + std::to_string(n));
    doc.columns.push_back("g_dec");
    doc.columns.push_back("g_inf");
    for (std::size_t i = 0; i < omegas.size(); ++i) {
        std::vector<std::string> cells{format_number(omegas[i])};
        for (double g : rows[i].g) cells.push_back(format_number(g));
        cells.push_back(format_number(rows[i].g_dec));
        cells.push_back(format_number(rows[i].g_inf));
        doc.rows.push_back(std::move(cells));
    }
    doc.x_column = 0;
    for (std::size_t c = 1; c < doc.columns.size(); ++c) doc.y_columns.push_back(c);
    doc.log_x = true;
    return doc;
}

CsvDocument sweep_n(const RunConfig& config) {
    config.validate();
    if (config.ns.empty()) throw InputError("sweep-n needs a non-empty n list");
    const FloquetTable table = build_table(config, config.omega0(), config.workers);
    const FidelityCurve curve = fidelity_curve(table, config.ns);

    CsvDocument doc = new_document("sweep-n", config);
    doc.comments.push_back("g_dec = " + format_number(curve.g_dec));
    doc.comments.push_back("g_inf = " + format_number(curve.g_inf));
    doc.comments.push_back("clamp_events = " + std::to_string(curve.clamp_events));
    doc.columns = {"n", "g_n"};
    for (const auto& e : curve.entries) doc.rows.push_back({std::to_string(e.n), format_number(e.g)});
    doc.x_column = 0;
    doc.y_columns = {1};
    return doc;
}

CsvDocument integrand(const RunConfig& config) {
    config.validate();
    const FloquetTable table = build_table(config, config.omega0(), config.workers);
    const IntegrandProfile profile = integrand_profile(table, config.integrand_n);
    const double threshold = config.resonance_threshold > 0.0 ? config.resonance_threshold
                                                              : default_resonance_threshold(table.omega0);
    const auto resonances = resonance_scan(table, threshold);

    CsvDocument doc = new_document("integrand", config);
    doc.comments.push_back("mode = " + (config.integrand_n ? "n=" + std::to_string(*config.integrand_n)
                                                           : std::string("infinity")));
    doc.comments.push_back("resonance_threshold = " + format_number(threshold));
    doc.comments.push_back("resonances = " + std::to_string(resonances.size()));
    doc.comments.push_back("clamp_events = " + std::to_string(profile.clamp_events));
    const bool chain = config.model == ModelKind::ising;
    doc.columns = chain ? std::vector<std::string>{"k", "mu_k", "integrand"}
                        : std::vector<std::string>{"kx", "ky", "mu_k", "integrand"};
    for (const auto& p : profile.points) {
        std::vector<std::string> cells{format_number(p.kx)};
        if (!chain) cells.push_back(format_number(p.ky));
        cells.push_back(format_number(p.mu));
        cells.push_back(format_number(p.value));
        doc.rows.push_back(std::move(cells));
    }
    doc.x_column = 0;
    doc.y_columns = chain ? std::vector<std::size_t>{1, 2} : std::vector<std::size_t>{3};
    doc.points = !chain;
    return doc;
}

CsvDocument peaks_dips(const RunConfig& config) {
    if (!(config.omega_min > 0.0) || !(config.omega_min < config.omega_max)) {
        throw InputError("peaks-dips requires 0 < omega_min < omega_max");
    }
    CsvDocument doc = new_document("peaks-dips", config);
    doc.columns = {"kind", "order", "omega0", "abs_j0"};
    const auto peaks = bessel_peak_frequencies(config.omega_min, config.omega_max);
    // Peaks are 2/j_{0,s}; recover s by counting zeros above the range.
    std::size_t first_order = 1;
    while (2.0 / bessel_j0_zero(first_order) > config.omega_max) ++first_order;
    for (std::size_t i = 0; i < peaks.size(); ++i) {
        doc.rows.push_back({"peak", std::to_string(first_order + i), format_number(peaks[i]),
                            format_number(std::abs(bessel_j0(2.0 / peaks[i])))});
    }
    for (std::size_t m : dip_orders(config.omega_min, config.omega_max)) {
        const double w = 4.0 / static_cast<double>(m);
        doc.rows.push_back({"dip", std::to_string(m), format_number(w),
                            format_number(std::abs(bessel_j0(2.0 / w)))});
    }
    doc.x_column = 2;
    doc.y_columns = {3};
    doc.points = true;
    return doc;
}

OracleReport oracle(const RunConfig& config) {
    config.validate();
    if (config.ns.empty()) throw InputError("oracle needs a non-empty n list");
    const std::vector<double> omegas = frequency_samples(config);

    struct Cell {
        double g = 0.0;
        double direct = 0.0;
    };
    std::vector<Cell> cells(omegas.size() * config.ns.size());
    parallel_for(omegas.size(), config.workers, [&](std::size_t i) {
        const FloquetTable table = build_table(config, omegas[i], 1);
        DirectOptions direct;
        direct.method = DirectMethod::continuous;
        direct.workers = 1;
        for (std::size_t j = 0; j < config.ns.size(); ++j) {
            Cell& cell = cells[i * config.ns.size() + j];
            const std::uint64_t n = config.ns[j];
            cell.g = g_n(table, n).value;
            if (config.model == ModelKind::ising) {
                DriveParams drive = config.drive;
                drive.omega0 = omegas[i];
                direct.steps = 2 * default_steps(drive);
                cell.direct = direct_fidelity(grid_1d(config.L), drive, n, direct).value;
            } else {
                DiracParams params = config.dirac;
                params.omega0 = omegas[i];
                direct.steps = 2 * default_steps(params);
                cell.direct = direct_fidelity(grid_2d(config.L, params.a), params, n, direct).value;
            }
        }
    });

    OracleReport report;
    report.table = new_document("oracle", config);
    report.table.columns = {"omega0", "n", "g_floquet", "g_direct", "abs_diff"};
    for (std::size_t i = 0; i < omegas.size(); ++i) {
        for (std::size_t j = 0; j < config.ns.size(); ++j) {
            const Cell& cell = cells[i * config.ns.size() + j];
            const double diff = std::abs(cell.g - cell.direct);
            report.max_discrepancy = std::max(report.max_discrepancy, diff);
            report.table.rows.push_back({format_number(omegas[i]), std::to_string(config.ns[j]),
                                         format_number(cell.g), format_number(cell.direct),
                                         format_number(diff)});
        }
    }
    report.passed = report.max_discrepancy <= config.oracle_tolerance;
    report.table.comments.push_back("max_abs_diff = " + format_number(report.max_discrepancy));
    report.table.x_column = 1;
    report.table.y_columns = {4};
    report.table.points = true;
    return report;
}

}  // namespace floquet_echo::cli
