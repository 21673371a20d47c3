#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "floquet_echo/cli/commands.hpp"
#include "floquet_echo/errors.hpp"

namespace floquet_echo::cli {

namespace {

struct Flags {
    std::string config_path;
    std::string preset;
    std::vector<std::string> settings;
    std::string L;
    std::string omega0;
    std::string n;
    std::string steps;
    std::string workers;
    std::string out;
};

RunConfig resolve(const Flags& flags) {
    RunConfig config;
    if (!flags.preset.empty()) apply_ini(config, preset_text(flags.preset));
    if (!flags.config_path.empty()) apply_ini_file(config, flags.config_path);
    for (const std::string& setting : flags.settings) {
        const auto eq = setting.find('=');
        if (eq == std::string::npos) throw InputError("--set expects section.key=value, got '" + setting + "'");
        apply_setting(config, setting.substr(0, eq), setting.substr(eq + 1));
    }
    if (!flags.L.empty()) apply_setting(config, "grid.L", flags.L);
    if (!flags.omega0.empty()) {
        const std::vector<double> omegas = parse_real_list(flags.omega0);
        if (omegas.empty()) throw InputError("--omega0 needs at least one value");
        config.omegas = omegas;
        config.set_omega0(omegas.front());
    }
    if (!flags.n.empty()) apply_setting(config, "sweep.n", flags.n);
    if (!flags.steps.empty()) apply_setting(config, "run.steps", flags.steps);
    if (!flags.workers.empty()) apply_setting(config, "run.workers", flags.workers);
    if (!flags.out.empty()) apply_setting(config, "run.out", flags.out);
    return config;
}

void require_single_frequency(const RunConfig& config, const std::string& command) {
    if (config.omegas.size() > 1) throw InputError(command + " takes a single --omega0 value");
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Stroboscopic dynamical fidelity of periodically driven two-level mode families"};
    app.set_version_flag("--version", std::string(kToolVersion));
    app.require_subcommand(1);

    Flags flags;
    app.add_option("--config", flags.config_path, "INI configuration file");
    app.add_option("--preset", flags.preset, "bundled parameter set: fig1, fig2, fig3, fig4, oracle");
    app.add_option("--set", flags.settings, "override one setting, section.key=value (repeatable)");
    app.add_option("--L", flags.L, "system size (chain length, or linear 2D grid size)");
    app.add_option("--omega0", flags.omega0, "drive frequency, or comma list for sweeps");
    app.add_option("--n", flags.n, "period counts: list and/or ranges like 0:200:10");
    app.add_option("--steps", flags.steps, "integration sub-steps per period (0 = automatic)");
    app.add_option("--workers", flags.workers, "worker threads");
    app.add_option("--out", flags.out, "output directory");

    const std::vector<std::string> names{"sweep-frequency", "sweep-n", "integrand", "peaks-dips", "oracle"};
    std::vector<CLI::App*> subs;
    for (const auto& name : names) {
        CLI::App* sub = app.add_subcommand(name);
        sub->fallthrough();
        subs.push_back(sub);
    }
    subs[0]->description("g_n, g_dec and g_inf versus drive frequency");
    subs[1]->description("g_n versus n at one frequency");
    subs[2]->description("per-momentum integrand and quasi-energies at one frequency");
    subs[3]->description("predicted Bessel-zero peaks and 4/m dips in [omega_min, omega_max]");
    subs[4]->description("Floquet g_n against direct time evolution; exit 2 above tolerance");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kInputError;
    }

    try {
        const RunConfig config = resolve(flags);
        std::string command;
        for (std::size_t i = 0; i < subs.size(); ++i) {
            if (subs[i]->parsed()) command = names[i];
        }
        CsvDocument doc;
        int status = kOk;
        if (command == "sweep-frequency") {
            doc = sweep_frequency(config);
        } else if (command == "sweep-n") {
            require_single_frequency(config, command);
            doc = sweep_n(config);
        } else if (command == "integrand") {
            require_single_frequency(config, command);
            doc = integrand(config);
        } else if (command == "peaks-dips") {
            doc = peaks_dips(config);
        } else {
            OracleReport report = oracle(config);
            out << "max |g_n - direct| = " << format_number(report.max_discrepancy) << " (tolerance "
                << format_number(config.oracle_tolerance) << "): " << (report.passed ? "PASS" : "FAIL") << "\n";
            doc = std::move(report.table);
            status = report.passed ? kOk : kToleranceFailure;
        }
        write_document(doc, config.output_dir);
        out << "wrote " << doc.name << ".csv (" << doc.rows.size() << " rows) and " << doc.name << ".gp\n";
        return status;
    } catch (const IoError& e) {
        err << "I/O error: " << e.what() << "\n";
        return kIoError;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kInputError;
    }
}

}  // namespace floquet_echo::cli
