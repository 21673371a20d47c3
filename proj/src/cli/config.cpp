#include "floquet_echo/cli/config.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>

#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>

#include "floquet_echo/analysis.hpp"
#include "floquet_echo/errors.hpp"

namespace floquet_echo::cli {

namespace {

const std::map<std::string, std::string, std::less<>>& presets() {
    static const std::map<std::string, std::string, std::less<>> table{
        {"fig1", R"(
[model]
name = ising
[drive]
h = 1
amplitude = 1
phi0 = 0
omega0 = 1
[grid]
L = 1000
[sweep]
n = 1,2,12,100
omega_min = 0.1
omega_max = 100
samples = 400
densify_dips = true
)"},
        {"fig2", R"(
[model]
name = ising
[drive]
h = 1
amplitude = 1
phi0 = 0
omega0 = 0.8316608578
[grid]
L = 1000
[sweep]
n = 12,100
omega_min = 0.2
omega_max = 1.0
samples = 200
densify_dips = true
)"},
        {"fig3", R"(
[model]
name = ising
[drive]
h = 1
amplitude = 1
phi0 = 0
omega0 = 0.4
[grid]
L = 1000
[integrand]
n = inf
)"},
        {"fig4", R"(
[model]
name = dirac
[dirac]
m0 = 1
omega0 = 50
vF = 1
a = 1
[grid]
L = 1000
[sweep]
n = 0:200
)"},
        {"oracle", R"(
[model]
name = ising
[drive]
h = 1
amplitude = 1
phi0 = 0
[grid]
L = 64
[sweep]
n = 1,2,5
omegas = 0.4,2,6
)"},
    };
    return table;
}

std::string trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r\n");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r\n");
    return std::string(s.substr(first, last - first + 1));
}

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> parts;
    std::string item;
    std::istringstream in(text);
    while (std::getline(in, item, sep)) parts.push_back(trim(item));
    return parts;
}

double parse_real(const std::string& key, const std::string& value) {
    const std::string v = trim(value);
    double out = 0.0;
    const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
    if (ec != std::errc{} || ptr != v.data() + v.size() || v.empty() || !std::isfinite(out)) {
        throw InputError(key + ": expected a finite number, got '" + value + "'");
    }
    return out;
}

std::uint64_t parse_count(const std::string& key, const std::string& value) {
    const std::string v = trim(value);
    std::uint64_t out = 0;
    const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
    if (ec != std::errc{} || ptr != v.data() + v.size() || v.empty()) {
        throw InputError(key + ": expected a non-negative integer, got '" + value + "'");
    }
    return out;
}

bool parse_bool(const std::string& key, const std::string& value) {
    const std::string v = trim(value);
    if (v == "true" || v == "1" || v == "yes" || v == "on") return true;
    if (v == "false" || v == "0" || v == "no" || v == "off") return false;
    throw InputError(key + ": expected a boolean, got '" + value + "'");
}

template <typename T>
std::string join(const std::vector<T>& values) {
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) out += ',';
        if constexpr (std::is_floating_point_v<T>) out += format_number(values[i]);
        else out += std::to_string(values[i]);
    }
    return out;
}

}  // namespace

std::string format_number(double value) {
    char buf[64];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value);
    return std::string(buf, ptr);
}

std::vector<std::uint64_t> parse_count_list(const std::string& text) {
    std::vector<std::uint64_t> out;
    for (const std::string& item : split(text, ',')) {
        if (item.empty()) throw InputError("empty entry in count list '" + text + "'");
        if (item.find(':') == std::string::npos) {
            out.push_back(parse_count("count list", item));
            continue;
        }
        const auto bounds = split(item, ':');
        if (bounds.size() < 2 || bounds.size() > 3) throw InputError("bad range '" + item + "'");
        const std::uint64_t first = parse_count("range start", bounds[0]);
        const std::uint64_t last = parse_count("range end", bounds[1]);
        const std::uint64_t stride = bounds.size() == 3 ? parse_count("range step", bounds[2]) : 1;
        if (stride == 0 || last < first) throw InputError("bad range '" + item + "'");
        for (std::uint64_t n = first; n <= last; n += stride) out.push_back(n);
    }
    return out;
}

std::vector<double> parse_real_list(const std::string& text) {
    std::vector<double> out;
    for (const std::string& item : split(text, ',')) out.push_back(parse_real("number list", item));
    return out;
}

double RunConfig::omega0() const { return model == ModelKind::ising ? drive.omega0 : dirac.omega0; }

void RunConfig::set_omega0(double omega0) {
    if (model == ModelKind::ising) drive.omega0 = omega0;
    else dirac.omega0 = omega0;
}

void RunConfig::validate() const {
    if (model == ModelKind::ising) {
        drive.validate();
        grid_1d(L);
    } else {
        dirac.validate();
        grid_2d(L, dirac.a);
    }
    if (workers == 0) throw InputError("run.workers must be >= 1");
    if (!(oracle_tolerance > 0.0)) throw InputError("oracle.tolerance must be positive");
    for (double w : omegas) {
        if (!(w > 0.0)) throw InputError("sweep frequencies must be positive");
    }
}

void apply_setting(RunConfig& c, const std::string& raw_key, const std::string& value) {
    const std::string key = trim(raw_key);
    if (key == "model.name") {
        const std::string v = trim(value);
        if (v == "ising") c.model = ModelKind::ising;
        else if (v == "dirac") c.model = ModelKind::dirac;
        else throw InputError("model.name must be 'ising' or 'dirac', got '" + v + "'");
    } else if (key == "drive.h") {
        c.drive.h = parse_real(key, value);
    } else if (key == "drive.amplitude") {
        c.drive.amplitude = parse_real(key, value);
    } else if (key == "drive.omega0") {
        c.drive.omega0 = parse_real(key, value);
    } else if (key == "drive.phi0") {
        c.drive.phi0 = parse_real(key, value);
    } else if (key == "dirac.m0") {
        c.dirac.m0 = parse_real(key, value);
    } else if (key == "dirac.omega0") {
        c.dirac.omega0 = parse_real(key, value);
    } else if (key == "dirac.vF") {
        c.dirac.vF = parse_real(key, value);
    } else if (key == "dirac.a") {
        c.dirac.a = parse_real(key, value);
    } else if (key == "grid.L") {
        c.L = parse_count(key, value);
    } else if (key == "sweep.n") {
        c.ns = parse_count_list(value);
    } else if (key == "sweep.omegas") {
        c.omegas = trim(value).empty() ? std::vector<double>{} : parse_real_list(value);
    } else if (key == "sweep.omega_min") {
        c.omega_min = parse_real(key, value);
    } else if (key == "sweep.omega_max") {
        c.omega_max = parse_real(key, value);
    } else if (key == "sweep.samples") {
        c.samples = parse_count(key, value);
    } else if (key == "sweep.densify_dips") {
        c.densify_dips = parse_bool(key, value);
    } else if (key == "integrand.n") {
        const std::string v = trim(value);
        if (v == "inf" || v == "infinity") c.integrand_n.reset();
        else c.integrand_n = parse_count(key, v);
    } else if (key == "integrand.threshold") {
        c.resonance_threshold = parse_real(key, value);
    } else if (key == "run.steps") {
        c.steps = parse_count(key, value);
    } else if (key == "run.workers") {
        c.workers = parse_count(key, value);
    } else if (key == "run.out") {
        c.output_dir = trim(value);
    } else if (key == "oracle.tolerance") {
        c.oracle_tolerance = parse_real(key, value);
    } else {
        throw InputError("unknown configuration key '" + key + "'");
    }
}

void apply_ini(RunConfig& config, const std::string& text) {
    // boost's INI reader only knows whole-line ';' comments; no value contains ';' or '#', so
    // cut both, trailing ones included.
    std::string cleaned;
    std::istringstream lines(text);
    for (std::string line; std::getline(lines, line);) {
        line.erase(std::min(line.find_first_of(";#"), line.size()));
        cleaned += line;
        cleaned += '\n';
    }
    boost::property_tree::ptree tree;
    try {
        std::istringstream in(cleaned);
        boost::property_tree::ini_parser::read_ini(in, tree);
    } catch (const boost::property_tree::ini_parser_error& e) {
        throw InputError(std::string("config: ") + e.what());
    }
    for (const auto& [section, body] : tree) {
        if (body.empty()) {
            if (!body.data().empty()) throw InputError("config: key '" + section + "' outside a [section]");
            continue;
        }
        for (const auto& [key, node] : body) apply_setting(config, section + "." + key, node.data());
    }
}

void apply_ini_file(RunConfig& config, const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot read config file '" + path + "'");
    std::ostringstream text;
    text << in.rdbuf();
    apply_ini(config, text.str());
}

std::vector<std::string> preset_names() {
    std::vector<std::string> names;
    for (const auto& [name, text] : presets()) names.push_back(name);
    return names;
}

std::string preset_text(const std::string& name) {
    const auto it = presets().find(name);
    if (it == presets().end()) throw InputError("unknown preset '" + name + "'");
    return it->second;
}

std::vector<std::pair<std::string, std::string>> describe(const RunConfig& c) {
    std::vector<std::pair<std::string, std::string>> out{
        {"model.name", c.model == ModelKind::ising ? "ising" : "dirac"},
        {"drive.h", format_number(c.drive.h)},
        {"drive.amplitude", format_number(c.drive.amplitude)},
        {"drive.omega0", format_number(c.drive.omega0)},
        {"drive.phi0", format_number(c.drive.phi0)},
        {"dirac.m0", format_number(c.dirac.m0)},
        {"dirac.omega0", format_number(c.dirac.omega0)},
        {"dirac.vF", format_number(c.dirac.vF)},
        {"dirac.a", format_number(c.dirac.a)},
        {"grid.L", std::to_string(c.L)},
        {"sweep.n", join(c.ns)},
        {"sweep.omegas", join(c.omegas)},
        {"sweep.omega_min", format_number(c.omega_min)},
        {"sweep.omega_max", format_number(c.omega_max)},
        {"sweep.samples", std::to_string(c.samples)},
        {"sweep.densify_dips", c.densify_dips ? "true" : "false"},
        {"integrand.n", c.integrand_n ? std::to_string(*c.integrand_n) : "inf"},
        {"integrand.threshold", format_number(c.resonance_threshold)},
        {"run.steps", std::to_string(c.steps)},
        {"oracle.tolerance", format_number(c.oracle_tolerance)},
    };
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<double> frequency_samples(const RunConfig& c) {
    std::vector<double> out = c.omegas;
    if (out.empty()) {
        if (!(c.omega_min > 0.0) || !(c.omega_min < c.omega_max)) {
            throw InputError("frequency sweep requires 0 < omega_min < omega_max");
        }
        if (c.samples == 1) {
            out.push_back(c.omega_min);
        } else {
            const double ratio = std::log(c.omega_max / c.omega_min);
            for (std::size_t i = 0; i < c.samples; ++i) {
                out.push_back(c.omega_min *
                              std::exp(ratio * static_cast<double>(i) / static_cast<double>(c.samples - 1)));
            }
            if (c.samples > 1) out.back() = c.omega_max;
        }
        if (c.densify_dips) {
            for (double dip : dip_frequencies(c.omega_min, c.omega_max)) {
                for (double offset : {-0.02, -0.01, -0.005, 0.0, 0.005, 0.01, 0.02}) {
                    const double w = dip * (1.0 + offset);
                    if (w >= c.omega_min && w <= c.omega_max) out.push_back(w);
                }
            }
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    if (out.empty()) throw InputError("frequency list is empty");
    return out;
}

}  // namespace floquet_echo::cli
