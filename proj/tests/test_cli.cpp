#include <catch_amalgamated.hpp>

#include <filesystem>
#include <fstream>
#include <regex>
#include <sstream>
#include <string>
#include <vector>

#include "floquet_echo/cli/commands.hpp"
#include "floquet_echo/cli/config.hpp"
#include "floquet_echo/errors.hpp"

using namespace floquet_echo;
using namespace floquet_echo::cli;

namespace {

struct Outcome {
    int code = 0;
    std::string out;
    std::string err;
};

Outcome invoke(std::vector<std::string> args) {
    args.insert(args.begin(), "floquet-echo");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    Outcome o;
    o.code = run(static_cast<int>(argv.size()), argv.data(), out, err);
    o.out = out.str();
    o.err = err.str();
    return o;
}

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::filesystem::path scratch(const std::string& leaf) {
    auto dir = std::filesystem::temp_directory_path() / ("floquet_echo_cli_test_" + leaf);
    std::filesystem::remove_all(dir);
    return dir;
}

}  // namespace

TEST_CASE("INI parsing and overrides", "[cli][config]") {
    RunConfig c;
    apply_ini(c,
              "# comment\n"
              "[model]\nname = dirac\n"
              "[dirac]\nm0 = 2.5 ; trailing\nomega0 = 7\n"
              "[grid]\nL = 40\n"
              "[sweep]\nn = 0:10:5, 100\n");
    CHECK(c.model == ModelKind::dirac);
    CHECK(c.dirac.m0 == 2.5);
    CHECK(c.omega0() == 7.0);
    CHECK(c.L == 40);
    CHECK(c.ns == std::vector<std::uint64_t>{0, 5, 10, 100});

    apply_setting(c, "integrand.n", "inf");
    CHECK_FALSE(c.integrand_n.has_value());
    apply_setting(c, "integrand.n", "12");
    CHECK(c.integrand_n == 12u);

    CHECK_THROWS_AS(apply_setting(c, "grid.nope", "1"), InputError);
    CHECK_THROWS_AS(apply_setting(c, "grid.L", "abc"), InputError);
    CHECK_THROWS_AS(apply_ini(c, "L = 4\n"), InputError);
    CHECK_THROWS_AS(parse_count_list("5:1"), InputError);
}

TEST_CASE("presets", "[cli][config]") {
    for (const auto& name : preset_names()) {
        RunConfig c;
        REQUIRE_NOTHROW(apply_ini(c, preset_text(name)));
        CHECK_NOTHROW(c.validate());
    }
    CHECK_THROWS_AS(preset_text("fig9"), InputError);

    RunConfig fig1;
    apply_ini(fig1, preset_text("fig1"));
    CHECK(fig1.ns == std::vector<std::uint64_t>{1, 2, 12, 100});
    fig1.samples = 3;
    fig1.densify_dips = false;
    fig1.L = 16;
    const CsvDocument doc = sweep_frequency(fig1);
    // omega0 + four g_n + g_dec + g_inf
    CHECK(doc.columns.size() == 7);
    CHECK(doc.rows.size() == 3);
}

TEST_CASE("frequency sampling", "[cli][config]") {
    RunConfig c;
    c.omega_min = 0.5;
    c.omega_max = 2.0;
    c.samples = 5;
    const auto w = frequency_samples(c);
    REQUIRE(w.size() == 5);
    CHECK(w.front() == 0.5);
    CHECK_THAT(w.back(), Catch::Matchers::WithinRel(2.0, 1e-15));
    c.densify_dips = true;
    const auto dense = frequency_samples(c);
    CHECK(dense.size() > w.size());
    CHECK(std::is_sorted(dense.begin(), dense.end()));
    CHECK(std::adjacent_find(dense.begin(), dense.end()) == dense.end());

    RunConfig empty;
    empty.samples = 0;
    CHECK_THROWS_AS(frequency_samples(empty), InputError);
}

TEST_CASE("number formatting round-trips", "[cli]") {
    CHECK(format_number(0.1) == "0.1");
    CHECK(std::stod(format_number(1.0 / 3.0)) == 1.0 / 3.0);
}

TEST_CASE("plot scripts reference existing columns", "[cli]") {
    RunConfig c;
    c.L = 8;
    c.omegas = {0.5};
    c.set_omega0(0.5);
    c.ns = {1, 2};
    std::vector<CsvDocument> docs{sweep_frequency(c), sweep_n(c), integrand(c), peaks_dips(c)};
    c.model = ModelKind::dirac;
    c.L = 3;
    c.set_omega0(2.0);
    docs.push_back(integrand(c));
    const std::regex using_re{"using (\\d+):(\\d+)"};
    for (const auto& doc : docs) {
        const std::string gp = doc.plot_script();
        std::size_t found = 0;
        for (auto it = std::sregex_iterator(gp.begin(), gp.end(), using_re); it != std::sregex_iterator(); ++it) {
            ++found;
            CHECK(std::stoul((*it)[1]) <= doc.columns.size());
            CHECK(std::stoul((*it)[2]) <= doc.columns.size());
        }
        CHECK(found == doc.y_columns.size());
        for (const auto& row : doc.rows) CHECK(row.size() == doc.columns.size());
    }
}

TEST_CASE("worker count does not change output", "[cli]") {
    const auto one = scratch("w1");
    const auto four = scratch("w4");
    const std::vector<std::string> common{"--L", "16", "--omega0", "0.3,1,4", "--n", "1,7"};
    auto args1 = common;
    args1.insert(args1.end(), {"--workers", "1", "--out", one.string(), "sweep-frequency"});
    auto args4 = common;
    args4.insert(args4.end(), {"--workers", "4", "--out", four.string(), "sweep-frequency"});
    REQUIRE(invoke(args1).code == kOk);
    REQUIRE(invoke(args4).code == kOk);
    CHECK(slurp(one / "sweep_frequency.csv") == slurp(four / "sweep_frequency.csv"));
    CHECK(slurp(one / "sweep_frequency.gp") == slurp(four / "sweep_frequency.gp"));
    std::filesystem::remove_all(one);
    std::filesystem::remove_all(four);
}

TEST_CASE("exit codes", "[cli]") {
    const auto dir = scratch("codes");
    SECTION("success") {
        const Outcome o = invoke({"--preset", "oracle", "--L", "16", "--out", dir.string(), "oracle"});
        CHECK(o.code == kOk);
        CHECK(o.out.find("PASS") != std::string::npos);
    }
    SECTION("tolerance failure") {
        const Outcome o = invoke({"--preset", "oracle", "--L", "16", "--steps", "4", "--out", dir.string(), "oracle"});
        CHECK(o.code == kToleranceFailure);
        CHECK(std::filesystem::exists(dir / "oracle.csv"));
    }
    SECTION("bad input") {
        CHECK(invoke({"--L", "6", "--out", dir.string(), "sweep-n"}).code == kInputError);
        CHECK(invoke({"--omega0", "1,2", "--out", dir.string(), "sweep-n"}).code == kInputError);
        CHECK(invoke({"--set", "sweep.omegas=", "--out", dir.string(), "sweep-frequency"}).code == kInputError);
        CHECK(invoke({"--out", dir.string()}).code == kInputError);
        CHECK(invoke({"--set", "sweep.omega_min=1", "--set", "sweep.omega_max=0.5", "--out", dir.string(),
                      "peaks-dips"}).code == kInputError);
    }
    SECTION("unwritable output") {
        std::filesystem::create_directories(dir);
        std::ofstream(dir / "blocker") << "x";
        const Outcome o = invoke({"--out", (dir / "blocker" / "sub").string(), "peaks-dips"});
        CHECK(o.code == kIoError);
    }
    std::filesystem::remove_all(dir);
}

TEST_CASE("peaks-dips on a range without peaks still lists dips", "[cli]") {
    RunConfig c;
    c.omega_min = 0.9;
    c.omega_max = 1.1;
    const CsvDocument doc = peaks_dips(c);
    REQUIRE(doc.rows.size() == 1);
    CHECK(doc.rows[0][0] == "dip");
    CHECK(doc.rows[0][1] == "4");
}
