#include <doctest.h>

#include <filesystem>
#include <sstream>

#include <nlohmann/json.hpp>

#include "cli.hpp"
#include "commands.hpp"
#include "kuramoto_signed/io.hpp"
#include "run_config.hpp"

using namespace kuramoto_signed;
using namespace kuramoto_signed::cli;
namespace fs = std::filesystem;
using nlohmann::json;

namespace {

const fs::path kConfigs = fs::path(KURAMOTO_SIGNED_SOURCE_DIR) / "configs";

fs::path scratch_dir(const std::string& name) {
    const auto dir = fs::temp_directory_path() / ("kuramoto_signed_cli_" + name);
    fs::remove_all(dir);
    fs::create_directories(dir);
    return dir;
}

struct Run {
    int code = 0;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

std::vector<std::string> lines_of(const std::string& text) {
    std::vector<std::string> lines;
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);) lines.push_back(line);
    return lines;
}

}  // namespace

TEST_CASE("usage errors exit with 2") {
    CHECK(run({}).code == kExitUsage);
    CHECK(run({"frobnicate"}).code == kExitUsage);
    CHECK(run({"verify", "bogus"}).code == kExitUsage);
    CHECK(run({"spectrum", "--network", R"({"type":"band","n":20,"w":3,"p":0.1})", "--kind", "sideways"}).code ==
          kExitUsage);
    CHECK(run({"spectrum", "--network", "{not json", "--kind", "sync"}).code == kExitUsage);
    CHECK(run({"--help"}).code == kExitOk);
}

TEST_CASE("grid and index parsing") {
    CHECK(parse_grid("1,2.5,-3") == std::vector<double>{1, 2.5, -3});
    const auto lin = parse_grid("lin:0:1:5");
    CHECK(lin == std::vector<double>{0, 0.25, 0.5, 0.75, 1});
    const auto lg = parse_grid("log:0.01:10:4");
    REQUIRE(lg.size() == 4);
    CHECK(lg[1] == doctest::Approx(0.1));
    CHECK(lg[3] == 10.0);
    CHECK(parse_grid("-0.5pi")[0] == doctest::Approx(-kPi / 2));
    CHECK(parse_index_list("1:4") == std::vector<std::size_t>{1, 2, 3, 4});
    CHECK(parse_index_list("0,2,4") == std::vector<std::size_t>{0, 2, 4});
    CHECK_THROWS((void)parse_grid("lin:0:1"));
    CHECK_THROWS((void)parse_grid("log:0:1:3"));
}

TEST_CASE("pi expressions") {
    CHECK(parse_real("-0.5pi") == doctest::Approx(-kPi / 2));
    CHECK(parse_real("-pi/3") == doctest::Approx(-kPi / 3));
    CHECK(parse_real("2*pi") == doctest::Approx(kTwoPi));
    CHECK(parse_real("pi") == doctest::Approx(kPi));
    CHECK(parse_real("1.25") == 1.25);
    CHECK_THROWS((void)parse_real("pie"));
    CHECK_THROWS((void)parse_real(""));
}

TEST_CASE("simulate: sign-definite run synchronizes completely") {
    const auto dir = scratch_dir("sim_sync");
    const auto r = run({"simulate", (kConfigs / "theorem1.json").string(), "--out", dir.string()});
    REQUIRE(r.code == kExitOk);
    const auto verdict = json::parse(read_file(dir / "verdict.json"));
    CHECK(verdict.at("kind") == "CompleteSync");
    CHECK(verdict.at("asymptotic_kappa").get<double>() == doctest::Approx(std::sin(kPi / 3)).epsilon(1e-3));
    CHECK(fs::exists(dir / "trajectory.csv"));
}

TEST_CASE("simulate: splay state with frozen coupling keeps its diameter") {
    const auto dir = scratch_dir("sim_splay");
    REQUIRE(run({"simulate", (kConfigs / "splay_static.json").string(), "--out", dir.string(), "--gnuplot"}).code ==
            kExitOk);
    CHECK(json::parse(read_file(dir / "verdict.json")).at("kind") == "NotConverged");
    CHECK(fs::exists(dir / "trajectory.gp"));
    const auto rows = lines_of(read_file(dir / "trajectory.csv"));
    REQUIRE(rows.size() > 2);
    const auto diameter_column = [&](const std::string& row) {
        std::vector<std::string> cells;
        std::istringstream in(row);
        for (std::string cell; std::getline(in, cell, ',');) cells.push_back(cell);
        return std::stod(cells.at(cells.size() - 5));
    };
    const double d0 = diameter_column(rows[1]);
    for (std::size_t i = 2; i < rows.size(); ++i) CHECK(diameter_column(rows[i]) == doctest::Approx(d0).epsilon(1e-9));
}

TEST_CASE("simulate: the written config reproduces the run exactly") {
    const auto first = scratch_dir("sim_repeat_a");
    const auto second = scratch_dir("sim_repeat_b");
    REQUIRE(run({"simulate", (kConfigs / "theorem1.json").string(), "--out", first.string()}).code == kExitOk);
    REQUIRE(run({"simulate", (first / "config.json").string(), "--out", second.string()}).code == kExitOk);
    CHECK(read_file(first / "trajectory.csv") == read_file(second / "trajectory.csv"));
    CHECK(read_file(first / "config.json") == read_file(second / "config.json"));
}

TEST_CASE("run configs: explicit form is a fixed point and bad fields are rejected") {
    const auto config = load_run_config(kConfigs / "theorem1.json");
    const auto explicit_form = run_config_to_json(config);
    CHECK(run_config_to_json(parse_run_config(explicit_form)) == explicit_form);

    auto unknown = json::parse(read_file(kConfigs / "theorem1.json"));
    unknown["model"]["gamma"] = 1.0;
    CHECK_THROWS_AS((void)parse_run_config(unknown), ConfigError);

    auto mismatch = json::parse(read_file(kConfigs / "theorem1.json"));
    mismatch["initial_phases"]["n"] = 9;
    CHECK_THROWS_AS((void)parse_run_config(mismatch), ConfigError);

    auto unseeded = json::parse(read_file(kConfigs / "theorem1.json"));
    unseeded["initial_kappa"].erase("seed");
    CHECK_THROWS_AS((void)parse_run_config(unseeded), ConfigError);
}

TEST_CASE("spectrum: worked examples") {
    const auto dir = scratch_dir("spectrum");
    auto r = run({"spectrum", "--network", R"({"type":"block","group_sizes":[3,3],"a":1,"b":-1})", "--kind", "sync",
                  "--out", dir.string()});
    CHECK(r.code == kExitOk);
    CHECK(read_file(dir / "summary.txt").find("verdict=Unstable(1)") != std::string::npos);

    r = run({"spectrum", "--network", R"({"type":"band","n":20,"w":3,"p":0.1})", "--kind", "rotating:1", "--out",
             dir.string()});
    CHECK(r.code == kExitOk);
    const auto summary = read_file(dir / "summary.txt");
    CHECK(summary.rfind("PASS", 0) == 0);

    r = run({"spectrum", "--network", R"({"type":"block","group_sizes":[5],"a":1,"b":0})", "--kind", "sync", "--out",
             dir.string()});
    CHECK(r.code == kExitOk);
    CHECK(read_file(dir / "summary.txt").find("verdict=Stable") != std::string::npos);

    r = run({"spectrum", "--network",
             R"({"type":"block","group_sizes":[2,2],"a":1,"b":-1,"classes":[0,1]})", "--kind", "antipodal", "--out",
             dir.string()});
    CHECK(r.code == kExitOk);
    const auto csv = lines_of(read_file(dir / "spectrum.csv"));
    REQUIRE_FALSE(csv.empty());
    CHECK(csv[0] == "source,value,multiplicity");
}

TEST_CASE("admissible-p rows") {
    const auto dir = scratch_dir("admissible");
    REQUIRE(run({"admissible-p", "--n", "100", "--m", "2,4", "--w", "10,40", "--out", dir.string()}).code == kExitOk);
    const auto rows = lines_of(read_file(dir / "admissible_p.csv"));
    REQUIRE(rows.size() == 5);
    CHECK(rows[0] == "W,m,kind,lower,upper");
    bool saw_m2_w10 = false;
    bool saw_m4_w40 = false;
    for (const auto& row : rows) {
        if (row.rfind("10,2,", 0) == 0) {
            saw_m2_w10 = true;
            CHECK(row.find("empty") == std::string::npos);
        }
        if (row.rfind("40,4,", 0) == 0) {
            saw_m4_w40 = true;
            CHECK(row == "40,4,empty,,");
        }
    }
    CHECK(saw_m2_w10);
    CHECK(saw_m4_w40);
}

TEST_CASE("sweep-dbar: single cell and kappa ordering") {
    const auto dir = scratch_dir("sweep");
    REQUIRE(run({"sweep-dbar", "--beta", "-1", "--epsilon", "0.4", "--kappa", "-0.3", "--out", dir.string()}).code ==
            kExitOk);
    const auto rows = lines_of(read_file(dir / "dbar_panel_0.csv"));
    REQUIRE(rows.size() == 2);
    const double d_bar = std::stod(rows[1].substr(rows[1].rfind(',') + 1));
    CHECK(d_bar == critical_diameter(-1.0, 0.4, -0.3).d_bar);
    CHECK(json::parse(read_file(dir / "dbar.json")).at("panels").size() == 1);

    REQUIRE(run({"sweep-dbar", "--beta", "-0.5pi", "--epsilon", "log:0.01:10:5", "--kappa", "-0.1,-0.7", "--out",
                 dir.string()})
                .code == kExitOk);
    const auto table = lines_of(read_file(dir / "dbar_panel_0.csv"));
    REQUIRE(table.size() == 11);
    // Rows alternate kappa = -0.1, -0.7 at each epsilon; weaker inhibition admits a wider arc.
    for (std::size_t i = 1; i < table.size(); i += 2) {
        const double weak = std::stod(table[i].substr(table[i].rfind(',') + 1));
        const double strong = std::stod(table[i + 1].substr(table[i + 1].rfind(',') + 1));
        CHECK(weak > strong);
    }
}

TEST_CASE("recipes accept merge-patch overrides") {
    const auto dir = scratch_dir("recipe");
    const auto r = run({"recipe", "fig4", "--set", R"({"n": 20, "m": [0, 1], "w": "1:3"})", "--out", dir.string()});
    REQUIRE(r.code == kExitOk);
    const auto resolved = json::parse(read_file(dir / "recipe.json"));
    CHECK(resolved.at("parameters").at("n") == 20);
    CHECK(lines_of(read_file(dir / "fig4.csv")).size() == 7);
    CHECK(run({"recipe", "fig9"}).code == kExitUsage);
    CHECK(run({"recipe", "fig4", "--set", "[1,2]", "--out", dir.string()}).code == kExitUsage);
}

TEST_CASE("every figure recipe runs with its built-in defaults") {
    for (const auto& name : recipe_names()) {
        if (name == "verify-all") continue;  // covered by the acceptance run
        const auto dir = scratch_dir("recipe_default_" + name);
        CHECK_MESSAGE(run({"recipe", name, "--out", dir.string()}).code == kExitOk, name);
        CHECK(fs::exists(dir / "recipe.json"));
    }
}
