#include <doctest.h>

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <random>

#include "kuramoto_signed/error.hpp"
#include "kuramoto_signed/io.hpp"
#include "kuramoto_signed/parallel.hpp"
#include "kuramoto_signed/report.hpp"

using namespace kuramoto_signed;
namespace fs = std::filesystem;

namespace {

fs::path scratch_dir(const std::string& name) {
    const auto dir = fs::temp_directory_path() / ("kuramoto_signed_io_" + name);
    fs::remove_all(dir);
    fs::create_directories(dir);
    return dir;
}

}  // namespace

TEST_CASE("numbers round-trip through their decimal rendering") {
    std::mt19937_64 rng(6);
    std::uniform_real_distribution<double> u(-1e3, 1e3);
    for (int i = 0; i < 1000; ++i) {
        const double x = u(rng) * std::pow(10.0, i % 30 - 15);
        CHECK(std::strtod(format_number(x).c_str(), nullptr) == x);
    }
    CHECK(format_number(0.5) == "0.5");
}

TEST_CASE("network specs round-trip through JSON") {
    const std::vector<NetworkSpec> specs{
        BlockNetworkSpec{{2, 3}, 1.5, -0.25, std::nullopt},
        BlockNetworkSpec{{1, 1, 4}, -1.0, 2.0, std::vector{PhaseClass::zero, PhaseClass::pi, PhaseClass::pi}},
        BandNetworkSpec{20, 3, 0.1},
    };
    for (const auto& spec : specs) {
        const auto j = network_to_json(spec);
        CHECK(network_to_json(network_from_json(j)) == j);
        CHECK(build_network(network_from_json(j)) == build_network(spec));
    }
    CHECK_THROWS_AS((void)network_from_json(nlohmann::json{{"type", "ring"}}), Error);
    CHECK_THROWS_AS((void)network_from_json(nlohmann::json{{"type", "band"}, {"n", 6}, {"w", 3}, {"p", 1.0}}),
                    Error);
    CHECK_THROWS_AS((void)network_from_json(nlohmann::json{{"type", "block"}, {"a", 1.0}}), Error);
}

TEST_CASE("matrices round-trip through CSV") {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> u(-5.0, 5.0);
    SquareMatrix m(4);
    for (double& v : m.data()) v = u(rng);
    CHECK(matrix_from_csv(matrix_to_csv(m)) == m);
    CHECK(matrix_from_csv("1,2\n\n3,4\n") == SquareMatrix{{1, 2}, {3, 4}});
    CHECK_THROWS_AS((void)matrix_from_csv("1,2,3\n4,5,6\n"), Error);
}

TEST_CASE("atomic writes replace the file and leave no temporary behind") {
    const auto dir = scratch_dir("atomic");
    const auto path = dir / "nested" / "out.txt";
    write_file_atomic(path, "first");
    write_file_atomic(path, "second");
    CHECK(read_file(path) == "second");
    std::size_t files = 0;
    for ([[maybe_unused]] const auto& e : fs::directory_iterator(path.parent_path())) ++files;
    CHECK(files == 1);
    CHECK_THROWS((void)read_file(dir / "missing.txt"));
}

TEST_CASE("CSV headers") {
    CHECK(trajectory_csv_header(2) ==
          "t,theta_0,theta_1,kappa_0_0,kappa_0_1,kappa_1_0,kappa_1_1,diameter,r1,r2,kmin,kmax\n");
    const auto csv = spectrum_to_csv(Spectrum::from_values({0.0, 4.0, 4.0}));
    CHECK(csv == "value,multiplicity\n0,1\n4,2\n");
    const auto adm = admissible_to_csv({{3, 1, p_range::UpperBounded{0.5}}, {4, 2, p_range::Empty{}}});
    CHECK(adm == "W,m,kind,lower,upper\n3,1,upper,,0.5\n4,2,empty,,\n");
}

TEST_CASE("trajectory rows have one field per header column") {
    const SystemState s{PhaseState({0.1, 0.2, 0.3}), CouplingMatrix(3, 0.5), 1.5};
    const auto header = trajectory_csv_header(3);
    const auto row = trajectory_csv_row(s, diagnose(s));
    CHECK(std::count(header.begin(), header.end(), ',') == std::count(row.begin(), row.end(), ','));
    CHECK(row.rfind("1.5,", 0) == 0);
}

TEST_CASE("sync verdicts serialize their partition") {
    SyncVerdict v;
    v.kind = SyncKind::antipodal_sync;
    v.partition = Partition{{0, 2}, {1}};
    v.asymptotic_kappa = 0.8;
    const auto j = verdict_to_json(v);
    CHECK(j.at("kind") == sync_kind_name(SyncKind::antipodal_sync));
    CHECK(j.dump().find("0.8") != std::string::npos);
}

TEST_CASE("assertion reports") {
    const std::vector<AssertionLine> lines{{true, "D(t) <= bound", 2.5}, {false, "kappa error", std::nullopt}};
    CHECK(format_report(lines) == "PASS D(t) <= bound t=2.5\nFAIL kappa error\n");
    CHECK_FALSE(all_pass(lines));
    CHECK(all_pass({}));
}

TEST_CASE("parallel_for visits every index once and rethrows the first failure") {
    std::vector<std::atomic<int>> hits(1000);
    parallel_for(hits.size(), [&](std::size_t i) { hits[i].fetch_add(1); });
    for (const auto& h : hits) CHECK(h.load() == 1);

    try {
        parallel_for(100, [](std::size_t i) {
            if (i == 17 || i == 60) throw Error("index " + std::to_string(i));
        });
        FAIL("expected an exception");
    } catch (const Error& e) {
        CHECK(std::string(e.what()) == "index 17");
    }
    CHECK(worker_count() >= 1);
}
