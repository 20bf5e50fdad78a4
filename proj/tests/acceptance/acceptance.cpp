// Acceptance run: one PASS/FAIL line per criterion, each followed by the assertions behind it.
// Exits non-zero when any criterion fails.
#include <chrono>
#include <cstdio>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "kuramoto_signed/verify.hpp"

namespace {

using namespace kuramoto_signed;

struct Criterion {
    int id;
    std::function<CheckResult()> run;
    std::optional<double> budget_seconds;
};

}  // namespace

int main() {
    const std::vector<Criterion> criteria{
        {1, [] { return check_block_spectra(); }, 30.0},
        {2, [] { return check_circulant_spectra(); }, 60.0},
        {3, [] { return check_stability_map(); }, std::nullopt},
        {4, [] { return check_admissible_table(); }, std::nullopt},
        {5, [] { return check_invariance_trials(); }, std::nullopt},
        {6, [] { return check_theorem1_trials(); }, 120.0},
        {7, [] { return check_theorem2_trials(); }, std::nullopt},
        {8, [] { return check_critical_diameter_grid(); }, std::nullopt},
        {9, [] { return check_numerical_hygiene(); }, std::nullopt},
    };

    int failures = 0;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        CheckResult result = c.run();
        const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (c.budget_seconds) {
            result.lines.push_back({seconds < *c.budget_seconds,
                                    "runtime " + short_number(seconds) + " s < " +
                                        short_number(*c.budget_seconds) + " s",
                                    std::nullopt});
        }
        const bool pass = result.passed();
        if (!pass) ++failures;
        std::printf("%s criterion %d: %s (%.1f s)\n", pass ? "PASS" : "FAIL", c.id, result.title.c_str(), seconds);
        for (const auto& line : result.lines)
            std::printf("    %s %s\n", line.pass ? "PASS" : "FAIL", line.assertion.c_str());
        std::fflush(stdout);
    }
    std::printf("%d of %zu criteria failed\n", failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
