#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "kuramoto_signed/report.hpp"

namespace kuramoto_signed {

/// Outcome of one property check: a title plus every assertion it made.
struct CheckResult {
    std::string title;
    std::vector<AssertionLine> lines;

    [[nodiscard]] bool passed() const noexcept { return all_pass(lines); }
};

inline constexpr std::uint64_t kDefaultVerifySeed = 20250101;

/// Block networks: closed-form complete-sync and antipodal Laplacian spectra against the dense
/// eigensolver on `count` random specs (N <= 40, M <= 5, a, b in [-3, 3]).
[[nodiscard]] CheckResult check_block_spectra(std::uint64_t seed = kDefaultVerifySeed,
                                              std::size_t count = 200);

/// Band networks, N in [n_min, n_max], every valid W and m, p in {0.1, 1, 10}: lambda_k / N
/// against the Jacobian eigenvalues at the rotating wave, plus admissible_p consistency (range
/// membership on a log grid of p and sign flips of max lambda at the range bounds).
[[nodiscard]] CheckResult check_circulant_spectra(std::size_t n_min = 5, std::size_t n_max = 32);

/// (a, b) grid of `side` x `side` cells with random group sizes: the complete-sync stability
/// rule against the sign of the largest non-rotation Jacobian eigenvalue, plus a scan of the
/// largest-group proportion across the critical ratio b / (b - a).
[[nodiscard]] CheckResult check_stability_map(std::uint64_t seed = kDefaultVerifySeed,
                                              std::size_t side = 50);

/// N = 100 admissible-p table: m = 0 has a finite, non-decreasing upper bound for every W;
/// m in {1, 2, 4} are non-empty for W <= N / (4m), and the largest non-empty W shrinks with m.
[[nodiscard]] CheckResult check_admissible_table();

/// Random trials inside the invariant set: no membership violations over [0, 50] and
/// intra-group couplings attracted above delta* - 1e-3.
[[nodiscard]] CheckResult check_invariance_trials(std::uint64_t seed = kDefaultVerifySeed,
                                                  std::size_t trials = 100);

/// Random admissible initial data for the sign-definite synchronization theorem (N = 10,
/// beta in (-pi/2, -pi/4)): D(t) under the delta*-rate diameter bound at every sample and the
/// couplings within 1e-3 of -sin(beta) at t = 100. A second, informational line reports the
/// same runs against the coupling-limited bound.
[[nodiscard]] CheckResult check_theorem1_trials(std::uint64_t seed = kDefaultVerifySeed,
                                                std::size_t trials = 50);

/// Random initial data with kappa_min0 in [-0.5, -0.1] and D0 = 0.9 D_bar.
[[nodiscard]] CheckResult check_theorem2_trials(std::uint64_t seed = kDefaultVerifySeed,
                                                std::size_t trials = 20);

/// Critical-diameter grid (20 epsilons x 20 kappas x 4 betas): monotonicity in epsilon and
/// kappa, symmetry under beta -> -pi - beta, and the small-epsilon limit.
[[nodiscard]] CheckResult check_critical_diameter_grid();

/// RK4 order ratio, mean-phase conservation and bit-exact repeatability.
[[nodiscard]] CheckResult check_numerical_hygiene(std::uint64_t seed = kDefaultVerifySeed);

/// Coupling box invariance and rotational equivariance along random adaptive runs.
[[nodiscard]] CheckResult check_dynamics_properties(std::uint64_t seed = kDefaultVerifySeed);

[[nodiscard]] const std::vector<std::string>& suite_names();

/// Runs a named suite (spectral-oracle, invariance, theorem1, theorem2, properties).
/// Throws Error for an unknown name.
[[nodiscard]] std::vector<CheckResult> run_suite(std::string_view name,
                                                 std::uint64_t seed = kDefaultVerifySeed);

}  // namespace kuramoto_signed
