#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "kuramoto_signed/dynamics.hpp"
#include "kuramoto_signed/model.hpp"
#include "kuramoto_signed/report.hpp"

namespace kuramoto_signed {

/// -max(sin(beta - c), sin(beta + c)). Requires beta in (-pi, 0) and c in [0, pi/2).
/// Positivity is left to the caller.
[[nodiscard]] double delta_star(double beta, double c);

/// csc x - cot x on (0, pi). Equals tan(x/2).
[[nodiscard]] double f_gauge(double x);
/// Inverse of f_gauge: 2 atan(y).
[[nodiscard]] double f_gauge_inverse(double y);

/// Diameter bound 2 f^{-1}(f(d0/2) exp(-delta* cos(d0) t)) with delta* = delta_star(beta, d0).
[[nodiscard]] double diameter_bound(double t, double d0, double beta);
/// Same bound with the decay rate min(delta_star(beta, d0), kappa_min0). The contraction
/// estimate only holds for couplings bounded below by the rate, so this variant stays valid
/// when the initial couplings start under delta*.
[[nodiscard]] double diameter_bound(double t, double d0, double beta, double kappa_min0);

struct KappaEnvelope {
    double zeta = 0.0;
    double upper = 0.0;
    double lower = 0.0;
};

/// Asymptotic coupling envelope once all phases are within zeta of each other.
/// Requires 0 < zeta <= min(pi + beta, -beta) / 2.
[[nodiscard]] KappaEnvelope kappa_envelope(double beta, double zeta);

/// Time after which every coupling is non-negative: (1/eps) ln((delta* - kappa_min0) / delta*).
[[nodiscard]] double kappa_nonneg_time(double epsilon, double delta_star_value, double kappa_min0);

inline constexpr std::size_t kDefaultDiameterGrid = 10000;

struct CriticalDiameterResult {
    double d_bar = 0.0;
    double objective_at_max = 0.0;      ///< g(d_bar); may underflow to 0 for small epsilon
    double log_objective_at_max = 0.0;  ///< ln g(d_bar), the quantity actually maximized
    double grid_resolution = 0.0;
    std::size_t argmax_index = 0;       ///< grid index of the scan maximum
};

/// Maximizer of g(D) = f(D/2) exp((delta*/eps) ln((delta* - k0)/delta*) + k0/eps) on
/// [0, min(pi + beta, |beta|)]. A uniform grid scan (skipping points where delta*(beta, D) <= 0,
/// ties to the smaller D) locates the global maximum; when the derivative of ln g changes sign
/// across the neighbouring grid cells, bisection on that derivative pins the stationary point
/// to machine precision. Everything runs on ln g so small epsilon does not collapse the
/// objective to zero. Returns d_bar = 0 when no grid point is usable.
[[nodiscard]] CriticalDiameterResult critical_diameter(double beta, double epsilon,
                                                       double kappa_min0,
                                                       std::size_t grid_points = kDefaultDiameterGrid);

/// Cartesian grid of critical diameters, beta-major then epsilon then kappa.
struct SweepTable {
    std::vector<double> beta;
    std::vector<double> epsilon;
    std::vector<double> kappa_min0;
    std::size_t grid_points = kDefaultDiameterGrid;
    std::vector<double> d_bar;

    [[nodiscard]] std::size_t index(std::size_t ib, std::size_t ie, std::size_t ik) const noexcept {
        return (ib * epsilon.size() + ie) * kappa_min0.size() + ik;
    }
    [[nodiscard]] double at(std::size_t ib, std::size_t ie, std::size_t ik) const {
        return d_bar.at(index(ib, ie, ik));
    }
};

/// Evaluates every cell, in parallel when threads are available. Deterministic.
[[nodiscard]] SweepTable sweep_critical_diameter(std::vector<double> beta_grid,
                                                 std::vector<double> epsilon_grid,
                                                 std::vector<double> kappa_grid,
                                                 std::size_t grid_points = kDefaultDiameterGrid);

struct MembershipResult {
    bool member = false;
    std::optional<Partition> witness;
    std::string violation;  ///< first failed constraint when not a member
};

/// Tests the literal set: phases in [0, c] or [pi, pi + c] (mod 2 pi, no rotation search), same-arc
/// couplings in [delta, 1] and cross-arc couplings in [-1, -delta], every bound widened by
/// `slack`. Nodes are assigned to the arc they fall in.
[[nodiscard]] MembershipResult membership(const SystemState& state, double c, double delta,
                                          double slack = 0.0);

/// Same test against a fixed partition; returns the first violated constraint, if any.
[[nodiscard]] std::optional<std::string> membership_violation(const SystemState& state,
                                                              const Partition& partition, double c,
                                                              double delta, double slack = 0.0);

struct InvarianceTrialConfig {
    double beta = -kPi / 2;
    double c = 0.3;
    double delta = 0.2;
    std::size_t n = 8;
    double epsilon = 0.5;
    double omega = 0.0;
    double t_end = 50.0;
    double step = 1e-2;
    double slack = 1e-6;
    double attraction_tol = 1e-3;
    std::uint64_t seed = 0;
};

struct InvarianceOutcome {
    bool invariant = true;
    std::optional<std::string> violation;  ///< constraint that failed
    double violation_time = 0.0;
    bool attraction_checked = false;
    bool attracted = false;
    double final_min_intra_kappa = 0.0;
    Partition partition;
};

/// Draws a uniform point of the invariant set for `cfg` (random partition, phases uniform on
/// the arcs, couplings uniform in their boxes).
[[nodiscard]] SystemState sample_invariant_set(const InvarianceTrialConfig& cfg, std::uint64_t seed);

/// Integrates one sampled state and checks membership (in the frame co-rotating with omega) at
/// every step against the sampled partition. With epsilon > 0 the run is extended to
/// max(t_end, 12/epsilon) to check that intra-group couplings climb above delta* - tol.
/// Throws if delta >= delta*(beta, c) or delta* <= 0.
[[nodiscard]] InvarianceOutcome check_invariance(const InvarianceTrialConfig& cfg);

struct Thm1Options {
    /// Accept min(pi + beta, |beta|) == pi/2 (beta = -pi/2), which the strict condition excludes.
    bool allow_boundary_beta = false;
};

/// D0 < min(pi + beta, |beta|) < pi/2 and min kappa0 > 0.
[[nodiscard]] bool check_thm1_conditions(const SystemState& state0, double beta,
                                         Thm1Options options = {});

struct TheoremReport {
    std::vector<AssertionLine> lines;
    double max_bound_excess = 0.0;  ///< max over samples of D(t) - bound(t)
    double final_kappa_error = 0.0;
    SyncVerdict verdict;

    [[nodiscard]] bool passed() const noexcept;
    /// `PASS|FAIL <assertion> t=<time>` per line.
    [[nodiscard]] std::string text() const;
};

enum class DiameterBoundKind {
    delta_star_rate, ///< decay rate delta*(beta, D0)
    coupling_limited ///< decay rate min(delta*(beta, D0), kappa_min0)
};

struct Thm1Verification {
    IntegratorConfig integrator{1e-2, 100.0, 1};
    DiameterBoundKind bound = DiameterBoundKind::delta_star_rate;
    double bound_slack = 1e-6;
    double kappa_tol = 1e-3;
    Thm1Options conditions;
};

/// Integrates from state0 and checks D(t) against the diameter bound at every sample and the
/// final coupling error max |kappa_ij + sin beta|. Throws if the hypotheses fail.
[[nodiscard]] TheoremReport verify_theorem1(const SystemState& state0, const ModelParams& params,
                                            const Thm1Verification& cfg = {});

struct Thm2Verification {
    IntegratorConfig integrator{1e-2, 100.0, 1};
    std::size_t grid_points = kDefaultDiameterGrid;
    double slack = 1e-6;
    double kappa_tol = 1e-3;
};

/// Requires kappa_min0 < 0, epsilon > 0 and D0 <= D_bar. Checks D(t) <= D_bar + slack,
/// min kappa >= -slack for t >= T~ + h, and a complete-sync verdict with kappa -> -sin beta.
[[nodiscard]] TheoremReport verify_theorem2(const SystemState& state0, const ModelParams& params,
                                            const Thm2Verification& cfg = {});

}  // namespace kuramoto_signed
