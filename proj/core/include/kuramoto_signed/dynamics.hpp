#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

#include "kuramoto_signed/matrix.hpp"
#include "kuramoto_signed/model.hpp"

namespace kuramoto_signed {

/// Coupled phase/coupling state at a given time.
struct SystemState {
    PhaseState theta;
    CouplingMatrix kappa;
    double time = 0.0;

    [[nodiscard]] std::size_t size() const noexcept { return theta.size(); }
    /// Throws on dimension mismatch or negative time.
    void validate() const;
};

struct Diagnostics {
    double diameter = 0.0;  ///< lifted max - min
    double r1 = 0.0;
    double r2 = 0.0;
    double kmin = 0.0;
    double kmax = 0.0;

    friend bool operator==(const Diagnostics&, const Diagnostics&) = default;
};

[[nodiscard]] Diagnostics diagnose(const SystemState& state);

struct Sample {
    SystemState state;
    Diagnostics diagnostics;
};

struct Trajectory {
    ModelParams params;
    std::vector<Sample> samples;

    [[nodiscard]] bool empty() const noexcept { return samples.empty(); }
    [[nodiscard]] const Sample& back() const { return samples.back(); }
};

struct IntegratorConfig {
    double step = 1e-2;
    double t_end = 1.0;
    std::size_t sample_every = 1;

    /// Requires 0 < step <= 0.1, t_end > 0, sample_every >= 1 and a representable step count.
    void validate() const;
    [[nodiscard]] std::size_t step_count() const;
};

struct RhsValue {
    std::vector<double> dtheta;
    SquareMatrix dkappa;
};

/// Vector field of the adaptive model; dkappa is identically zero when epsilon = 0.
[[nodiscard]] RhsValue rhs_adaptive(const SystemState& state, const ModelParams& params);

/// Phase vector field with the coupling held fixed. With alpha = 0 this equals
/// (1/N) sum_j kappa_ij sin(theta_j - theta_i) + omega.
[[nodiscard]] std::vector<double> rhs_static(const PhaseState& theta, const CouplingMatrix& kappa,
                                             const ModelParams& params);

/// Called once per recorded sample, in time order.
using SampleObserver = std::function<void(const SystemState&, const Diagnostics&)>;

/// Classical fixed-step RK4. Samples are taken at step 0, every `sample_every` steps and at
/// the final step. Throws NumericalError naming the first step that produced a non-finite
/// value.
void integrate(const SystemState& initial, const ModelParams& params, const IntegratorConfig& cfg,
               const SampleObserver& observer);

[[nodiscard]] Trajectory integrate(const SystemState& initial, const ModelParams& params,
                                   const IntegratorConfig& cfg);

/// Two-set split of the oscillator indices.
struct Partition {
    std::vector<std::size_t> first;
    std::vector<std::size_t> second;

    [[nodiscard]] std::vector<int> labels(std::size_t n) const;
    friend bool operator==(const Partition&, const Partition&) = default;
};

/// (Theta, K) -> (Theta~, K~): shifts `second` by -pi and flips the sign of cross couplings.
[[nodiscard]] SystemState gauge_transform(const SystemState& state, const Partition& partition);

/// Splits phases into two circular clusters at the two largest gaps. The cluster holding
/// oscillator 0 comes first.
[[nodiscard]] Partition split_two_clusters(std::span<const double> theta);

enum class SyncKind { complete_sync, antipodal_sync, not_converged };

[[nodiscard]] const char* sync_kind_name(SyncKind kind) noexcept;

struct SyncVerdict {
    SyncKind kind = SyncKind::not_converged;
    std::optional<Partition> partition;
    std::optional<double> asymptotic_kappa;
    double final_diameter = 0.0;
};

inline constexpr double kDefaultTolPhase = 1e-6;
inline constexpr double kDefaultTolKappa = 1e-3;

/// Sync verdict over the trailing 10% of samples. The phase criterion uses the circular
/// diameter, so it does not depend on how the phases are lifted.
[[nodiscard]] SyncVerdict detect_sync(const Trajectory& traj, double tol_phase = kDefaultTolPhase,
                                      double tol_kappa = kDefaultTolKappa);

}  // namespace kuramoto_signed
