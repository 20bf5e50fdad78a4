#pragma once

#include <cstddef>
#include <numbers>
#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "kuramoto_signed/matrix.hpp"

namespace kuramoto_signed {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// Wraps an angle into [0, 2pi).
[[nodiscard]] double wrap_two_pi(double x);
/// Wraps an angle into (-pi, pi].
[[nodiscard]] double wrap_pi(double x);

/// Parameters of the adaptive model
///   dtheta_i/dt  = omega - (1/N) sum_j kappa_ij sin(theta_i - theta_j + alpha)
///   dkappa_ij/dt = -epsilon (sin(theta_i - theta_j + beta) + kappa_ij).
/// epsilon = 0 freezes the coupling and recovers the static model.
struct ModelParams {
    double omega = 0.0;
    double alpha = 0.0;
    double beta = -kPi / 2.0;
    double epsilon = 0.0;

    /// Throws unless epsilon >= 0, all fields finite and beta in (-pi, pi].
    void validate() const;
    /// True when beta lies in (-pi, 0), the range the invariant-set results need.
    [[nodiscard]] bool beta_is_repulsive_lag() const noexcept { return beta > -kPi && beta < 0.0; }
};

/// Oscillator phases stored as lifted reals (no implicit wrapping).
class PhaseState {
public:
    PhaseState() = default;
    /// Requires at least two oscillators.
    explicit PhaseState(std::vector<double> theta);

    [[nodiscard]] std::size_t size() const noexcept { return theta_.size(); }
    [[nodiscard]] double operator[](std::size_t i) const { return theta_[i]; }
    [[nodiscard]] std::span<const double> phases() const noexcept { return theta_; }
    [[nodiscard]] const std::vector<double>& vector() const noexcept { return theta_; }
    operator std::span<const double>() const noexcept { return theta_; }  // NOLINT

    /// Copy with every entry wrapped into [0, 2pi).
    [[nodiscard]] PhaseState canonicalized() const;
    /// Copy with c added to every phase.
    [[nodiscard]] PhaseState shifted(double c) const;

    friend bool operator==(const PhaseState&, const PhaseState&) = default;

private:
    std::vector<double> theta_;
};

enum class PhaseClass { zero = 0, pi = 1 };

/// Block-structured signed network: weight a inside groups, b across groups.
struct BlockNetworkSpec {
    std::vector<std::size_t> group_sizes;
    double a = 1.0;
    double b = 0.0;
    /// Optional antipodal class of each group (0 or pi).
    std::optional<std::vector<PhaseClass>> classes;

    [[nodiscard]] std::size_t node_count() const noexcept;
    [[nodiscard]] std::size_t group_count() const noexcept { return group_sizes.size(); }
    /// Group index of every node, groups laid out contiguously.
    [[nodiscard]] std::vector<std::size_t> node_groups() const;
    /// Oscillator counts (N_0, N_pi); requires classes.
    [[nodiscard]] std::pair<std::size_t, std::size_t> class_populations() const;
    void validate() const;
};

/// Circular band (locally excitatory, globally inhibitory) network.
struct BandNetworkSpec {
    std::size_t n = 0;
    std::size_t w = 1;
    double p = 1.0;

    /// Largest admissible half-bandwidth, (n - n mod 2)/2 - 1.
    [[nodiscard]] static std::size_t max_half_bandwidth(std::size_t n) noexcept;
    void validate() const;
};

/// Ring index distance min(|i-j|, n-|i-j|).
[[nodiscard]] std::size_t ring_distance(std::size_t i, std::size_t j, std::size_t n) noexcept;

struct OrderParameters {
    int n = 1;
    double r = 0.0;
    double psi = 0.0;
};

namespace config_class {
struct Splay {};
struct Antipodal {};
struct DoubleAntipodal {
    double psi = 0.0;    ///< offset of the second antipodal pair, in (0, pi)
    std::size_t m = 0;   ///< number of phases on the {0, pi} pair
};
struct Synchronized {};
struct Other {};
}  // namespace config_class

using ConfigurationClass = std::variant<config_class::Splay, config_class::Antipodal,
                                        config_class::DoubleAntipodal,
                                        config_class::Synchronized, config_class::Other>;

[[nodiscard]] const char* class_name(const ConfigurationClass& c);

/// theta_i(t) = Omega t + phi_i with kappa_ij = -sin(phi_i - phi_j + beta).
struct PhaseLockedSolution {
    double capital_omega = 0.0;
    PhaseState offsets;
    CouplingMatrix induced_kappa;
};

/// n-th order parameter Z_n = (1/N) sum_j exp(i n theta_j). Psi is 0 when R vanishes.
[[nodiscard]] OrderParameters order_parameter(std::span<const double> theta, int n);

/// Length of the shortest arc containing every phase.
[[nodiscard]] double circular_diameter(std::span<const double> theta);

/// Classification by priority: Synchronized, Antipodal, Splay, DoubleAntipodal, Other.
/// Requires tol in (0, 0.1).
[[nodiscard]] ConfigurationClass classify_configuration(std::span<const double> theta, double tol);

/// Root psi in (0, pi) of (N-m)/m sin(psi - alpha - beta) = sin(psi + alpha + beta), found
/// by bisection. Throws when no interior root exists or every psi is a root.
[[nodiscard]] double solve_psi_m(std::size_t n_total, std::size_t m, double alpha, double beta);

[[nodiscard]] CouplingMatrix build_block_network(const BlockNetworkSpec& spec);
[[nodiscard]] CouplingMatrix build_band_network(const BandNetworkSpec& spec);

/// kappa_ij = -sin(phi_i - phi_j + beta).
[[nodiscard]] CouplingMatrix induced_coupling(std::span<const double> offsets, double beta);

/// Phase-locked solution with frequency Omega and offsets; induced coupling built from beta.
[[nodiscard]] PhaseLockedSolution make_phase_locked(double capital_omega, PhaseState offsets,
                                                    double beta);

/// max - min of lifted phases.
[[nodiscard]] double phase_diameter(std::span<const double> theta);

/// Rotating wave theta_j = 2 pi m j / n, j = 0..n-1.
[[nodiscard]] PhaseState rotating_wave(std::size_t n, std::size_t m);

}  // namespace kuramoto_signed
