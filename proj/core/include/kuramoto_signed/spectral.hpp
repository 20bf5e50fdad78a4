#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "kuramoto_signed/matrix.hpp"
#include "kuramoto_signed/model.hpp"

namespace kuramoto_signed {

inline constexpr double kSpectrumMergeTol = 1e-9;

struct SpectrumEntry {
    double value = 0.0;
    std::size_t multiplicity = 0;
};

/// Eigenvalue multiset, sorted ascending with near-equal values merged.
class Spectrum {
public:
    Spectrum() = default;

    /// Merges values closer than `merge_tol` to their sorted predecessor.
    [[nodiscard]] static Spectrum from_values(std::vector<double> values,
                                              double merge_tol = kSpectrumMergeTol);
    /// Builds from (value, multiplicity) pairs; zero multiplicities are dropped.
    [[nodiscard]] static Spectrum from_entries(std::vector<SpectrumEntry> entries,
                                               double merge_tol = kSpectrumMergeTol);

    [[nodiscard]] const std::vector<SpectrumEntry>& entries() const noexcept { return entries_; }
    [[nodiscard]] std::size_t total_multiplicity() const noexcept;
    /// Each value repeated by its multiplicity, ascending.
    [[nodiscard]] std::vector<double> expanded() const;
    [[nodiscard]] Spectrum scaled(double factor) const;

private:
    std::vector<SpectrumEntry> entries_;
};

/// Largest |x_k - y_k| between the sorted multisets; infinity when sizes differ.
[[nodiscard]] double multiset_distance(std::vector<double> x, std::vector<double> y);

/// Eigenvalues of a symmetric matrix by cyclic Jacobi rotations, ascending.
/// Throws if the matrix is asymmetric beyond 1e-12 (relative to its largest entry) or larger
/// than 512 x 512.
[[nodiscard]] std::vector<double> numeric_spectrum(const SquareMatrix& matrix);

/// Laplacian spectrum of the block network (spectrum of the linearization at complete sync,
/// up to the factor -1/N).
[[nodiscard]] Spectrum complete_sync_spectrum(const BlockNetworkSpec& spec);

/// A_ij = kappa_ij cos(c_m - c_l): block weights with the sign flipped across classes.
[[nodiscard]] SquareMatrix antipodal_matrix_A(const BlockNetworkSpec& spec);

/// Laplacian spectrum of A. With every group in one class A = K, so this falls back to
/// complete_sync_spectrum.
[[nodiscard]] Spectrum antipodal_spectrum(const BlockNetworkSpec& spec);

/// J_ij = (1/N) kappa_ij cos(theta_i - theta_j + alpha) off the diagonal, rows summing to zero.
[[nodiscard]] SquareMatrix numeric_jacobian(const CouplingMatrix& kappa,
                                            std::span<const double> theta_star, double alpha);

/// S_J(m,k) = sum_{j=1}^{J} cos(2 pi m j / n) (1 - cos(2 pi k j / n)).
[[nodiscard]] double s_sum(std::size_t j_max, std::size_t m, std::size_t k, std::size_t n);
/// Closed form of S_n(m,k).
[[nodiscard]] double s_full(std::size_t m, std::size_t k, std::size_t n);

/// lambda_k = -2(1+p) S_W(m,k) + p S_N(m,k), k = 0..N-1. These equal N times the
/// eigenvalues of the Jacobian at the m-twist rotating wave.
[[nodiscard]] std::vector<double> rotating_wave_eigenvalues(const BandNetworkSpec& spec,
                                                            std::size_t m);

namespace p_range {
struct Empty {};
struct Bounded {
    double lower = 0.0;
    double upper = 0.0;
};
struct LowerBoundedUnbounded {
    double lower = 0.0;
};
struct UpperBounded {
    double upper = 0.0;
};
}  // namespace p_range

/// Set of p > 0 with lambda_k <= 0 for every k.
using AdmissiblePRange = std::variant<p_range::Empty, p_range::Bounded,
                                      p_range::LowerBoundedUnbounded, p_range::UpperBounded>;

[[nodiscard]] const char* range_kind(const AdmissiblePRange& r) noexcept;
[[nodiscard]] bool contains(const AdmissiblePRange& r, double p) noexcept;

/// Admissible inhibition strengths for the m-twist wave on the (n, w) band network.
[[nodiscard]] AdmissiblePRange admissible_p(std::size_t n, std::size_t w, std::size_t m);

namespace verdict {
struct Stable {};
struct Unstable {
    std::size_t positive_modes = 0;
};
struct Marginal {
    std::size_t zero_modes = 0;
};
}  // namespace verdict

using StabilityVerdict = std::variant<verdict::Stable, verdict::Unstable, verdict::Marginal>;

[[nodiscard]] std::string describe(const StabilityVerdict& v);

/// Verdict from Jacobian eigenvalues (negative = stable). The eigenvalue closest to zero is
/// discounted as the global rotation mode; throws "missing rotation mode" if none is within
/// tol_marginal.
[[nodiscard]] StabilityVerdict stability_verdict(std::span<const double> lambdas,
                                                 double tol_marginal = 1e-9);

enum class SyncRegion { stable, unstable, boundary };

/// Stability of complete sync read off the (a, b) phase diagram: unstable for b < 0 with
/// M >= 2, stable for a, b > 0, and for a < 0 < b stable iff the largest group carrying a
/// local mode has proportion below b / (b - a).
[[nodiscard]] SyncRegion complete_sync_region(const BlockNetworkSpec& spec);

}  // namespace kuramoto_signed
