// Cross-checks against independent implementations: Eigen's symmetric eigensolver, a
// finite-difference Jacobian and brute-force trigonometric sums.
#include <doctest.h>

#include <Eigen/Dense>

#include <cmath>
#include <random>

#include "kuramoto_signed/dynamics.hpp"
#include "kuramoto_signed/spectral.hpp"

using namespace kuramoto_signed;

namespace {

Eigen::MatrixXd to_eigen(const SquareMatrix& m) {
    Eigen::MatrixXd out(m.size(), m.size());
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < m.size(); ++j) out(i, j) = m(i, j);
    return out;
}

std::vector<double> eigen_spectrum(const SquareMatrix& m) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(to_eigen(m), Eigen::EigenvaluesOnly);
    REQUIRE(solver.info() == Eigen::Success);
    const auto& v = solver.eigenvalues();
    return {v.data(), v.data() + v.size()};
}

SquareMatrix negative_laplacian_over_n(const SquareMatrix& k) {
    const std::size_t n = k.size();
    SquareMatrix j(n);
    for (std::size_t r = 0; r < n; ++r) {
        double row = 0.0;
        for (std::size_t c = 0; c < n; ++c) {
            row += k(r, c);
            j(r, c) = k(r, c);
        }
        j(r, r) -= row;
    }
    for (double& v : j.data()) v /= static_cast<double>(n);
    return j;
}

}  // namespace

TEST_CASE("Jacobi eigensolver agrees with Eigen on random symmetric matrices") {
    std::mt19937_64 rng(31);
    std::uniform_real_distribution<double> u(-4.0, 4.0);
    for (std::size_t n : {1u, 2u, 3u, 7u, 16u, 40u, 90u}) {
        SquareMatrix m(n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j <= i; ++j) m(i, j) = m(j, i) = u(rng);
        CHECK(multiset_distance(numeric_spectrum(m), eigen_spectrum(m)) < 1e-10);
    }
}

TEST_CASE("closed-form block spectra agree with Eigen") {
    std::mt19937_64 rng(32);
    std::uniform_int_distribution<std::size_t> groups(1, 5);
    std::uniform_int_distribution<std::size_t> size(1, 8);
    std::uniform_real_distribution<double> w(-3.0, 3.0);
    std::bernoulli_distribution coin(0.5);
    for (int trial = 0; trial < 100; ++trial) {
        BlockNetworkSpec spec;
        spec.group_sizes.resize(groups(rng));
        for (auto& g : spec.group_sizes) g = size(rng);
        spec.a = w(rng);
        spec.b = w(rng);
        const auto k = build_block_network(spec);
        const auto lap = eigen_spectrum(negative_laplacian_over_n(k));
        const auto closed = complete_sync_spectrum(spec).scaled(-1.0 / static_cast<double>(spec.node_count()));
        CHECK(multiset_distance(closed.expanded(), lap) < 1e-10);

        std::vector<PhaseClass> classes(spec.group_count());
        for (auto& c : classes) c = coin(rng) ? PhaseClass::pi : PhaseClass::zero;
        spec.classes = classes;
        const auto anti = eigen_spectrum(negative_laplacian_over_n(antipodal_matrix_A(spec)));
        const auto closed_anti = antipodal_spectrum(spec).scaled(-1.0 / static_cast<double>(spec.node_count()));
        CHECK(multiset_distance(closed_anti.expanded(), anti) < 1e-10);
    }
}

TEST_CASE("analytic Jacobian matches central finite differences of the phase field") {
    std::mt19937_64 rng(33);
    std::uniform_real_distribution<double> phase(0.0, kTwoPi);
    std::uniform_real_distribution<double> weight(-1.0, 1.0);
    for (int trial = 0; trial < 20; ++trial) {
        const std::size_t n = 3 + trial % 6;
        const double alpha = 0.05 * trial;
        std::vector<double> theta(n);
        for (auto& t : theta) t = phase(rng);
        CouplingMatrix k(n);
        for (double& v : k.data()) v = weight(rng);
        const ModelParams p{0.2, alpha, -1.0, 0.0};
        const auto j = numeric_jacobian(k, theta, alpha);
        constexpr double h = 1e-6;
        for (std::size_t c = 0; c < n; ++c) {
            auto plus = theta;
            auto minus = theta;
            plus[c] += h;
            minus[c] -= h;
            const auto fp = rhs_static(PhaseState(plus), k, p);
            const auto fm = rhs_static(PhaseState(minus), k, p);
            for (std::size_t r = 0; r < n; ++r) CHECK(j(r, c) == doctest::Approx((fp[r] - fm[r]) / (2 * h)).epsilon(1e-7).scale(1.0));
        }
    }
}

TEST_CASE("rotating-wave eigenvalues agree with Eigen on the circulant Jacobian") {
    for (std::size_t n : {7u, 12u, 25u})
        for (std::size_t w = 1; w <= BandNetworkSpec::max_half_bandwidth(n); w += 2)
            for (std::size_t m = 0; m < n; m += 2)
                for (double p : {0.1, 2.0}) {
                    const BandNetworkSpec spec{n, w, p};
                    const auto jac = numeric_jacobian(build_band_network(spec), rotating_wave(n, m).phases(), 0.0);
                    // Circulant and symmetric: its spectrum is real.
                    auto closed = rotating_wave_eigenvalues(spec, m);
                    for (auto& v : closed) v /= static_cast<double>(n);
                    CHECK(multiset_distance(closed, eigen_spectrum(jac)) < 1e-10);
                }
}

TEST_CASE("partial trigonometric sums against brute force") {
    for (std::size_t n = 4; n <= 40; n += 3)
        for (std::size_t jm = 1; jm <= n; jm += 2)
            for (std::size_t m = 0; m < n; m += 3)
                for (std::size_t k = 0; k < n; k += 2) {
                    long double direct = 0.0L;
                    for (std::size_t j = 1; j <= jm; ++j) {
                        const long double x = 2.0L * 3.14159265358979323846264338327950288L * j / n;
                        direct += std::cos(m * x) * (1.0L - std::cos(k * x));
                    }
                    CHECK(s_sum(jm, m, k, n) == doctest::Approx(static_cast<double>(direct)).epsilon(1e-11).scale(1.0));
                }
}
