#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "kuramoto_signed/error.hpp"
#include "kuramoto_signed/model.hpp"

using namespace kuramoto_signed;
using doctest::Approx;

namespace {

template <class T>
bool holds(const ConfigurationClass& c) {
    return std::holds_alternative<T>(c);
}

// Closed-form root of (N-m)/m sin(psi - s) = sin(psi + s): tan psi = (q+1)/(q-1) tan s.
double psi_from_tangent(std::size_t n, std::size_t m, double s) {
    const double q = static_cast<double>(n - m) / static_cast<double>(m);
    double psi = std::atan2((q + 1.0) * std::sin(s), (q - 1.0) * std::cos(s));
    if (psi <= 0.0) psi += kPi;
    return psi;
}

}  // namespace

TEST_CASE("wrap helpers land in their half-open ranges") {
    for (double x : {-7.0, -kPi, -1e-17, 0.0, 1.0, kPi, kTwoPi, 13.5}) {
        const double a = wrap_two_pi(x);
        CHECK(a >= 0.0);
        CHECK(a < kTwoPi);
        CHECK(std::remainder(a - x, kTwoPi) == Approx(0.0).epsilon(1e-12));
        const double b = wrap_pi(x);
        CHECK(b > -kPi);
        CHECK(b <= kPi);
    }
}

TEST_CASE("order parameter on hand-computed configurations") {
    const std::vector<double> same{0.7, 0.7, 0.7};
    const auto z = order_parameter(same, 1);
    CHECK(z.r == Approx(1.0).epsilon(1e-14));
    CHECK(z.psi == Approx(0.7).epsilon(1e-14));

    const std::vector<double> anti{0.0, kPi};
    CHECK(order_parameter(anti, 2).r == Approx(1.0).epsilon(1e-12));
    CHECK(order_parameter(anti, 1).r == Approx(0.0).epsilon(1e-12));

    const auto splay = rotating_wave(5, 1);
    CHECK(std::abs(order_parameter(splay.phases(), 1).r) < 1e-12);
    // Psi is reported as 0 when the modulus vanishes.
    CHECK(order_parameter(splay.phases(), 1).psi == 0.0);
}

TEST_CASE("order parameter modulus stays in [0, 1] and R2 = 1 on {0, pi} configurations") {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> phase(-10.0, 10.0);
    std::bernoulli_distribution coin(0.5);
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<double> theta(2 + trial % 9);
        for (auto& t : theta) t = phase(rng);
        for (int n : {1, 2, 3}) {
            const double r = order_parameter(theta, n).r;
            CHECK(r >= 0.0);
            CHECK(r <= 1.0 + 1e-15);
        }
        for (auto& t : theta) t = coin(rng) ? kPi : 0.0;
        CHECK(order_parameter(theta, 2).r == Approx(1.0).epsilon(1e-12));
    }
}

TEST_CASE("configuration classes follow the documented priority") {
    CHECK(holds<config_class::Antipodal>(classify_configuration(std::vector{0.0, 0.0, kPi, kPi}, 1e-6)));
    CHECK(holds<config_class::Splay>(
        classify_configuration(std::vector{0.0, kPi / 2, kPi, 3 * kPi / 2}, 1e-6)));
    CHECK(holds<config_class::Synchronized>(classify_configuration(std::vector{0.3, 0.3, 0.3}, 1e-6)));
    CHECK(holds<config_class::Other>(classify_configuration(std::vector{0.0, 0.4, 1.9}, 1e-6)));
}

TEST_CASE("configuration class is invariant under permutation and global rotation") {
    std::mt19937_64 rng(5);
    const std::vector<std::vector<double>> samples{
        {0.0, 0.0, kPi, kPi},
        {0.0, kPi / 2, kPi, 3 * kPi / 2},
        {0.3, 0.3, 0.3},
        {0.0, 0.4, 1.9},
        {0.0, kPi, 0.0, 0.8, 0.8 + kPi},
    };
    for (auto theta : samples) {
        const auto base = classify_configuration(theta, 1e-6).index();
        for (int trial = 0; trial < 10; ++trial) {
            std::shuffle(theta.begin(), theta.end(), rng);
            const double shift = std::uniform_real_distribution<double>(-5.0, 5.0)(rng);
            std::vector<double> moved = theta;
            for (auto& t : moved) t += shift;
            CHECK(classify_configuration(moved, 1e-6).index() == base);
        }
    }
}

TEST_CASE("psi solver matches the tangent identity") {
    CHECK(solve_psi_m(4, 1, 0.0, kPi / 4) == Approx(std::atan(2.0)).epsilon(1e-10));
    CHECK(solve_psi_m(4, 2, 0.0, kPi / 6) == Approx(kPi / 2).epsilon(1e-10));
    CHECK_THROWS_AS((void)solve_psi_m(3, 1, 0.0, 0.0), Error);

    for (std::size_t n : {5u, 8u, 13u})
        for (std::size_t m = 1; m < n; ++m)
            for (double s : {-1.2, -0.4, 0.3, 1.1}) {
                if (2 * m == n) continue;
                const double psi = solve_psi_m(n, m, 0.1, s - 0.1);
                CHECK(psi == Approx(psi_from_tangent(n, m, s)).epsilon(1e-10));
                const double q = static_cast<double>(n - m) / static_cast<double>(m);
                CHECK(std::abs(q * std::sin(psi - s) - std::sin(psi + s)) < 1e-10);
            }
}

TEST_CASE("block network layout") {
    const auto k2 = build_block_network({{1, 1}, 2.0, -1.0, std::nullopt});
    CHECK(k2 == SquareMatrix{{2, -1}, {-1, 2}});
    const auto k3 = build_block_network({{2, 1}, 1.0, 0.0, std::nullopt});
    CHECK(k3 == SquareMatrix{{1, 1, 0}, {1, 1, 0}, {0, 0, 1}});
    const auto k6 = build_block_network({{3, 3}, 1.0, -1.0, std::nullopt});
    for (std::size_t i = 0; i < 6; ++i)
        for (std::size_t j = 0; j < 6; ++j) CHECK(k6(i, j) == ((i < 3) == (j < 3) ? 1.0 : -1.0));
    CHECK_THROWS_AS((void)build_block_network({{}, 1.0, 0.0, std::nullopt}), Error);
}

TEST_CASE("band network rows") {
    const auto k5 = build_band_network({5, 1, 2.0});
    CHECK(std::vector<double>(k5.row(0).begin(), k5.row(0).end()) == std::vector<double>{1, 1, -2, -2, 1});
    const auto k4 = build_band_network({4, 1, 1.0});
    CHECK(std::vector<double>(k4.row(0).begin(), k4.row(0).end()) == std::vector<double>{1, 1, -1, 1});
    CHECK_THROWS_AS((void)build_band_network({6, 3, 1.0}), Error);
}

TEST_CASE("band networks are circulant") {
    for (std::size_t n = 3; n <= 24; ++n)
        for (std::size_t w = 1; w <= BandNetworkSpec::max_half_bandwidth(n); ++w) {
            const auto k = build_band_network({n, w, 0.7});
            for (std::size_t r = 0; r < n; ++r)
                for (std::size_t j = 0; j < n; ++j) REQUIRE(k(r, (j + r) % n) == k(0, j));
        }
}

TEST_CASE("induced coupling") {
    const auto equal = induced_coupling(std::vector{0.4, 0.4, 0.4}, -kPi / 2);
    for (double v : equal.data()) CHECK(v == Approx(1.0).epsilon(1e-15));
    const auto anti = induced_coupling(std::vector{0.0, kPi}, -kPi / 2);
    CHECK(anti(0, 0) == Approx(1.0));
    CHECK(anti(0, 1) == Approx(-1.0));
    CHECK(anti(1, 0) == Approx(-1.0));
    const auto quarter = induced_coupling(std::vector{0.0, kPi / 2}, 0.0);
    CHECK(quarter(0, 1) == Approx(1.0));
    CHECK(quarter(1, 0) == Approx(-1.0));
    CHECK(std::abs(quarter(0, 0)) < 1e-15);
}

TEST_CASE("phase diameters") {
    CHECK(phase_diameter(std::vector{0.1, 0.5, 0.2}) == Approx(0.4));
    CHECK(phase_diameter(std::vector{2.0, 2.0}) == 0.0);
    CHECK(phase_diameter(std::vector{0.0, kPi / 2}) == Approx(kPi / 2));
    // The circular diameter ignores how phases are lifted.
    CHECK(circular_diameter(std::vector{0.1, kTwoPi - 0.1}) == Approx(0.2));
    CHECK(circular_diameter(std::vector{0.1, 0.1 + 5 * kTwoPi}) == Approx(0.0).epsilon(1e-12));
}

TEST_CASE("rotating waves wind uniformly") {
    const auto w = rotating_wave(8, 3);
    for (std::size_t j = 0; j < 8; ++j)
        CHECK(std::remainder(w[j] - kTwoPi * 3.0 * static_cast<double>(j) / 8.0, kTwoPi) == Approx(0.0).epsilon(1e-12));
}

TEST_CASE("model parameter validation") {
    CHECK_NOTHROW(ModelParams{}.validate());
    CHECK_THROWS_AS((ModelParams{0.0, 0.0, -1.0, -0.1}.validate()), Error);
    CHECK_THROWS_AS((ModelParams{std::nan(""), 0.0, -1.0, 0.0}.validate()), Error);
    CHECK_THROWS_AS((void)PhaseState(std::vector<double>{1.0}), Error);
}
