#include <doctest.h>

#include <cmath>
#include <random>

#include "kuramoto_signed/basins.hpp"
#include "kuramoto_signed/error.hpp"

using namespace kuramoto_signed;
using doctest::Approx;

namespace {

double log_g(double beta, double eps, double k0, double d) {
    const double ds = -std::max(std::sin(beta - d), std::sin(beta + d));
    if (!(ds > 0.0) || d <= 0.0) return -INFINITY;
    return std::log(std::tan(d / 4.0)) + (ds / eps) * std::log((ds - k0) / ds) + k0 / eps;
}

SystemState arc_state(std::mt19937_64& rng, std::size_t n, double width, double k_lo, double k_hi) {
    std::uniform_real_distribution<double> phase(0.0, width);
    std::uniform_real_distribution<double> weight(k_lo, k_hi);
    std::vector<double> theta(n);
    for (auto& t : theta) t = phase(rng);
    theta[0] = 0.0;
    theta[1] = width;
    CouplingMatrix kappa(n);
    for (double& k : kappa.data()) k = weight(rng);
    kappa(0, 1) = k_lo;
    return {PhaseState(std::move(theta)), std::move(kappa), 0.0};
}

}  // namespace

TEST_CASE("delta* on worked examples") {
    CHECK(delta_star(-kPi / 2, 0.0) == Approx(1.0));
    CHECK(delta_star(-kPi / 2, kPi / 4) == Approx(std::sqrt(0.5)));
    CHECK(delta_star(-0.1, 0.3) < 0.0);
}

TEST_CASE("gauge function and its inverse") {
    CHECK(f_gauge(kPi / 2) == Approx(1.0));
    CHECK(f_gauge(kPi / 3) == Approx(1.0 / std::sqrt(3.0)));
    double prev = 0.0;
    for (int i = 1; i < 100; ++i) {
        const double x = kPi * i / 100.0;
        const double y = f_gauge(x);
        CHECK(y > prev);
        CHECK(y == Approx(1.0 / std::sin(x) - 1.0 / std::tan(x)).epsilon(1e-12));
        CHECK(f_gauge_inverse(y) == Approx(x).epsilon(1e-13));
        prev = y;
    }
}

TEST_CASE("diameter bound starts at d0 and decays to zero") {
    for (double d0 : {0.1, 0.5, 0.9}) {
        CHECK(diameter_bound(0.0, d0, -kPi / 3) == Approx(d0).epsilon(1e-14));
        CHECK(diameter_bound(500.0, d0, -kPi / 3) < 1e-10);
        CHECK(diameter_bound(1.0, d0, -kPi / 3) < diameter_bound(0.5, d0, -kPi / 3));
        // The coupling-limited bound decays no faster.
        CHECK(diameter_bound(2.0, d0, -kPi / 3, 0.05) >= diameter_bound(2.0, d0, -kPi / 3));
        CHECK(diameter_bound(2.0, d0, -kPi / 3, 10.0) == diameter_bound(2.0, d0, -kPi / 3));
    }
}

TEST_CASE("coupling envelope") {
    const auto e = kappa_envelope(-kPi / 2, kPi / 8);
    CHECK(e.lower == Approx(std::cos(kPi / 8)));
    CHECK(e.upper == Approx(1.0));
    for (double beta : {-2.5, -1.5, -0.6})
        for (double frac : {0.1, 0.5, 1.0}) {
            const double zeta = frac * 0.5 * std::min(kPi + beta, -beta);
            const auto env = kappa_envelope(beta, zeta);
            CHECK(env.lower <= env.upper);
            CHECK(env.lower <= -std::sin(beta));
            CHECK(env.upper >= -std::sin(beta));
        }
    CHECK_THROWS_AS((void)kappa_envelope(-kPi / 2, 1.0), Error);
}

TEST_CASE("time until couplings turn non-negative") {
    CHECK(kappa_nonneg_time(1.0, 1.0, -1.0) == Approx(std::log(2.0)));
    CHECK(kappa_nonneg_time(2.0, 1.0, -1.0) == Approx(std::log(2.0) / 2.0));
    CHECK_THROWS_AS((void)kappa_nonneg_time(1.0, 1.0, 0.5), Error);
    CHECK_THROWS_AS((void)kappa_nonneg_time(0.0, 1.0, -0.5), Error);
}

TEST_CASE("hypotheses of the sign-definite synchronization result") {
    std::mt19937_64 rng(1);
    const auto ok = arc_state(rng, 6, 0.5, 0.5, 1.0);
    CHECK(check_thm1_conditions(ok, -kPi / 3));
    CHECK_FALSE(check_thm1_conditions(ok, -kPi / 2));
    CHECK(check_thm1_conditions(ok, -kPi / 2, Thm1Options{true}));
    CHECK_FALSE(check_thm1_conditions(arc_state(rng, 6, 0.5, -0.1, 1.0), -kPi / 3));
    CHECK_FALSE(check_thm1_conditions(arc_state(rng, 6, 0.5, 0.0, 1.0), -kPi / 3));
    CHECK_FALSE(check_thm1_conditions(arc_state(rng, 6, 1.2, 0.5, 1.0), -kPi / 3));
}

TEST_CASE("membership in the two-arc set") {
    const double c = 0.3;
    const double delta = 0.2;
    const SystemState in{PhaseState({0.1, kPi + 0.2}), SquareMatrix{{0.5, -0.5}, {-0.5, 0.5}}, 0.0};
    const auto m = membership(in, c, delta);
    CHECK(m.member);
    REQUIRE(m.witness);
    CHECK(m.witness->first == std::vector<std::size_t>{0});

    const SystemState weak{PhaseState({0.1, kPi + 0.2}), SquareMatrix{{0.5, -0.1}, {-0.5, 0.5}}, 0.0};
    CHECK_FALSE(membership(weak, c, delta).member);
    CHECK(membership(weak, c, delta, 0.2).member);

    const SystemState off_arc{PhaseState({0.1, 1.0}), SquareMatrix{{0.5, 0.5}, {0.5, 0.5}}, 0.0};
    const auto out = membership(off_arc, c, delta);
    CHECK_FALSE(out.member);
    CHECK_FALSE(out.violation.empty());
}

TEST_CASE("invariance trial on the worked example") {
    InvarianceTrialConfig cfg;  // beta = -pi/2, c = 0.3, delta = 0.2, N = 8, eps = 0.5
    cfg.seed = 4;
    const auto out = check_invariance(cfg);
    CHECK(out.invariant);
    CHECK(out.attraction_checked);
    CHECK(out.attracted);
    CHECK(out.final_min_intra_kappa > delta_star(cfg.beta, cfg.c) - 1e-3);

    InvarianceTrialConfig frozen = cfg;
    frozen.epsilon = 0.0;
    const auto still = check_invariance(frozen);
    CHECK(still.invariant);
    CHECK_FALSE(still.attraction_checked);

    InvarianceTrialConfig bad = cfg;
    bad.delta = delta_star(cfg.beta, cfg.c) + 0.01;
    CHECK_THROWS_AS((void)check_invariance(bad), Error);
}

TEST_CASE("sampled invariant-set points are members") {
    InvarianceTrialConfig cfg;
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const auto s = sample_invariant_set(cfg, seed);
        CHECK(membership(s, cfg.c, cfg.delta).member);
    }
}

TEST_CASE("critical diameter matches a brute-force maximization") {
    for (double beta : {-kPi / 2, -1.0, -2.2})
        for (double eps : {0.01, 0.3, 5.0})
            for (double k0 : {-0.1, -0.5, -0.9}) {
                const double limit = std::min(kPi + beta, -beta);
                double best = -INFINITY;
                double arg = 0.0;
                constexpr int kFine = 200000;
                for (int i = 1; i <= kFine; ++i) {
                    const double d = limit * i / kFine;
                    const double v = log_g(beta, eps, k0, d);
                    if (v > best) {
                        best = v;
                        arg = d;
                    }
                }
                const auto r = critical_diameter(beta, eps, k0);
                CHECK(r.log_objective_at_max >= best - 1e-9);
                CHECK(r.log_objective_at_max == Approx(log_g(beta, eps, k0, r.d_bar)).epsilon(1e-12));
                CHECK(r.d_bar == Approx(arg).epsilon(1e-3).scale(1.0));
            }
}

TEST_CASE("critical diameter symmetry and monotonicity") {
    for (double eps : {0.05, 0.5, 3.0})
        for (double k0 : {-0.2, -0.6}) {
            CHECK(critical_diameter(-0.7, eps, k0).d_bar ==
                  Approx(critical_diameter(-kPi + 0.7, eps, k0).d_bar).epsilon(1e-9));
            CHECK(critical_diameter(-1.2, eps, k0).d_bar <= critical_diameter(-1.2, 2 * eps, k0).d_bar + 1e-12);
            CHECK(critical_diameter(-1.2, eps, k0 - 0.1).d_bar <= critical_diameter(-1.2, eps, k0).d_bar + 1e-12);
        }
}

TEST_CASE("one-cell sweep equals a direct evaluation") {
    const auto t = sweep_critical_diameter({-1.0}, {0.4}, {-0.3});
    REQUIRE(t.d_bar.size() == 1);
    CHECK(t.at(0, 0, 0) == critical_diameter(-1.0, 0.4, -0.3).d_bar);

    const auto grid = sweep_critical_diameter({-1.0, -2.0}, {0.1, 1.0, 10.0}, {-0.1, -0.7});
    CHECK(grid.d_bar.size() == 12);
    CHECK(grid.at(1, 2, 1) == critical_diameter(-2.0, 10.0, -0.7).d_bar);
}

TEST_CASE("bounded-diameter synchronization on the worked example") {
    const double beta = -kPi / 2;
    const double eps = 1.0;
    const double k0 = -0.3;
    const double d_bar = critical_diameter(beta, eps, k0).d_bar;
    std::mt19937_64 rng(12);
    const auto s0 = arc_state(rng, 10, 0.9 * d_bar, k0, 1.0);
    const auto report = verify_theorem2(s0, ModelParams{0.0, 0.0, beta, eps});
    INFO(report.text());
    CHECK(report.passed());
    CHECK(report.verdict.kind == SyncKind::complete_sync);

    CHECK_THROWS_AS((void)verify_theorem2(s0, ModelParams{0.0, 0.0, beta, 0.0}), Error);
    const auto wide = arc_state(rng, 10, std::min(d_bar * 1.5, 1.5), k0, 1.0);
    CHECK_THROWS_AS((void)verify_theorem2(wide, ModelParams{0.0, 0.0, beta, eps}), Error);
}

TEST_CASE("sign-definite synchronization run satisfies the coupling-limited bound") {
    std::mt19937_64 rng(21);
    const auto s0 = arc_state(rng, 8, 0.6, 0.1, 1.0);
    Thm1Verification cfg;
    cfg.bound = DiameterBoundKind::coupling_limited;
    const auto report = verify_theorem1(s0, ModelParams{0.0, 0.0, -1.0, 1.0}, cfg);
    INFO(report.text());
    CHECK(report.passed());
    CHECK(report.final_kappa_error < 1e-3);
    CHECK_THROWS_AS((void)verify_theorem1(arc_state(rng, 8, 0.6, -0.1, 1.0), ModelParams{0.0, 0.0, -1.0, 1.0}),
                    Error);
}
