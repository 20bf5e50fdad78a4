#include "kuramoto_signed/model.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <string>

namespace kuramoto_signed {

double wrap_two_pi(double x) {
    double r = std::fmod(x, kTwoPi);
    if (r < 0.0) r += kTwoPi;
    // fmod of a tiny negative value can round up to exactly 2pi
    if (r >= kTwoPi) r = 0.0;
    return r;
}

double wrap_pi(double x) {
    double r = wrap_two_pi(x);
    if (r > kPi) r -= kTwoPi;
    return r;
}

void ModelParams::validate() const {
    if (!std::isfinite(omega) || !std::isfinite(alpha) || !std::isfinite(beta) ||
        !std::isfinite(epsilon)) {
        throw Error("model parameters must be finite");
    }
    if (epsilon < 0.0) throw Error("epsilon must be >= 0");
    if (!(beta > -kPi && beta <= kPi)) throw Error("beta must lie in (-pi, pi]");
}

PhaseState::PhaseState(std::vector<double> theta) : theta_(std::move(theta)) {
    if (theta_.size() < 2) throw Error("a phase state needs at least two oscillators");
}

PhaseState PhaseState::canonicalized() const {
    PhaseState out = *this;
    for (double& t : out.theta_) t = wrap_two_pi(t);
    return out;
}

PhaseState PhaseState::shifted(double c) const {
    PhaseState out = *this;
    for (double& t : out.theta_) t += c;
    return out;
}

std::size_t BlockNetworkSpec::node_count() const noexcept {
    std::size_t n = 0;
    for (std::size_t g : group_sizes) n += g;
    return n;
}

std::vector<std::size_t> BlockNetworkSpec::node_groups() const {
    std::vector<std::size_t> groups;
    groups.reserve(node_count());
    for (std::size_t m = 0; m < group_sizes.size(); ++m) groups.insert(groups.end(), group_sizes[m], m);
    return groups;
}

std::pair<std::size_t, std::size_t> BlockNetworkSpec::class_populations() const {
    if (!classes) throw Error("block network has no class assignment");
    std::size_t n0 = 0;
    std::size_t npi = 0;
    for (std::size_t m = 0; m < group_sizes.size(); ++m) {
        ((*classes)[m] == PhaseClass::zero ? n0 : npi) += group_sizes[m];
    }
    return {n0, npi};
}

void BlockNetworkSpec::validate() const {
    if (group_sizes.empty()) throw Error("block network needs at least one group");
    if (std::any_of(group_sizes.begin(), group_sizes.end(), [](std::size_t g) { return g == 0; })) {
        throw Error("group sizes must be positive");
    }
    if (!std::isfinite(a) || !std::isfinite(b)) throw Error("block weights must be finite");
    if (classes) {
        if (classes->size() != group_sizes.size()) {
            throw Error("class assignment must list one class per group");
        }
    }
}

std::size_t BandNetworkSpec::max_half_bandwidth(std::size_t n) noexcept {
    const std::size_t even = n - (n % 2);
    return even / 2 >= 1 ? even / 2 - 1 : 0;
}

void BandNetworkSpec::validate() const {
    const std::size_t w_max = max_half_bandwidth(n);
    if (w < 1 || w > w_max) {
        throw Error("band half-width w=" + std::to_string(w) + " outside [1, " +
                    std::to_string(w_max) + "] for n=" + std::to_string(n));
    }
    if (!(p > 0.0) || !std::isfinite(p)) throw Error("inhibition strength p must be > 0");
}

std::size_t ring_distance(std::size_t i, std::size_t j, std::size_t n) noexcept {
    const std::size_t d = i > j ? i - j : j - i;
    return std::min(d, n - d);
}

const char* class_name(const ConfigurationClass& c) {
    struct Visitor {
        const char* operator()(const config_class::Splay&) const { return "Splay"; }
        const char* operator()(const config_class::Antipodal&) const { return "Antipodal"; }
        const char* operator()(const config_class::DoubleAntipodal&) const { return "DoubleAntipodal"; }
        const char* operator()(const config_class::Synchronized&) const { return "Synchronized"; }
        const char* operator()(const config_class::Other&) const { return "Other"; }
    };
    return std::visit(Visitor{}, c);
}

OrderParameters order_parameter(std::span<const double> theta, int n) {
    if (theta.empty()) throw Error("empty configuration");
    if (n < 1) throw Error("order index must be >= 1");
    std::complex<double> z{0.0, 0.0};
    for (double t : theta) z += std::polar(1.0, static_cast<double>(n) * t);
    z /= static_cast<double>(theta.size());
    OrderParameters out;
    out.n = n;
    out.r = std::min(1.0, std::abs(z));
    out.psi = out.r < 1e-14 ? 0.0 : wrap_two_pi(std::arg(z));
    return out;
}

namespace {

// Sorted wrapped copy and the index of the largest circular gap following element k.
struct CircleLayout {
    std::vector<double> sorted;
    double largest_gap = 0.0;
};

CircleLayout layout_on_circle(std::span<const double> theta) {
    CircleLayout out;
    out.sorted.reserve(theta.size());
    for (double t : theta) out.sorted.push_back(wrap_two_pi(t));
    std::sort(out.sorted.begin(), out.sorted.end());
    const std::size_t n = out.sorted.size();
    for (std::size_t k = 0; k + 1 < n; ++k) {
        out.largest_gap = std::max(out.largest_gap, out.sorted[k + 1] - out.sorted[k]);
    }
    out.largest_gap = std::max(out.largest_gap, out.sorted.front() + kTwoPi - out.sorted.back());
    return out;
}

// Absolute angular distance on the circle.
double arc_distance(double x, double y) {
    const double d = std::abs(wrap_pi(x - y));
    return d;
}

std::optional<config_class::DoubleAntipodal> fit_double_antipodal(std::span<const double> theta,
                                                                  double tol) {
    // Doubling collapses {phi, phi+pi} onto one point; a double-antipodal set doubles into
    // exactly two clusters.
    std::vector<double> doubled;
    doubled.reserve(theta.size());
    for (double t : theta) doubled.push_back(wrap_two_pi(2.0 * t));
    std::vector<double> sorted = doubled;
    std::sort(sorted.begin(), sorted.end());
    const std::size_t n = sorted.size();

    const double split = 4.0 * tol;
    std::vector<std::size_t> cuts;  // a cut after sorted[k]
    for (std::size_t k = 0; k < n; ++k) {
        const double next = k + 1 < n ? sorted[k + 1] : sorted[0] + kTwoPi;
        if (next - sorted[k] > split) cuts.push_back(k);
    }
    if (cuts.size() != 2) return std::nullopt;

    auto cluster_mean = [&](std::size_t from_cut, std::size_t to_cut) {
        std::complex<double> z{0.0, 0.0};
        std::size_t count = 0;
        for (std::size_t k = (from_cut + 1) % n;; k = (k + 1) % n) {
            z += std::polar(1.0, sorted[k]);
            ++count;
            if (k == to_cut) break;
        }
        return std::pair{wrap_two_pi(std::arg(z)), count};
    };
    auto [centre_a, count_a] = cluster_mean(cuts[1], cuts[0]);
    auto [centre_b, count_b] = cluster_mean(cuts[0], cuts[1]);

    // Reference pair {0, pi} is the more populated cluster; on a tie pick psi <= pi/2.
    double psi = wrap_two_pi(centre_b - centre_a) / 2.0;
    std::size_t m = count_a;
    if (count_b > count_a || (count_b == count_a && psi > kPi / 2.0)) {
        std::swap(centre_a, centre_b);
        m = count_b;
        psi = wrap_two_pi(centre_b - centre_a) / 2.0;
    }
    if (!(psi > 0.0 && psi < kPi)) return std::nullopt;

    const double rotation = centre_a / 2.0;
    const double targets[4] = {rotation, rotation + kPi, rotation + psi, rotation + psi + kPi};
    for (double t : theta) {
        double best = kTwoPi;
        for (double target : targets) best = std::min(best, arc_distance(t, target));
        if (best > tol) return std::nullopt;
    }
    return config_class::DoubleAntipodal{psi, m};
}

}  // namespace

double circular_diameter(std::span<const double> theta) {
    if (theta.empty()) throw Error("empty configuration");
    return kTwoPi - layout_on_circle(theta).largest_gap;
}

ConfigurationClass classify_configuration(std::span<const double> theta, double tol) {
    if (theta.empty()) throw Error("empty configuration");
    if (!(tol > 0.0 && tol < 0.1)) throw Error("classification tolerance must lie in (0, 0.1)");

    if (circular_diameter(theta) < tol) return config_class::Synchronized{};
    const double r2 = order_parameter(theta, 2).r;
    if (r2 > 1.0 - tol) return config_class::Antipodal{};
    if (r2 < tol) return config_class::Splay{};
    if (auto fit = fit_double_antipodal(theta, tol)) return *fit;
    return config_class::Other{};
}

double solve_psi_m(std::size_t n_total, std::size_t m, double alpha, double beta) {
    if (m < 1 || m + 1 > n_total) throw Error("m must satisfy 1 <= m <= N-1");
    const double s = alpha + beta;
    const double ratio = static_cast<double>(n_total - m) / static_cast<double>(m);
    const bool lag_vanishes = std::abs(std::sin(s)) <= 1e-14;
    if (lag_vanishes) {
        if (n_total == 2 * m) throw Error("degenerate: every psi solves the equation");
        throw Error("no solution in (0,pi)");
    }

    auto residual = [&](double psi) { return ratio * std::sin(psi - s) - std::sin(psi + s); };
    // residual(0) = -(N/m) sin s = -residual(pi), so (0, pi) always brackets the root.
    double lo = 0.0;
    double hi = kPi;
    double f_lo = residual(lo);
    for (int it = 0; it < 200 && hi - lo > 1e-12; ++it) {
        const double mid = 0.5 * (lo + hi);
        const double f_mid = residual(mid);
        if (f_mid == 0.0) return mid;
        if ((f_mid < 0.0) == (f_lo < 0.0)) {
            lo = mid;
            f_lo = f_mid;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

CouplingMatrix build_block_network(const BlockNetworkSpec& spec) {
    spec.validate();
    const auto groups = spec.node_groups();
    const std::size_t n = groups.size();
    CouplingMatrix k(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) k(i, j) = groups[i] == groups[j] ? spec.a : spec.b;
    return k;
}

CouplingMatrix build_band_network(const BandNetworkSpec& spec) {
    spec.validate();
    CouplingMatrix k(spec.n);
    for (std::size_t i = 0; i < spec.n; ++i)
        for (std::size_t j = 0; j < spec.n; ++j)
            k(i, j) = ring_distance(i, j, spec.n) <= spec.w ? 1.0 : -spec.p;
    return k;
}

CouplingMatrix induced_coupling(std::span<const double> offsets, double beta) {
    const std::size_t n = offsets.size();
    CouplingMatrix k(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) k(i, j) = -std::sin(offsets[i] - offsets[j] + beta);
    return k;
}

PhaseLockedSolution make_phase_locked(double capital_omega, PhaseState offsets, double beta) {
    PhaseLockedSolution sol;
    sol.capital_omega = capital_omega;
    sol.induced_kappa = induced_coupling(offsets, beta);
    sol.offsets = std::move(offsets);
    return sol;
}

double phase_diameter(std::span<const double> theta) {
    if (theta.empty()) return 0.0;
    const auto [lo, hi] = std::minmax_element(theta.begin(), theta.end());
    return *hi - *lo;
}

PhaseState rotating_wave(std::size_t n, std::size_t m) {
    std::vector<double> theta(n);
    for (std::size_t j = 0; j < n; ++j) {
        theta[j] = kTwoPi * static_cast<double>((m * j) % n) / static_cast<double>(n);
    }
    return PhaseState(std::move(theta));
}

}  // namespace kuramoto_signed
