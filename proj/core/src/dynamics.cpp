#include "kuramoto_signed/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

namespace kuramoto_signed {

void SystemState::validate() const {
    if (kappa.size() != theta.size()) {
        throw Error("dimension mismatch: " + std::to_string(theta.size()) + " phases vs " +
                    std::to_string(kappa.size()) + "x" + std::to_string(kappa.size()) +
                    " coupling matrix");
    }
    if (time < 0.0) throw Error("state time must be >= 0");
}

Diagnostics diagnose(const SystemState& state) {
    Diagnostics d;
    d.diameter = phase_diameter(state.theta);
    d.r1 = order_parameter(state.theta, 1).r;
    d.r2 = order_parameter(state.theta, 2).r;
    d.kmin = state.kappa.min_entry();
    d.kmax = state.kappa.max_entry();
    return d;
}

void IntegratorConfig::validate() const {
    if (!(step > 0.0) || step > 0.1) throw Error("integrator step must lie in (0, 0.1]");
    if (!(t_end > 0.0) || !std::isfinite(t_end)) throw Error("t_end must be positive");
    if (sample_every < 1) throw Error("sample_every must be >= 1");
    if (t_end / step > 1e9) throw Error("t_end/step exceeds the supported step count");
}

std::size_t IntegratorConfig::step_count() const {
    return static_cast<std::size_t>(std::max(1.0, std::round(t_end / step)));
}

namespace {

// Right-hand side on flat storage: y = [theta_0..theta_{N-1}, kappa row-major].
class VectorField {
public:
    VectorField(std::size_t n, const ModelParams& params)
        : n_(n),
          params_(params),
          cos_alpha_(std::cos(params.alpha)),
          sin_alpha_(std::sin(params.alpha)),
          cos_beta_(std::cos(params.beta)),
          sin_beta_(std::sin(params.beta)),
          s_(n),
          c_(n) {}

    [[nodiscard]] bool adaptive() const noexcept { return params_.epsilon != 0.0; }

    void operator()(const double* y, double* dy) {
        const double* theta = y;
        const double* kappa = y + n_;
        for (std::size_t i = 0; i < n_; ++i) {
            s_[i] = std::sin(theta[i]);
            c_[i] = std::cos(theta[i]);
        }
        const double inv_n = 1.0 / static_cast<double>(n_);
        const double eps = params_.epsilon;
        for (std::size_t i = 0; i < n_; ++i) {
            const double* k_row = kappa + i * n_;
            double acc = 0.0;
            for (std::size_t j = 0; j < n_; ++j) {
                // sin and cos of theta_i - theta_j from the angle-difference identities
                const double sd = s_[i] * c_[j] - c_[i] * s_[j];
                const double cd = c_[i] * c_[j] + s_[i] * s_[j];
                acc += k_row[j] * (sd * cos_alpha_ + cd * sin_alpha_);
            }
            dy[i] = params_.omega - inv_n * acc;
        }
        double* dk = dy + n_;
        if (!adaptive()) {
            std::fill(dk, dk + n_ * n_, 0.0);
            return;
        }
        for (std::size_t i = 0; i < n_; ++i) {
            for (std::size_t j = 0; j < n_; ++j) {
                const double sd = s_[i] * c_[j] - c_[i] * s_[j];
                const double cd = c_[i] * c_[j] + s_[i] * s_[j];
                dk[i * n_ + j] = -eps * (sd * cos_beta_ + cd * sin_beta_ + kappa[i * n_ + j]);
            }
        }
    }

private:
    std::size_t n_;
    ModelParams params_;
    double cos_alpha_, sin_alpha_, cos_beta_, sin_beta_;
    std::vector<double> s_, c_;
};

std::vector<double> pack(const SystemState& s) {
    const std::size_t n = s.size();
    std::vector<double> y(n + n * n);
    std::copy(s.theta.phases().begin(), s.theta.phases().end(), y.begin());
    std::copy(s.kappa.data().begin(), s.kappa.data().end(), y.begin() + static_cast<long>(n));
    return y;
}

SystemState unpack(const std::vector<double>& y, std::size_t n, double time) {
    SystemState s;
    s.theta = PhaseState(std::vector<double>(y.begin(), y.begin() + static_cast<long>(n)));
    s.kappa = CouplingMatrix(n);
    std::copy(y.begin() + static_cast<long>(n), y.end(), s.kappa.data().begin());
    s.time = time;
    return s;
}

}  // namespace

RhsValue rhs_adaptive(const SystemState& state, const ModelParams& params) {
    state.validate();
    const std::size_t n = state.size();
    const auto y = pack(state);
    std::vector<double> dy(y.size());
    VectorField field(n, params);
    field(y.data(), dy.data());
    RhsValue out;
    out.dtheta.assign(dy.begin(), dy.begin() + static_cast<long>(n));
    out.dkappa = SquareMatrix(n);
    std::copy(dy.begin() + static_cast<long>(n), dy.end(), out.dkappa.data().begin());
    return out;
}

std::vector<double> rhs_static(const PhaseState& theta, const CouplingMatrix& kappa,
                               const ModelParams& params) {
    ModelParams frozen = params;
    frozen.epsilon = 0.0;
    return rhs_adaptive(SystemState{theta, kappa, 0.0}, frozen).dtheta;
}

void integrate(const SystemState& initial, const ModelParams& params, const IntegratorConfig& cfg,
               const SampleObserver& observer) {
    initial.validate();
    params.validate();
    cfg.validate();

    const std::size_t n = initial.size();
    const std::size_t steps = cfg.step_count();
    const double h = cfg.step;
    const double t0 = initial.time;
    VectorField field(n, params);
    // With frozen coupling only the phase block needs stepping.
    const std::size_t active = field.adaptive() ? n + n * n : n;

    std::vector<double> y = pack(initial);
    std::vector<double> k1(y.size()), k2(y.size()), k3(y.size()), k4(y.size()), tmp(y.size());
    auto emit = [&](std::size_t step) {
        SystemState s = unpack(y, n, t0 + static_cast<double>(step) * h);
        const Diagnostics d = diagnose(s);
        observer(s, d);
    };

    emit(0);
    std::copy(y.begin() + static_cast<long>(n), y.end(), tmp.begin() + static_cast<long>(n));
    for (std::size_t step = 1; step <= steps; ++step) {
        field(y.data(), k1.data());
        for (std::size_t i = 0; i < active; ++i) tmp[i] = y[i] + 0.5 * h * k1[i];
        field(tmp.data(), k2.data());
        for (std::size_t i = 0; i < active; ++i) tmp[i] = y[i] + 0.5 * h * k2[i];
        field(tmp.data(), k3.data());
        for (std::size_t i = 0; i < active; ++i) tmp[i] = y[i] + h * k3[i];
        field(tmp.data(), k4.data());
        bool finite = true;
        for (std::size_t i = 0; i < active; ++i) {
            y[i] += h / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
            finite = finite && std::isfinite(y[i]);
        }
        if (!finite) throw NumericalError("non-finite state encountered", step);
        if (step % cfg.sample_every == 0 || step == steps) emit(step);
    }
}

Trajectory integrate(const SystemState& initial, const ModelParams& params,
                     const IntegratorConfig& cfg) {
    Trajectory traj;
    traj.params = params;
    traj.samples.reserve(cfg.step_count() / cfg.sample_every + 2);
    integrate(initial, params, cfg, [&](const SystemState& s, const Diagnostics& d) {
        traj.samples.push_back(Sample{s, d});
    });
    return traj;
}

std::vector<int> Partition::labels(std::size_t n) const {
    std::vector<int> out(n, -1);
    for (std::size_t i : first) out.at(i) = 0;
    for (std::size_t i : second) out.at(i) = 1;
    return out;
}

SystemState gauge_transform(const SystemState& state, const Partition& partition) {
    const std::size_t n = state.size();
    const auto labels = partition.labels(n);
    std::vector<double> theta(state.theta.phases().begin(), state.theta.phases().end());
    for (std::size_t i : partition.second) theta[i] -= kPi;
    SystemState out{PhaseState(std::move(theta)), state.kappa, state.time};
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (labels[i] != labels[j]) out.kappa(i, j) = -state.kappa(i, j);
    return out;
}

Partition split_two_clusters(std::span<const double> theta) {
    const std::size_t n = theta.size();
    if (n < 2) throw Error("need at least two phases to split");
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::vector<double> wrapped(n);
    for (std::size_t i = 0; i < n; ++i) wrapped[i] = wrap_two_pi(theta[i]);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t x, std::size_t y) { return wrapped[x] < wrapped[y]; });

    // gap k sits between order[k] and order[k+1] (cyclically)
    std::vector<double> gaps(n);
    for (std::size_t k = 0; k < n; ++k) {
        const double next = k + 1 < n ? wrapped[order[k + 1]] : wrapped[order[0]] + kTwoPi;
        gaps[k] = next - wrapped[order[k]];
    }
    std::vector<std::size_t> gap_idx(n);
    std::iota(gap_idx.begin(), gap_idx.end(), 0);
    std::stable_sort(gap_idx.begin(), gap_idx.end(),
                     [&](std::size_t x, std::size_t y) { return gaps[x] > gaps[y]; });
    const std::size_t cut_a = std::min(gap_idx[0], gap_idx[1]);
    const std::size_t cut_b = std::max(gap_idx[0], gap_idx[1]);

    Partition p;
    std::vector<int> label(n, 1);
    for (std::size_t k = cut_a + 1; k <= cut_b; ++k) label[order[k]] = 0;
    const int first_label = label[0];
    for (std::size_t i = 0; i < n; ++i) (label[i] == first_label ? p.first : p.second).push_back(i);
    return p;
}

const char* sync_kind_name(SyncKind kind) noexcept {
    switch (kind) {
        case SyncKind::complete_sync: return "CompleteSync";
        case SyncKind::antipodal_sync: return "AntipodalSync";
        case SyncKind::not_converged: return "NotConverged";
    }
    return "NotConverged";
}

namespace {

bool synced(const SystemState& s, double target, double tol_phase, double tol_kappa) {
    if (circular_diameter(s.theta) >= tol_phase) return false;
    for (double k : s.kappa.data())
        if (std::abs(k - target) >= tol_kappa) return false;
    return true;
}

double mean_entry(const SquareMatrix& m) {
    const auto d = m.data();
    return std::accumulate(d.begin(), d.end(), 0.0) / static_cast<double>(d.size());
}

}  // namespace

SyncVerdict detect_sync(const Trajectory& traj, double tol_phase, double tol_kappa) {
    if (traj.empty()) throw Error("empty trajectory");
    const double target = -std::sin(traj.params.beta);
    const std::size_t count = traj.samples.size();
    const std::size_t window_start = std::min(count - 1, count * 9 / 10);
    const SystemState& last = traj.back().state;

    SyncVerdict verdict;
    verdict.final_diameter = circular_diameter(last.theta);

    auto window_holds = [&](const auto& transform) {
        for (std::size_t k = window_start; k < count; ++k) {
            if (!synced(transform(traj.samples[k].state), target, tol_phase, tol_kappa)) return false;
        }
        return true;
    };

    if (window_holds([](const SystemState& s) -> const SystemState& { return s; })) {
        verdict.kind = SyncKind::complete_sync;
        verdict.asymptotic_kappa = mean_entry(last.kappa);
        return verdict;
    }

    Partition partition = split_two_clusters(last.theta);
    if (!partition.first.empty() && !partition.second.empty() &&
        window_holds([&](const SystemState& s) { return gauge_transform(s, partition); })) {
        verdict.kind = SyncKind::antipodal_sync;
        verdict.asymptotic_kappa = mean_entry(gauge_transform(last, partition).kappa);
        verdict.final_diameter = circular_diameter(gauge_transform(last, partition).theta);
        verdict.partition = std::move(partition);
        return verdict;
    }
    verdict.kind = SyncKind::not_converged;
    return verdict;
}

}  // namespace kuramoto_signed
