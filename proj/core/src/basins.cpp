#include "kuramoto_signed/basins.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

#include "kuramoto_signed/error.hpp"
#include "kuramoto_signed/parallel.hpp"

namespace kuramoto_signed {

namespace {

void require_repulsive_beta(double beta) {
    if (!(beta > -kPi && beta < 0.0)) throw Error("beta must lie in (-pi, 0)");
}

// delta* without the range check on c; callers scanning up to pi/2 need the endpoint.
double delta_star_unchecked(double beta, double c) {
    return -std::max(std::sin(beta - c), std::sin(beta + c));
}

double diameter_limit(double beta) { return std::min(kPi + beta, -beta); }

// d/dD of ln g(D) = ln f(D/2) + (delta/eps) ln(1 - k0/delta) + k0/eps with delta = delta*(beta, D).
// The larger of sin(beta -+ D) is fixed by the sign of cos(beta) for D in (0, pi).
// delta* vanishes only at the upper end of the interval, where the slope tends to -infinity.
double log_objective_slope(double beta, double epsilon, double kappa_min0, double d) {
    const double ds = delta_star_unchecked(beta, d);
    if (!(ds > 0.0)) return -std::numeric_limits<double>::infinity();
    const double d_ds = std::cos(beta) >= 0.0 ? -std::cos(beta + d) : std::cos(beta - d);
    const double d_log_g_d_ds = std::log1p(-kappa_min0 / ds) + kappa_min0 / (ds - kappa_min0);
    return 0.5 / std::sin(0.5 * d) + d_log_g_d_ds * d_ds / epsilon;
}

bool in_arc(double theta, double start, double c, double slack) {
    // offset of theta past `start`, wrapped to [-pi, pi)
    const double offset = wrap_pi(theta - start);
    return offset >= -slack && offset <= c + slack;
}

std::optional<std::string> violation_in_frame(std::span<const double> theta,
                                              const CouplingMatrix& kappa, double shift,
                                              const std::vector<int>& labels, double c,
                                              double delta, double slack) {
    const std::size_t n = theta.size();
    for (std::size_t i = 0; i < n; ++i) {
        const double start = labels[i] == 0 ? 0.0 : kPi;
        if (!in_arc(theta[i] - shift, start, c, slack)) {
            return "phase " + std::to_string(i) + " left its arc";
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            const double k = kappa(i, j);
            if (labels[i] == labels[j]) {
                if (k < delta - slack || k > 1.0 + slack)
                    return "kappa(" + std::to_string(i) + "," + std::to_string(j) + ")=" +
                           short_number(k) + " outside [delta,1]";
            } else if (k < -1.0 - slack || k > -delta + slack) {
                return "kappa(" + std::to_string(i) + "," + std::to_string(j) + ")=" +
                       short_number(k) + " outside [-1,-delta]";
            }
        }
    }
    return std::nullopt;
}

double max_kappa_error(const CouplingMatrix& kappa, double beta) {
    const double target = -std::sin(beta);
    double err = 0.0;
    for (double k : kappa.data()) err = std::max(err, std::abs(k - target));
    return err;
}

}  // namespace

double delta_star(double beta, double c) {
    require_repulsive_beta(beta);
    if (!(c >= 0.0 && c < kPi / 2)) throw Error("c must lie in [0, pi/2)");
    return delta_star_unchecked(beta, c);
}

double f_gauge(double x) {
    if (!(x > 0.0 && x < kPi)) throw Error("f_gauge requires x in (0, pi)");
    // Two algebraically equal forms of csc x - cot x; each avoids cancellation on its half.
    if (x <= kPi / 2) return std::sin(x) / (1.0 + std::cos(x));
    return (1.0 - std::cos(x)) / std::sin(x);
}

double f_gauge_inverse(double y) { return 2.0 * std::atan(y); }

namespace {

double diameter_bound_with_rate(double t, double d0, double rate) {
    if (t < 0.0) throw Error("time must be non-negative");
    if (d0 == 0.0) return 0.0;
    if (!(d0 > 0.0 && d0 < kPi / 2)) throw Error("initial diameter must lie in [0, pi/2)");
    const double decay = std::exp(-rate * std::cos(d0) * t);
    return 2.0 * f_gauge_inverse(f_gauge(d0 / 2.0) * decay);
}

}  // namespace

double diameter_bound(double t, double d0, double beta) {
    const double rate = d0 == 0.0 ? 0.0 : delta_star(beta, d0);
    return diameter_bound_with_rate(t, d0, rate);
}

double diameter_bound(double t, double d0, double beta, double kappa_min0) {
    const double rate = d0 == 0.0 ? 0.0 : std::min(delta_star(beta, d0), kappa_min0);
    return diameter_bound_with_rate(t, d0, rate);
}

KappaEnvelope kappa_envelope(double beta, double zeta) {
    require_repulsive_beta(beta);
    if (!(zeta > 0.0 && zeta <= 0.5 * diameter_limit(beta)))
        throw Error("zeta must lie in (0, min(pi + beta, -beta) / 2]");
    const double s1 = std::sin(-zeta - beta);
    const double s2 = std::sin(zeta - beta);
    const double s3 = std::sin(-beta);
    return {zeta, std::max({s1, s2, s3}), std::min({s1, s2, s3})};
}

double kappa_nonneg_time(double epsilon, double delta_star_value, double kappa_min0) {
    if (!(epsilon > 0.0) || !(delta_star_value > 0.0) || !(kappa_min0 < 0.0))
        throw Error("invalid signs: need epsilon > 0, delta* > 0 and kappa_min0 < 0");
    return std::log1p(-kappa_min0 / delta_star_value) / epsilon;
}

CriticalDiameterResult critical_diameter(double beta, double epsilon, double kappa_min0,
                                         std::size_t grid_points) {
    require_repulsive_beta(beta);
    if (!(epsilon > 0.0)) throw Error("epsilon must be positive");
    if (!(kappa_min0 < 0.0)) throw Error("kappa_min0 must be negative");
    if (grid_points < 1000) throw Error("critical_diameter needs at least 1000 grid points");

    const double limit = diameter_limit(beta);
    const double resolution = limit / static_cast<double>(grid_points - 1);
    CriticalDiameterResult out;
    out.grid_resolution = resolution;
    out.log_objective_at_max = -std::numeric_limits<double>::infinity();

    // D = 0 gives f = 0, i.e. ln g = -inf, so the scan starts at the first interior point.
    for (std::size_t i = 1; i < grid_points; ++i) {
        const double d = i + 1 == grid_points ? limit : resolution * static_cast<double>(i);
        const double ds = delta_star_unchecked(beta, d);
        if (!(ds > 0.0)) continue;
        const double log_g = std::log(f_gauge(d / 2.0)) +
                             (ds / epsilon) * std::log1p(-kappa_min0 / ds) + kappa_min0 / epsilon;
        if (log_g > out.log_objective_at_max) {
            out.log_objective_at_max = log_g;
            out.d_bar = d;
            out.argmax_index = i;
        }
    }
    if (out.argmax_index > 0) {
        // Refine to the stationary point of ln g inside the bracketing grid cells.
        const auto slope = [&](double d) { return log_objective_slope(beta, epsilon, kappa_min0, d); };
        const std::size_t i = out.argmax_index;
        const auto point = [&](std::size_t j) {
            return j + 1 >= grid_points ? limit : resolution * static_cast<double>(j);
        };
        double lo = point(i - 1);
        double hi = point(std::min(i + 1, grid_points - 1));
        if (!(lo > 0.0) || !(delta_star_unchecked(beta, lo) > 0.0)) lo = 0.5 * out.d_bar;
        if (slope(lo) > 0.0 && slope(hi) < 0.0) {
            while (true) {
                const double mid = 0.5 * (lo + hi);
                if (mid <= lo || mid >= hi) break;
                (slope(mid) > 0.0 ? lo : hi) = mid;
            }
            out.d_bar = 0.5 * (lo + hi);
        }
        const double ds = delta_star_unchecked(beta, out.d_bar);
        out.log_objective_at_max = std::log(f_gauge(out.d_bar / 2.0)) +
                                   (ds / epsilon) * std::log1p(-kappa_min0 / ds) +
                                   kappa_min0 / epsilon;
    }
    out.objective_at_max = std::exp(out.log_objective_at_max);
    return out;
}

SweepTable sweep_critical_diameter(std::vector<double> beta_grid, std::vector<double> epsilon_grid,
                                   std::vector<double> kappa_grid, std::size_t grid_points) {
    if (beta_grid.empty() || epsilon_grid.empty() || kappa_grid.empty())
        throw Error("sweep grids must be nonempty");
    SweepTable table{std::move(beta_grid), std::move(epsilon_grid), std::move(kappa_grid),
                     grid_points, {}};
    const std::size_t cells = table.beta.size() * table.epsilon.size() * table.kappa_min0.size();
    table.d_bar.assign(cells, 0.0);
    const std::size_t ne = table.epsilon.size();
    const std::size_t nk = table.kappa_min0.size();
    parallel_for(cells, [&](std::size_t cell) {
        const std::size_t ik = cell % nk;
        const std::size_t ie = (cell / nk) % ne;
        const std::size_t ib = cell / (nk * ne);
        table.d_bar[cell] =
            critical_diameter(table.beta[ib], table.epsilon[ie], table.kappa_min0[ik], grid_points)
                .d_bar;
    });
    return table;
}

MembershipResult membership(const SystemState& state, double c, double delta, double slack) {
    state.validate();
    MembershipResult out;
    Partition partition;
    const auto theta = state.theta.phases();
    for (std::size_t i = 0; i < theta.size(); ++i) {
        if (in_arc(theta[i], 0.0, c, slack)) {
            partition.first.push_back(i);
        } else if (in_arc(theta[i], kPi, c, slack)) {
            partition.second.push_back(i);
        } else {
            out.violation = "phase " + std::to_string(i) + " outside both arcs";
            return out;
        }
    }
    if (auto v = membership_violation(state, partition, c, delta, slack)) {
        out.violation = std::move(*v);
        return out;
    }
    out.member = true;
    out.witness = std::move(partition);
    return out;
}

std::optional<std::string> membership_violation(const SystemState& state,
                                                const Partition& partition, double c, double delta,
                                                double slack) {
    state.validate();
    return violation_in_frame(state.theta.phases(), state.kappa, 0.0,
                              partition.labels(state.size()), c, delta, slack);
}

SystemState sample_invariant_set(const InvarianceTrialConfig& cfg, std::uint64_t seed) {
    if (cfg.n < 2) throw Error("need at least two oscillators");
    std::mt19937_64 rng(seed);
    std::bernoulli_distribution coin(0.5);
    std::uniform_real_distribution<double> arc(0.0, cfg.c);
    std::uniform_real_distribution<double> box(cfg.delta, 1.0);

    std::vector<int> label(cfg.n);
    std::vector<double> theta(cfg.n);
    for (std::size_t i = 0; i < cfg.n; ++i) {
        label[i] = coin(rng) ? 1 : 0;
        theta[i] = arc(rng) + (label[i] == 1 ? kPi : 0.0);
    }
    CouplingMatrix kappa(cfg.n);
    for (std::size_t i = 0; i < cfg.n; ++i)
        for (std::size_t j = 0; j < cfg.n; ++j)
            kappa(i, j) = label[i] == label[j] ? box(rng) : -box(rng);
    return SystemState{PhaseState(std::move(theta)), std::move(kappa), 0.0};
}

InvarianceOutcome check_invariance(const InvarianceTrialConfig& cfg) {
    require_repulsive_beta(cfg.beta);
    const double ds = delta_star(cfg.beta, cfg.c);
    if (!(ds > 0.0)) throw Error("precondition: delta*(beta, c) must be positive");
    if (!(cfg.delta >= 0.0 && cfg.delta < ds))
        throw Error("precondition: delta must lie in [0, delta*(beta, c))");

    const SystemState initial = sample_invariant_set(cfg, cfg.seed);
    const ModelParams params{cfg.omega, 0.0, cfg.beta, cfg.epsilon};
    params.validate();

    InvarianceOutcome out;
    const auto labels = [&] {
        // recover the sampled partition from the initial arcs
        auto m = membership(initial, cfg.c, cfg.delta, 0.0);
        if (!m.member) throw Error("sampled state is not in the invariant set: " + m.violation);
        out.partition = *m.witness;
        return out.partition.labels(cfg.n);
    }();

    const double t_run = cfg.epsilon > 0.0 ? std::max(cfg.t_end, 12.0 / cfg.epsilon) : cfg.t_end;
    const IntegratorConfig integrator{cfg.step, t_run, 1};
    integrator.validate();
    const double check_until = cfg.t_end + 0.5 * cfg.step;

    SystemState last = initial;
    integrate(initial, params, integrator, [&](const SystemState& s, const Diagnostics&) {
        if (out.invariant && s.time <= check_until) {
            if (auto v = violation_in_frame(s.theta.phases(), s.kappa, cfg.omega * s.time, labels,
                                            cfg.c, cfg.delta, cfg.slack)) {
                out.invariant = false;
                out.violation = std::move(v);
                out.violation_time = s.time;
            }
        }
        if (s.time + 0.5 * cfg.step >= t_run) last = s;
    });

    double min_intra = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < cfg.n; ++i)
        for (std::size_t j = 0; j < cfg.n; ++j)
            if (labels[i] == labels[j]) min_intra = std::min(min_intra, last.kappa(i, j));
    out.final_min_intra_kappa = min_intra;
    if (cfg.epsilon > 0.0) {
        out.attraction_checked = true;
        out.attracted = min_intra > ds - cfg.attraction_tol;
    }
    return out;
}

bool check_thm1_conditions(const SystemState& state0, double beta, Thm1Options options) {
    if (!(beta > -kPi && beta < 0.0)) return false;
    const double limit = diameter_limit(beta);
    const bool limit_ok = limit < kPi / 2 || (options.allow_boundary_beta && limit <= kPi / 2);
    return limit_ok && phase_diameter(state0.theta.phases()) < limit &&
           state0.kappa.min_entry() > 0.0;
}

bool TheoremReport::passed() const noexcept { return all_pass(lines); }

std::string TheoremReport::text() const { return format_report(lines); }

namespace {

// Keeps every tenth sample plus the last one, enough for detect_sync's trailing window.
struct ThinnedTrajectory {
    Trajectory traj;
    std::size_t seen = 0;

    void add(const SystemState& s, const Diagnostics& d, bool last) {
        if (seen++ % 10 == 0 || last) traj.samples.push_back(Sample{s, d});
    }
};

}  // namespace

TheoremReport verify_theorem1(const SystemState& state0, const ModelParams& params,
                              const Thm1Verification& cfg) {
    state0.validate();
    params.validate();
    cfg.integrator.validate();
    if (!check_thm1_conditions(state0, params.beta, cfg.conditions))
        throw Error("hypotheses do not hold: need D0 < min(pi + beta, |beta|) < pi/2 and "
                    "min kappa0 > 0");

    const double d0 = phase_diameter(state0.theta.phases());
    const double kmin0 = state0.kappa.min_entry();
    const double t_end = static_cast<double>(cfg.integrator.step_count()) * cfg.integrator.step;

    TheoremReport report;
    report.max_bound_excess = -std::numeric_limits<double>::infinity();
    std::optional<double> first_bound_violation;
    std::optional<double> first_increase;
    double previous_diameter = d0;
    double worst_time = 0.0;
    ThinnedTrajectory thinned{Trajectory{params, {}}};
    SystemState last = state0;

    integrate(state0, params, cfg.integrator, [&](const SystemState& s, const Diagnostics& d) {
        const double bound = cfg.bound == DiameterBoundKind::delta_star_rate
                                 ? diameter_bound(s.time, d0, params.beta)
                                 : diameter_bound(s.time, d0, params.beta, kmin0);
        const double excess = d.diameter - bound;
        if (excess > report.max_bound_excess) {
            report.max_bound_excess = excess;
            worst_time = s.time;
        }
        if (excess > cfg.bound_slack && !first_bound_violation) first_bound_violation = s.time;
        if (d.diameter > previous_diameter + 1e-12 && !first_increase) first_increase = s.time;
        previous_diameter = d.diameter;
        const bool is_last = s.time + 0.5 * cfg.integrator.step >= t_end;
        thinned.add(s, d, is_last);
        if (is_last) last = s;
    });

    const char* bound_name =
        cfg.bound == DiameterBoundKind::delta_star_rate ? "delta*-rate" : "coupling-limited";
    report.lines.push_back({!first_bound_violation,
                            std::string("diameter <= ") + bound_name + " bound + " +
                                short_number(cfg.bound_slack) + " (max excess " +
                                short_number(report.max_bound_excess) + ")",
                            first_bound_violation.value_or(worst_time)});
    report.lines.push_back(
        {!first_increase, "diameter non-increasing", first_increase.value_or(last.time)});
    report.final_kappa_error = max_kappa_error(last.kappa, params.beta);
    report.lines.push_back({report.final_kappa_error < cfg.kappa_tol,
                            "max|kappa + sin(beta)| < " + short_number(cfg.kappa_tol) + " (got " +
                                short_number(report.final_kappa_error) + ")",
                            last.time});
    report.verdict = detect_sync(thinned.traj);
    return report;
}

TheoremReport verify_theorem2(const SystemState& state0, const ModelParams& params,
                              const Thm2Verification& cfg) {
    state0.validate();
    params.validate();
    cfg.integrator.validate();
    require_repulsive_beta(params.beta);
    const double kmin0 = state0.kappa.min_entry();
    if (!(kmin0 < 0.0)) throw Error("hypotheses do not hold: need min kappa0 < 0");
    if (!(params.epsilon > 0.0))
        throw Error("hypotheses unsatisfiable: epsilon = 0 leaves a zero critical diameter");

    const double d0 = phase_diameter(state0.theta.phases());
    if (d0 > diameter_limit(params.beta))
        throw Error("hypotheses do not hold: D0 exceeds min(pi + beta, |beta|)");
    const auto cd = critical_diameter(params.beta, params.epsilon, kmin0, cfg.grid_points);
    if (d0 > cd.d_bar) throw Error("hypotheses do not hold: D0 exceeds the critical diameter");

    const double ds = delta_star(params.beta, cd.d_bar);
    const double t_tilde = kappa_nonneg_time(params.epsilon, ds, kmin0);
    const double h = cfg.integrator.step;
    const double t_end = static_cast<double>(cfg.integrator.step_count()) * h;

    TheoremReport report;
    std::optional<double> diameter_violation;
    std::optional<double> kappa_violation;
    std::optional<double> first_nonneg;
    double max_diameter = 0.0;
    double max_diameter_time = 0.0;
    ThinnedTrajectory thinned{Trajectory{params, {}}};
    SystemState last = state0;

    integrate(state0, params, cfg.integrator, [&](const SystemState& s, const Diagnostics& d) {
        if (d.diameter > max_diameter) {
            max_diameter = d.diameter;
            max_diameter_time = s.time;
        }
        if (d.diameter > cd.d_bar + cfg.slack && !diameter_violation) diameter_violation = s.time;
        if (d.kmin >= 0.0 && !first_nonneg) first_nonneg = s.time;
        if (s.time >= t_tilde + h && d.kmin < -cfg.slack && !kappa_violation)
            kappa_violation = s.time;
        const bool is_last = s.time + 0.5 * h >= t_end;
        thinned.add(s, d, is_last);
        if (is_last) last = s;
    });

    report.max_bound_excess = max_diameter - cd.d_bar;
    report.lines.push_back({!diameter_violation,
                            "diameter <= D_bar + " + short_number(cfg.slack) + " (D_bar " +
                                short_number(cd.d_bar) + ", max " + short_number(max_diameter) +
                                ")",
                            diameter_violation.value_or(max_diameter_time)});
    report.lines.push_back({!kappa_violation,
                            "min kappa >= -" + short_number(cfg.slack) + " after T~ + h (T~ " +
                                short_number(t_tilde) + ")",
                            kappa_violation.value_or(t_tilde + h)});
    report.lines.push_back({first_nonneg.has_value() && *first_nonneg <= t_tilde + h,
                            "couplings non-negative by T~ + h", first_nonneg.value_or(t_end)});
    report.verdict = detect_sync(thinned.traj);
    report.lines.push_back({report.verdict.kind == SyncKind::complete_sync,
                            std::string("verdict ") + sync_kind_name(report.verdict.kind),
                            last.time});
    report.final_kappa_error = max_kappa_error(last.kappa, params.beta);
    report.lines.push_back({report.final_kappa_error < cfg.kappa_tol,
                            "max|kappa + sin(beta)| < " + short_number(cfg.kappa_tol) + " (got " +
                                short_number(report.final_kappa_error) + ")",
                            last.time});
    return report;
}

}  // namespace kuramoto_signed
