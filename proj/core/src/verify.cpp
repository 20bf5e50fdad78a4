#include "kuramoto_signed/verify.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <mutex>
#include <numeric>
#include <random>

#include "kuramoto_signed/basins.hpp"
#include "kuramoto_signed/dynamics.hpp"
#include "kuramoto_signed/error.hpp"
#include "kuramoto_signed/io.hpp"
#include "kuramoto_signed/parallel.hpp"
#include "kuramoto_signed/spectral.hpp"

namespace kuramoto_signed {

namespace {

constexpr double kSpectrumTol = 1e-8;

std::string count_of(std::size_t good, std::size_t total) {
    return std::to_string(good) + "/" + std::to_string(total);
}

// Thread-safe running maximum.
class MaxTracker {
public:
    void update(double v) {
        std::lock_guard lock(mutex_);
        value_ = std::max(value_, v);
    }
    [[nodiscard]] double value() const { return value_; }

private:
    std::mutex mutex_;
    double value_ = 0.0;
};

BlockNetworkSpec random_block_spec(std::mt19937_64& rng, std::size_t max_groups,
                                   std::size_t max_nodes) {
    std::uniform_int_distribution<std::size_t> groups(1, max_groups);
    std::uniform_real_distribution<double> weight(-3.0, 3.0);
    std::bernoulli_distribution coin(0.5);
    BlockNetworkSpec spec;
    const std::size_t m = groups(rng);
    std::uniform_int_distribution<std::size_t> size(1, std::max<std::size_t>(1, max_nodes / m));
    do {
        spec.group_sizes.clear();
        for (std::size_t g = 0; g < m; ++g) spec.group_sizes.push_back(size(rng));
    } while (spec.node_count() < 2);
    spec.a = weight(rng);
    spec.b = weight(rng);
    std::vector<PhaseClass> classes(m);
    for (auto& c : classes) c = coin(rng) ? PhaseClass::pi : PhaseClass::zero;
    spec.classes = std::move(classes);
    return spec;
}

// Largest Jacobian eigenvalue at complete sync after discounting the rotation mode.
double largest_nonrotation_jacobian_eigenvalue(const BlockNetworkSpec& spec) {
    const auto lap = numeric_spectrum(laplacian(build_block_network(spec)));
    const double n = static_cast<double>(spec.node_count());
    std::vector<double> jac(lap.size());
    std::transform(lap.begin(), lap.end(), jac.begin(), [n](double l) { return -l / n; });
    const auto rotation = std::min_element(jac.begin(), jac.end(), [](double x, double y) {
        return std::abs(x) < std::abs(y);
    });
    jac.erase(rotation);
    return *std::max_element(jac.begin(), jac.end());
}

double max_nonzero_mode(const std::vector<double>& sw, const std::vector<double>& sn, double p) {
    double best = -std::numeric_limits<double>::infinity();
    for (std::size_t k = 1; k < sw.size(); ++k)
        best = std::max(best, -2.0 * (1.0 + p) * sw[k] + p * sn[k]);
    return best;
}

std::vector<double> linspace(double lo, double hi, std::size_t n) {
    std::vector<double> out(n);
    for (std::size_t i = 0; i < n; ++i)
        out[i] = n == 1 ? lo : lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n - 1);
    return out;
}

std::vector<double> logspace(double lo, double hi, std::size_t n) {
    auto exps = linspace(std::log10(lo), std::log10(hi), n);
    for (auto& e : exps) e = std::pow(10.0, e);
    return exps;
}

SystemState random_state(std::mt19937_64& rng, std::size_t n, bool symmetric_kappa) {
    std::uniform_real_distribution<double> phase(0.0, kTwoPi);
    std::uniform_real_distribution<double> weight(-1.0, 1.0);
    std::vector<double> theta(n);
    for (auto& t : theta) t = phase(rng);
    CouplingMatrix kappa(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (symmetric_kappa && j < i) {
                kappa(i, j) = kappa(j, i);
            } else {
                kappa(i, j) = weight(rng);
            }
        }
    return {PhaseState(std::move(theta)), std::move(kappa), 0.0};
}

// Phases spread over exactly [0, d0]: two endpoints plus uniform interior points.
std::vector<double> phases_with_diameter(std::mt19937_64& rng, std::size_t n, double d0) {
    std::uniform_real_distribution<double> inside(0.0, d0);
    std::vector<double> theta(n);
    for (auto& t : theta) t = inside(rng);
    theta[0] = 0.0;
    theta[1] = d0;
    std::shuffle(theta.begin(), theta.end(), rng);
    return theta;
}

SystemState final_state(const SystemState& initial, const ModelParams& params,
                        const IntegratorConfig& cfg) {
    SystemState last = initial;
    integrate(initial, params, cfg, [&](const SystemState& s, const Diagnostics&) { last = s; });
    return last;
}

double state_distance(const SystemState& x, const SystemState& y) {
    double d = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) d = std::max(d, std::abs(x.theta[i] - y.theta[i]));
    for (std::size_t i = 0; i < x.kappa.data().size(); ++i)
        d = std::max(d, std::abs(x.kappa.data()[i] - y.kappa.data()[i]));
    return d;
}

}  // namespace

CheckResult check_block_spectra(std::uint64_t seed, std::size_t count) {
    CheckResult out{"block spectra vs dense eigensolver", {}};
    std::vector<BlockNetworkSpec> specs;
    std::mt19937_64 rng(seed);
    for (std::size_t i = 0; i < count; ++i) specs.push_back(random_block_spec(rng, 5, 40));

    std::vector<double> sync_dev(count);
    std::vector<double> anti_dev(count);
    parallel_for(count, [&](std::size_t i) {
        const auto& spec = specs[i];
        sync_dev[i] = multiset_distance(complete_sync_spectrum(spec).expanded(),
                                        numeric_spectrum(laplacian(build_block_network(spec))));
        anti_dev[i] = multiset_distance(antipodal_spectrum(spec).expanded(),
                                        numeric_spectrum(laplacian(antipodal_matrix_A(spec))));
    });

    for (const auto& [name, dev] : {std::pair{"complete-sync", &sync_dev},
                                    std::pair{"antipodal", &anti_dev}}) {
        const auto good = static_cast<std::size_t>(
            std::count_if(dev->begin(), dev->end(), [](double d) { return d <= kSpectrumTol; }));
        const double worst = *std::max_element(dev->begin(), dev->end());
        out.lines.push_back({good == count,
                             std::string(name) + " spectra within 1e-8 in " +
                                 count_of(good, count) + " specs (max deviation " +
                                 short_number(worst) + ")",
                             std::nullopt});
    }
    return out;
}

CheckResult check_circulant_spectra(std::size_t n_min, std::size_t n_max) {
    CheckResult out{"rotating-wave eigenvalues and admissible p", {}};
    struct Case {
        std::size_t n, w;
    };
    std::vector<Case> cases;
    for (std::size_t n = n_min; n <= n_max; ++n)
        for (std::size_t w = 1; w <= BandNetworkSpec::max_half_bandwidth(n); ++w) cases.push_back({n, w});

    const std::vector<double> p_values{0.1, 1.0, 10.0};
    const auto p_grid = logspace(1e-3, 1e3, 61);
    std::atomic<std::size_t> spectra_total{0}, spectra_bad{0};
    std::atomic<std::size_t> grid_total{0}, grid_bad{0};
    std::atomic<std::size_t> bounds_total{0}, bounds_bad{0};
    MaxTracker worst;

    parallel_for(cases.size(), [&](std::size_t c) {
        const auto [n, w] = cases[c];
        const double nn = static_cast<double>(n);
        const double zero_tol = 1e-9 * nn;
        for (double p : p_values) {
            const BandNetworkSpec spec{n, w, p};
            const auto kappa = build_band_network(spec);
            for (std::size_t m = 0; m < n; ++m) {
                const auto wave = rotating_wave(n, m);
                const auto eig = numeric_spectrum(numeric_jacobian(kappa, wave.phases(), 0.0));
                auto lambdas = rotating_wave_eigenvalues(spec, m);
                for (auto& l : lambdas) l /= nn;
                const double dev = multiset_distance(lambdas, eig);
                worst.update(dev);
                ++spectra_total;
                if (!(dev <= kSpectrumTol)) ++spectra_bad;
            }
        }

        for (std::size_t m = 0; m < n; ++m) {
            std::vector<double> sw(n), sn(n);
            for (std::size_t k = 0; k < n; ++k) {
                sw[k] = s_sum(w, m, k, n);
                sn[k] = s_full(m, k, n);
            }
            const auto range = admissible_p(n, w, m);
            std::vector<double> bounds;
            if (const auto* b = std::get_if<p_range::Bounded>(&range)) bounds = {b->lower, b->upper};
            if (const auto* l = std::get_if<p_range::LowerBoundedUnbounded>(&range)) bounds = {l->lower};
            if (const auto* u = std::get_if<p_range::UpperBounded>(&range)) bounds = {u->upper};

            for (double p : p_grid) {
                const bool near_bound = std::any_of(bounds.begin(), bounds.end(), [&](double b) {
                    return std::abs(p - b) <= 1e-6 * std::max(1.0, b);
                });
                if (near_bound) continue;
                ++grid_total;
                const bool admissible = max_nonzero_mode(sw, sn, p) <= zero_tol;
                if (admissible != contains(range, p)) ++grid_bad;
            }
            for (double b : bounds) {
                if (!(b > 0.0) || !std::isfinite(b)) continue;
                for (double side : {-1.0, 1.0}) {
                    const double p = b + side * 1e-6;
                    if (!(p > 0.0)) continue;
                    ++bounds_total;
                    const bool admissible = max_nonzero_mode(sw, sn, p) <= zero_tol;
                    if (admissible != contains(range, p)) ++bounds_bad;
                }
            }
        }
    });

    out.lines.push_back({spectra_bad == 0,
                         "lambda_k/N matches Jacobian eigenvalues within 1e-8 in " +
                             count_of(spectra_total - spectra_bad, spectra_total) +
                             " cases (max deviation " + short_number(worst.value()) + ")",
                         std::nullopt});
    out.lines.push_back({grid_bad == 0,
                         "admissible range agrees with max lambda_k <= 0 at " +
                             count_of(grid_total - grid_bad, grid_total) + " grid points",
                         std::nullopt});
    out.lines.push_back({bounds_bad == 0,
                         "max lambda_k crosses 0 at every range bound +-1e-6 (" +
                             count_of(bounds_total - bounds_bad, bounds_total) + " probes)",
                         std::nullopt});
    return out;
}

CheckResult check_stability_map(std::uint64_t seed, std::size_t side) {
    CheckResult out{"complete-sync stability map", {}};
    const auto axis = linspace(-3.0, 3.0, side);
    const std::size_t cells = side * side;
    std::vector<int> status(cells, 0);  // 0 agree, 1 disagree, 2 marginal
    parallel_for(cells, [&](std::size_t cell) {
        std::mt19937_64 rng(seed + cell);
        BlockNetworkSpec spec = random_block_spec(rng, 5, 40);
        spec.classes.reset();
        spec.a = axis[cell / side];
        spec.b = axis[cell % side];
        const double top = largest_nonrotation_jacobian_eigenvalue(spec);
        if (std::abs(top) <= 1e-6) {
            status[cell] = 2;
            return;
        }
        const auto region = complete_sync_region(spec);
        const bool agree = (region == SyncRegion::stable && top < 0.0) ||
                           (region == SyncRegion::unstable && top > 0.0);
        status[cell] = agree ? 0 : 1;
    });
    const auto marginal = static_cast<std::size_t>(std::count(status.begin(), status.end(), 2));
    const auto agree = static_cast<std::size_t>(std::count(status.begin(), status.end(), 0));
    out.lines.push_back({agree + marginal == cells,
                         "analytic verdict matches numeric sign in " +
                             count_of(agree, cells - marginal) + " non-marginal cells (" +
                             std::to_string(marginal) + " marginal)",
                         std::nullopt});

    // One group of size g plus singletons, a = -1, b = 3: critical proportion 3/4.
    std::size_t scan_bad = 0;
    const std::size_t n = 20;
    for (std::size_t g = 2; g < n; ++g) {
        BlockNetworkSpec spec;
        spec.group_sizes.assign(1, g);
        spec.group_sizes.insert(spec.group_sizes.end(), n - g, 1);
        spec.a = -1.0;
        spec.b = 3.0;
        const double top = largest_nonrotation_jacobian_eigenvalue(spec);
        const auto region = complete_sync_region(spec);
        const double proportion = static_cast<double>(g) / static_cast<double>(n);
        const SyncRegion expected = proportion < 0.75   ? SyncRegion::stable
                                    : proportion > 0.75 ? SyncRegion::unstable
                                                        : SyncRegion::boundary;
        const bool numeric_ok = expected == SyncRegion::stable     ? top < -1e-6
                                : expected == SyncRegion::unstable ? top > 1e-6
                                                                   : std::abs(top) <= 1e-6;
        if (region != expected || !numeric_ok) ++scan_bad;
    }
    out.lines.push_back({scan_bad == 0,
                         "stability flips exactly at largest-group proportion b/(b-a) (" +
                             count_of(n - 2 - scan_bad, n - 2) + " proportions)",
                         std::nullopt});
    return out;
}

CheckResult check_admissible_table() {
    CheckResult out{"admissible p table at N = 100", {}};
    constexpr std::size_t n = 100;
    const std::size_t w_max = BandNetworkSpec::max_half_bandwidth(n);

    bool all_upper = true;
    bool monotone = true;
    double previous = 0.0;
    for (std::size_t w = 1; w <= w_max; ++w) {
        const auto range = admissible_p(n, w, 0);
        const auto* u = std::get_if<p_range::UpperBounded>(&range);
        if (!u || !std::isfinite(u->upper)) {
            all_upper = false;
            continue;
        }
        if (w > 1 && u->upper < previous) monotone = false;
        previous = u->upper;
    }
    out.lines.push_back({all_upper, "m=0: finite upper bound p*(W) for every W", std::nullopt});
    out.lines.push_back({monotone, "m=0: p*(W) non-decreasing in W", std::nullopt});

    std::vector<std::size_t> largest;
    for (std::size_t m : {1u, 2u, 4u}) {
        bool sufficient = true;
        std::size_t last_nonempty = 0;
        for (std::size_t w = 1; w <= w_max; ++w) {
            const bool empty = std::holds_alternative<p_range::Empty>(admissible_p(n, w, m));
            if (!empty) last_nonempty = w;
            if (empty && 4 * m * w <= n) sufficient = false;
        }
        largest.push_back(last_nonempty);
        out.lines.push_back({sufficient,
                             "m=" + std::to_string(m) + ": non-empty for every W <= N/(4m) (largest "
                                 "non-empty W = " + std::to_string(last_nonempty) + ")",
                             std::nullopt});
    }
    out.lines.push_back({largest[0] > largest[1] && largest[1] > largest[2],
                         "largest non-empty W decreases with m", std::nullopt});
    return out;
}

CheckResult check_invariance_trials(std::uint64_t seed, std::size_t trials) {
    CheckResult out{"invariant set trials", {}};
    std::vector<InvarianceTrialConfig> configs(trials);
    std::mt19937_64 rng(seed);
    for (auto& cfg : configs) {
        std::uniform_real_distribution<double> beta(-kPi + 0.05, -0.05);
        cfg.beta = beta(rng);
        const double c_max = std::min(kPi + cfg.beta, -cfg.beta);
        cfg.c = std::uniform_real_distribution<double>(0.0, 0.95 * c_max)(rng);
        const double ds = delta_star(cfg.beta, cfg.c);
        cfg.delta = std::uniform_real_distribution<double>(0.0, ds)(rng);
        cfg.n = std::uniform_int_distribution<std::size_t>(2, 12)(rng);
        cfg.epsilon = std::bernoulli_distribution(0.5)(rng) ? 0.1 : 1.0;
        cfg.t_end = 50.0;
        cfg.step = 1e-2;
        cfg.seed = rng();
    }
    std::vector<InvarianceOutcome> outcomes(trials);
    parallel_for(trials, [&](std::size_t i) { outcomes[i] = check_invariance(configs[i]); });

    std::size_t violations = 0;
    std::size_t not_attracted = 0;
    std::optional<double> first_time;
    std::string first_what;
    for (const auto& o : outcomes) {
        if (!o.invariant) {
            ++violations;
            if (!first_time) {
                first_time = o.violation_time;
                first_what = *o.violation;
            }
        }
        if (o.attraction_checked && !o.attracted) ++not_attracted;
    }
    out.lines.push_back({violations == 0,
                         "membership kept at slack 1e-6 in " + count_of(trials - violations, trials) +
                             " trials" + (first_time ? " (first: " + first_what + ")" : ""),
                         first_time});
    out.lines.push_back({not_attracted == 0,
                         "intra-group kappa above delta* - 1e-3 eventually in " +
                             count_of(trials - not_attracted, trials) + " trials",
                         std::nullopt});
    return out;
}

namespace {

struct Thm1Trial {
    SystemState state;
    ModelParams params;
};

std::vector<Thm1Trial> theorem1_trials(std::uint64_t seed, std::size_t trials) {
    std::vector<Thm1Trial> out;
    std::mt19937_64 rng(seed);
    constexpr std::size_t n = 10;
    while (out.size() < trials) {
        const double beta = std::uniform_real_distribution<double>(-kPi / 2, -kPi / 4)(rng);
        if (beta == -kPi / 2) continue;
        const double limit = std::min(kPi + beta, -beta);
        const double d0 = std::uniform_real_distribution<double>(0.05, 0.95)(rng) * limit;
        const double eps = std::uniform_real_distribution<double>(0.5, 2.0)(rng);
        auto theta = phases_with_diameter(rng, n, d0);
        CouplingMatrix kappa(n);
        std::uniform_real_distribution<double> weight(0.0, 1.0);
        for (double& k : kappa.data()) {
            do k = weight(rng);
            while (k == 0.0);
        }
        out.push_back({{PhaseState(std::move(theta)), std::move(kappa), 0.0},
                       ModelParams{0.0, 0.0, beta, eps}});
    }
    return out;
}

}  // namespace

CheckResult check_theorem1_trials(std::uint64_t seed, std::size_t trials) {
    CheckResult out{"sign-definite synchronization theorem", {}};
    const auto data = theorem1_trials(seed, trials);
    std::vector<TheoremReport> standard(trials), limited(trials);
    parallel_for(trials, [&](std::size_t i) {
        Thm1Verification cfg;
        standard[i] = verify_theorem1(data[i].state, data[i].params, cfg);
        cfg.bound = DiameterBoundKind::coupling_limited;
        limited[i] = verify_theorem1(data[i].state, data[i].params, cfg);
    });

    auto summarize = [&](const std::vector<TheoremReport>& reports) {
        std::size_t within = 0;
        double worst = -std::numeric_limits<double>::infinity();
        for (const auto& r : reports) {
            if (r.lines[0].pass) ++within;
            worst = std::max(worst, r.max_bound_excess);
        }
        return std::pair{within, worst};
    };
    const auto [pub_ok, pub_worst] = summarize(standard);
    const auto [lim_ok, lim_worst] = summarize(limited);
    std::size_t kappa_ok = 0;
    double kappa_worst = 0.0;
    for (const auto& r : standard) {
        if (r.lines[2].pass) ++kappa_ok;
        kappa_worst = std::max(kappa_worst, r.final_kappa_error);
    }
    out.lines.push_back({pub_ok == trials,
                         "D(t) <= delta*-rate bound + 1e-6 in " + count_of(pub_ok, trials) +
                             " trajectories (max excess " + short_number(pub_worst) + ")",
                         std::nullopt});
    out.lines.push_back({kappa_ok == trials,
                         "max|kappa + sin(beta)| < 1e-3 at t=100 in " + count_of(kappa_ok, trials) +
                             " (max " + short_number(kappa_worst) + ")",
                         std::nullopt});
    out.lines.push_back({lim_ok == trials,
                         "[info] D(t) <= coupling-limited bound + 1e-6 in " +
                             count_of(lim_ok, trials) + " (max excess " + short_number(lim_worst) +
                             ")",
                         std::nullopt});
    return out;
}

CheckResult check_theorem2_trials(std::uint64_t seed, std::size_t trials) {
    CheckResult out{"adaptive synchronization theorem", {}};
    std::vector<std::pair<SystemState, ModelParams>> data;
    std::mt19937_64 rng(seed);
    constexpr std::size_t n = 10;
    for (std::size_t t = 0; t < trials; ++t) {
        const double beta = std::uniform_real_distribution<double>(-0.75 * kPi, -0.25 * kPi)(rng);
        const double eps = std::uniform_real_distribution<double>(0.5, 2.0)(rng);
        const double kmin = std::uniform_real_distribution<double>(-0.5, -0.1)(rng);
        const double d_bar = critical_diameter(beta, eps, kmin).d_bar;
        auto theta = phases_with_diameter(rng, n, 0.9 * d_bar);
        CouplingMatrix kappa(n);
        std::uniform_real_distribution<double> weight(kmin, 1.0);
        for (double& k : kappa.data()) k = weight(rng);
        kappa(0, 1) = kmin;
        data.push_back({{PhaseState(std::move(theta)), std::move(kappa), 0.0},
                        ModelParams{0.0, 0.0, beta, eps}});
    }
    std::vector<TheoremReport> reports(trials);
    parallel_for(trials, [&](std::size_t i) {
        reports[i] = verify_theorem2(data[i].first, data[i].second);
    });

    const std::vector<std::string> names{"D(t) <= D_bar + 1e-6", "min kappa >= -1e-6 after T~ + h",
                                         "couplings non-negative by T~ + h",
                                         "verdict complete sync",
                                         "max|kappa + sin(beta)| < 1e-3"};
    for (std::size_t line = 0; line < names.size(); ++line) {
        std::size_t ok = 0;
        std::optional<double> first_fail;
        for (const auto& r : reports) {
            if (r.lines[line].pass) {
                ++ok;
            } else if (!first_fail) {
                first_fail = r.lines[line].time;
            }
        }
        out.lines.push_back({ok == trials, names[line] + " in " + count_of(ok, trials) + " trials",
                             first_fail});
    }
    double margin = std::numeric_limits<double>::infinity();
    for (const auto& r : reports) margin = std::min(margin, -r.max_bound_excess);
    out.lines.push_back({true, "[info] smallest gap D_bar - max D(t): " + short_number(margin),
                         std::nullopt});
    return out;
}

CheckResult check_critical_diameter_grid() {
    CheckResult out{"critical diameter grid", {}};
    const auto eps = logspace(1e-3, 10.0, 20);
    const auto kappas = linspace(-0.05, -0.95, 20);
    const std::vector<double> betas{-0.5 * kPi, -0.375 * kPi, -0.25 * kPi, -0.125 * kPi};
    std::vector<double> mirrored;
    for (double b : betas) mirrored.push_back(-kPi - b);

    const auto table = sweep_critical_diameter(betas, eps, kappas);
    const auto mirror = sweep_critical_diameter(mirrored, eps, kappas);

    std::size_t eps_bad = 0, kappa_bad = 0, sym_bad = 0;
    double sym_worst = 0.0;
    for (std::size_t ib = 0; ib < betas.size(); ++ib)
        for (std::size_t ie = 0; ie < eps.size(); ++ie)
            for (std::size_t ik = 0; ik < kappas.size(); ++ik) {
                const double v = table.at(ib, ie, ik);
                if (ie > 0 && v < table.at(ib, ie - 1, ik)) ++eps_bad;
                // kappas run from -0.05 down to -0.95, so |kappa| grows with ik
                if (ik > 0 && v > table.at(ib, ie, ik - 1)) ++kappa_bad;
                const double diff = std::abs(v - mirror.at(ib, ie, ik));
                sym_worst = std::max(sym_worst, diff);
                if (diff > 1e-9) ++sym_bad;
            }
    out.lines.push_back({eps_bad == 0,
                         "D_bar non-decreasing in epsilon (" + std::to_string(eps_bad) +
                             " violations)",
                         std::nullopt});
    out.lines.push_back({kappa_bad == 0,
                         "D_bar non-increasing in |kappa_min0| (" + std::to_string(kappa_bad) +
                             " violations)",
                         std::nullopt});
    out.lines.push_back({sym_bad == 0,
                         "D_bar symmetric under beta -> -pi - beta within 1e-9 (max difference " +
                             short_number(sym_worst) + ")",
                         std::nullopt});

    std::vector<double> small_kappas;
    for (double k : kappas)
        if (k <= -0.1) small_kappas.push_back(k);
    const auto tiny = sweep_critical_diameter(betas, {1e-4}, small_kappas);
    const auto worst = *std::max_element(tiny.d_bar.begin(), tiny.d_bar.end());
    const auto ok = static_cast<std::size_t>(
        std::count_if(tiny.d_bar.begin(), tiny.d_bar.end(), [](double d) { return d < 1e-2; }));
    out.lines.push_back({ok == tiny.d_bar.size(),
                         "D_bar(epsilon=1e-4) < 1e-2 in " + count_of(ok, tiny.d_bar.size()) +
                             " cells with kappa_min0 <= -0.1 (max " + short_number(worst) + ")",
                         std::nullopt});
    return out;
}

CheckResult check_numerical_hygiene(std::uint64_t seed) {
    CheckResult out{"numerical hygiene", {}};
    std::mt19937_64 rng(seed);

    {
        const SystemState s0 = random_state(rng, 6, false);
        const ModelParams params{0.7, 0.3, -1.0, 0.5};
        const double t_end = 4.0;
        const auto at = [&](double h) { return final_state(s0, params, {h, t_end, 1000000}); };
        const auto reference = at(0.1 / 64);
        const double coarse = state_distance(at(0.1), reference);
        const double fine = state_distance(at(0.05), reference);
        const double ratio = coarse / fine;
        out.lines.push_back({ratio >= 12.0 && ratio <= 20.0,
                             "RK4 error ratio for h = 0.1 -> 0.05 is " + short_number(ratio) +
                                 " (want [12, 20])",
                             t_end});
    }
    {
        const SystemState s0 = random_state(rng, 10, true);
        const ModelParams params{0.0, 0.0, -1.0, 0.0};
        const auto mean = [](const SystemState& s) {
            const auto th = s.theta.phases();
            return std::accumulate(th.begin(), th.end(), 0.0) / static_cast<double>(th.size());
        };
        const double m0 = mean(s0);
        double worst_rate = 0.0;
        integrate(s0, params, {1e-2, 50.0, 1}, [&](const SystemState& s, const Diagnostics&) {
            worst_rate = std::max(worst_rate, std::abs(mean(s) - m0) / std::max(1.0, s.time));
        });
        out.lines.push_back({worst_rate <= 1e-10,
                             "mean phase drift " + short_number(worst_rate) +
                                 " per unit time (want <= 1e-10)",
                             50.0});
    }
    {
        const SystemState s0 = random_state(rng, 8, false);
        const ModelParams params{0.2, 0.1, -1.2, 0.8};
        const IntegratorConfig cfg{1e-2, 20.0, 7};
        const auto a = trajectory_to_csv(integrate(s0, params, cfg));
        const auto b = trajectory_to_csv(integrate(s0, params, cfg));
        const std::vector<double> betas{-1.0, -2.0};
        const std::vector<double> eps{0.1, 1.0};
        const std::vector<double> kappas{-0.2, -0.4};
        const auto s1 = sweep_to_csv(sweep_critical_diameter(betas, eps, kappas, 2000));
        const auto s2 = sweep_to_csv(sweep_critical_diameter(betas, eps, kappas, 2000));
        out.lines.push_back({a == b && s1 == s2, "repeated runs are byte-identical", std::nullopt});
    }
    return out;
}

CheckResult check_dynamics_properties(std::uint64_t seed) {
    CheckResult out{"adaptive dynamics properties", {}};
    std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
    double box_worst = 0.0;
    double equivariance_worst = 0.0;
    for (int trial = 0; trial < 20; ++trial) {
        const std::size_t n = std::uniform_int_distribution<std::size_t>(2, 10)(rng);
        const SystemState s0 = random_state(rng, n, false);
        const ModelParams params{std::uniform_real_distribution<double>(-1.0, 1.0)(rng),
                                 std::uniform_real_distribution<double>(-1.0, 1.0)(rng),
                                 std::uniform_real_distribution<double>(-3.0, 3.0)(rng),
                                 std::uniform_real_distribution<double>(0.1, 2.0)(rng)};
        const IntegratorConfig cfg{1e-2, 10.0, 1};
        integrate(s0, params, cfg, [&](const SystemState& s, const Diagnostics& d) {
            (void)s;
            box_worst = std::max({box_worst, std::abs(d.kmin), std::abs(d.kmax)});
        });
        const double shift = std::uniform_real_distribution<double>(-kPi, kPi)(rng);
        SystemState shifted = s0;
        shifted.theta = s0.theta.shifted(shift);
        const auto base = final_state(s0, params, cfg);
        auto moved = final_state(shifted, params, cfg);
        moved.theta = moved.theta.shifted(-shift);
        equivariance_worst = std::max(equivariance_worst, state_distance(base, moved));
    }
    out.lines.push_back({box_worst <= 1.0 + 1e-9,
                         "|kappa| stays <= 1 + 1e-9 (max " + short_number(box_worst) + ")",
                         std::nullopt});
    out.lines.push_back({equivariance_worst <= 1e-9,
                         "global phase shift commutes with the flow (max deviation " +
                             short_number(equivariance_worst) + ")",
                         std::nullopt});

    double residual = 0.0;
    for (std::size_t n = 5; n <= 32; ++n)
        for (std::size_t w = 1; w <= BandNetworkSpec::max_half_bandwidth(n); ++w) {
            const auto kappa = build_band_network({n, w, 1.0});
            for (std::size_t m = 0; m < n; ++m) {
                const auto d = rhs_static(rotating_wave(n, m), kappa, ModelParams{});
                const double mean = std::accumulate(d.begin(), d.end(), 0.0) / static_cast<double>(n);
                for (double v : d) residual = std::max(residual, std::abs(v - mean));
            }
        }
    out.lines.push_back({residual < 1e-12,
                         "rotating waves are relative equilibria (max residual " +
                             short_number(residual) + ")",
                         std::nullopt});
    return out;
}

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{"spectral-oracle", "invariance", "theorem1",
                                                "theorem2", "properties"};
    return names;
}

std::vector<CheckResult> run_suite(std::string_view name, std::uint64_t seed) {
    if (name == "spectral-oracle")
        return {check_block_spectra(seed), check_circulant_spectra(), check_stability_map(seed),
                check_admissible_table()};
    if (name == "invariance") return {check_invariance_trials(seed)};
    if (name == "theorem1") return {check_theorem1_trials(seed)};
    if (name == "theorem2") return {check_theorem2_trials(seed)};
    if (name == "properties")
        return {check_critical_diameter_grid(), check_numerical_hygiene(seed),
                check_dynamics_properties(seed)};
    throw Error("unknown suite \"" + std::string(name) + "\"");
}

}  // namespace kuramoto_signed
