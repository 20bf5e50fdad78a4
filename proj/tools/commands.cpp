#include "commands.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <ostream>

#include "kuramoto_signed/basins.hpp"
#include "kuramoto_signed/io.hpp"
#include "kuramoto_signed/spectral.hpp"
#include "kuramoto_signed/verify.hpp"
#include "run_config.hpp"

namespace kuramoto_signed::cli {

namespace {

using nlohmann::json;
namespace fs = std::filesystem;

constexpr std::size_t kMaxPanelCells = 10000;
constexpr double kSpectrumAgreement = 1e-8;

std::vector<std::string_view> split(std::string_view text, char sep) {
    std::vector<std::string_view> parts;
    std::size_t start = 0;
    while (true) {
        const std::size_t pos = text.find(sep, start);
        parts.push_back(text.substr(start, pos - start));
        if (pos == std::string_view::npos) break;
        start = pos + 1;
    }
    return parts;
}

std::size_t parse_count(std::string_view text) {
    std::size_t value = 0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size())
        throw ConfigError("not a non-negative integer: \"" + std::string(text) + "\"");
    return value;
}

fs::path out_dir(const CommandContext& ctx) { return ctx.out.empty() ? fs::path(".") : ctx.out; }

std::ostream& log(const CommandContext& ctx) { return *ctx.log; }

void write_output(const CommandContext& ctx, const std::string& name, std::string_view content) {
    write_file_atomic(out_dir(ctx) / name, content);
}

void write_gnuplot(const CommandContext& ctx, const std::string& csv_name, const std::string& body) {
    if (!ctx.gnuplot) return;
    const std::string stem = fs::path(csv_name).stem().string();
    std::string script = "set datafile separator ','\nset key autotitle columnhead\n";
    script += "set title '" + stem + "'\n" + body + '\n';
    write_output(ctx, stem + ".gp", script);
}

NetworkSpec network_or_config_error(const json& j) {
    try {
        return network_from_json(j);
    } catch (const json::exception& e) {
        throw ConfigError(std::string("bad network spec: ") + e.what());
    } catch (const ConfigError&) {
        throw;
    } catch (const Error& e) {
        throw ConfigError(e.what());
    }
}

std::vector<double> grid_from_json(const json& j, const char* name) {
    if (j.is_string()) return parse_grid(j.get<std::string>());
    if (j.is_number()) return {j.get<double>()};
    if (j.is_array()) {
        std::vector<double> out;
        for (const auto& v : j) {
            if (v.is_number()) {
                out.push_back(v.get<double>());
            } else if (v.is_string()) {
                out.push_back(parse_real(v.get<std::string>()));
            } else {
                throw ConfigError(std::string(name) + " entries must be numbers");
            }
        }
        return out;
    }
    throw ConfigError(std::string(name) + " must be a grid string or a list of numbers");
}

const json& recipe_field(const json& params, const char* key) {
    if (!params.contains(key)) throw ConfigError(std::string("recipe parameter missing: ") + key);
    return params.at(key);
}

// Defaults built in code hold signed integers; parsed JSON holds unsigned ones.
bool is_count(const json& v) {
    return v.is_number_unsigned() || (v.is_number_integer() && v.get<std::int64_t>() >= 0);
}

std::size_t recipe_count(const json& params, const char* key) {
    const json& v = recipe_field(params, key);
    if (!is_count(v)) throw ConfigError(std::string(key) + " must be a non-negative integer");
    return v.get<std::size_t>();
}

/// Slice of a sweep table holding one value of the chosen axis (0 beta, 2 kappa).
SweepTable panel(const SweepTable& full, int axis, std::size_t index) {
    SweepTable out;
    out.grid_points = full.grid_points;
    out.beta = axis == 0 ? std::vector<double>{full.beta[index]} : full.beta;
    out.epsilon = full.epsilon;
    out.kappa_min0 = axis == 2 ? std::vector<double>{full.kappa_min0[index]} : full.kappa_min0;
    for (std::size_t ib = 0; ib < full.beta.size(); ++ib)
        for (std::size_t ie = 0; ie < full.epsilon.size(); ++ie)
            for (std::size_t ik = 0; ik < full.kappa_min0.size(); ++ik) {
                if ((axis == 0 && ib != index) || (axis == 2 && ik != index)) continue;
                out.d_bar.push_back(full.at(ib, ie, ik));
            }
    return out;
}

/// Writes one CSV per panel along `axis` plus a metadata file, returns the panel count.
std::size_t write_sweep_panels(const SweepTable& full, int axis, const std::string& prefix,
                               const CommandContext& ctx) {
    const std::size_t panels = axis == 0 ? full.beta.size() : full.kappa_min0.size();
    json meta = sweep_metadata(full);
    meta["panel_axis"] = axis == 0 ? "beta" : "kappa_min0";
    meta["panels"] = json::array();
    for (std::size_t i = 0; i < panels; ++i) {
        const std::string name = prefix + "_panel_" + std::to_string(i) + ".csv";
        write_output(ctx, name, sweep_to_csv(panel(full, axis, i)));
        // columns: beta, epsilon, kappa_min0, d_bar
        write_gnuplot(ctx, name,
                      "set dgrid3d 40,40\nset pm3d map\nsplot '" + name + "' using " +
                          (axis == 0 ? "2:3:4" : "1:2:4") + " with pm3d notitle");
        meta["panels"].push_back({{"file", name},
                                  {axis == 0 ? "beta" : "kappa_min0",
                                   axis == 0 ? full.beta[i] : full.kappa_min0[i]}});
    }
    write_output(ctx, prefix + ".json", meta.dump(2) + '\n');
    return panels;
}

struct SimulationResult {
    Trajectory trajectory;
    SyncVerdict verdict;
};

SimulationResult run_simulation(const RunConfig& config, const CommandContext& ctx) {
    const SystemState state0 = initial_state(config);
    SimulationResult r;
    r.trajectory = integrate(state0, config.model, config.integrator);
    r.verdict = detect_sync(r.trajectory, config.detection.phase, config.detection.kappa);
    write_output(ctx, "trajectory.csv", trajectory_to_csv(r.trajectory));
    write_output(ctx, "verdict.json", verdict_to_json(r.verdict).dump(2) + '\n');
    write_output(ctx, "config.json", run_config_to_json(config).dump(2) + '\n');
    const std::size_t n = state0.size();
    write_gnuplot(ctx, "trajectory.csv",
                  "set xlabel 't'\nplot for [i=2:" + std::to_string(n + 1) +
                      "] 'trajectory.csv' using 1:i with lines notitle");
    log(ctx) << "verdict " << sync_kind_name(r.verdict.kind) << " final_diameter "
             << format_number(r.verdict.final_diameter) << '\n';
    return r;
}

std::vector<AdmissibleRow> admissible_rows(std::size_t n, const std::vector<std::size_t>& ms,
                                           const std::vector<std::size_t>& ws) {
    if (n < 3) throw ConfigError("admissible-p needs n >= 3");
    const std::size_t w_max = BandNetworkSpec::max_half_bandwidth(n);
    std::vector<AdmissibleRow> rows;
    for (std::size_t m : ms) {
        if (m >= n) throw ConfigError("twist number m must be below n");
        for (std::size_t w : ws) {
            if (w < 1 || w > w_max)
                throw ConfigError("W must lie in [1, " + std::to_string(w_max) + "] for n = " +
                                  std::to_string(n));
            rows.push_back({w, m, admissible_p(n, w, m)});
        }
    }
    return rows;
}

void write_admissible(const std::vector<AdmissibleRow>& rows, const std::string& name,
                      const CommandContext& ctx) {
    write_output(ctx, name, admissible_to_csv(rows));
    write_gnuplot(ctx, name,
                  "set logscale y\nset xlabel 'W'\nset ylabel 'p'\nplot '" + name +
                      "' using 1:5 with points title 'upper', '' using 1:4 with points title 'lower'");
}

std::string verification_report(const std::vector<CheckResult>& results, bool& passed) {
    std::string text;
    passed = true;
    for (const auto& r : results) {
        text += "== " + r.title + " ==\n" + format_report(r.lines);
        passed = passed && r.passed();
    }
    return text;
}

// Recipes ---------------------------------------------------------------------------------

int recipe_fig3(const json& params, const CommandContext& ctx) {
    BlockNetworkSpec spec;
    for (const auto& s : recipe_field(params, "group_sizes")) {
        if (!is_count(s) || s.get<std::size_t>() == 0)
            throw ConfigError("group_sizes must be positive integers");
        spec.group_sizes.push_back(s.get<std::size_t>());
    }
    if (spec.node_count() < 2) throw ConfigError("fig3 needs at least two oscillators");
    const auto a_grid = grid_from_json(recipe_field(params, "a"), "a");
    const auto b_grid = grid_from_json(recipe_field(params, "b"), "b");

    std::string csv = "a,b,region,max_jacobian_eigenvalue\n";
    const double n = static_cast<double>(spec.node_count());
    for (double a : a_grid)
        for (double b : b_grid) {
            spec.a = a;
            spec.b = b;
            auto lambdas = numeric_spectrum(laplacian(build_block_network(spec)));
            for (auto& l : lambdas) l = -l / n;
            const auto rotation = std::min_element(lambdas.begin(), lambdas.end(), [](double x, double y) {
                return std::abs(x) < std::abs(y);
            });
            lambdas.erase(rotation);
            const double top = lambdas.empty() ? 0.0 : *std::max_element(lambdas.begin(), lambdas.end());
            const auto region = complete_sync_region(spec);
            csv += format_number(a) + ',' + format_number(b) + ',' +
                   (region == SyncRegion::stable     ? "stable"
                    : region == SyncRegion::unstable ? "unstable"
                                                     : "boundary") +
                   ',' + format_number(top) + '\n';
        }
    write_output(ctx, "fig3a.csv", csv);
    write_gnuplot(ctx, "fig3a.csv",
                  "set xlabel 'a'\nset ylabel 'b'\nplot 'fig3a.csv' using 1:2:4 with image notitle");

    // Largest-group proportion against b/|a| with a = -1: one group of size k plus singletons.
    const std::size_t total = recipe_count(params, "proportion_n");
    if (total < 2) throw ConfigError("proportion_n must be at least 2");
    const auto ratios = grid_from_json(recipe_field(params, "ratio"), "ratio");
    std::string csv_b = "ratio,proportion,region,critical_proportion\n";
    for (double ratio : ratios) {
        if (!(ratio > 0.0)) throw ConfigError("fig3 ratios must be positive");
        for (std::size_t k = 1; k <= total; ++k) {
            BlockNetworkSpec s;
            s.group_sizes.assign(1, k);
            s.group_sizes.insert(s.group_sizes.end(), total - k, 1);
            s.a = -1.0;
            s.b = ratio;
            const auto region = complete_sync_region(s);
            csv_b += format_number(ratio) + ',' +
                     format_number(static_cast<double>(k) / static_cast<double>(total)) + ',' +
                     (region == SyncRegion::stable     ? "stable"
                      : region == SyncRegion::unstable ? "unstable"
                                                       : "boundary") +
                     ',' + format_number(ratio / (ratio + 1.0)) + '\n';
        }
    }
    write_output(ctx, "fig3b.csv", csv_b);
    write_gnuplot(ctx, "fig3b.csv",
                  "set xlabel 'b/|a|'\nset ylabel 'largest group proportion'\n"
                  "plot 'fig3b.csv' using 1:4 with lines title 'critical proportion'");
    log(ctx) << "fig3: " << a_grid.size() * b_grid.size() << " (a,b) cells, "
             << ratios.size() * total << " proportion cells\n";
    return kExitOk;
}

int recipe_fig4(const json& params, const CommandContext& ctx) {
    const std::size_t n = recipe_count(params, "n");
    std::vector<std::size_t> ms;
    for (const auto& m : recipe_field(params, "m")) {
        if (!is_count(m)) throw ConfigError("m must list non-negative integers");
        ms.push_back(m.get<std::size_t>());
    }
    const json& w = recipe_field(params, "w");
    if (!w.is_string()) throw ConfigError("w must be an index list such as \"1:49\"");
    const auto rows = admissible_rows(n, ms, parse_index_list(w.get<std::string>()));
    write_admissible(rows, "fig4.csv", ctx);
    log(ctx) << "fig4: " << rows.size() << " rows\n";
    return kExitOk;
}

int recipe_fig5(const json& params, const CommandContext& ctx) {
    const RunConfig config = parse_run_config(params);
    const auto result = run_simulation(config, ctx);
    const auto& first = result.trajectory.samples.front();
    const double d0 = first.diagnostics.diameter;
    const double kmin0 = first.diagnostics.kmin;
    const double beta = config.model.beta;
    const double limit = std::min(kPi + beta, -beta);
    std::string csv = "t,diameter,bound,bound_coupling_limited\n";
    const bool bounded = kmin0 > 0.0 && d0 < limit;
    for (const auto& s : result.trajectory.samples) {
        csv += format_number(s.state.time) + ',' + format_number(s.diagnostics.diameter) + ',';
        if (bounded) {
            csv += format_number(diameter_bound(s.state.time, d0, beta)) + ',' +
                   format_number(diameter_bound(s.state.time, d0, beta, kmin0));
        } else {
            csv += ',';
        }
        csv += '\n';
    }
    write_output(ctx, "fig5_bound.csv", csv);
    write_gnuplot(ctx, "fig5_bound.csv",
                  "set xlabel 't'\nplot 'fig5_bound.csv' using 1:2 with lines, '' using 1:3 with "
                  "lines, '' using 1:4 with lines");
    return kExitOk;
}

SweepTable recipe_sweep(const json& params) {
    const auto betas = grid_from_json(recipe_field(params, "beta"), "beta");
    const auto eps = grid_from_json(recipe_field(params, "epsilon"), "epsilon");
    const auto kappas = grid_from_json(recipe_field(params, "kappa_min0"), "kappa_min0");
    const std::size_t grid = recipe_count(params, "grid_points");
    try {
        return sweep_critical_diameter(betas, eps, kappas, grid);
    } catch (const NumericalError&) {
        throw;
    } catch (const Error& e) {
        throw ConfigError(e.what());
    }
}

int recipe_fig6(const json& params, const CommandContext& ctx) {
    const auto table = recipe_sweep(params);
    if (table.epsilon.size() * table.kappa_min0.size() > kMaxPanelCells)
        throw ConfigError("a panel may hold at most 10000 cells");
    const auto panels = write_sweep_panels(table, 0, "fig6", ctx);
    log(ctx) << "fig6: " << panels << " beta panels\n";
    return kExitOk;
}

int recipe_fig7(const json& params, const CommandContext& ctx) {
    const auto table = recipe_sweep(params);
    if (table.beta.size() * table.epsilon.size() > kMaxPanelCells)
        throw ConfigError("a panel may hold at most 10000 cells");
    const auto panels = write_sweep_panels(table, 2, "fig7", ctx);
    log(ctx) << "fig7: " << panels << " kappa_min0 panels\n";
    return kExitOk;
}

int recipe_verify_all(const json& params, const CommandContext& ctx) {
    const json& seed = recipe_field(params, "seed");
    if (!is_count(seed)) throw ConfigError("seed must be a non-negative integer");
    std::vector<CheckResult> all;
    for (const auto& name : recipe_field(params, "suites")) {
        if (!name.is_string()) throw ConfigError("suites must be names");
        const auto& known = suite_names();
        if (std::find(known.begin(), known.end(), name.get<std::string>()) == known.end())
            throw ConfigError("unknown suite \"" + name.get<std::string>() + "\"");
        auto results = run_suite(name.get<std::string>(), seed.get<std::uint64_t>());
        all.insert(all.end(), results.begin(), results.end());
    }
    bool passed = false;
    const std::string report = verification_report(all, passed);
    write_output(ctx, "verify_all.txt", report);
    log(ctx) << report << (passed ? "PASS" : "FAIL") << " verify-all\n";
    return passed ? kExitOk : kExitAssertion;
}

}  // namespace

std::vector<double> parse_grid(std::string_view text) {
    if (text.starts_with("lin:") || text.starts_with("log:")) {
        const auto parts = split(text.substr(4), ':');
        if (parts.size() != 3) throw ConfigError("grid \"" + std::string(text) + "\" needs lo:hi:n");
        const double lo = parse_real(parts[0]);
        const double hi = parse_real(parts[1]);
        const std::size_t n = parse_count(parts[2]);
        if (n == 0) throw ConfigError("grid needs at least one point");
        const bool log_scale = text.starts_with("log:");
        if (log_scale && !(lo > 0.0 && hi > 0.0)) throw ConfigError("log grid bounds must be positive");
        std::vector<double> out(n);
        for (std::size_t i = 0; i < n; ++i) {
            const double s = n == 1 ? 0.0 : static_cast<double>(i) / static_cast<double>(n - 1);
            out[i] = log_scale ? std::pow(10.0, std::log10(lo) + s * (std::log10(hi) - std::log10(lo)))
                               : lo + s * (hi - lo);
        }
        if (n > 1) out.back() = hi;
        return out;
    }
    std::vector<double> out;
    for (auto part : split(text, ',')) out.push_back(parse_real(part));
    return out;
}

std::vector<std::size_t> parse_index_list(std::string_view text) {
    if (const auto colon = text.find(':'); colon != std::string_view::npos) {
        const std::size_t lo = parse_count(text.substr(0, colon));
        const std::size_t hi = parse_count(text.substr(colon + 1));
        if (lo > hi) throw ConfigError("empty range \"" + std::string(text) + "\"");
        std::vector<std::size_t> out;
        for (std::size_t i = lo; i <= hi; ++i) out.push_back(i);
        return out;
    }
    std::vector<std::size_t> out;
    for (auto part : split(text, ',')) out.push_back(parse_count(part));
    return out;
}

int cmd_simulate(const fs::path& config_path, const CommandContext& ctx) {
    const RunConfig config = load_run_config(config_path);
    CommandContext local = ctx;
    if (local.out.empty()) local.out = config.outputs;
    run_simulation(config, local);
    return kExitOk;
}

int cmd_spectrum(const json& network, std::string_view kind, const CommandContext& ctx) {
    const NetworkSpec spec = network_or_config_error(network);
    std::vector<double> closed;
    std::vector<double> numeric;
    std::vector<double> jacobian;
    std::string convention;
    double n = 0.0;

    if (kind == "sync" || kind == "antipodal") {
        const auto* block = std::get_if<BlockNetworkSpec>(&spec);
        if (!block) throw ConfigError(std::string(kind) + " spectra need a block network");
        n = static_cast<double>(block->node_count());
        if (kind == "sync") {
            closed = complete_sync_spectrum(*block).expanded();
            numeric = numeric_spectrum(laplacian(build_block_network(*block)));
        } else {
            if (!block->classes) throw ConfigError("antipodal spectra need \"classes\"");
            closed = antipodal_spectrum(*block).expanded();
            numeric = numeric_spectrum(laplacian(antipodal_matrix_A(*block)));
        }
        convention = "laplacian";
        for (double l : closed) jacobian.push_back(-l / n);
    } else if (kind.starts_with("rotating:")) {
        const auto* band = std::get_if<BandNetworkSpec>(&spec);
        if (!band) throw ConfigError("rotating-wave spectra need a band network");
        const std::size_t m = parse_count(kind.substr(9));
        if (m >= band->n) throw ConfigError("twist number m must be below n");
        n = static_cast<double>(band->n);
        closed = rotating_wave_eigenvalues(*band, m);
        numeric = numeric_spectrum(
            numeric_jacobian(build_band_network(*band), rotating_wave(band->n, m).phases(), 0.0));
        for (double& v : numeric) v *= n;
        std::sort(closed.begin(), closed.end());
        convention = "n_times_jacobian";
        for (double l : closed) jacobian.push_back(l / n);
    } else {
        throw ConfigError("unknown equilibrium kind \"" + std::string(kind) +
                          "\" (expected sync, antipodal or rotating:m)");
    }

    const double deviation = multiset_distance(closed, numeric);
    const auto verdict = stability_verdict(jacobian);
    std::string csv = "source,value,multiplicity\n";
    const Spectrum closed_spectrum = Spectrum::from_values(closed);
    const Spectrum numeric_spectrum_merged = Spectrum::from_values(numeric, 1e-7);
    for (const auto& e : closed_spectrum.entries())
        csv += "closed_form," + format_number(e.value) + ',' + std::to_string(e.multiplicity) + '\n';
    for (const auto& e : numeric_spectrum_merged.entries())
        csv += "numeric," + format_number(e.value) + ',' + std::to_string(e.multiplicity) + '\n';
    write_output(ctx, "spectrum.csv", csv);
    write_gnuplot(ctx, "spectrum.csv",
                  "plot 'spectrum.csv' using 0:2 with points title 'eigenvalue'");

    const bool agree = deviation <= kSpectrumAgreement;
    const std::string summary = std::string(agree ? "PASS" : "FAIL") + " kind=" + std::string(kind) +
                                " convention=" + convention +
                                " max_deviation=" + format_number(deviation) +
                                " verdict=" + describe(verdict) + '\n';
    write_output(ctx, "summary.txt", summary);
    log(ctx) << summary;
    return agree ? kExitOk : kExitAssertion;
}

int cmd_admissible_p(std::size_t n, const std::vector<std::size_t>& ms,
                     const std::vector<std::size_t>& ws, const CommandContext& ctx) {
    const auto rows = admissible_rows(n, ms, ws);
    write_admissible(rows, "admissible_p.csv", ctx);
    log(ctx) << "admissible-p: " << rows.size() << " rows\n";
    return kExitOk;
}

int cmd_sweep_dbar(const std::vector<double>& betas, const std::vector<double>& epsilons,
                   const std::vector<double>& kappas, std::size_t grid_points,
                   const CommandContext& ctx) {
    if (epsilons.size() * kappas.size() > kMaxPanelCells)
        throw ConfigError("a panel may hold at most 10000 cells");
    SweepTable table;
    try {
        table = sweep_critical_diameter(betas, epsilons, kappas, grid_points);
    } catch (const NumericalError&) {
        throw;
    } catch (const Error& e) {
        throw ConfigError(e.what());
    }
    const auto panels = write_sweep_panels(table, 0, "dbar", ctx);
    log(ctx) << "sweep-dbar: " << panels << " panels, " << table.d_bar.size() << " cells\n";
    return kExitOk;
}

int cmd_verify(std::string_view suite, std::uint64_t seed, const CommandContext& ctx) {
    const auto& known = suite_names();
    if (std::find(known.begin(), known.end(), suite) == known.end())
        throw ConfigError("unknown suite \"" + std::string(suite) + "\"");
    bool passed = false;
    const std::string report = verification_report(run_suite(suite, seed), passed);
    write_output(ctx, "verify_" + std::string(suite) + ".txt", report);
    log(ctx) << report << (passed ? "PASS " : "FAIL ") << suite << '\n';
    return passed ? kExitOk : kExitAssertion;
}

const std::vector<std::string>& recipe_names() {
    static const std::vector<std::string> names{"fig3", "fig4", "fig5", "fig6", "fig7", "verify-all"};
    return names;
}

json recipe_defaults(std::string_view name) {
    if (name == "fig3")
        return {{"group_sizes", {6, 3, 1}},
                {"a", "lin:-3:3:61"},
                {"b", "lin:-3:3:61"},
                {"proportion_n", 20},
                {"ratio", "lin:0.05:5:100"}};
    if (name == "fig4") return {{"n", 100}, {"m", {0, 1, 2, 4}}, {"w", "1:49"}};
    if (name == "fig5")
        return {{"model", {{"omega", 0.0}, {"alpha", 0.0}, {"beta", "-0.5pi"}, {"epsilon", 1.0}}},
                {"network", {{"type", "block"}, {"group_sizes", {10}}, {"a", 1.0}, {"b", 0.0}}},
                {"initial_phases",
                 {{"sampler", "uniform_arc"}, {"n", 10}, {"lo", 0.0}, {"hi", 1.2}, {"seed", 5}}},
                {"initial_kappa", {{"sampler", "uniform"}, {"lo", 0.05}, {"hi", 1.0}, {"seed", 6}}},
                {"integrator", {{"step", 1e-2}, {"t_end", 100.0}, {"sample_every", 10}}}};
    if (name == "fig6")
        return {{"beta", "-0.5pi,-0.375pi,-0.25pi,-0.125pi"},
                {"epsilon", "log:0.01:10:40"},
                {"kappa_min0", "lin:-0.05:-0.95:40"},
                {"grid_points", kDefaultDiameterGrid}};
    if (name == "fig7")
        return {{"beta", "lin:-0.98pi:-0.02pi:40"},
                {"epsilon", "log:0.01:10:40"},
                {"kappa_min0", "-0.1,-0.3,-0.5,-0.7"},
                {"grid_points", kDefaultDiameterGrid}};
    if (name == "verify-all") return {{"seed", kDefaultVerifySeed}, {"suites", suite_names()}};
    throw ConfigError("unknown recipe \"" + std::string(name) + "\"");
}

int cmd_recipe(std::string_view name, const json& overrides, const CommandContext& ctx) {
    json params = recipe_defaults(name);
    if (!overrides.is_null()) {
        if (!overrides.is_object()) throw ConfigError("recipe overrides must be a JSON object");
        params.merge_patch(overrides);
    }
    write_output(ctx, "recipe.json", json{{"recipe", name}, {"parameters", params}}.dump(2) + '\n');
    try {
        if (name == "fig3") return recipe_fig3(params, ctx);
        if (name == "fig4") return recipe_fig4(params, ctx);
        if (name == "fig5") return recipe_fig5(params, ctx);
        if (name == "fig6") return recipe_fig6(params, ctx);
        if (name == "fig7") return recipe_fig7(params, ctx);
        return recipe_verify_all(params, ctx);
    } catch (const json::exception& e) {
        throw ConfigError(std::string("bad recipe parameters: ") + e.what());
    }
}

}  // namespace kuramoto_signed::cli
