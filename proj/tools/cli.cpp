#include "cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <filesystem>
#include <ostream>

#include "commands.hpp"
#include "kuramoto_signed/io.hpp"
#include "kuramoto_signed/model.hpp"
#include "kuramoto_signed/verify.hpp"
#include "run_config.hpp"

namespace kuramoto_signed::cli {

namespace {

using nlohmann::json;

json parse_json_argument(const std::string& text, const char* what) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw ConfigError(std::string("malformed JSON in ") + what + ": " + e.what());
    }
}

/// Inline JSON when the argument starts with '{', otherwise a path to a JSON file.
json json_or_file(const std::string& arg, const char* what) {
    const auto first = arg.find_first_not_of(" \t\n");
    if (first != std::string::npos && arg[first] == '{') return parse_json_argument(arg, what);
    std::string text;
    try {
        text = read_file(arg);
    } catch (const Error& e) {
        throw ConfigError(e.what());
    }
    return parse_json_argument(text, what);
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Signed and adaptive Kuramoto networks: simulation, spectra and basin bounds",
                 "kuramoto-signed"};
    app.require_subcommand(1);
    app.set_version_flag("--version", "kuramoto-signed 0.1.0");

    CommandContext ctx;
    ctx.log = &out;
    std::string out_dir;
    auto add_output_flags = [&](CLI::App* sub) {
        sub->add_option("--out", out_dir, "Directory receiving every output file");
        sub->add_flag("--gnuplot", ctx.gnuplot, "Write a gnuplot script next to each CSV");
    };

    std::string config_path;
    auto* simulate = app.add_subcommand("simulate", "Integrate a run config");
    simulate->add_option("config", config_path, "Run config (JSON)")->required();
    add_output_flags(simulate);

    std::string network_arg;
    std::string kind;
    auto* spectrum = app.add_subcommand("spectrum", "Closed-form vs numeric equilibrium spectrum");
    spectrum->add_option("--network", network_arg, "Network spec: inline JSON or a JSON file")
        ->required();
    spectrum->add_option("--kind", kind, "sync | antipodal | rotating:m")->required();
    add_output_flags(spectrum);

    std::size_t n = 0;
    std::string m_list = "0";
    std::string w_list;
    auto* admissible = app.add_subcommand("admissible-p", "Admissible inhibition ranges per (m, W)");
    admissible->add_option("--n", n, "Number of oscillators")->required();
    admissible->add_option("--m", m_list, "Twist numbers, e.g. 0,1,2,4");
    admissible->add_option("--w", w_list, "Half-bandwidths, e.g. 1:49 (default: all valid)");
    add_output_flags(admissible);

    std::string beta_grid, eps_grid, kappa_grid;
    std::size_t grid_points = kDefaultDiameterGrid;
    auto* sweep = app.add_subcommand("sweep-dbar", "Critical diameter over (beta, epsilon, kappa_min0)");
    sweep->add_option("--beta", beta_grid, "Grid: list, lin:lo:hi:n or log:lo:hi:n")->required();
    sweep->add_option("--epsilon", eps_grid, "Adaptation-rate grid")->required();
    sweep->add_option("--kappa", kappa_grid, "Minimal initial coupling grid")->required();
    sweep->add_option("--grid-points", grid_points, "Diameter grid resolution (>= 1000)");
    add_output_flags(sweep);

    std::string suite;
    std::uint64_t seed = kDefaultVerifySeed;
    auto* verify = app.add_subcommand("verify", "Run a check suite");
    verify->add_option("suite", suite,
                       "spectral-oracle | invariance | theorem1 | theorem2 | properties")
        ->required();
    verify->add_option("--seed", seed, "Random seed");
    add_output_flags(verify);

    std::string recipe;
    std::string overrides;
    std::string overrides_file;
    auto* recipe_cmd = app.add_subcommand("recipe", "Regenerate a figure's data or run every suite");
    recipe_cmd->add_option("name", recipe, "fig3 | fig4 | fig5 | fig6 | fig7 | verify-all")->required();
    recipe_cmd->add_option("--set", overrides, "JSON merge patch applied to the recipe defaults");
    recipe_cmd->add_option("--set-file", overrides_file, "File holding a JSON merge patch");
    add_output_flags(recipe_cmd);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        ctx.out = out_dir;
        if (simulate->parsed()) return cmd_simulate(config_path, ctx);
        if (spectrum->parsed()) return cmd_spectrum(json_or_file(network_arg, "--network"), kind, ctx);
        if (admissible->parsed()) {
            std::vector<std::size_t> ws;
            if (w_list.empty()) {
                if (n < 3) throw ConfigError("admissible-p needs n >= 3");
                for (std::size_t w = 1; w <= BandNetworkSpec::max_half_bandwidth(n); ++w) ws.push_back(w);
            } else {
                ws = parse_index_list(w_list);
            }
            return cmd_admissible_p(n, parse_index_list(m_list), ws, ctx);
        }
        if (sweep->parsed())
            return cmd_sweep_dbar(parse_grid(beta_grid), parse_grid(eps_grid), parse_grid(kappa_grid),
                                  grid_points, ctx);
        if (verify->parsed()) return cmd_verify(suite, seed, ctx);
        if (recipe_cmd->parsed()) {
            const auto& names = recipe_names();
            if (std::find(names.begin(), names.end(), recipe) == names.end())
                throw ConfigError("unknown recipe \"" + recipe + "\"");
            json patch;
            if (!overrides_file.empty()) patch = json_or_file(overrides_file, "--set-file");
            if (!overrides.empty()) {
                const json inline_patch = parse_json_argument(overrides, "--set");
                if (patch.is_null()) {
                    patch = inline_patch;
                } else {
                    patch.merge_patch(inline_patch);
                }
            }
            return cmd_recipe(recipe, patch, ctx);
        }
    } catch (const NumericalError& e) {
        err << "numerical failure: " << e.what() << '\n';
        return kExitNumerical;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const json::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::filesystem::filesystem_error& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}

}  // namespace kuramoto_signed::cli
