#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

namespace kuramoto_signed::cli {

/// Process exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitAssertion = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitNumerical = 3;

struct CommandContext {
    std::filesystem::path out = ".";
    bool gnuplot = false;
    std::ostream* log = nullptr;  ///< summary lines; must be set
};

/// Grid syntax: "v1,v2,..." | "lin:lo:hi:n" | "log:lo:hi:n"; values may carry a "pi" suffix.
[[nodiscard]] std::vector<double> parse_grid(std::string_view text);
/// Unsigned list "0,1,2" or inclusive range "lo:hi".
[[nodiscard]] std::vector<std::size_t> parse_index_list(std::string_view text);

/// Integrates the configured run; writes trajectory.csv, verdict.json and config.json.
int cmd_simulate(const std::filesystem::path& config_path, const CommandContext& ctx);

/// Closed-form vs numeric spectrum for kind "sync", "antipodal" or "rotating:m"; writes
/// spectrum.csv and summary.txt. Exit 1 when the two multisets differ by more than 1e-8.
int cmd_spectrum(const nlohmann::json& network, std::string_view kind, const CommandContext& ctx);

/// One row per (m, W); writes admissible_p.csv.
int cmd_admissible_p(std::size_t n, const std::vector<std::size_t>& ms,
                     const std::vector<std::size_t>& ws, const CommandContext& ctx);

/// One CSV per beta panel (dbar_panel_<i>.csv) plus dbar.json metadata.
int cmd_sweep_dbar(const std::vector<double>& betas, const std::vector<double>& epsilons,
                   const std::vector<double>& kappas, std::size_t grid_points,
                   const CommandContext& ctx);

/// Runs a named check suite; writes verify_<suite>.txt. Exit 1 on any failed assertion.
int cmd_verify(std::string_view suite, std::uint64_t seed, const CommandContext& ctx);

[[nodiscard]] const std::vector<std::string>& recipe_names();
/// Default parameters of a recipe, before overrides.
[[nodiscard]] nlohmann::json recipe_defaults(std::string_view name);
/// Applies `overrides` as a JSON merge patch to the recipe defaults and runs it; the resolved
/// parameters go to recipe.json.
int cmd_recipe(std::string_view name, const nlohmann::json& overrides, const CommandContext& ctx);

}  // namespace kuramoto_signed::cli
