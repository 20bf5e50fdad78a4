#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <variant>
#include <vector>

#include <nlohmann/json.hpp>

#include "kuramoto_signed/dynamics.hpp"
#include "kuramoto_signed/error.hpp"
#include "kuramoto_signed/model.hpp"

namespace kuramoto_signed::cli {

/// Invalid or inconsistent configuration (exit code 2).
class ConfigError : public Error {
public:
    using Error::Error;
};

/// Phases drawn uniformly from [lo, hi].
struct ArcSampler {
    std::size_t n = 0;
    double lo = 0.0;
    double hi = 0.0;
    std::uint64_t seed = 0;
};

/// Couplings drawn uniformly from [lo, hi], diagonal included.
struct KappaSampler {
    double lo = 0.0;
    double hi = 0.0;
    std::uint64_t seed = 0;
};

struct MatrixFile {
    std::filesystem::path path;  ///< as written in the config
    std::filesystem::path resolved;
};

using NetworkSource = std::variant<BlockNetworkSpec, BandNetworkSpec, MatrixFile>;
using InitialPhases = std::variant<std::vector<double>, ArcSampler>;

struct DetectionTolerances {
    double phase = kDefaultTolPhase;
    double kappa = kDefaultTolKappa;
};

struct RunConfig {
    ModelParams model;
    NetworkSource network;
    InitialPhases initial_phases;
    std::optional<KappaSampler> initial_kappa;  ///< replaces the network couplings when present
    IntegratorConfig integrator;
    DetectionTolerances detection;
    std::filesystem::path outputs = ".";
};

/// Parses and validates a run config. Relative matrix paths resolve against `base_dir`, and
/// the file must exist. Throws ConfigError.
[[nodiscard]] RunConfig parse_run_config(const nlohmann::json& j,
                                         const std::filesystem::path& base_dir = ".");
[[nodiscard]] RunConfig load_run_config(const std::filesystem::path& path);

/// Fully explicit form: every default written out, so parse(to_json(c)) == c.
[[nodiscard]] nlohmann::json run_config_to_json(const RunConfig& config);

/// Initial state: phases from the list or sampler, couplings from the network or sampler.
[[nodiscard]] SystemState initial_state(const RunConfig& config);

/// Parses a real number, optionally written as a multiple of pi ("-0.5pi", "-pi/3", "2*pi").
[[nodiscard]] double parse_real(std::string_view text);

}  // namespace kuramoto_signed::cli
