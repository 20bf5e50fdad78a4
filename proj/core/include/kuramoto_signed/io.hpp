#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <nlohmann/json.hpp>

#include "kuramoto_signed/basins.hpp"
#include "kuramoto_signed/dynamics.hpp"
#include "kuramoto_signed/matrix.hpp"
#include "kuramoto_signed/model.hpp"
#include "kuramoto_signed/spectral.hpp"

namespace kuramoto_signed {

using NetworkSpec = std::variant<BlockNetworkSpec, BandNetworkSpec>;

/// {"type":"block","group_sizes":[..],"a":..,"b":..,"classes":[0,1,..]} or
/// {"type":"band","n":..,"w":..,"p":..}. Classes use 0 for the 0-class and 1 for the pi-class.
/// Throws Error on unknown types, missing fields or invalid specs.
[[nodiscard]] NetworkSpec network_from_json(const nlohmann::json& j);
[[nodiscard]] nlohmann::json network_to_json(const NetworkSpec& spec);
[[nodiscard]] CouplingMatrix build_network(const NetworkSpec& spec);

/// Round-trip decimal rendering (17 significant digits, shortest form not attempted).
[[nodiscard]] std::string format_number(double x);

/// Writes to a sibling temporary file and renames it over `path`; parent directories are
/// created as needed.
void write_file_atomic(const std::filesystem::path& path, std::string_view content);
[[nodiscard]] std::string read_file(const std::filesystem::path& path);

/// One matrix row per line, comma separated.
[[nodiscard]] std::string matrix_to_csv(const SquareMatrix& m);
/// Parses a square CSV matrix; blank lines are ignored.
[[nodiscard]] SquareMatrix matrix_from_csv(std::string_view text);

/// `t,theta_0..theta_{N-1},kappa_00..kappa_{N-1,N-1},diameter,r1,r2,kmin,kmax`
[[nodiscard]] std::string trajectory_csv_header(std::size_t n);
[[nodiscard]] std::string trajectory_csv_row(const SystemState& s, const Diagnostics& d);
[[nodiscard]] std::string trajectory_to_csv(const Trajectory& traj);

/// `value,multiplicity`
[[nodiscard]] std::string spectrum_to_csv(const Spectrum& s);

struct AdmissibleRow {
    std::size_t w = 0;
    std::size_t m = 0;
    AdmissiblePRange range;
};

/// `W,m,kind,lower,upper`; bounds that do not exist are left empty.
[[nodiscard]] std::string admissible_to_csv(const std::vector<AdmissibleRow>& rows);

/// `beta,epsilon,kappa_min0,d_bar`, one row per cell in table order.
[[nodiscard]] std::string sweep_to_csv(const SweepTable& table);
/// Axis metadata for a sweep table.
[[nodiscard]] nlohmann::json sweep_metadata(const SweepTable& table);

[[nodiscard]] nlohmann::json verdict_to_json(const SyncVerdict& v);

}  // namespace kuramoto_signed
