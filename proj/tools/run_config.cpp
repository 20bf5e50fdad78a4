#include "run_config.hpp"

#include <charconv>
#include <random>

#include "kuramoto_signed/io.hpp"

namespace kuramoto_signed::cli {

namespace {

using nlohmann::json;

const json& require(const json& j, const char* key, const char* where) {
    if (!j.is_object() || !j.contains(key))
        throw ConfigError(std::string(where) + " is missing \"" + key + "\"");
    return j.at(key);
}

double real_field(const json& j, const char* key, const char* where) {
    const json& v = require(j, key, where);
    if (v.is_number()) return v.get<double>();
    if (v.is_string()) return parse_real(v.get<std::string>());
    throw ConfigError(std::string(where) + "." + key + " must be a number");
}

double real_field_or(const json& j, const char* key, const char* where, double fallback) {
    return j.contains(key) ? real_field(j, key, where) : fallback;
}

std::uint64_t count_field(const json& j, const char* key, const char* where) {
    const json& v = require(j, key, where);
    // Parsed JSON stores non-negative literals as unsigned; built-in defaults may be signed.
    const bool non_negative = v.is_number_unsigned() || (v.is_number_integer() && v.get<std::int64_t>() >= 0);
    if (!non_negative) throw ConfigError(std::string(where) + "." + key + " must be a non-negative integer");
    return v.get<std::uint64_t>();
}

void reject_unknown(const json& j, std::initializer_list<const char*> known, const char* where) {
    for (const auto& [key, _] : j.items()) {
        bool ok = false;
        for (const char* k : known) ok = ok || key == k;
        if (!ok) throw ConfigError(std::string(where) + " has unknown field \"" + key + "\"");
    }
}

ModelParams parse_model(const json& j) {
    if (!j.is_object()) throw ConfigError("\"model\" must be an object");
    reject_unknown(j, {"omega", "alpha", "beta", "epsilon"}, "model");
    ModelParams p;
    p.omega = real_field_or(j, "omega", "model", p.omega);
    p.alpha = real_field_or(j, "alpha", "model", p.alpha);
    p.beta = real_field_or(j, "beta", "model", p.beta);
    p.epsilon = real_field_or(j, "epsilon", "model", p.epsilon);
    p.validate();
    return p;
}

NetworkSource parse_network(const json& j, const std::filesystem::path& base_dir) {
    if (!j.is_object()) throw ConfigError("\"network\" must be an object");
    if (j.value("type", "") == "matrix") {
        reject_unknown(j, {"type", "path"}, "network");
        const json& p = require(j, "path", "network");
        if (!p.is_string()) throw ConfigError("network.path must be a string");
        MatrixFile file{p.get<std::string>(), {}};
        file.resolved = file.path.is_absolute() ? file.path : base_dir / file.path;
        if (!std::filesystem::exists(file.resolved))
            throw ConfigError("coupling matrix file not found: " + file.resolved.string());
        return file;
    }
    NetworkSpec spec = network_from_json(j);
    return std::visit([](auto&& s) -> NetworkSource { return s; }, spec);
}

InitialPhases parse_phases(const json& j) {
    if (j.is_array()) {
        std::vector<double> theta;
        for (const auto& v : j) {
            if (v.is_number()) {
                theta.push_back(v.get<double>());
            } else if (v.is_string()) {
                theta.push_back(parse_real(v.get<std::string>()));
            } else {
                throw ConfigError("initial_phases entries must be numbers");
            }
        }
        return theta;
    }
    if (!j.is_object()) throw ConfigError("initial_phases must be a list or a sampler object");
    reject_unknown(j, {"sampler", "n", "lo", "hi", "seed"}, "initial_phases");
    const json& kind = require(j, "sampler", "initial_phases");
    if (kind != "uniform_arc") throw ConfigError("initial_phases.sampler must be \"uniform_arc\"");
    if (!j.contains("seed")) throw ConfigError("initial_phases sampler requires a \"seed\"");
    ArcSampler s{count_field(j, "n", "initial_phases"), real_field(j, "lo", "initial_phases"),
                 real_field(j, "hi", "initial_phases"), count_field(j, "seed", "initial_phases")};
    if (!(s.lo <= s.hi)) throw ConfigError("initial_phases needs lo <= hi");
    return s;
}

KappaSampler parse_kappa(const json& j) {
    if (!j.is_object()) throw ConfigError("initial_kappa must be a sampler object");
    reject_unknown(j, {"sampler", "lo", "hi", "seed"}, "initial_kappa");
    if (require(j, "sampler", "initial_kappa") != "uniform")
        throw ConfigError("initial_kappa.sampler must be \"uniform\"");
    if (!j.contains("seed")) throw ConfigError("initial_kappa sampler requires a \"seed\"");
    KappaSampler s{real_field(j, "lo", "initial_kappa"), real_field(j, "hi", "initial_kappa"),
                   count_field(j, "seed", "initial_kappa")};
    if (!(s.lo <= s.hi)) throw ConfigError("initial_kappa needs lo <= hi");
    return s;
}

IntegratorConfig parse_integrator(const json& j) {
    if (!j.is_object()) throw ConfigError("\"integrator\" must be an object");
    reject_unknown(j, {"step", "t_end", "sample_every"}, "integrator");
    IntegratorConfig c;
    c.step = real_field_or(j, "step", "integrator", c.step);
    c.t_end = real_field_or(j, "t_end", "integrator", c.t_end);
    if (j.contains("sample_every")) c.sample_every = count_field(j, "sample_every", "integrator");
    c.validate();
    return c;
}

std::size_t network_size(const RunConfig& c) {
    struct Visitor {
        std::size_t operator()(const BlockNetworkSpec& s) const { return s.node_count(); }
        std::size_t operator()(const BandNetworkSpec& s) const { return s.n; }
        std::size_t operator()(const MatrixFile& f) const {
            return matrix_from_csv(read_file(f.resolved)).size();
        }
    };
    return std::visit(Visitor{}, c.network);
}

std::size_t phase_count(const InitialPhases& p) {
    if (const auto* list = std::get_if<std::vector<double>>(&p)) return list->size();
    return std::get<ArcSampler>(p).n;
}

}  // namespace

double parse_real(std::string_view text) {
    auto plain = [&](std::string_view body) {
        if (!body.empty() && body.front() == '+') body.remove_prefix(1);
        double value = 0.0;
        const auto [ptr, ec] = std::from_chars(body.data(), body.data() + body.size(), value);
        if (body.empty() || ec != std::errc{} || ptr != body.data() + body.size())
            throw ConfigError("not a number: \"" + std::string(text) + "\"");
        return value;
    };
    const auto pi_at = text.find("pi");
    if (pi_at == std::string_view::npos) return plain(text);

    // [coefficient][*]pi[/denominator]
    std::string_view coef = text.substr(0, pi_at);
    std::string_view rest = text.substr(pi_at + 2);
    if (!coef.empty() && coef.back() == '*') coef.remove_suffix(1);
    double value = kPi;
    if (coef == "-") {
        value = -kPi;
    } else if (!coef.empty() && coef != "+") {
        value *= plain(coef);
    }
    if (!rest.empty()) {
        if (rest.front() != '/') throw ConfigError("not a number: \"" + std::string(text) + "\"");
        const double den = plain(rest.substr(1));
        if (den == 0.0) throw ConfigError("division by zero in \"" + std::string(text) + "\"");
        value /= den;
    }
    return value;
}

RunConfig parse_run_config(const json& j, const std::filesystem::path& base_dir) {
    if (!j.is_object()) throw ConfigError("run config must be a JSON object");
    reject_unknown(j,
                   {"model", "network", "initial_phases", "initial_kappa", "integrator", "detection",
                    "outputs"},
                   "run config");
    RunConfig c;
    try {
        c.model = parse_model(require(j, "model", "run config"));
        c.network = parse_network(require(j, "network", "run config"), base_dir);
        c.initial_phases = parse_phases(require(j, "initial_phases", "run config"));
        if (j.contains("initial_kappa") && !j.at("initial_kappa").is_null())
            c.initial_kappa = parse_kappa(j.at("initial_kappa"));
        if (j.contains("integrator")) c.integrator = parse_integrator(j.at("integrator"));
        if (j.contains("detection")) {
            const json& d = j.at("detection");
            reject_unknown(d, {"tol_phase", "tol_kappa"}, "detection");
            c.detection.phase = real_field_or(d, "tol_phase", "detection", c.detection.phase);
            c.detection.kappa = real_field_or(d, "tol_kappa", "detection", c.detection.kappa);
            if (!(c.detection.phase > 0.0) || !(c.detection.kappa > 0.0))
                throw ConfigError("detection tolerances must be positive");
        }
        if (j.contains("outputs")) {
            if (!j.at("outputs").is_string()) throw ConfigError("\"outputs\" must be a path string");
            c.outputs = j.at("outputs").get<std::string>();
        }
        if (network_size(c) != phase_count(c.initial_phases))
            throw ConfigError("initial_phases has " + std::to_string(phase_count(c.initial_phases)) +
                              " entries but the network has " + std::to_string(network_size(c)) +
                              " nodes");
    } catch (const ConfigError&) {
        throw;
    } catch (const Error& e) {
        throw ConfigError(e.what());
    }
    return c;
}

RunConfig load_run_config(const std::filesystem::path& path) {
    json j;
    try {
        j = json::parse(read_file(path));
    } catch (const json::parse_error& e) {
        throw ConfigError("malformed JSON in " + path.string() + ": " + e.what());
    } catch (const Error& e) {
        throw ConfigError(e.what());
    }
    return parse_run_config(j, path.has_parent_path() ? path.parent_path() : ".");
}

json run_config_to_json(const RunConfig& c) {
    json j;
    j["model"] = {{"omega", c.model.omega},
                  {"alpha", c.model.alpha},
                  {"beta", c.model.beta},
                  {"epsilon", c.model.epsilon}};
    if (const auto* file = std::get_if<MatrixFile>(&c.network)) {
        j["network"] = {{"type", "matrix"}, {"path", file->path.string()}};
    } else if (const auto* block = std::get_if<BlockNetworkSpec>(&c.network)) {
        j["network"] = network_to_json(*block);
    } else {
        j["network"] = network_to_json(std::get<BandNetworkSpec>(c.network));
    }
    if (const auto* list = std::get_if<std::vector<double>>(&c.initial_phases)) {
        j["initial_phases"] = *list;
    } else {
        const auto& s = std::get<ArcSampler>(c.initial_phases);
        j["initial_phases"] = {{"sampler", "uniform_arc"}, {"n", s.n}, {"lo", s.lo}, {"hi", s.hi},
                               {"seed", s.seed}};
    }
    if (c.initial_kappa) {
        j["initial_kappa"] = {{"sampler", "uniform"},
                              {"lo", c.initial_kappa->lo},
                              {"hi", c.initial_kappa->hi},
                              {"seed", c.initial_kappa->seed}};
    } else {
        j["initial_kappa"] = nullptr;
    }
    j["integrator"] = {{"step", c.integrator.step},
                       {"t_end", c.integrator.t_end},
                       {"sample_every", c.integrator.sample_every}};
    j["detection"] = {{"tol_phase", c.detection.phase}, {"tol_kappa", c.detection.kappa}};
    j["outputs"] = c.outputs.string();
    return j;
}

SystemState initial_state(const RunConfig& c) {
    std::vector<double> theta;
    if (const auto* list = std::get_if<std::vector<double>>(&c.initial_phases)) {
        theta = *list;
    } else {
        const auto& s = std::get<ArcSampler>(c.initial_phases);
        std::mt19937_64 rng(s.seed);
        std::uniform_real_distribution<double> arc(s.lo, s.hi);
        theta.resize(s.n);
        for (auto& t : theta) t = arc(rng);
    }
    CouplingMatrix kappa;
    if (const auto* file = std::get_if<MatrixFile>(&c.network)) {
        kappa = matrix_from_csv(read_file(file->resolved));
    } else if (const auto* block = std::get_if<BlockNetworkSpec>(&c.network)) {
        kappa = build_block_network(*block);
    } else {
        kappa = build_band_network(std::get<BandNetworkSpec>(c.network));
    }
    if (c.initial_kappa) {
        std::mt19937_64 rng(c.initial_kappa->seed);
        std::uniform_real_distribution<double> weight(c.initial_kappa->lo, c.initial_kappa->hi);
        for (double& k : kappa.data()) k = weight(rng);
    }
    SystemState state{PhaseState(std::move(theta)), std::move(kappa), 0.0};
    state.validate();
    return state;
}

}  // namespace kuramoto_signed::cli
