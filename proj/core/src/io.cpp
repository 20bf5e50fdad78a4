#include "kuramoto_signed/io.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <system_error>

#include "kuramoto_signed/error.hpp"

namespace kuramoto_signed {

namespace {

using nlohmann::json;

const json& field(const json& j, const char* key) {
    if (!j.contains(key)) throw Error(std::string("network spec is missing \"") + key + "\"");
    return j.at(key);
}

template <class T>
T get_as(const json& j, const char* key) {
    try {
        return field(j, key).get<T>();
    } catch (const json::exception&) {
        throw Error(std::string("network spec field \"") + key + "\" has the wrong type");
    }
}

std::size_t get_count(const json& j, const char* key) {
    const json& v = field(j, key);
    if (!v.is_number_integer() || v.get<long long>() < 0)
        throw Error(std::string("network spec field \"") + key + "\" must be a non-negative integer");
    return v.get<std::size_t>();
}

double parse_double(std::string_view text) {
    while (!text.empty() && (text.front() == ' ' || text.front() == '\t')) text.remove_prefix(1);
    while (!text.empty() && (text.back() == ' ' || text.back() == '\t' || text.back() == '\r'))
        text.remove_suffix(1);
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size())
        throw Error("malformed number in CSV: \"" + std::string(text) + "\"");
    return value;
}

}  // namespace

NetworkSpec network_from_json(const json& j) {
    if (!j.is_object()) throw Error("network spec must be a JSON object");
    const auto type = get_as<std::string>(j, "type");
    if (type == "block") {
        BlockNetworkSpec spec;
        const json& sizes = field(j, "group_sizes");
        if (!sizes.is_array()) throw Error("\"group_sizes\" must be an array");
        for (const auto& s : sizes) {
            if (!s.is_number_integer() || s.get<long long>() <= 0)
                throw Error("group sizes must be positive integers");
            spec.group_sizes.push_back(s.get<std::size_t>());
        }
        spec.a = get_as<double>(j, "a");
        spec.b = get_as<double>(j, "b");
        if (j.contains("classes") && !j.at("classes").is_null()) {
            std::vector<PhaseClass> classes;
            for (const auto& c : j.at("classes")) {
                if (!c.is_number_integer() || (c.get<int>() != 0 && c.get<int>() != 1))
                    throw Error("classes must be 0 or 1");
                classes.push_back(c.get<int>() == 0 ? PhaseClass::zero : PhaseClass::pi);
            }
            spec.classes = std::move(classes);
        }
        spec.validate();
        return spec;
    }
    if (type == "band") {
        BandNetworkSpec spec{get_count(j, "n"), get_count(j, "w"), get_as<double>(j, "p")};
        spec.validate();
        return spec;
    }
    throw Error("unknown network type \"" + type + "\"");
}

json network_to_json(const NetworkSpec& spec) {
    struct Visitor {
        json operator()(const BlockNetworkSpec& s) const {
            json j{{"type", "block"}, {"group_sizes", s.group_sizes}, {"a", s.a}, {"b", s.b}};
            if (s.classes) {
                std::vector<int> classes;
                for (PhaseClass c : *s.classes) classes.push_back(c == PhaseClass::zero ? 0 : 1);
                j["classes"] = classes;
            }
            return j;
        }
        json operator()(const BandNetworkSpec& s) const {
            return json{{"type", "band"}, {"n", s.n}, {"w", s.w}, {"p", s.p}};
        }
    };
    return std::visit(Visitor{}, spec);
}

CouplingMatrix build_network(const NetworkSpec& spec) {
    struct Visitor {
        CouplingMatrix operator()(const BlockNetworkSpec& s) const { return build_block_network(s); }
        CouplingMatrix operator()(const BandNetworkSpec& s) const { return build_band_network(s); }
    };
    return std::visit(Visitor{}, spec);
}

std::string format_number(double x) {
    char buf[32];
    const int len = std::snprintf(buf, sizeof buf, "%.17g", x);
    return std::string(buf, static_cast<std::size_t>(len));
}

void write_file_atomic(const std::filesystem::path& path, std::string_view content) {
    namespace fs = std::filesystem;
    if (path.has_parent_path()) fs::create_directories(path.parent_path());
    fs::path tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw Error("cannot open " + tmp.string() + " for writing");
        out.write(content.data(), static_cast<std::streamsize>(content.size()));
        out.flush();
        if (!out) throw Error("failed writing " + tmp.string());
    }
    std::error_code ec;
    fs::rename(tmp, path, ec);
    if (ec) {
        fs::remove(tmp, ec);
        throw Error("cannot move output into place at " + path.string());
    }
}

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string matrix_to_csv(const SquareMatrix& m) {
    std::string out;
    for (std::size_t i = 0; i < m.size(); ++i) {
        for (std::size_t j = 0; j < m.size(); ++j) {
            if (j > 0) out += ',';
            out += format_number(m(i, j));
        }
        out += '\n';
    }
    return out;
}

SquareMatrix matrix_from_csv(std::string_view text) {
    std::vector<std::vector<double>> rows;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t eol = text.find('\n', pos);
        if (eol == std::string_view::npos) eol = text.size();
        std::string_view line = text.substr(pos, eol - pos);
        pos = eol + 1;
        if (line.find_first_not_of(" \t\r") == std::string_view::npos) continue;
        std::vector<double> row;
        std::size_t start = 0;
        while (true) {
            const std::size_t comma = line.find(',', start);
            row.push_back(parse_double(line.substr(start, comma - start)));
            if (comma == std::string_view::npos) break;
            start = comma + 1;
        }
        rows.push_back(std::move(row));
    }
    const std::size_t n = rows.size();
    if (n == 0) throw Error("empty matrix CSV");
    SquareMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (rows[i].size() != n) throw Error("matrix CSV is not square");
        for (std::size_t j = 0; j < n; ++j) m(i, j) = rows[i][j];
    }
    return m;
}

std::string trajectory_csv_header(std::size_t n) {
    std::string out = "t";
    for (std::size_t i = 0; i < n; ++i) out += ",theta_" + std::to_string(i);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            out += ",kappa_" + std::to_string(i) + "_" + std::to_string(j);
    out += ",diameter,r1,r2,kmin,kmax\n";
    return out;
}

std::string trajectory_csv_row(const SystemState& s, const Diagnostics& d) {
    std::string out = format_number(s.time);
    for (double v : s.theta.phases()) out += ',' + format_number(v);
    for (double v : s.kappa.data()) out += ',' + format_number(v);
    for (double v : {d.diameter, d.r1, d.r2, d.kmin, d.kmax}) out += ',' + format_number(v);
    out += '\n';
    return out;
}

std::string trajectory_to_csv(const Trajectory& traj) {
    if (traj.empty()) throw Error("empty trajectory");
    std::string out = trajectory_csv_header(traj.samples.front().state.size());
    for (const auto& s : traj.samples) out += trajectory_csv_row(s.state, s.diagnostics);
    return out;
}

std::string spectrum_to_csv(const Spectrum& s) {
    std::string out = "value,multiplicity\n";
    for (const auto& e : s.entries())
        out += format_number(e.value) + ',' + std::to_string(e.multiplicity) + '\n';
    return out;
}

std::string admissible_to_csv(const std::vector<AdmissibleRow>& rows) {
    std::string out = "W,m,kind,lower,upper\n";
    for (const auto& r : rows) {
        std::string lower;
        std::string upper;
        if (const auto* b = std::get_if<p_range::Bounded>(&r.range)) {
            lower = format_number(b->lower);
            upper = format_number(b->upper);
        } else if (const auto* l = std::get_if<p_range::LowerBoundedUnbounded>(&r.range)) {
            lower = format_number(l->lower);
        } else if (const auto* u = std::get_if<p_range::UpperBounded>(&r.range)) {
            upper = format_number(u->upper);
        }
        out += std::to_string(r.w) + ',' + std::to_string(r.m) + ',' + range_kind(r.range) + ',' +
               lower + ',' + upper + '\n';
    }
    return out;
}

std::string sweep_to_csv(const SweepTable& table) {
    std::string out = "beta,epsilon,kappa_min0,d_bar\n";
    for (std::size_t ib = 0; ib < table.beta.size(); ++ib)
        for (std::size_t ie = 0; ie < table.epsilon.size(); ++ie)
            for (std::size_t ik = 0; ik < table.kappa_min0.size(); ++ik)
                out += format_number(table.beta[ib]) + ',' + format_number(table.epsilon[ie]) + ',' +
                       format_number(table.kappa_min0[ik]) + ',' +
                       format_number(table.at(ib, ie, ik)) + '\n';
    return out;
}

json sweep_metadata(const SweepTable& table) {
    return json{{"axes", json::array({"beta", "epsilon", "kappa_min0"})},
                {"beta", table.beta},
                {"epsilon", table.epsilon},
                {"kappa_min0", table.kappa_min0},
                {"grid_points", table.grid_points},
                {"order", "beta-major, then epsilon, then kappa_min0"},
                {"cells", table.d_bar.size()}};
}

json verdict_to_json(const SyncVerdict& v) {
    json j{{"kind", sync_kind_name(v.kind)}, {"final_diameter", v.final_diameter}};
    j["asymptotic_kappa"] = v.asymptotic_kappa ? json(*v.asymptotic_kappa) : json(nullptr);
    if (v.partition) {
        j["partition"] = json{{"first", v.partition->first}, {"second", v.partition->second}};
    } else {
        j["partition"] = nullptr;
    }
    return j;
}

}  // namespace kuramoto_signed
