#include "kuramoto_signed/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace kuramoto_signed {

namespace {

void merge_sorted(const std::vector<SpectrumEntry>& sorted, double merge_tol,
                  std::vector<SpectrumEntry>& out) {
    out.clear();
    std::size_t i = 0;
    while (i < sorted.size()) {
        const double anchor = sorted[i].value;
        double weighted = 0.0;
        std::size_t mult = 0;
        while (i < sorted.size() && sorted[i].value - anchor <= merge_tol) {
            weighted += sorted[i].value * static_cast<double>(sorted[i].multiplicity);
            mult += sorted[i].multiplicity;
            ++i;
        }
        out.push_back({weighted / static_cast<double>(mult), mult});
    }
}

}  // namespace

Spectrum Spectrum::from_values(std::vector<double> values, double merge_tol) {
    std::vector<SpectrumEntry> entries;
    entries.reserve(values.size());
    for (double v : values) entries.push_back({v, 1});
    return from_entries(std::move(entries), merge_tol);
}

Spectrum Spectrum::from_entries(std::vector<SpectrumEntry> entries, double merge_tol) {
    std::erase_if(entries, [](const SpectrumEntry& e) { return e.multiplicity == 0; });
    std::sort(entries.begin(), entries.end(),
              [](const SpectrumEntry& x, const SpectrumEntry& y) { return x.value < y.value; });
    Spectrum s;
    merge_sorted(entries, merge_tol, s.entries_);
    return s;
}

std::size_t Spectrum::total_multiplicity() const noexcept {
    std::size_t total = 0;
    for (const auto& e : entries_) total += e.multiplicity;
    return total;
}

std::vector<double> Spectrum::expanded() const {
    std::vector<double> out;
    out.reserve(total_multiplicity());
    for (const auto& e : entries_) out.insert(out.end(), e.multiplicity, e.value);
    return out;
}

Spectrum Spectrum::scaled(double factor) const {
    std::vector<SpectrumEntry> entries = entries_;
    for (auto& e : entries) e.value *= factor;
    return from_entries(std::move(entries), 0.0);
}

double multiset_distance(std::vector<double> x, std::vector<double> y) {
    if (x.size() != y.size()) return std::numeric_limits<double>::infinity();
    std::sort(x.begin(), x.end());
    std::sort(y.begin(), y.end());
    double d = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) d = std::max(d, std::abs(x[i] - y[i]));
    return d;
}

Spectrum complete_sync_spectrum(const BlockNetworkSpec& spec) {
    spec.validate();
    const auto n = static_cast<double>(spec.node_count());
    std::vector<SpectrumEntry> entries;
    entries.push_back({0.0, 1});
    entries.push_back({spec.b * n, spec.group_count() - 1});
    for (std::size_t g : spec.group_sizes) {
        const auto size = static_cast<double>(g);
        entries.push_back({spec.a * size + spec.b * (n - size), g - 1});
    }
    return Spectrum::from_entries(std::move(entries));
}

SquareMatrix antipodal_matrix_A(const BlockNetworkSpec& spec) {
    spec.validate();
    if (!spec.classes) throw Error("missing class assignment");
    const auto groups = spec.node_groups();
    const auto& classes = *spec.classes;
    SquareMatrix a = build_block_network(spec);
    for (std::size_t i = 0; i < groups.size(); ++i)
        for (std::size_t j = 0; j < groups.size(); ++j)
            if (classes[groups[i]] != classes[groups[j]]) a(i, j) = -a(i, j);
    return a;
}

Spectrum antipodal_spectrum(const BlockNetworkSpec& spec) {
    spec.validate();
    if (!spec.classes) throw Error("missing class assignment");
    const auto& classes = *spec.classes;
    const auto [n0, npi] = spec.class_populations();
    if (n0 == 0 || npi == 0) return complete_sync_spectrum(spec);

    const auto n = static_cast<double>(n0 + npi);
    const double imbalance = static_cast<double>(n0) - static_cast<double>(npi);
    const auto groups_in_zero =
        static_cast<std::size_t>(std::count(classes.begin(), classes.end(), PhaseClass::zero));
    const std::size_t groups_in_pi = classes.size() - groups_in_zero;

    std::vector<SpectrumEntry> entries;
    entries.push_back({0.0, 1});
    entries.push_back({-spec.b * n, 1});
    // cluster splay modes: one per extra group inside each class
    entries.push_back({spec.b * (2.0 * static_cast<double>(n0) - n), groups_in_zero - 1});
    entries.push_back({spec.b * (2.0 * static_cast<double>(npi) - n), groups_in_pi - 1});
    for (std::size_t m = 0; m < spec.group_sizes.size(); ++m) {
        const auto size = static_cast<double>(spec.group_sizes[m]);
        const double sign = classes[m] == PhaseClass::zero ? 1.0 : -1.0;
        entries.push_back({(spec.a - spec.b) * size + spec.b * imbalance * sign,
                           spec.group_sizes[m] - 1});
    }
    return Spectrum::from_entries(std::move(entries));
}

SquareMatrix numeric_jacobian(const CouplingMatrix& kappa, std::span<const double> theta_star,
                              double alpha) {
    const std::size_t n = theta_star.size();
    if (kappa.size() != n) throw Error("dimension mismatch between coupling and phases");
    const double inv_n = 1.0 / static_cast<double>(n);
    SquareMatrix j(n);
    for (std::size_t r = 0; r < n; ++r) {
        double diag = 0.0;
        for (std::size_t c = 0; c < n; ++c) {
            if (c == r) continue;
            const double v = inv_n * kappa(r, c) * std::cos(theta_star[r] - theta_star[c] + alpha);
            j(r, c) = v;
            diag -= v;
        }
        j(r, r) = diag;
    }
    return j;
}

double s_sum(std::size_t j_max, std::size_t m, std::size_t k, std::size_t n) {
    if (n == 0 || j_max < 1 || j_max > n) throw Error("s_sum requires 1 <= J <= n");
    const double step = kTwoPi / static_cast<double>(n);
    double s = 0.0;
    for (std::size_t j = 1; j <= j_max; ++j) {
        // reduce the integer phase first so the cosine arguments stay in [0, 2pi)
        const double cm = std::cos(step * static_cast<double>((m * j) % n));
        const double ck = std::cos(step * static_cast<double>((k * j) % n));
        s += cm * (1.0 - ck);
    }
    return s;
}

double s_full(std::size_t m, std::size_t k, std::size_t n) {
    const auto nn = static_cast<double>(n);
    const bool m_zero = m % n == 0;
    const bool sum_zero = (m + k) % n == 0;
    const bool diff_zero = (m % n + n - k % n) % n == 0;
    return (m_zero ? nn : 0.0) - 0.5 * nn * ((sum_zero ? 1.0 : 0.0) + (diff_zero ? 1.0 : 0.0));
}

std::vector<double> rotating_wave_eigenvalues(const BandNetworkSpec& spec, std::size_t m) {
    spec.validate();
    if (m >= spec.n) throw Error("twist number m must satisfy 0 <= m < n");
    std::vector<double> lambdas(spec.n);
    for (std::size_t k = 0; k < spec.n; ++k) {
        lambdas[k] = -2.0 * (1.0 + spec.p) * s_sum(spec.w, m, k, spec.n) +
                     spec.p * s_full(m, k, spec.n);
    }
    return lambdas;
}

const char* range_kind(const AdmissiblePRange& r) noexcept {
    struct Visitor {
        const char* operator()(const p_range::Empty&) const { return "empty"; }
        const char* operator()(const p_range::Bounded&) const { return "bounded"; }
        const char* operator()(const p_range::LowerBoundedUnbounded&) const { return "lower"; }
        const char* operator()(const p_range::UpperBounded&) const { return "upper"; }
    };
    return std::visit(Visitor{}, r);
}

bool contains(const AdmissiblePRange& r, double p) noexcept {
    if (!(p > 0.0)) return false;
    struct Visitor {
        double p;
        bool operator()(const p_range::Empty&) const { return false; }
        bool operator()(const p_range::Bounded& b) const { return p >= b.lower && p <= b.upper; }
        bool operator()(const p_range::LowerBoundedUnbounded& b) const { return p >= b.lower; }
        bool operator()(const p_range::UpperBounded& b) const { return p <= b.upper; }
    };
    return std::visit(Visitor{p}, r);
}

AdmissiblePRange admissible_p(std::size_t n, std::size_t w, std::size_t m) {
    BandNetworkSpec{n, w, 1.0}.validate();
    if (m >= n) throw Error("twist number m must satisfy 0 <= m < n");

    // lambda_k <= 0  <=>  p (S_N - 2 S_W) <= 2 S_W, one linear constraint on p per k.
    const double zero = 1e-12 * static_cast<double>(n);
    constexpr double inf = std::numeric_limits<double>::infinity();
    double lower = 0.0;
    double upper = inf;
    for (std::size_t k = 0; k < n; ++k) {
        double sw = s_sum(w, m, k, n);
        if (std::abs(sw) <= zero) sw = 0.0;
        double slope = s_full(m, k, n) - 2.0 * sw;
        if (std::abs(slope) <= zero) slope = 0.0;
        const double rhs = 2.0 * sw;
        if (slope > 0.0) {
            if (rhs <= 0.0) return p_range::Empty{};
            upper = std::min(upper, rhs / slope);
        } else if (slope < 0.0) {
            if (rhs < 0.0) lower = std::max(lower, rhs / slope);
        } else if (rhs < 0.0) {
            return p_range::Empty{};
        }
    }
    if (lower > upper) return p_range::Empty{};
    if (std::isinf(upper)) return p_range::LowerBoundedUnbounded{lower};
    if (lower > 0.0) return p_range::Bounded{lower, upper};
    return p_range::UpperBounded{upper};
}

std::string describe(const StabilityVerdict& v) {
    struct Visitor {
        std::string operator()(const verdict::Stable&) const { return "Stable"; }
        std::string operator()(const verdict::Unstable& u) const {
            return "Unstable(" + std::to_string(u.positive_modes) + ")";
        }
        std::string operator()(const verdict::Marginal& m) const {
            return "Marginal(" + std::to_string(m.zero_modes) + ")";
        }
    };
    return std::visit(Visitor{}, v);
}

StabilityVerdict stability_verdict(std::span<const double> lambdas, double tol_marginal) {
    if (lambdas.empty()) throw Error("missing rotation mode");
    const auto rotation = std::min_element(lambdas.begin(), lambdas.end(), [](double x, double y) {
        return std::abs(x) < std::abs(y);
    });
    if (std::abs(*rotation) >= tol_marginal) throw Error("missing rotation mode");

    std::size_t positive = 0;
    std::size_t near_zero = 0;
    for (auto it = lambdas.begin(); it != lambdas.end(); ++it) {
        if (it == rotation) continue;
        if (*it > tol_marginal) ++positive;
        else if (*it >= -tol_marginal) ++near_zero;
    }
    if (positive > 0) return verdict::Unstable{positive};
    if (near_zero > 0) return verdict::Marginal{near_zero};
    return verdict::Stable{};
}

SyncRegion complete_sync_region(const BlockNetworkSpec& spec) {
    spec.validate();
    const auto n = static_cast<double>(spec.node_count());
    const double a = spec.a;
    const double b = spec.b;
    if (spec.group_count() == 1) {
        if (spec.group_sizes[0] < 2 || a > 0.0) return SyncRegion::stable;
        return a < 0.0 ? SyncRegion::unstable : SyncRegion::boundary;
    }
    if (b < 0.0) return SyncRegion::unstable;
    if (b == 0.0) return SyncRegion::boundary;

    std::size_t largest = 0;  // largest group that carries an intra-group mode
    for (std::size_t g : spec.group_sizes)
        if (g >= 2) largest = std::max(largest, g);
    if (largest == 0 || a >= 0.0) return SyncRegion::stable;

    const double proportion = static_cast<double>(largest) / n;
    const double critical = b / (b - a);
    if (proportion < critical) return SyncRegion::stable;
    if (proportion > critical) return SyncRegion::unstable;
    return SyncRegion::boundary;
}

}  // namespace kuramoto_signed
