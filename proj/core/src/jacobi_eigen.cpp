#include <algorithm>
#include <cmath>
#include <string>

#include "kuramoto_signed/spectral.hpp"

namespace kuramoto_signed {

namespace {

constexpr std::size_t kMaxOrder = 512;
constexpr int kMaxSweeps = 64;

double off_diagonal_norm2(const SquareMatrix& a) {
    double s = 0.0;
    const std::size_t n = a.size();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) s += a(i, j) * a(i, j);
    return s;
}

}  // namespace

std::vector<double> numeric_spectrum(const SquareMatrix& matrix) {
    const std::size_t n = matrix.size();
    if (n == 0) return {};
    if (n > kMaxOrder) throw Error("numeric_spectrum supports at most 512x512 matrices");
    const double scale = std::max(1.0, matrix.max_abs());
    if (matrix.asymmetry() > 1e-12 * scale) throw Error("asymmetric input");

    // Work on the symmetrized copy so tiny asymmetries do not bias the rotations.
    SquareMatrix a(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) a(i, j) = 0.5 * (matrix(i, j) + matrix(j, i));

    double frob2 = 0.0;
    for (double v : a.data()) frob2 += v * v;
    const double stop = 1e-30 * std::max(frob2, 1e-300);

    for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
        if (off_diagonal_norm2(a) <= stop) break;
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const double apq = a(p, q);
                const double app = a(p, p);
                const double aqq = a(q, q);
                if (std::abs(apq) <= 1e-18 * (std::abs(app) + std::abs(aqq))) {
                    a(p, q) = 0.0;
                    a(q, p) = 0.0;
                    continue;
                }
                // rotation angle from cot(2 phi) = (a_qq - a_pp) / (2 a_pq)
                const double theta = (aqq - app) / (2.0 * apq);
                const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                                 (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                const double tau = s / (1.0 + c);

                a(p, p) = app - t * apq;
                a(q, q) = aqq + t * apq;
                a(p, q) = 0.0;
                a(q, p) = 0.0;
                for (std::size_t r = 0; r < n; ++r) {
                    if (r == p || r == q) continue;
                    const double arp = a(r, p);
                    const double arq = a(r, q);
                    const double new_rp = arp - s * (arq + tau * arp);
                    const double new_rq = arq + s * (arp - tau * arq);
                    a(r, p) = new_rp;
                    a(p, r) = new_rp;
                    a(r, q) = new_rq;
                    a(q, r) = new_rq;
                }
            }
        }
    }

    std::vector<double> values(n);
    for (std::size_t i = 0; i < n; ++i) values[i] = a(i, i);
    std::sort(values.begin(), values.end());
    return values;
}

}  // namespace kuramoto_signed
