#pragma once

#include <algorithm>
#include <cassert>
#include <cmath>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "kuramoto_signed/error.hpp"

namespace kuramoto_signed {

/// Dense row-major N x N matrix of doubles.
class SquareMatrix {
public:
    SquareMatrix() = default;
    explicit SquareMatrix(std::size_t n, double fill = 0.0) : n_(n), data_(n * n, fill) {}

    SquareMatrix(std::initializer_list<std::initializer_list<double>> rows) : n_(rows.size()) {
        data_.reserve(n_ * n_);
        for (const auto& row : rows) {
            if (row.size() != n_) {
                throw Error("matrix rows must all have length " + std::to_string(n_));
            }
            data_.insert(data_.end(), row.begin(), row.end());
        }
    }

    [[nodiscard]] static SquareMatrix identity(std::size_t n) {
        SquareMatrix m(n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
        return m;
    }

    [[nodiscard]] std::size_t size() const noexcept { return n_; }

    double& operator()(std::size_t i, std::size_t j) {
        assert(i < n_ && j < n_);
        return data_[i * n_ + j];
    }
    double operator()(std::size_t i, std::size_t j) const {
        assert(i < n_ && j < n_);
        return data_[i * n_ + j];
    }

    [[nodiscard]] std::span<double> row(std::size_t i) { return {data_.data() + i * n_, n_}; }
    [[nodiscard]] std::span<const double> row(std::size_t i) const {
        return {data_.data() + i * n_, n_};
    }

    [[nodiscard]] std::span<double> data() noexcept { return data_; }
    [[nodiscard]] std::span<const double> data() const noexcept { return data_; }

    [[nodiscard]] double max_abs() const noexcept {
        double m = 0.0;
        for (double v : data_) m = std::max(m, std::abs(v));
        return m;
    }

    [[nodiscard]] double min_entry() const { return *std::min_element(data_.begin(), data_.end()); }
    [[nodiscard]] double max_entry() const { return *std::max_element(data_.begin(), data_.end()); }

    [[nodiscard]] SquareMatrix transposed() const {
        SquareMatrix t(n_);
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = 0; j < n_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    /// Largest |M_ij - M_ji|.
    [[nodiscard]] double asymmetry() const noexcept {
        double m = 0.0;
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = i + 1; j < n_; ++j)
                m = std::max(m, std::abs((*this)(i, j) - (*this)(j, i)));
        return m;
    }

    SquareMatrix& operator*=(double s) {
        for (double& v : data_) v *= s;
        return *this;
    }

    friend SquareMatrix operator*(double s, SquareMatrix m) { return m *= s; }

    friend bool operator==(const SquareMatrix&, const SquareMatrix&) = default;

private:
    std::size_t n_ = 0;
    std::vector<double> data_;
};

/// Coupling weights kappa_ij between oscillators.
using CouplingMatrix = SquareMatrix;

/// L = D - M with D_ii = sum_j M_ij (self-weights cancel).
[[nodiscard]] inline SquareMatrix laplacian(const SquareMatrix& m) {
    const std::size_t n = m.size();
    SquareMatrix l(n);
    for (std::size_t i = 0; i < n; ++i) {
        double degree = 0.0;
        for (std::size_t j = 0; j < n; ++j) {
            if (j != i) {
                degree += m(i, j);
                l(i, j) = -m(i, j);
            }
        }
        l(i, i) = degree;
    }
    return l;
}

}  // namespace kuramoto_signed
