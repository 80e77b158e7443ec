#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace sectorcast {

// Dense row-major matrix of doubles. Kept deliberately small: the network
// code needs storage plus a couple of access helpers, nothing more.
struct Matrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<double> a;

    Matrix() = default;
    Matrix(std::size_t r, std::size_t c, double fill = 0.0) : rows(r), cols(c), a(r * c, fill) {}

    double& operator()(std::size_t r, std::size_t c) { return a[r * cols + c]; }
    double operator()(std::size_t r, std::size_t c) const { return a[r * cols + c]; }

    std::span<double> row(std::size_t r) { return {a.data() + r * cols, cols}; }
    std::span<const double> row(std::size_t r) const { return {a.data() + r * cols, cols}; }

    bool same_shape(const Matrix& o) const { return rows == o.rows && cols == o.cols; }
    bool operator==(const Matrix&) const = default;
};

// Sample-major rank-3 tensor: (n samples, steps, width).
struct Tensor3 {
    std::size_t n = 0;
    std::size_t steps = 0;
    std::size_t width = 0;
    std::vector<double> a;

    Tensor3() = default;
    Tensor3(std::size_t n_, std::size_t steps_, std::size_t width_, double fill = 0.0)
        : n(n_), steps(steps_), width(width_), a(n_ * steps_ * width_, fill) {}

    double& at(std::size_t i, std::size_t t, std::size_t f) {
        return a[(i * steps + t) * width + f];
    }
    double at(std::size_t i, std::size_t t, std::size_t f) const {
        return a[(i * steps + t) * width + f];
    }

    std::span<double> step(std::size_t i, std::size_t t) {
        return {a.data() + (i * steps + t) * width, width};
    }
    std::span<const double> step(std::size_t i, std::size_t t) const {
        return {a.data() + (i * steps + t) * width, width};
    }

    bool operator==(const Tensor3&) const = default;
};

}  // namespace sectorcast
