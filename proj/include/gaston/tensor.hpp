#pragma once

#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

#include "gaston/errors.hpp"
#include "gaston/rng.hpp"

namespace gaston {

// Dense row-major matrix of doubles. Training and gradient checks run in
// 64-bit; persisted embeddings are converted to 32-bit at the file boundary.
struct Tensor {
    int rows = 0;
    int cols = 0;
    std::vector<double> data;

    Tensor() = default;
    Tensor(int r, int c) : rows(r), cols(c), data(static_cast<std::size_t>(r) * c, 0.0) {
        if (r < 0 || c < 0) throw ArgumentError("tensor dimensions must be non-negative");
    }

    double& at(int r, int c) { return data[static_cast<std::size_t>(r) * cols + c]; }
    double at(int r, int c) const { return data[static_cast<std::size_t>(r) * cols + c]; }

    double* row(int r) { return data.data() + static_cast<std::size_t>(r) * cols; }
    const double* row(int r) const { return data.data() + static_cast<std::size_t>(r) * cols; }

    std::size_t size() const { return data.size(); }

    bool same_shape(const Tensor& other) const {
        return rows == other.rows && cols == other.cols;
    }

    void fill(double v) { std::fill(data.begin(), data.end(), v); }

    bool all_finite() const {
        for (double v : data) {
            if (!std::isfinite(v)) return false;
        }
        return true;
    }

    static Tensor randn(int r, int c, double stddev, Rng& rng) {
        Tensor t(r, c);
        for (double& v : t.data) v = rng.normal(0.0, stddev);
        return t;
    }
};

inline void require_same_shape(const Tensor& a, const Tensor& b, const std::string& what) {
    if (!a.same_shape(b)) {
        throw ArgumentError(what + ": shape mismatch (" + std::to_string(a.rows) + "x" +
                            std::to_string(a.cols) + " vs " + std::to_string(b.rows) + "x" +
                            std::to_string(b.cols) + ")");
    }
}

inline double dot(const double* a, const double* b, int n) {
    double s = 0.0;
    for (int i = 0; i < n; ++i) s += a[i] * b[i];
    return s;
}

// y = W * x for W (m x n), x (n), y (m).
inline void matvec(const Tensor& w, const double* x, double* y) {
    for (int r = 0; r < w.rows; ++r) y[r] = dot(w.row(r), x, w.cols);
}

inline double squared_norm(const double* a, int n) { return dot(a, a, n); }

inline double cosine(const double* a, const double* b, int n) {
    const double na = std::sqrt(squared_norm(a, n));
    const double nb = std::sqrt(squared_norm(b, n));
    if (na == 0.0 || nb == 0.0) return 0.0;
    return dot(a, b, n) / (na * nb);
}

// Numerically stable log(1 + exp(x)).
inline double softplus(double x) {
    if (x > 0.0) return x + std::log1p(std::exp(-x));
    return std::log1p(std::exp(x));
}

inline double sigmoid(double x) {
    if (x >= 0.0) {
        const double z = std::exp(-x);
        return 1.0 / (1.0 + z);
    }
    const double z = std::exp(x);
    return z / (1.0 + z);
}

}  // namespace gaston
