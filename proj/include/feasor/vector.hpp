#pragma once

#include <cmath>
#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "feasor/errors.hpp"

namespace feasor {

/// Dense coordinate vector of a finite-dimensional inner-product space.
using Vector = std::vector<double>;

inline bool is_finite(const Vector& x) {
    for (double v : x) {
        if (!std::isfinite(v)) return false;
    }
    return true;
}

inline void check_same_dim(const Vector& x, const Vector& y, const char* where) {
    if (x.size() != y.size()) {
        throw DimensionError(std::string(where) + ": dimension mismatch (" +
                             std::to_string(x.size()) + " vs " + std::to_string(y.size()) + ")");
    }
}

inline Vector add(const Vector& x, const Vector& y) {
    check_same_dim(x, y, "add");
    Vector z(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) z[i] = x[i] + y[i];
    return z;
}

inline Vector sub(const Vector& x, const Vector& y) {
    check_same_dim(x, y, "sub");
    Vector z(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) z[i] = x[i] - y[i];
    return z;
}

inline Vector scale(double a, const Vector& x) {
    Vector z(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) z[i] = a * x[i];
    return z;
}

/// a*x + b*y
inline Vector lin(double a, const Vector& x, double b, const Vector& y) {
    check_same_dim(x, y, "lin");
    Vector z(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) z[i] = a * x[i] + b * y[i];
    return z;
}

/// Inner product of the ambient space, optionally weighted by strictly
/// positive coordinate weights. With no weights this is the standard dot
/// product; the weighted form hosts quadrature-discretized L2 spaces.
class InnerProduct {
public:
    InnerProduct() = default;

    explicit InnerProduct(Vector weights) : weights_(std::move(weights)) {
        for (double w : *weights_) {
            if (!(w > 0.0) || !std::isfinite(w)) {
                throw InvalidSetError("InnerProduct: weights must be strictly positive and finite");
            }
        }
    }

    bool weighted() const { return weights_.has_value(); }

    const Vector* weights() const { return weights_ ? &*weights_ : nullptr; }

    double dot(const Vector& x, const Vector& y) const {
        check_same_dim(x, y, "inner");
        if (weights_ && weights_->size() != x.size()) {
            throw DimensionError("inner: weight length does not match vector dimension");
        }
        double s = 0.0;
        if (weights_) {
            for (std::size_t i = 0; i < x.size(); ++i) s += (*weights_)[i] * x[i] * y[i];
        } else {
            for (std::size_t i = 0; i < x.size(); ++i) s += x[i] * y[i];
        }
        return s;
    }

    double norm(const Vector& x) const { return std::sqrt(dot(x, x)); }

    double dist(const Vector& x, const Vector& y) const { return norm(sub(x, y)); }

    /// Inner product of the r-fold product space: the same weights on each block.
    InnerProduct tiled(std::size_t r) const {
        if (!weights_) return InnerProduct{};
        Vector w;
        w.reserve(weights_->size() * r);
        for (std::size_t i = 0; i < r; ++i) w.insert(w.end(), weights_->begin(), weights_->end());
        return InnerProduct(std::move(w));
    }

private:
    std::optional<Vector> weights_;
};

inline double inner(const Vector& x, const Vector& y, const InnerProduct& ip = {}) {
    return ip.dot(x, y);
}

}  // namespace feasor
