#pragma once

#include <algorithm>
#include <cmath>
#include <vector>

#include "pdcrib/errors.hpp"

namespace pdcrib {

// Natural cubic spline on strictly increasing abscissae.
class CubicSpline {
public:
    CubicSpline() = default;

    CubicSpline(std::vector<double> x, std::vector<double> y)
        : x_(std::move(x)), y_(std::move(y)) {
        const size_t n = x_.size();
        if (n < 2 || y_.size() != n)
            throw ConfigError("CubicSpline: need >= 2 points with matching sizes");
        for (size_t i = 1; i < n; ++i)
            if (!(x_[i] > x_[i - 1]))
                throw NonMonotonicWavelengths("CubicSpline: abscissae must be strictly increasing");
        m_.assign(n, 0.0);
        if (n == 2) return;  // linear
        // tridiagonal solve for second derivatives, natural BCs
        std::vector<double> a(n, 0.0), b(n, 0.0), c(n, 0.0), r(n, 0.0);
        for (size_t i = 1; i + 1 < n; ++i) {
            const double h0 = x_[i] - x_[i - 1];
            const double h1 = x_[i + 1] - x_[i];
            a[i] = h0 / 6.0;
            b[i] = (h0 + h1) / 3.0;
            c[i] = h1 / 6.0;
            r[i] = (y_[i + 1] - y_[i]) / h1 - (y_[i] - y_[i - 1]) / h0;
        }
        for (size_t i = 2; i + 1 < n; ++i) {
            const double f = a[i] / b[i - 1];
            b[i] -= f * c[i - 1];
            r[i] -= f * r[i - 1];
        }
        for (size_t i = n - 2; i >= 1; --i) {
            m_[i] = (r[i] - c[i] * m_[i + 1]) / b[i];
            if (i == 1) break;
        }
    }

    double xmin() const { return x_.front(); }
    double xmax() const { return x_.back(); }

    double operator()(double x) const {
        const size_t i = segment(x);
        const double h = x_[i + 1] - x_[i];
        const double A = (x_[i + 1] - x) / h;
        const double B = (x - x_[i]) / h;
        return A * y_[i] + B * y_[i + 1] +
               ((A * A * A - A) * m_[i] + (B * B * B - B) * m_[i + 1]) * h * h / 6.0;
    }

    double derivative(double x) const {
        const size_t i = segment(x);
        const double h = x_[i + 1] - x_[i];
        const double A = (x_[i + 1] - x) / h;
        const double B = (x - x_[i]) / h;
        return (y_[i + 1] - y_[i]) / h +
               ((3.0 * B * B - 1.0) * m_[i + 1] - (3.0 * A * A - 1.0) * m_[i]) * h / 6.0;
    }

private:
    size_t segment(double x) const {
        if (x < x_.front() || x > x_.back())
            throw OutOfTableRange("CubicSpline: abscissa outside table range");
        auto it = std::upper_bound(x_.begin(), x_.end(), x);
        size_t i = static_cast<size_t>(it - x_.begin());
        if (i > 0) --i;
        if (i + 1 >= x_.size()) i = x_.size() - 2;
        return i;
    }

    std::vector<double> x_, y_, m_;
};

// Monotone cubic (Fritsch-Carlson) interpolant; exact at the nodes and free of
// overshoot, used for dispersion fallbacks.
class PchipSpline {
public:
    PchipSpline() = default;

    PchipSpline(std::vector<double> x, std::vector<double> y)
        : x_(std::move(x)), y_(std::move(y)) {
        const size_t n = x_.size();
        if (n < 2 || y_.size() != n)
            throw ConfigError("PchipSpline: need >= 2 points");
        for (size_t i = 1; i < n; ++i)
            if (!(x_[i] > x_[i - 1]))
                throw DegenerateAnchors("PchipSpline: abscissae must be strictly increasing");
        d_.assign(n, 0.0);
        std::vector<double> h(n - 1), del(n - 1);
        for (size_t i = 0; i + 1 < n; ++i) {
            h[i] = x_[i + 1] - x_[i];
            del[i] = (y_[i + 1] - y_[i]) / h[i];
        }
        if (n == 2) {
            d_[0] = d_[1] = del[0];
        } else {
            for (size_t i = 1; i + 1 < n; ++i) {
                if (del[i - 1] * del[i] <= 0.0) {
                    d_[i] = 0.0;
                } else {
                    const double w1 = 2.0 * h[i] + h[i - 1];
                    const double w2 = h[i] + 2.0 * h[i - 1];
                    d_[i] = (w1 + w2) / (w1 / del[i - 1] + w2 / del[i]);
                }
            }
            d_[0] = edge(h[0], h[1], del[0], del[1]);
            d_[n - 1] = edge(h[n - 2], h[n - 3], del[n - 2], del[n - 3]);
        }
    }

    double operator()(double x) const {
        size_t i = segment(x);
        const double h = x_[i + 1] - x_[i];
        const double t = (x - x_[i]) / h;
        const double t2 = t * t, t3 = t2 * t;
        const double h00 = 2 * t3 - 3 * t2 + 1, h10 = t3 - 2 * t2 + t;
        const double h01 = -2 * t3 + 3 * t2, h11 = t3 - t2;
        return h00 * y_[i] + h10 * h * d_[i] + h01 * y_[i + 1] + h11 * h * d_[i + 1];
    }

    double xmin() const { return x_.front(); }
    double xmax() const { return x_.back(); }

private:
    static double edge(double h0, double h1, double del0, double del1) {
        double d = ((2.0 * h0 + h1) * del0 - h0 * del1) / (h0 + h1);
        if (d * del0 <= 0.0) d = 0.0;
        else if (del0 * del1 < 0.0 && std::abs(d) > 3.0 * std::abs(del0)) d = 3.0 * del0;
        return d;
    }

    size_t segment(double x) const {
        if (x < x_.front() || x > x_.back())
            throw OutOfTableRange("PchipSpline: abscissa outside range");
        auto it = std::upper_bound(x_.begin(), x_.end(), x);
        size_t i = static_cast<size_t>(it - x_.begin());
        if (i > 0) --i;
        if (i + 1 >= x_.size()) i = x_.size() - 2;
        return i;
    }

    std::vector<double> x_, y_, d_;
};

}  // namespace pdcrib
