#pragma once

#include <array>
#include <cmath>
#include <cstddef>

namespace lis {

/// Dense 3x3 matrix with just the operations the bound computations need.
struct Mat3 {
    std::array<std::array<double, 3>, 3> m{};

    double& operator()(std::size_t i, std::size_t k) { return m[i][k]; }
    double operator()(std::size_t i, std::size_t k) const { return m[i][k]; }

    static Mat3 identity() {
        Mat3 r;
        r(0, 0) = r(1, 1) = r(2, 2) = 1.0;
        return r;
    }

    static Mat3 diagonal(double a, double b, double c) {
        Mat3 r;
        r(0, 0) = a;
        r(1, 1) = b;
        r(2, 2) = c;
        return r;
    }

    double trace() const { return m[0][0] + m[1][1] + m[2][2]; }

    double max_abs() const {
        double v = 0.0;
        for (const auto& row : m)
            for (double x : row) v = std::max(v, std::abs(x));
        return v;
    }

    Mat3 transposed() const {
        Mat3 r;
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t k = 0; k < 3; ++k) r(i, k) = m[k][i];
        return r;
    }

    Mat3 operator+(const Mat3& o) const {
        Mat3 r;
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t k = 0; k < 3; ++k) r(i, k) = m[i][k] + o(i, k);
        return r;
    }

    Mat3 operator*(const Mat3& o) const {
        Mat3 r;
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t k = 0; k < 3; ++k)
                r(i, k) = m[i][0] * o(0, k) + m[i][1] * o(1, k) + m[i][2] * o(2, k);
        return r;
    }

    Mat3 scaled(double s) const {
        Mat3 r;
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t k = 0; k < 3; ++k) r(i, k) = s * m[i][k];
        return r;
    }

    double det() const {
        return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
               m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
               m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
    }

    /// Adjugate divided by determinant. Caller checks conditioning.
    Mat3 inverse() const {
        const double d = det();
        Mat3 r;
        r(0, 0) = (m[1][1] * m[2][2] - m[1][2] * m[2][1]) / d;
        r(0, 1) = (m[0][2] * m[2][1] - m[0][1] * m[2][2]) / d;
        r(0, 2) = (m[0][1] * m[1][2] - m[0][2] * m[1][1]) / d;
        r(1, 0) = (m[1][2] * m[2][0] - m[1][0] * m[2][2]) / d;
        r(1, 1) = (m[0][0] * m[2][2] - m[0][2] * m[2][0]) / d;
        r(1, 2) = (m[0][2] * m[1][0] - m[0][0] * m[1][2]) / d;
        r(2, 0) = (m[1][0] * m[2][1] - m[1][1] * m[2][0]) / d;
        r(2, 1) = (m[0][1] * m[2][0] - m[0][0] * m[2][1]) / d;
        r(2, 2) = (m[0][0] * m[1][1] - m[0][1] * m[1][0]) / d;
        return r;
    }
};

/// Eigenvalues of a symmetric 3x3 matrix, ascending. Uses the trigonometric
/// closed form for the characteristic cubic.
inline std::array<double, 3> symmetric_eigenvalues(const Mat3& a) {
    const double p1 = a(0, 1) * a(0, 1) + a(0, 2) * a(0, 2) + a(1, 2) * a(1, 2);
    const double q = a.trace() / 3.0;
    if (p1 == 0.0) {
        std::array<double, 3> ev{a(0, 0), a(1, 1), a(2, 2)};
        if (ev[0] > ev[1]) std::swap(ev[0], ev[1]);
        if (ev[1] > ev[2]) std::swap(ev[1], ev[2]);
        if (ev[0] > ev[1]) std::swap(ev[0], ev[1]);
        return ev;
    }
    const double p2 = (a(0, 0) - q) * (a(0, 0) - q) + (a(1, 1) - q) * (a(1, 1) - q) +
                      (a(2, 2) - q) * (a(2, 2) - q) + 2.0 * p1;
    const double p = std::sqrt(p2 / 6.0);
    Mat3 b;
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t k = 0; k < 3; ++k)
            b(i, k) = (a(i, k) - (i == k ? q : 0.0)) / p;
    double r = b.det() / 2.0;
    r = std::clamp(r, -1.0, 1.0);
    const double phi = std::acos(r) / 3.0;
    const double pi = 3.14159265358979323846;
    const double e1 = q + 2.0 * p * std::cos(phi);
    const double e3 = q + 2.0 * p * std::cos(phi + 2.0 * pi / 3.0);
    const double e2 = 3.0 * q - e1 - e3;
    return {e3, e2, e1};
}

}  // namespace lis
