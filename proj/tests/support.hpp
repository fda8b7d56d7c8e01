#pragma once

// Test-only oracles and generators. Nothing here calls into the frame or slant code paths
// it is used to check.

#include "slant4/generator.hpp"
#include "slant4/minkowski.hpp"
#include "slant4/numerics.hpp"

#include <Eigen/Dense>
#include <unsupported/Eigen/MatrixFunctions>

#include <array>
#include <cmath>
#include <random>
#include <vector>

namespace slant4::testing {

inline Eigen::Matrix4d metric() { return Eigen::Vector4d(-1, 1, 1, 1).asDiagonal(); }

inline Eigen::Vector4d to_eigen(const Vec4& v) { return {v[0], v[1], v[2], v[3]}; }

/// Pivots of the LDL^T factorization of the Lorentzian Gram matrix of (x', x'', x''', x'''').
/// For a Frenet curve they are 1, eps1 k1^2, -eps1 eps2 (k1 k2)^2, eps2 (k1 k2 k3)^2.
inline std::array<double, 4> gram_pivots(const std::array<Vec4, 4>& d) {
    Eigen::Matrix4d g;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) g(i, j) = -d[i][0] * d[j][0] + d[i][1] * d[j][1] + d[i][2] * d[j][2] + d[i][3] * d[j][3];
    std::array<double, 4> piv{};
    Eigen::Matrix4d l = Eigen::Matrix4d::Identity();
    for (int j = 0; j < 4; ++j) {
        double dj = g(j, j);
        for (int k = 0; k < j; ++k) dj -= l(j, k) * l(j, k) * piv[k];
        piv[j] = dj;
        for (int i = j + 1; i < 4; ++i) {
            double v = g(i, j);
            for (int k = 0; k < j; ++k) v -= l(i, k) * l(j, k) * piv[k];
            l(i, j) = v / dj;
        }
    }
    return piv;
}

struct OracleCurvatures {
    double k1, k2, k3;
    int eps1, eps2;
};

inline OracleCurvatures oracle_curvatures(const std::array<Vec4, 4>& d) {
    const auto p = gram_pivots(d);
    const double k1 = std::sqrt(std::abs(p[1]));
    const double k2 = std::sqrt(std::abs(p[2])) / k1;
    const double k3 = std::sqrt(std::abs(p[3])) / (k1 * k2);
    return {k1, k2, k3, p[1] > 0 ? 1 : -1, p[3] > 0 ? 1 : -1};
}

/// Exact frame for constant curvatures: rows T, N, B1, B2 evolve by exp(s A).
inline Eigen::Matrix4d constant_curvature_frames(double k1, double k2, double k3, Signature sig, const Eigen::Matrix4d& rows0, double s) {
    const double e1 = sig.eps1;
    const double e2 = sig.eps2;
    Eigen::Matrix4d a;
    a << 0, k1, 0, 0, -e1 * k1, 0, k2, 0, 0, e2 * k2, 0, k3, 0, 0, e1 * k3, 0;
    return (s * a).exp() * rows0;
}

/// Smallest relative residual min_U RMS(<B2,U> - mean) / RMS(<B2,U>) over nonzero U.
inline double best_constant_axis_residual(const std::vector<Vec4>& b2) {
    const auto n = static_cast<double>(b2.size());
    Eigen::Vector4d mean = Eigen::Vector4d::Zero();
    std::vector<Eigen::Vector4d> rows;
    for (const auto& v : b2) {
        rows.push_back(metric() * to_eigen(v));
        mean += rows.back();
    }
    mean /= n;
    Eigen::Matrix4d cov = Eigen::Matrix4d::Zero();
    Eigen::Matrix4d second = Eigen::Matrix4d::Zero();
    for (const auto& r : rows) {
        cov += (r - mean) * (r - mean).transpose() / n;
        second += r * r.transpose() / n;
    }
    Eigen::GeneralizedSelfAdjointEigenSolver<Eigen::Matrix4d> solver(cov, second);
    return std::sqrt(std::max(0.0, solver.eigenvalues()(0)));
}

inline ScalarField cos_field() {
    return {[](double s) { return Jet{std::cos(s), -std::sin(s), -std::cos(s)}; }, "cos"};
}
inline ScalarField cosh_field() {
    return {[](double s) { return Jet{std::cosh(s), std::sinh(s), std::cosh(s)}; }, "cosh"};
}
inline ScalarField exp_field(double scale = 1.0) {
    return {[scale](double s) {
                const double e = scale * std::exp(s);
                return Jet{e, e, e};
            },
            "exp"};
}
inline ScalarField square_field() {
    return {[](double s) { return Jet{s * s, 2 * s, 2}; }, "s^2"};
}

/// Slant profiles k3/k2 = C eta(phi) + D mu(phi) with C, D in [-2, 2], k1 and k2 constant or linear, and a range on
/// which C eta + D mu stays above 0.05.
inline SlantSpec random_slant_spec(std::mt19937_64& rng, int eps1, int eps2) {
    std::uniform_real_distribution<double> cd(-2.0, 2.0);
    std::uniform_real_distribution<double> level(0.5, 2.0);
    std::uniform_real_distribution<double> slope(-0.3, 0.3);
    std::bernoulli_distribution linear(0.5);
    SlantSpec spec;
    spec.sig = {eps1, eps2};
    spec.s_min = 0.0;
    while (true) {
        spec.C = cd(rng);
        spec.D = cd(rng);
        if (spec.C < 0.1) continue;
        spec.k1 = linear(rng) ? ScalarField::linear(level(rng), slope(rng)) : ScalarField::constant(level(rng));
        spec.k2 = linear(rng) ? ScalarField::linear(level(rng), slope(rng)) : ScalarField::constant(level(rng));
        // Walk forward while the ratio stays above 0.05, at most to s = 1.5.
        double s = 0.0;
        double p = 0.0;
        const double h = 1e-3;
        while (s < 1.5) {
            const double pn = p + h * spec.k1.value(s);
            const double r = eps1 > 0 ? spec.C * std::cos(pn) + spec.D * std::sin(pn) : spec.C * std::cosh(pn) + spec.D * std::sinh(pn);
            if (r < 0.05) break;
            s += h;
            p = pn;
        }
        if (s < 0.35) continue;
        spec.s_max = std::floor(s * 100.0) / 100.0 - 0.05;
        return spec;
    }
}

} // namespace slant4::testing
