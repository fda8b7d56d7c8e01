#pragma once

#include "slant4/minkowski.hpp"

#include <array>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace slant4 {

/// Value of a scalar function together with its first two derivatives.
struct Jet {
    double v = 0.0;
    double d1 = 0.0;
    double d2 = 0.0;

    friend constexpr Jet operator+(const Jet& a, const Jet& b) { return {a.v + b.v, a.d1 + b.d1, a.d2 + b.d2}; }
    friend constexpr Jet operator-(const Jet& a, const Jet& b) { return {a.v - b.v, a.d1 - b.d1, a.d2 - b.d2}; }
    friend constexpr Jet operator*(double s, const Jet& a) { return {s * a.v, s * a.d1, s * a.d2}; }
    friend constexpr Jet operator*(const Jet& a, const Jet& b) {
        return {a.v * b.v, a.d1 * b.v + a.v * b.d1, a.d2 * b.v + 2.0 * a.d1 * b.d1 + a.v * b.d2};
    }
    friend constexpr Jet operator/(const Jet& a, const Jet& b) {
        const double q = a.v / b.v;
        const double q1 = (a.d1 - q * b.d1) / b.v;
        const double q2 = (a.d2 - 2.0 * q1 * b.d1 - q * b.d2) / b.v;
        return {q, q1, q2};
    }
};

/// A smooth real function of arclength that can report its first two derivatives.
class ScalarField {
public:
    using Fn = std::function<Jet(double)>;

    ScalarField(Fn fn, std::string description) : fn_(std::move(fn)), description_(std::move(description)) {}

    static ScalarField constant(double c);
    /// a + b s
    static ScalarField linear(double a, double b);
    /// Derivatives by 5-point central differences of a value-only function.
    static ScalarField from_values(std::function<double(double)> f, double h = 1e-3, std::string description = "custom");
    /// Parses "const:<v>" or "linear:<a>,<b>". Throws Error{ParseError}.
    static ScalarField parse(std::string_view text);

    Jet operator()(double s) const { return fn_(s); }
    double value(double s) const { return fn_(s).v; }
    const std::string& description() const { return description_; }

private:
    Fn fn_;
    std::string description_;
};

namespace fd {

/// Derivatives of orders 1..4 from five samples f(s-2h), ..., f(s+2h).
/// Orders 1-2 are fourth-order accurate, orders 3-4 second-order.
template <class V>
std::array<V, 4> central_5pt(const std::array<V, 5>& f, double h) {
    const double h2 = h * h;
    return {
        (f[0] - 8.0 * f[1] + 8.0 * f[3] - f[4]) / (12.0 * h),
        (-1.0 * f[0] + 16.0 * f[1] - 30.0 * f[2] + 16.0 * f[3] - f[4]) / (12.0 * h2),
        (-1.0 * f[0] + 2.0 * f[1] - 2.0 * f[3] + f[4]) / (2.0 * h2 * h),
        (f[0] - 4.0 * f[1] + 6.0 * f[2] - 4.0 * f[3] + f[4]) / (h2 * h2),
    };
}

/// Fornberg weights: w[m][j] approximates the m-th derivative at x0 from samples at nodes[j].
std::vector<std::vector<double>> fornberg_weights(std::span<const double> nodes, double x0, int max_order);

/// Index of the first node of a window of `width` consecutive nodes centred on x (clamped to the array).
std::size_t window_start(std::span<const double> nodes, double x, std::size_t width);

/// First derivative at every node of samples y(s) using 5-point windows (centred in the interior,
/// shifted at the ends). Fourth order on uniform grids.
std::vector<double> derivative_on_nodes(std::span<const double> s, std::span<const double> y);

/// Cumulative integral from s[0] to each node; each interval is integrated exactly for the cubic
/// through the four surrounding nodes.
std::vector<double> cumulative_integral(std::span<const double> s, std::span<const double> y);

/// Interpolates y at x with a Lagrange polynomial through `width` nodes around x.
double interpolate(std::span<const double> s, std::span<const double> y, double x, std::size_t width = 5);

} // namespace fd

/// Composite Simpson integral of f over [a, b] using at least `min_panels` panels of width <= max_width.
double simpson(const std::function<double(double)>& f, double a, double b, double max_width = 1e-3);

/// Cached running integral of a function from `a`: panel values by Simpson, remainders by Simpson.
class CumulativeSimpson {
public:
    CumulativeSimpson(std::function<double(double)> f, double a, double b, double panel = 1e-3);

    /// Integral of f from a to s, for s in [a, b].
    double operator()(double s) const;

    double lower() const { return a_; }
    double upper() const { return b_; }

private:
    std::function<double(double)> f_;
    double a_;
    double b_;
    double panel_;
    std::vector<double> running_;
};

/// Least-squares polynomial fit of Vec4 samples on a sliding window; derivatives of the fitted
/// polynomial are returned exactly.
class LocalPolynomial {
public:
    LocalPolynomial(std::vector<double> s, std::vector<Vec4> points, int degree = 6, std::size_t window = 41);

    /// Value and derivatives of orders 1..max_order at s (entry 0 is the value).
    std::vector<Vec4> evaluate(double s, int max_order) const;

private:
    std::vector<double> s_;
    std::vector<Vec4> points_;
    int degree_;
    std::size_t window_;
};

} // namespace slant4
