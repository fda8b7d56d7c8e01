#pragma once

#include "slant4/minkowski.hpp"
#include "slant4/numerics.hpp"

#include <filesystem>
#include <functional>
#include <memory>
#include <span>
#include <string_view>
#include <vector>

namespace slant4 {

inline constexpr double kDefaultFdStep = 1e-3;
inline constexpr double kUnitSpeedTolAnalytic = 1e-6;
inline constexpr double kUnitSpeedTolSampled = 1e-3;
inline constexpr std::size_t kDefaultFitWindow = 121;
inline constexpr int kDefaultFitDegree = 8;
inline constexpr std::size_t kMinSamples = 9;

/// Tabulated curve: strictly increasing parameter values and the matching points.
struct SampledCurve {
    std::vector<double> s;
    std::vector<Vec4> points;

    /// Throws NonMonotoneParameter, TooFewSamples or InvalidArgument.
    void validate() const;
};

enum class DerivativeMode { Analytic, FiniteDifference, LocalPolynomial };

/// A curve s -> x(s) on a closed parameter interval. Immutable once built.
class Curve {
public:
    using Evaluator = std::function<Vec4(double)>;
    /// Returns x^(order)(s) for order in 1..4.
    using AnalyticDerivative = std::function<Vec4(double, int)>;

    static Curve analytic(double s_min, double s_max, Evaluator x, AnalyticDerivative dx);
    static Curve finite_difference(double s_min, double s_max, Evaluator x, double h = kDefaultFdStep);
    /// Local least-squares polynomial of the given degree over `window` samples around each query.
    static Curve from_samples(SampledCurve samples, std::size_t window = kDefaultFitWindow, int degree = kDefaultFitDegree);

    double s_min() const { return s_min_; }
    double s_max() const { return s_max_; }
    DerivativeMode mode() const { return mode_; }
    double fd_step() const { return h_; }

    /// Throws OutOfDomain.
    Vec4 evaluate(double s) const;

    /// x', x'', ..., up to max_order (<= 4). Throws OutOfDomain, StencilOutOfRange.
    std::vector<Vec4> derivatives(double s, int max_order = 4) const;

private:
    Curve(double s_min, double s_max, DerivativeMode mode) : s_min_(s_min), s_max_(s_max), mode_(mode) {}
    void require_in_domain(double s) const;

    double s_min_;
    double s_max_;
    DerivativeMode mode_;
    double h_ = 0.0;
    Evaluator x_;
    AnalyticDerivative dx_;
    std::shared_ptr<const LocalPolynomial> poly_;
};

/// x(s) = (a sinh s, a cosh s, b cos s, b sin s); unit speed iff b^2 - a^2 = 1.
Curve hyperbolic_circular(double a, double b, double s_min = 0.0, double s_max = 10.0);

/// x(s) = origin + s * direction.
Curve line(const Vec4& origin, const Vec4& direction, double s_min = 0.0, double s_max = 10.0);

/// Factory by name: "hyperbolic_circular" with params {a, b}; "line" with params {} or the
/// four direction components. hyperbolic_circular rejects b^2 - a^2 != 1 with NotUnitSpeed.
Curve builtin_family(std::string_view name, std::span<const double> params, double s_min = 0.0, double s_max = 10.0);

struct UnitSpeedReport {
    double max_deviation = 0.0;
    bool pass = false;
};

UnitSpeedReport check_unit_speed(const Curve& curve, std::span<const double> grid, double tol = kUnitSpeedTolAnalytic);

/// Reads `s,x1,x2,x3,x4[,...]` with a header row. Extra trailing columns are ignored.
SampledCurve load_curve_csv(const std::filesystem::path& path);
SampledCurve parse_curve_csv(std::string_view text);

/// Uniform grid of n points on [a, b].
std::vector<double> uniform_grid(double a, double b, std::size_t n);

} // namespace slant4
