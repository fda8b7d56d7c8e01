#pragma once

#include "slant4/frenet.hpp"
#include "slant4/minkowski.hpp"
#include "slant4/profile.hpp"

#include <optional>
#include <span>
#include <vector>

namespace slant4 {

inline constexpr double kSlantTolAnalytic = 1e-6;
inline constexpr double kSlantTolSampled = 1e-3;

/// g = k3 / k2
double ratio_g(const CurvatureProfile& profile, double s);
double ratio_g_prime(const CurvatureProfile& profile, double s);

/// F = g^2 + eps1 (g'/k1)^2. Constant exactly on B2-slant helices with non-constant g.
double characteristic_F(const CurvatureProfile& profile, double s);

/// f = eps1 g' / k1
double slant_f(const CurvatureProfile& profile, double s);

struct SlantVerdict {
    bool is_slant = false;
    std::vector<double> F_samples;
    double F_mean = 0.0;
    double F_spread = 0.0;
    bool F_constant = false;
    /// max |f' + k1 g| over the grid
    double f_residual_max = 0.0;
    /// tol * max(1, max k1 |g|); is_slant requires f_residual_max below it
    double residual_threshold = 0.0;
    /// g' vanishes on the grid while g does not: F is constant but no fixed axis exists.
    bool degenerate_constant_ratio = false;
};

/// Decides the slant property from the residual of f' = -k1 g with f = eps1 g'/k1.
SlantVerdict check_slant(const CurvatureProfile& profile, std::span<const double> grid, double tol = kSlantTolAnalytic);

/// Grid used when none is given: the nodes of a sampled profile, otherwise n uniform points.
std::vector<double> default_grid(const CurvatureProfile& profile, std::size_t n = 1001);

/// U = -f T + eps1 g N - B2 (unnormalized). <U,U> = f^2 + eps1 g^2 + eps2.
Vec4 axis_vector(const FrenetFrame& frame, const CurvatureProfile& profile, double s);

/// Normalizes an axis to <U,U> = +-1; refuses a lightlike axis with NullVector.
Vec4 unit_axis(const Vec4& axis, double tau = kNullTolerance);

struct AxisReport {
    std::vector<Vec4> U_samples;
    double U_variation = 0.0;
    std::vector<double> B2_angle_samples; ///< <B2(s), U(s0)>
    double B2_angle_variation = 0.0;
    double B1_orthogonality_max = 0.0;    ///< max |<B1(s), U(s0)>|
    CausalCharacter axis_class = CausalCharacter::Spacelike;
    double U_norm_squared = 0.0;
    std::optional<double> m_value;        ///< g^2 - (g'/k1)^2, eps1 = -1 only
};

AxisReport axis_report(const FramedCurve& curve, const CurvatureProfile& profile, double tol = kSlantTolAnalytic);

struct AxisClass {
    double c = 0.0;              ///< the constant value of F
    double U_norm_squared = 0.0; ///< eps1 c + eps2
    CausalCharacter character = CausalCharacter::Spacelike;
};

/// Throws NotSlant when check_slant fails on the grid.
AxisClass classify_axis(const CurvatureProfile& profile, std::span<const double> grid, double tol = kSlantTolAnalytic);

struct A1Solution {
    std::vector<double> s;
    std::vector<double> numeric;
    std::vector<double> closed_form;
    double A = 0.0;
    double B = 0.0;
    double max_discrepancy = 0.0;
};

/// Integrates eps1 a'' - eps1 (k1'/k1) a' + k1^2 a = 0 with RK4 and compares against
/// A cos phi + B sin phi (eps1 = +1) or A cosh phi + B sinh phi (eps1 = -1), phi = int k1.
A1Solution solve_a1(const ScalarField& k1, int eps1, double a1_0, double a1_prime_0, double s_min, double s_max, double step = 1e-3);

struct ABConstants {
    double A = 0.0;
    double B = 0.0;
};

/// A = a3 (g sinh phi - (g'/k1) cosh phi), B = a3 (-g cosh phi + (g'/k1) sinh phi). eps1 = -1 only.
ABConstants constants_AB(const CurvatureProfile& profile, double a3, double s);

/// Consolidated verdict, axis diagnostics along a curve (when frames exist) and axis class.
struct SlantReport {
    SlantVerdict verdict;
    std::optional<AxisReport> axis;
    Vec4 axis_at_start;
    double B2_angle = 0.0;
    std::optional<double> B2_angle_variation;
    CausalCharacter axis_class = CausalCharacter::Spacelike;
    double axis_norm_squared = 0.0;
    std::optional<double> m;
};

/// Report for a curve with frames (axis measured along the samples).
SlantReport make_report(const FramedCurve& curve, const CurvatureProfile& profile, std::span<const double> grid, double tol);

/// Report for a bare profile; the axis is expressed in the frame `start` at the first grid point.
SlantReport make_report(const CurvatureProfile& profile, const FrenetFrame& start, std::span<const double> grid, double tol);

} // namespace slant4
