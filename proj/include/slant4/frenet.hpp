#pragma once

#include "slant4/curve.hpp"
#include "slant4/minkowski.hpp"
#include "slant4/profile.hpp"

#include <iosfwd>
#include <span>
#include <string_view>
#include <vector>

namespace slant4 {

inline constexpr double kDefaultRkStep = 1e-3;
inline constexpr double kInitialFrameTol = 1e-10;

/// Moving frame (T, N, B1, B2) of a spacelike curve with
/// <T,T> = 1, <N,N> = eps1, <B1,B1> = -eps1 eps2, <B2,B2> = eps2.
struct FrenetFrame {
    Vec4 T;
    Vec4 N;
    Vec4 B1;
    Vec4 B2;
    Signature sig;
};

/// Largest deviation of the 10 distinct inner products from diag(1, eps1, -eps1 eps2, eps2).
double orthonormality_defect(const FrenetFrame& frame);

struct FrameSample {
    FrenetFrame frame;
    CurvatureSample k;
};

struct FrameOptions {
    double unit_speed_tol = kUnitSpeedTolAnalytic;
    double tau = kNullTolerance;
};

/// Frame and curvatures at s from x', x'', x''', x''''. B1 and B2 are oriented so that k2, k3 > 0.
/// Throws NotUnitSpeed, DegenerateFrame (plus derivative errors from the curve).
FrameSample frame_at(const Curve& curve, double s, const FrameOptions& options = {});

/// frame_at over a grid. Throws InconsistentSignature when the signs change along the grid.
CurvatureProfile curvature_profile(const Curve& curve, std::span<const double> grid, const FrameOptions& options = {});

/// Samples of an integrated Frenet system.
struct FramedCurve {
    std::vector<double> s;
    std::vector<Vec4> points;
    std::vector<FrenetFrame> frames;
    std::vector<double> defect;

    std::size_t size() const { return s.size(); }
};

struct IntegrationOptions {
    /// Re-orthonormalize the frame every K steps; 0 disables it.
    std::size_t reorthonormalize_every = 0;
};

/// Classical RK4 on (x, T, N, B1, B2) with x' = T and the Frenet equations. The last step is
/// shortened to land on s_max. Throws InvalidInitialFrame, SignatureViolation, NonPositiveCurvature.
FramedCurve integrate_frenet(const CurvatureProfile& profile, const Vec4& init_point, const FrenetFrame& init_frame, double s_min,
                             double s_max, double step = kDefaultRkStep, const IntegrationOptions& options = {});

/// Curvatures recovered from the stored frames: each frame field is interpolated locally
/// (7-point Lagrange) and differentiated with 5-point central differences of step h.
CurvatureProfile curvature_profile(const FramedCurve& curve, double h = kDefaultFdStep);

/// The integrated points as a tabulated curve.
Curve curve_from_framed(const FramedCurve& curve, std::size_t window = kDefaultFitWindow, int degree = kDefaultFitDegree);

/// Header s,x1..x4,T1..T4,N1..N4,B11..B14,B21..B24,defect.
void write_framed_csv(std::ostream& os, const FramedCurve& curve);

/// Reads the framed schema back (the defect column is recomputed). Signs come from <N,N> and
/// <B2,B2>; rows that disagree raise InconsistentSignature.
FramedCurve parse_framed_csv(std::string_view text);
bool has_framed_header(std::string_view text);

} // namespace slant4
