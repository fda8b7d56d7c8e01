#pragma once

// Grid sweeps with an OpenMP implementation and a serial reference. Both produce identical
// results element by element; an exception raised at any grid point is rethrown for the
// lowest failing index.

#include "slant4/frenet.hpp"
#include "slant4/profile.hpp"

#include <span>
#include <vector>

namespace slant4::kernels {

enum class Exec { Serial, Parallel };

std::vector<FrameSample> frame_sweep(const Curve& curve, std::span<const double> grid, const FrameOptions& options, Exec exec = Exec::Parallel);

/// Curvatures at every sample of an integrated curve from central differences of the frame fields.
std::vector<CurvatureSample> frame_derivative_sweep(const FramedCurve& curve, double h, Exec exec = Exec::Parallel);

struct SlantSweep {
    std::vector<double> F;        ///< g^2 + eps1 (g'/k1)^2
    std::vector<double> residual; ///< f' + k1 g
    std::vector<double> dg;
    std::vector<double> k1g;      ///< k1 |g|
    std::vector<double> g;
};

SlantSweep slant_sweep(const CurvatureProfile& profile, std::span<const double> grid, Exec exec = Exec::Parallel);

/// Axis vector -f T + eps1 g N - B2 at every sample of a framed curve.
std::vector<Vec4> axis_sweep(const FramedCurve& curve, const CurvatureProfile& profile, Exec exec = Exec::Parallel);

int max_threads();

} // namespace slant4::kernels
