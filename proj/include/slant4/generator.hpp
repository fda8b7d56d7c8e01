#pragma once

#include "slant4/frenet.hpp"
#include "slant4/numerics.hpp"
#include "slant4/profile.hpp"
#include "slant4/slant.hpp"

namespace slant4 {

/// Inputs of the integral characterization k3/k2 = C eta(phi) + D mu(phi), where
/// (eta, mu) = (cos, sin) for eps1 = +1 and (cosh, sinh) for eps1 = -1.
struct SlantSpec {
    ScalarField k1 = ScalarField::constant(1.0);
    ScalarField k2 = ScalarField::constant(1.0);
    double C = 1.0;
    double D = 0.0;
    Signature sig;
    double s_min = 0.0;
    double s_max = 1.0;
    double step = kDefaultRkStep;
};

/// Running integral of k1 from s_min to s (composite Simpson).
double phi(const ScalarField& k1, double s_min, double s);

/// Functional profile with k3 = k2 (C eta(phi) + D mu(phi)). Throws NonPositiveCurvature when
/// k1 or k2 is not positive on the range and NonPositiveK3 when the ratio is not.
CurvatureProfile slant_profile(const SlantSpec& spec);

struct ConservedPair {
    double m = 0.0;
    double n = 0.0;
};

/// First integrals of g' = eps1 f k1, f' = -k1 g.
/// eps1 = -1: (g cosh phi + f sinh phi, g sinh phi + f cosh phi).
/// eps1 = +1: (g cos phi - f sin phi, g sin phi + f cos phi).
ConservedPair conserved_pair(const CurvatureProfile& profile, double s);

/// Frame with T = e2 and N = e3 (eps1 = +1) or N = e1 (eps1 = -1); B1, B2 the remaining axes
/// with the signs the signature demands.
FrenetFrame canonical_frame(Signature sig);

struct GeneratedCurve {
    CurvatureProfile profile;
    FramedCurve curve;
    SlantReport report;
};

GeneratedCurve generate_slant_curve(const SlantSpec& spec, const Vec4& init_point, const FrenetFrame& init_frame,
                                    double tol = kSlantTolAnalytic);
GeneratedCurve generate_slant_curve(const SlantSpec& spec, double tol = kSlantTolAnalytic);

} // namespace slant4
