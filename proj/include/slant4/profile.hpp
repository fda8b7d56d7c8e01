#pragma once

#include "slant4/numerics.hpp"

#include <memory>
#include <span>
#include <vector>

namespace slant4 {

/// Causal signs of the Frenet frame: eps1 = <N,N>, eps2 = <B2,B2>.
struct Signature {
    int eps1 = 1;
    int eps2 = 1;

    friend constexpr bool operator==(const Signature&, const Signature&) = default;
};

/// (+1,+1), (+1,-1) and (-1,+1) are admissible; a timelike N forces a spacelike B2.
constexpr bool validate_signature(int eps1, int eps2) {
    const bool signs = (eps1 == 1 || eps1 == -1) && (eps2 == 1 || eps2 == -1);
    return signs && !(eps1 == -1 && eps2 == -1);
}
constexpr bool validate_signature(Signature s) { return validate_signature(s.eps1, s.eps2); }

struct CurvatureSample {
    double k1 = 0.0;
    double k2 = 0.0;
    double k3 = 0.0;
};

/// Quantities entering the slant-helix characterizations at one arclength value:
/// g = k3/k2, its derivative, f = eps1 g'/k1 and the derivative of f.
struct SlantTerms {
    double k1 = 0.0;
    double g = 0.0;
    double dg = 0.0;
    double f = 0.0;
    double df = 0.0;
};

/// Curvatures k1, k2, k3 along an arclength interval plus the frame signature.
///
/// Functional profiles carry closed-form jets; derivatives of g and f follow by the quotient
/// rule. Sampled profiles hold curvature values on a grid; g' and f' come from 5-point
/// differences on that grid and off-grid queries are interpolated. phi(s) is the running
/// integral of k1 from s_min.
class CurvatureProfile {
public:
    /// Throws SignatureViolation.
    static CurvatureProfile functional(ScalarField k1, ScalarField k2, ScalarField k3, Signature sig, double s_min, double s_max);
    /// Throws SignatureViolation, NonMonotoneParameter, TooFewSamples, NonPositiveCurvature.
    static CurvatureProfile sampled(std::vector<double> s, std::vector<CurvatureSample> k, Signature sig);

    Signature signature() const { return sig_; }
    double s_min() const;
    double s_max() const;
    bool is_sampled() const { return sampled_ != nullptr; }
    /// Grid of a sampled profile; empty for functional profiles.
    std::span<const double> nodes() const;

    CurvatureSample curvatures(double s) const;
    SlantTerms slant_terms(double s) const;
    double phi(double s) const;

    /// Same curvatures under a different signature (must be admissible).
    CurvatureProfile with_signature(Signature sig) const;

private:
    struct Functional;
    struct Sampled;

    Signature sig_;
    std::shared_ptr<const Functional> functional_;
    std::shared_ptr<const Sampled> sampled_;
};

} // namespace slant4
