#include "slant4/generator.hpp"

#include "slant4/error.hpp"

#include <cmath>
#include <memory>
#include <string>

namespace slant4 {

double phi(const ScalarField& k1, double s_min, double s) {
    return simpson([&k1](double x) { return k1.value(x); }, s_min, s);
}

CurvatureProfile slant_profile(const SlantSpec& spec) {
    if (!validate_signature(spec.sig)) throw Error(ErrorKind::SignatureViolation, "signature rule violated");
    if (!(spec.s_max >= spec.s_min)) throw Error(ErrorKind::InvalidArgument, "empty arclength range");
    const auto table = std::make_shared<const CumulativeSimpson>([k1 = spec.k1](double s) { return k1.value(s); }, spec.s_min, spec.s_max);
    const double eps1 = spec.sig.eps1;
    const double C = spec.C;
    const double D = spec.D;
    auto eta = [eps1](double p) { return eps1 > 0 ? std::cos(p) : std::cosh(p); };
    auto mu = [eps1](double p) { return eps1 > 0 ? std::sin(p) : std::sinh(p); };

    // rho = C eta + D mu as a function of s; d(eta)/dphi = -eps1 mu, d(mu)/dphi = eta.
    auto rho = [=, k1 = spec.k1](double s) {
        const double p = (*table)(s);
        const Jet k = k1(s);
        const double r = C * eta(p) + D * mu(p);
        const double r_phi = -eps1 * C * mu(p) + D * eta(p);
        return Jet{r, k.v * r_phi, k.d1 * r_phi - eps1 * k.v * k.v * r};
    };
    ScalarField k3([k2 = spec.k2, rho](double s) { return k2(s) * rho(s); }, "slant_k3");

    // Positivity on a grid no coarser than the integration step.
    const double h = std::min(spec.step, 1e-3);
    const auto n = static_cast<std::size_t>(std::ceil((spec.s_max - spec.s_min) / h)) + 1;
    for (double s : uniform_grid(spec.s_min, spec.s_max, std::max<std::size_t>(n, 2))) {
        if (!(spec.k1.value(s) > 0.0) || !(spec.k2.value(s) > 0.0))
            throw Error(ErrorKind::NonPositiveCurvature, "k1 or k2 not positive at s = " + std::to_string(s));
        if (!(rho(s).v > 0.0))
            throw Error(ErrorKind::NonPositiveK3, "C eta + D mu is not positive at s = " + std::to_string(s) + "; shrink the range or change C, D");
    }
    return CurvatureProfile::functional(spec.k1, spec.k2, std::move(k3), spec.sig, spec.s_min, spec.s_max);
}

ConservedPair conserved_pair(const CurvatureProfile& profile, double s) {
    const auto t = profile.slant_terms(s);
    const double p = profile.phi(s);
    if (profile.signature().eps1 == -1) {
        const double ch = std::cosh(p);
        const double sh = std::sinh(p);
        return {t.g * ch + t.f * sh, t.g * sh + t.f * ch};
    }
    const double c = std::cos(p);
    const double sn = std::sin(p);
    return {t.g * c - t.f * sn, t.g * sn + t.f * c};
}

FrenetFrame canonical_frame(Signature sig) {
    if (!validate_signature(sig)) throw Error(ErrorKind::SignatureViolation, "signature rule violated");
    const Vec4 e1 = Vec4::basis(0);
    const Vec4 e2 = Vec4::basis(1);
    const Vec4 e3 = Vec4::basis(2);
    const Vec4 e4 = Vec4::basis(3);
    if (sig.eps1 == -1) return {e2, e1, e3, e4, sig};
    if (sig.eps2 == 1) return {e2, e3, e1, e4, sig};
    return {e2, e3, e4, e1, sig};
}

GeneratedCurve generate_slant_curve(const SlantSpec& spec, const Vec4& init_point, const FrenetFrame& init_frame, double tol) {
    auto profile = slant_profile(spec);
    auto curve = integrate_frenet(profile, init_point, init_frame, spec.s_min, spec.s_max, spec.step);
    auto report = make_report(curve, profile, curve.s, tol);
    return {std::move(profile), std::move(curve), std::move(report)};
}

GeneratedCurve generate_slant_curve(const SlantSpec& spec, double tol) {
    return generate_slant_curve(spec, Vec4{}, canonical_frame(spec.sig), tol);
}

} // namespace slant4
