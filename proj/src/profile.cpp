#include "slant4/profile.hpp"

#include "slant4/error.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace slant4 {

struct CurvatureProfile::Functional {
    ScalarField k1;
    ScalarField k2;
    ScalarField k3;
    double s_min;
    double s_max;
    CumulativeSimpson phi;
};

struct CurvatureProfile::Sampled {
    std::vector<double> s;
    std::vector<double> k1, k2, k3;
    std::vector<double> g, dg, f, df;
    std::vector<double> phi;

    /// Index of an exact grid hit, or npos.
    std::size_t node_of(double x) const {
        const auto it = std::lower_bound(s.begin(), s.end(), x);
        if (it != s.end() && *it == x) return static_cast<std::size_t>(it - s.begin());
        return static_cast<std::size_t>(-1);
    }
    double at(const std::vector<double>& y, double x) const {
        const std::size_t i = node_of(x);
        if (i != static_cast<std::size_t>(-1)) return y[i];
        return fd::interpolate(s, y, x);
    }
};

namespace {

void require_signature(Signature sig) {
    if (!validate_signature(sig))
        throw Error(ErrorKind::SignatureViolation,
                    "(eps1, eps2) = (" + std::to_string(sig.eps1) + ", " + std::to_string(sig.eps2) + ") breaks the signature rule");
}

} // namespace

CurvatureProfile CurvatureProfile::functional(ScalarField k1, ScalarField k2, ScalarField k3, Signature sig, double s_min, double s_max) {
    require_signature(sig);
    if (!(s_max >= s_min)) throw Error(ErrorKind::InvalidArgument, "profile range is empty");
    CurvatureProfile p;
    p.sig_ = sig;
    CumulativeSimpson phi([k1](double s) { return k1.value(s); }, s_min, s_max);
    p.functional_ = std::make_shared<const Functional>(Functional{std::move(k1), std::move(k2), std::move(k3), s_min, s_max, std::move(phi)});
    return p;
}

CurvatureProfile CurvatureProfile::sampled(std::vector<double> s, std::vector<CurvatureSample> k, Signature sig) {
    require_signature(sig);
    if (s.size() != k.size()) throw Error(ErrorKind::InvalidArgument, "grid and curvature counts differ");
    for (std::size_t i = 1; i < s.size(); ++i)
        if (!(s[i] > s[i - 1])) throw Error(ErrorKind::NonMonotoneParameter, "profile grid is not strictly increasing");
    if (s.size() < 5) throw Error(ErrorKind::TooFewSamples, "a sampled profile needs at least 5 points");
    auto d = std::make_shared<Sampled>();
    d->s = std::move(s);
    const std::size_t n = d->s.size();
    for (std::size_t i = 0; i < n; ++i) {
        const auto& c = k[i];
        if (!(c.k1 > 0.0 && c.k2 > 0.0 && c.k3 > 0.0))
            throw Error(ErrorKind::NonPositiveCurvature, "curvature not positive at s = " + std::to_string(d->s[i]));
        d->k1.push_back(c.k1);
        d->k2.push_back(c.k2);
        d->k3.push_back(c.k3);
        d->g.push_back(c.k3 / c.k2);
    }
    d->dg = fd::derivative_on_nodes(d->s, d->g);
    d->f.resize(n);
    for (std::size_t i = 0; i < n; ++i) d->f[i] = sig.eps1 * d->dg[i] / d->k1[i];
    d->df = fd::derivative_on_nodes(d->s, d->f);
    d->phi = fd::cumulative_integral(d->s, d->k1);
    CurvatureProfile p;
    p.sig_ = sig;
    p.sampled_ = std::move(d);
    return p;
}

double CurvatureProfile::s_min() const { return sampled_ ? sampled_->s.front() : functional_->s_min; }
double CurvatureProfile::s_max() const { return sampled_ ? sampled_->s.back() : functional_->s_max; }

std::span<const double> CurvatureProfile::nodes() const {
    if (sampled_) return sampled_->s;
    return {};
}

CurvatureSample CurvatureProfile::curvatures(double s) const {
    if (sampled_) return {sampled_->at(sampled_->k1, s), sampled_->at(sampled_->k2, s), sampled_->at(sampled_->k3, s)};
    return {functional_->k1.value(s), functional_->k2.value(s), functional_->k3.value(s)};
}

SlantTerms CurvatureProfile::slant_terms(double s) const {
    if (sampled_) {
        const auto& d = *sampled_;
        return {d.at(d.k1, s), d.at(d.g, s), d.at(d.dg, s), d.at(d.f, s), d.at(d.df, s)};
    }
    const auto& fn = *functional_;
    const Jet k1 = fn.k1(s);
    const Jet g = fn.k3(s) / fn.k2(s);
    const double eps1 = sig_.eps1;
    // f = eps1 g' / k1
    const double f = eps1 * g.d1 / k1.v;
    const double df = eps1 * (g.d2 * k1.v - g.d1 * k1.d1) / (k1.v * k1.v);
    return {k1.v, g.v, g.d1, f, df};
}

double CurvatureProfile::phi(double s) const {
    if (sampled_) return sampled_->at(sampled_->phi, s);
    return functional_->phi(s);
}

CurvatureProfile CurvatureProfile::with_signature(Signature sig) const {
    require_signature(sig);
    if (sampled_) {
        std::vector<CurvatureSample> k(sampled_->s.size());
        for (std::size_t i = 0; i < k.size(); ++i) k[i] = {sampled_->k1[i], sampled_->k2[i], sampled_->k3[i]};
        return sampled(sampled_->s, std::move(k), sig);
    }
    CurvatureProfile p = *this;
    p.sig_ = sig;
    return p;
}

} // namespace slant4
