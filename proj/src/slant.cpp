#include "slant4/slant.hpp"

#include "slant4/error.hpp"
#include "slant4/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace slant4 {

double ratio_g(const CurvatureProfile& profile, double s) { return profile.slant_terms(s).g; }

double ratio_g_prime(const CurvatureProfile& profile, double s) { return profile.slant_terms(s).dg; }

double characteristic_F(const CurvatureProfile& profile, double s) {
    const auto t = profile.slant_terms(s);
    const double r = t.dg / t.k1;
    return t.g * t.g + profile.signature().eps1 * r * r;
}

double slant_f(const CurvatureProfile& profile, double s) { return profile.slant_terms(s).f; }

std::vector<double> default_grid(const CurvatureProfile& profile, std::size_t n) {
    if (profile.is_sampled()) {
        const auto nodes = profile.nodes();
        return {nodes.begin(), nodes.end()};
    }
    return uniform_grid(profile.s_min(), profile.s_max(), n);
}

SlantVerdict check_slant(const CurvatureProfile& profile, std::span<const double> grid, double tol) {
    if (grid.empty()) throw Error(ErrorKind::InvalidArgument, "empty grid");
    const auto sweep = kernels::slant_sweep(profile, grid);
    auto max_abs = [](const std::vector<double>& v) {
        double m = 0.0;
        for (double x : v) m = std::max(m, std::abs(x));
        return m;
    };
    SlantVerdict v;
    v.F_samples = sweep.F;
    const auto [lo, hi] = std::minmax_element(v.F_samples.begin(), v.F_samples.end());
    v.F_spread = *hi - *lo;
    v.F_mean = std::accumulate(v.F_samples.begin(), v.F_samples.end(), 0.0) / static_cast<double>(v.F_samples.size());
    v.F_constant = v.F_spread <= tol * std::max(1.0, std::abs(v.F_mean));

    const double scale = std::max(1.0, *std::max_element(sweep.k1g.begin(), sweep.k1g.end()));
    v.f_residual_max = max_abs(sweep.residual);
    v.residual_threshold = tol * scale;
    v.degenerate_constant_ratio = max_abs(sweep.dg) <= tol * scale && max_abs(sweep.g) > tol;
    v.is_slant = !v.degenerate_constant_ratio && v.f_residual_max <= v.residual_threshold;
    return v;
}

Vec4 axis_vector(const FrenetFrame& frame, const CurvatureProfile& profile, double s) {
    const auto t = profile.slant_terms(s);
    return -t.f * frame.T + (profile.signature().eps1 * t.g) * frame.N - frame.B2;
}

Vec4 unit_axis(const Vec4& axis, double tau) { return normalize(axis, tau); }

AxisReport axis_report(const FramedCurve& curve, const CurvatureProfile& profile, double tol) {
    if (curve.size() == 0) throw Error(ErrorKind::InvalidArgument, "empty curve");
    AxisReport r;
    r.U_samples = kernels::axis_sweep(curve, profile);
    const Vec4 u0 = r.U_samples.front();
    const double angle0 = inner(curve.frames.front().B2, u0);
    r.B2_angle_samples.reserve(curve.size());
    for (std::size_t i = 0; i < curve.size(); ++i) {
        r.U_variation = std::max(r.U_variation, (r.U_samples[i] - u0).max_abs());
        const double angle = inner(curve.frames[i].B2, u0);
        r.B2_angle_samples.push_back(angle);
        r.B2_angle_variation = std::max(r.B2_angle_variation, std::abs(angle - angle0));
        r.B1_orthogonality_max = std::max(r.B1_orthogonality_max, std::abs(inner(curve.frames[i].B1, u0)));
    }
    r.U_norm_squared = inner(u0, u0);
    r.axis_class = causal_character(u0, tol);
    if (profile.signature().eps1 == -1) {
        double acc = 0.0;
        for (double s : curve.s) acc += characteristic_F(profile, s);
        r.m_value = acc / static_cast<double>(curve.size());
    }
    return r;
}

AxisClass classify_axis(const CurvatureProfile& profile, std::span<const double> grid, double tol) {
    const auto v = check_slant(profile, grid, tol);
    if (!v.is_slant) throw Error(ErrorKind::NotSlant, "profile does not satisfy the slant condition");
    AxisClass out;
    out.c = v.F_mean;
    out.U_norm_squared = profile.signature().eps1 * out.c + profile.signature().eps2;
    out.character = causal_character_of(out.U_norm_squared, tol * std::max(1.0, std::abs(out.c)));
    return out;
}

A1Solution solve_a1(const ScalarField& k1, int eps1, double a1_0, double a1_prime_0, double s_min, double s_max, double step) {
    if (eps1 != 1 && eps1 != -1) throw Error(ErrorKind::InvalidArgument, "eps1 must be +1 or -1");
    if (!(step > 0.0) || !(s_max >= s_min)) throw Error(ErrorKind::InvalidArgument, "need step > 0 and s_max >= s_min");
    const CumulativeSimpson phi([&k1](double s) { return k1.value(s); }, s_min, s_max);

    A1Solution out;
    out.A = a1_0;
    out.B = a1_prime_0 / k1.value(s_min);
    auto closed = [&](double s) {
        const double p = phi(s);
        return eps1 == 1 ? out.A * std::cos(p) + out.B * std::sin(p) : out.A * std::cosh(p) + out.B * std::sinh(p);
    };
    // y = (a, a'), a'' = (k1'/k1) a' - eps1 k1^2 a
    using Y = std::array<double, 2>;
    auto rhs = [&](double s, const Y& y) -> Y {
        const Jet k = k1(s);
        return {y[1], k.d1 / k.v * y[1] - eps1 * k.v * k.v * y[0]};
    };
    Y y{a1_0, a1_prime_0};
    const auto steps = static_cast<std::size_t>(std::ceil((s_max - s_min) / step - 1e-9));
    auto record = [&](double s) {
        out.s.push_back(s);
        out.numeric.push_back(y[0]);
        out.closed_form.push_back(closed(s));
        out.max_discrepancy = std::max(out.max_discrepancy, std::abs(y[0] - out.closed_form.back()));
    };
    record(s_min);
    for (std::size_t i = 0; i < steps; ++i) {
        const double s0 = s_min + static_cast<double>(i) * step;
        const double s1 = (i + 1 == steps) ? s_max : s_min + static_cast<double>(i + 1) * step;
        const double h = s1 - s0;
        const Y a = rhs(s0, y);
        const Y b = rhs(s0 + 0.5 * h, {y[0] + 0.5 * h * a[0], y[1] + 0.5 * h * a[1]});
        const Y c = rhs(s0 + 0.5 * h, {y[0] + 0.5 * h * b[0], y[1] + 0.5 * h * b[1]});
        const Y d = rhs(s1, {y[0] + h * c[0], y[1] + h * c[1]});
        for (std::size_t j = 0; j < 2; ++j) y[j] += h / 6.0 * (a[j] + 2.0 * b[j] + 2.0 * c[j] + d[j]);
        record(s1);
    }
    return out;
}

ABConstants constants_AB(const CurvatureProfile& profile, double a3, double s) {
    if (profile.signature().eps1 != -1) throw Error(ErrorKind::InvalidArgument, "constants A, B are defined for a timelike principal normal");
    const auto t = profile.slant_terms(s);
    const double p = profile.phi(s);
    const double r = t.dg / t.k1;
    return {a3 * (t.g * std::sinh(p) - r * std::cosh(p)), a3 * (-t.g * std::cosh(p) + r * std::sinh(p))};
}

namespace {

void fill_class(SlantReport& rep, const CurvatureProfile& profile, double tol) {
    rep.axis_norm_squared = inner(rep.axis_at_start, rep.axis_at_start);
    rep.axis_class = causal_character(rep.axis_at_start, tol);
    if (profile.signature().eps1 == -1) rep.m = rep.verdict.F_mean;
}

} // namespace

SlantReport make_report(const FramedCurve& curve, const CurvatureProfile& profile, std::span<const double> grid, double tol) {
    SlantReport rep;
    rep.verdict = check_slant(profile, grid, tol);
    rep.axis = axis_report(curve, profile, tol);
    rep.axis_at_start = rep.axis->U_samples.front();
    rep.B2_angle = rep.axis->B2_angle_samples.front();
    rep.B2_angle_variation = rep.axis->B2_angle_variation;
    fill_class(rep, profile, tol);
    return rep;
}

SlantReport make_report(const CurvatureProfile& profile, const FrenetFrame& start, std::span<const double> grid, double tol) {
    SlantReport rep;
    rep.verdict = check_slant(profile, grid, tol);
    rep.axis_at_start = axis_vector(start, profile, grid.front());
    rep.B2_angle = inner(start.B2, rep.axis_at_start);
    fill_class(rep, profile, tol);
    return rep;
}

} // namespace slant4
