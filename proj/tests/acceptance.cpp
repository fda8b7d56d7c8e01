// Acceptance suite: one PASS/FAIL line per criterion; exit status 1 when any fails.

#include "support.hpp"

#include "slant4/frenet.hpp"
#include "slant4/generator.hpp"
#include "slant4/slant.hpp"

#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <string>
#include <vector>

using namespace slant4;
using namespace slant4::testing;

namespace {

struct Outcome {
    bool pass = false;
    std::string detail;
};

std::string fmt(const char* f, auto... args) {
    char buf[512];
    std::snprintf(buf, sizeof buf, f, args...);
    return buf;
}

double spread(const std::vector<double>& v) {
    const auto [lo, hi] = std::minmax_element(v.begin(), v.end());
    return *hi - *lo;
}

double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }

SlantSpec basic(Signature sig, double s_max, double C = 1.0, double D = 0.0) {
    SlantSpec spec;
    spec.sig = sig;
    spec.s_max = s_max;
    spec.C = C;
    spec.D = D;
    return spec;
}

// Twenty slant specs: ten per eps1 branch, eps2 drawn where the signature rule allows.
std::vector<SlantSpec> random_suite() {
    std::mt19937_64 rng(20240611);
    std::bernoulli_distribution coin(0.5);
    std::vector<SlantSpec> out;
    for (int i = 0; i < 20; ++i) {
        const int eps1 = i < 10 ? 1 : -1;
        const int eps2 = eps1 < 0 ? 1 : (coin(rng) ? 1 : -1);
        out.push_back(random_slant_spec(rng, eps1, eps2));
    }
    return out;
}

// k3 = k2 g (1 + amp sin s) with g = C eta(phi) + D mu(phi) differentiated exactly.
CurvatureProfile perturbed(const SlantSpec& spec, double amp = 0.05) {
    const auto base = slant_profile(spec);
    const ScalarField k3{[base, spec, amp](double s) {
                             const double e1 = spec.sig.eps1;
                             const double p = base.phi(s);
                             const double eta = e1 > 0 ? std::cos(p) : std::cosh(p);
                             const double mu = e1 > 0 ? std::sin(p) : std::sinh(p);
                             const double rho = spec.C * eta + spec.D * mu;
                             const double rho_phi = -e1 * spec.C * mu + spec.D * eta;
                             const Jet k1 = spec.k1(s);
                             const Jet g{rho, k1.v * rho_phi, k1.d1 * rho_phi - e1 * k1.v * k1.v * rho};
                             const Jet w{1.0 + amp * std::sin(s), amp * std::cos(s), -amp * std::sin(s)};
                             return spec.k2(s) * (g * w);
                         },
                         "perturbed"};
    return CurvatureProfile::functional(spec.k1, spec.k2, k3, spec.sig, spec.s_min, spec.s_max);
}

Outcome criterion1() {
    const auto prof = CurvatureProfile::functional(ScalarField::constant(1), ScalarField::constant(1), ScalarField::constant(1), {1, 1}, 0, 10);
    const auto fc = integrate_frenet(prof, Vec4{}, canonical_frame({1, 1}), 0.0, 10.0, 1e-3);
    double worst = 0.0, worst_rel = 0.0, crossing = -1.0;
    for (std::size_t i = 0; i < fc.size(); ++i) {
        worst = std::max(worst, fc.defect[i]);
        if (crossing < 0 && fc.defect[i] >= 1e-9) crossing = fc.s[i];
        const auto& f = fc.frames[i];
        const double size = std::max({f.T.max_abs(), f.N.max_abs(), f.B1.max_abs(), f.B2.max_abs()});
        worst_rel = std::max(worst_rel, fc.defect[i] / (size * size));
    }
    return {worst < 1e-9, fmt("max defect %.3e over s in [0,10]%s; relative to |frame|^2: %.3e", worst,
                              crossing >= 0 ? fmt(" (first >= 1e-9 at s = %.3f)", crossing).c_str() : "", worst_rel)};
}

Outcome criterion2() {
    const auto spec = basic({1, 1}, 1.0);
    const auto prof = slant_profile(spec);
    double dev = 0.0;
    std::vector<double> F;
    for (double s : default_grid(prof)) {
        F.push_back(characteristic_F(prof, s));
        dev = std::max(dev, std::abs(F.back() - 1.0));
    }
    const auto fc = integrate_frenet(prof, Vec4{}, canonical_frame(spec.sig), spec.s_min, spec.s_max, 1e-3);
    const auto back = curvature_profile(fc, 1e-4);
    double dev_fd = 0.0;
    std::vector<double> Ffd;
    for (double s : back.nodes()) {
        Ffd.push_back(characteristic_F(back, s));
        dev_fd = std::max(dev_fd, std::abs(Ffd.back() - 1.0));
    }
    const bool pass = spread(F) < 1e-12 && dev < 1e-12 && spread(Ffd) < 1e-6 && dev_fd < 1e-6;
    return {pass, fmt("analytic spread %.2e, max |F-1| %.2e; from integrated frames spread %.2e, max |F-1| %.2e", spread(F), dev,
                      spread(Ffd), dev_fd)};
}

Outcome criterion3(const std::vector<SlantSpec>& suite) {
    int slant = 0, rejected = 0, control = 0;
    double worst = 0.0;
    for (const auto& spec : suite) {
        const auto prof = slant_profile(spec);
        const auto v = check_slant(prof, default_grid(prof), kSlantTolAnalytic);
        worst = std::max(worst, v.f_residual_max);
        if (v.is_slant && v.f_residual_max < 1e-10) ++slant;
        const auto p = perturbed(spec);
        if (!check_slant(p, default_grid(p), kSlantTolAnalytic).is_slant) ++rejected;
        // Zero amplitude reproduces the generated profile through the same construction.
        const auto p0 = perturbed(spec, 0.0);
        if (check_slant(p0, default_grid(p0), kSlantTolAnalytic).is_slant) ++control;
    }
    return {slant == 20 && rejected == 20 && control == 20,
            fmt("%d/20 generated profiles slant (max residual %.2e), %d/20 perturbed profiles rejected, %d/20 zero-amplitude controls slant",
                slant, worst, rejected, control)};
}

Outcome criterion4(const std::vector<SlantSpec>& suite) {
    double angle = 0.0, ortho = 0.0;
    std::vector<SlantSpec> all = suite;
    all.push_back(basic({1, 1}, 1.5));
    all.push_back(basic({-1, 1}, 2.0));
    for (const auto& spec : all) {
        const auto gen = generate_slant_curve(spec);
        const auto r = axis_report(gen.curve, gen.profile);
        angle = std::max(angle, r.B2_angle_variation);
        ortho = std::max(ortho, r.B1_orthogonality_max);
    }
    return {angle < 1e-5 && ortho < 1e-5,
            fmt("%zu curves: max <B2,U(s0)> variation %.2e, max |<B1,U(s0)>| %.2e", all.size(), angle, ortho)};
}

Outcome criterion5() {
    double worst = 0.0;
    for (const auto& k1 : {ScalarField::constant(1.0), ScalarField::linear(1.0, 1.0), ScalarField::linear(2.0, -0.5)})
        for (int eps1 : {1, -1})
            for (auto [a, ap] : {std::pair{1.0, 0.0}, std::pair{0.3, -0.8}})
                worst = std::max(worst, solve_a1(k1, eps1, a, ap, 0.0, 1.0, 1e-3).max_discrepancy);
    return {worst < 1e-7, fmt("max |numeric - closed form| %.2e over 12 runs", worst)};
}

Outcome criterion6() {
    double m = 0.0, norm = 0.0;
    bool spacelike = true;
    int runs = 0;
    for (double K : {0.25, 0.5, 1.5})
        for (const auto& k1 : {ScalarField::constant(1.0), ScalarField::linear(0.8, 0.4)}) {
            SlantSpec spec = basic({-1, 1}, 1.0, K, K);
            spec.k1 = k1;
            spec.k2 = ScalarField::linear(1.2, -0.3);
            const auto gen = generate_slant_curve(spec);
            m = std::max(m, std::abs(gen.report.m.value_or(1.0)));
            norm = std::max(norm, std::abs(gen.report.axis_norm_squared - 1.0));
            spacelike = spacelike && gen.report.axis_class == CausalCharacter::Spacelike;
            ++runs;
        }
    return {m < 1e-10 && norm < 1e-8 && spacelike,
            fmt("%d profiles g = K e^phi: max |m| %.2e, max |<U,U>-1| %.2e, all spacelike: %s", runs, m, norm, spacelike ? "yes" : "no")};
}

Outcome criterion7(const std::vector<SlantSpec>& suite) {
    double worst = 0.0;
    for (const auto& spec : suite) {
        const auto gen = generate_slant_curve(spec);
        std::vector<double> ms, ns;
        for (double s : gen.curve.s) {
            const auto p = conserved_pair(gen.profile, s);
            ms.push_back(p.m);
            ns.push_back(p.n);
        }
        worst = std::max({worst, spread(ms), spread(ns)});
    }
    const auto prof = slant_profile(basic({1, 1}, 1.0));
    std::vector<double> swapped;
    for (double s : uniform_grid(0.0, 1.0, 1001)) {
        const auto t = prof.slant_terms(s);
        swapped.push_back(t.g * std::cos(prof.phi(s)) + t.f * std::sin(prof.phi(s)));
    }
    const double drift = spread(swapped);
    return {worst < 1e-6 && drift > 0.1, fmt("conserved pair max spread %.2e; g cos + f sin drifts by %.3f on [0,1]", worst, drift)};
}

Outcome criterion8(const std::vector<SlantSpec>& suite) {
    std::vector<CurvatureProfile> profiles;
    for (Signature sig : {Signature{1, 1}, Signature{1, -1}, Signature{-1, 1}})
        profiles.push_back(CurvatureProfile::functional(ScalarField::constant(1.0), ScalarField::constant(0.8), ScalarField::constant(0.6), sig, 0, 2));
    for (std::size_t i = 0; i < suite.size(); i += 2) profiles.push_back(slant_profile(suite[i]));
    double worst = 0.0;
    int sig_ok = 0;
    for (const auto& prof : profiles) {
        const auto fc = integrate_frenet(prof, Vec4{}, canonical_frame(prof.signature()), prof.s_min(), prof.s_max(), 1e-3);
        const auto back = curvature_profile(fc, 1e-4);
        if (back.signature() == prof.signature()) ++sig_ok;
        for (double s : back.nodes()) {
            const auto a = back.curvatures(s), b = prof.curvatures(s);
            worst = std::max({worst, rel(a.k1, b.k1), rel(a.k2, b.k2), rel(a.k3, b.k3)});
        }
    }
    const int n = static_cast<int>(profiles.size());
    return {worst < 1e-3 && sig_ok == n, fmt("%d profiles: max relative curvature error %.2e, signatures exact %d/%d", n, worst, sig_ok, n)};
}

Outcome criterion9() {
    const Curve hyp = hyperbolic_circular(1.0, std::numbers::sqrt2);
    const auto grid = uniform_grid(0.0, 2.0 * std::numbers::pi, 201);
    const auto prof = curvature_profile(hyp, grid);
    const auto v = check_slant(prof, prof.nodes(), kSlantTolAnalytic);
    double dev = 0.0;
    for (double F : v.F_samples) dev = std::max(dev, std::abs(F - 0.125));
    std::vector<Vec4> b2;
    for (double s : uniform_grid(0.0, 2.0 * std::numbers::pi, 200)) b2.push_back(frame_at(hyp, s).frame.B2);
    const double residual = best_constant_axis_residual(b2);
    const bool pass = dev < 1e-6 && !v.is_slant && v.degenerate_constant_ratio && residual > 0.1;
    return {pass, fmt("max |F-0.125| %.2e, is_slant %s, degenerate %s, best fixed-axis residual %.3f", dev, v.is_slant ? "true" : "false",
                      v.degenerate_constant_ratio ? "true" : "false", residual)};
}

Outcome criterion10(const std::vector<SlantSpec>& suite) {
    int compared = 0, differing = 0;
    auto compare = [&](const CurvatureProfile& p) {
        if (p.signature().eps1 < 0) return;
        const auto q = p.with_signature({1, -p.signature().eps2});
        const auto grid = default_grid(p);
        const auto a = check_slant(p, grid, kSlantTolAnalytic), b = check_slant(q, grid, kSlantTolAnalytic);
        ++compared;
        if (a.F_samples != b.F_samples || a.is_slant != b.is_slant || a.degenerate_constant_ratio != b.degenerate_constant_ratio ||
            a.F_constant != b.F_constant)
            ++differing;
    };
    for (const auto& spec : suite) {
        compare(slant_profile(spec));
        compare(perturbed(spec));
    }
    compare(curvature_profile(hyperbolic_circular(1.0, std::numbers::sqrt2), uniform_grid(0.0, 5.0, 101)));
    const auto fc = integrate_frenet(slant_profile(basic({1, -1}, 1.0)), Vec4{}, canonical_frame({1, -1}), 0.0, 1.0, 1e-3);
    compare(curvature_profile(fc, 1e-4));
    return {compared > 0 && differing == 0, fmt("%d profiles compared under eps2 flip, %d with any differing F value or verdict bit", compared, differing)};
}

} // namespace

int main() {
    const auto suite = random_suite();
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"frame-metric conservation, k=1, eps=(+,+), s in [0,10], defect < 1e-9", criterion1},
        {"F identity: analytic spread < 1e-12 around 1, from integrated curve < 1e-6", criterion2},
        {"slant verdict on 20 generated and 20 perturbed profiles", [&] { return criterion3(suite); }},
        {"B2 angle and B1 orthogonality along generated curves < 1e-5", [&] { return criterion4(suite); }},
        {"a1 ODE vs closed form < 1e-7", criterion5},
        {"g = K e^phi: m ~ 0, spacelike unit axis", criterion6},
        {"conserved pair constant, g cos + f sin drifts", [&] { return criterion7(suite); }},
        {"round trip curvatures -> curve -> curvatures within 1e-3", [&] { return criterion8(suite); }},
        {"hyperbolic_circular degenerate control", criterion9},
        {"eps2 flip leaves F and verdicts unchanged", [&] { return criterion10(suite); }},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        failed += o.pass ? 0 : 1;
        std::printf("criterion %2zu [PRIMARY] %s  %s :: %s\n", i + 1, o.pass ? "PASS" : "FAIL", criteria[i].first.c_str(), o.detail.c_str());
    }
    std::printf("%zu criteria, %d failed\n", criteria.size(), failed);
    return failed == 0 ? 0 : 1;
}
