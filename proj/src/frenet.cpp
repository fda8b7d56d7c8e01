#include "slant4/frenet.hpp"

#include "csv.hpp"
#include "slant4/error.hpp"
#include "slant4/kernels.hpp"

#include <cmath>
#include <limits>
#include <ostream>
#include <string>

namespace slant4 {

double orthonormality_defect(const FrenetFrame& frame) {
    const std::array<const Vec4*, 4> v{&frame.T, &frame.N, &frame.B1, &frame.B2};
    const double e1 = frame.sig.eps1;
    const double e2 = frame.sig.eps2;
    const std::array<double, 4> target{1.0, e1, -e1 * e2, e2};
    double worst = 0.0;
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = i; j < 4; ++j) {
            const double want = i == j ? target[i] : 0.0;
            worst = std::max(worst, std::abs(inner(*v[i], *v[j]) - want));
        }
    if (!std::isfinite(worst)) return std::numeric_limits<double>::infinity();
    return worst;
}

FrameSample frame_at(const Curve& curve, double s, const FrameOptions& options) {
    const auto d = curve.derivatives(s, 4);
    const double speed2 = inner(d[0], d[0]);
    if (std::abs(speed2 - 1.0) > options.unit_speed_tol)
        throw Error(ErrorKind::NotUnitSpeed, "<x',x'> = " + std::to_string(speed2) + " at s = " + std::to_string(s));

    OrthonormalBasis basis;
    try {
        basis = gram_schmidt_indefinite({d[0], d[1], d[2], d[3]}, options.tau);
    } catch (const Error& e) {
        if (e.kind() == ErrorKind::NullIntermediate || e.kind() == ErrorKind::DependentBasis)
            throw Error(ErrorKind::DegenerateFrame, "at s = " + std::to_string(s) + ": " + e.what());
        throw;
    }
    const Signature sig{basis.signs[1], basis.signs[3]};
    if (basis.signs[0] != 1 || !validate_signature(sig) || basis.signs[2] != -sig.eps1 * sig.eps2)
        throw Error(ErrorKind::DegenerateFrame, "frame signs violate the Lorentzian signature at s = " + std::to_string(s));

    FrenetFrame fr{basis.vectors[0], basis.vectors[1], basis.vectors[2], basis.vectors[3], sig};
    const double e1 = sig.eps1;
    const double e2 = sig.eps2;
    // x'' = k1 N, the B1 part of x''' is k1 k2 B1 and the B2 part of x'''' is k1 k2 k3 B2.
    const double k1 = pseudo_norm(d[1]);
    double k2 = -e1 * e2 * inner(d[2], fr.B1) / k1;
    if (k2 < 0.0) {
        fr.B1 = -fr.B1;
        k2 = -k2;
    }
    double k3 = e2 * inner(d[3], fr.B2) / (k1 * k2);
    if (k3 < 0.0) {
        fr.B2 = -fr.B2;
        k3 = -k3;
    }
    return {fr, {k1, k2, k3}};
}

namespace {

CurvatureProfile profile_from_samples(std::vector<double> s, const std::vector<Signature>& sigs, std::vector<CurvatureSample> k) {
    for (std::size_t i = 1; i < sigs.size(); ++i)
        if (!(sigs[i] == sigs[0]))
            throw Error(ErrorKind::InconsistentSignature, "frame signs change between s = " + std::to_string(s[i - 1]) + " and s = " + std::to_string(s[i]));
    return CurvatureProfile::sampled(std::move(s), std::move(k), sigs.front());
}

} // namespace

CurvatureProfile curvature_profile(const Curve& curve, std::span<const double> grid, const FrameOptions& options) {
    if (grid.empty()) throw Error(ErrorKind::InvalidArgument, "empty grid");
    const auto samples = kernels::frame_sweep(curve, grid, options);
    std::vector<Signature> sigs;
    std::vector<CurvatureSample> k;
    for (const auto& fs : samples) {
        sigs.push_back(fs.frame.sig);
        k.push_back(fs.k);
    }
    return profile_from_samples({grid.begin(), grid.end()}, sigs, std::move(k));
}

CurvatureProfile curvature_profile(const FramedCurve& curve, double h) {
    if (curve.size() < 7) throw Error(ErrorKind::TooFewSamples, "frame differentiation needs at least 7 samples");
    if (!(h > 0.0)) throw Error(ErrorKind::InvalidArgument, "finite-difference step must be positive");
    auto k = kernels::frame_derivative_sweep(curve, h);
    std::vector<Signature> sigs;
    for (const auto& fr : curve.frames) sigs.push_back(fr.sig);
    return profile_from_samples(curve.s, sigs, std::move(k));
}

namespace {

struct State {
    std::array<Vec4, 5> y; // x, T, N, B1, B2

    State& axpy(double a, const State& o) {
        for (std::size_t i = 0; i < 5; ++i) y[i] += a * o.y[i];
        return *this;
    }
};

State frenet_rhs(const CurvatureProfile& profile, double s, const State& st) {
    const auto k = profile.curvatures(s);
    const double e1 = profile.signature().eps1;
    const double e2 = profile.signature().eps2;
    const auto& [x, T, N, B1, B2] = st.y;
    return {{T, k.k1 * N, -e1 * k.k1 * T + k.k2 * B1, e2 * k.k2 * N + k.k3 * B2, e1 * k.k3 * B1}};
}

void require_positive(const CurvatureProfile& profile, double s) {
    const auto k = profile.curvatures(s);
    if (!(k.k1 > 0.0 && k.k2 > 0.0 && k.k3 > 0.0))
        throw Error(ErrorKind::NonPositiveCurvature, "curvature not positive at s = " + std::to_string(s));
}

} // namespace

FramedCurve integrate_frenet(const CurvatureProfile& profile, const Vec4& init_point, const FrenetFrame& init_frame, double s_min,
                             double s_max, double step, const IntegrationOptions& options) {
    if (!validate_signature(profile.signature()) || !validate_signature(init_frame.sig))
        throw Error(ErrorKind::SignatureViolation, "signature rule violated");
    if (!(init_frame.sig == profile.signature()))
        throw Error(ErrorKind::InvalidInitialFrame, "initial frame signature differs from the profile signature");
    const double defect0 = orthonormality_defect(init_frame);
    if (!(defect0 <= kInitialFrameTol) || !init_point.is_finite())
        throw Error(ErrorKind::InvalidInitialFrame, "initial frame defect " + std::to_string(defect0) + " exceeds tolerance");
    if (!(step > 0.0) || !(s_max >= s_min)) throw Error(ErrorKind::InvalidArgument, "need step > 0 and s_max >= s_min");

    const double span = s_max - s_min;
    const auto steps = static_cast<std::size_t>(std::ceil(span / step - 1e-9));

    FramedCurve out;
    out.s.reserve(steps + 1);
    out.points.reserve(steps + 1);
    out.frames.reserve(steps + 1);
    out.defect.reserve(steps + 1);

    State st{{init_point, init_frame.T, init_frame.N, init_frame.B1, init_frame.B2}};
    auto record = [&](double s) {
        FrenetFrame fr{st.y[1], st.y[2], st.y[3], st.y[4], init_frame.sig};
        out.s.push_back(s);
        out.points.push_back(st.y[0]);
        out.defect.push_back(orthonormality_defect(fr));
        out.frames.push_back(fr);
    };
    require_positive(profile, s_min);
    record(s_min);

    for (std::size_t i = 0; i < steps; ++i) {
        const double s0 = s_min + static_cast<double>(i) * step;
        const double s1 = (i + 1 == steps) ? s_max : s_min + static_cast<double>(i + 1) * step;
        const double h = s1 - s0;
        const State a = frenet_rhs(profile, s0, st);
        const State b = frenet_rhs(profile, s0 + 0.5 * h, State(st).axpy(0.5 * h, a));
        const State c = frenet_rhs(profile, s0 + 0.5 * h, State(st).axpy(0.5 * h, b));
        const State d = frenet_rhs(profile, s1, State(st).axpy(h, c));
        st.axpy(h / 6.0, a).axpy(h / 3.0, b).axpy(h / 3.0, c).axpy(h / 6.0, d);
        require_positive(profile, s1);

        if (options.reorthonormalize_every > 0 && (i + 1) % options.reorthonormalize_every == 0) {
            const auto basis = gram_schmidt_indefinite({st.y[1], st.y[2], st.y[3], st.y[4]});
            for (std::size_t j = 0; j < 4; ++j) st.y[j + 1] = basis.vectors[j];
        }
        record(s1);
    }
    return out;
}

Curve curve_from_framed(const FramedCurve& curve, std::size_t window, int degree) {
    return Curve::from_samples({curve.s, curve.points}, window, degree);
}

void write_framed_csv(std::ostream& os, const FramedCurve& curve) {
    os << "s,x1,x2,x3,x4,T1,T2,T3,T4,N1,N2,N3,N4,B11,B12,B13,B14,B21,B22,B23,B24,defect\n";
    for (std::size_t i = 0; i < curve.size(); ++i) {
        os << detail::format_real(curve.s[i]);
        const auto& fr = curve.frames[i];
        for (const Vec4* v : {&curve.points[i], &fr.T, &fr.N, &fr.B1, &fr.B2})
            for (std::size_t c = 0; c < 4; ++c) os << ',' << detail::format_real((*v)[c]);
        os << ',' << detail::format_real(curve.defect[i]) << '\n';
    }
}

namespace {

constexpr std::array<std::string_view, 21> kFramedHeader{"s",   "x1",  "x2",  "x3",  "x4",  "T1",  "T2",
                                                          "T3",  "T4",  "N1",  "N2",  "N3",  "N4",  "B11",
                                                          "B12", "B13", "B14", "B21", "B22", "B23", "B24"};

bool framed_header(const std::vector<std::string>& header) {
    if (header.size() < kFramedHeader.size()) return false;
    for (std::size_t i = 0; i < kFramedHeader.size(); ++i)
        if (header[i] != kFramedHeader[i]) return false;
    return true;
}

int sign_of(double q) {
    if (std::abs(q) <= 0.5) throw Error(ErrorKind::DegenerateFrame, "frame leg is not unit in the file");
    return q > 0 ? 1 : -1;
}

} // namespace

bool has_framed_header(std::string_view text) {
    const auto end = text.find('\n');
    try {
        return framed_header(detail::parse_csv(text.substr(0, end)).header);
    } catch (const Error&) {
        return false;
    }
}

FramedCurve parse_framed_csv(std::string_view text) {
    const auto table = detail::parse_csv(text);
    if (!framed_header(table.header))
        throw Error(ErrorKind::ParseError, "header must start with s,x1..x4,T1..T4,N1..N4,B11..B14,B21..B24");
    FramedCurve out;
    SampledCurve check;
    for (const auto& row : table.rows) {
        auto vec = [&](std::size_t at) { return Vec4(row[at], row[at + 1], row[at + 2], row[at + 3]); };
        FrenetFrame f{vec(5), vec(9), vec(13), vec(17), {}};
        f.sig = {sign_of(inner(f.N, f.N)), sign_of(inner(f.B2, f.B2))};
        if (!out.frames.empty() && f.sig != out.frames.front().sig)
            throw Error(ErrorKind::InconsistentSignature, "frame signs change at s = " + detail::format_real(row[0]));
        out.s.push_back(row[0]);
        out.points.push_back(vec(1));
        out.defect.push_back(orthonormality_defect(f));
        out.frames.push_back(f);
    }
    check.s = out.s;
    check.points = out.points;
    check.validate();
    if (!validate_signature(out.frames.front().sig)) throw Error(ErrorKind::SignatureViolation, "frame signature (-1,-1) in file");
    return out;
}

} // namespace slant4
