#include "slant4/kernels.hpp"

#include <exception>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace slant4::kernels {

namespace {

template <class Out, class Fn>
std::vector<Out> map_indices(std::size_t n, Fn&& fn, Exec exec) {
    std::vector<Out> out(n);
    if (exec == Exec::Serial) {
        for (std::size_t i = 0; i < n; ++i) out[i] = fn(i);
        return out;
    }
    std::vector<std::exception_ptr> errors(n);
    const auto count = static_cast<long>(n);
#pragma omp parallel for schedule(static)
    for (long i = 0; i < count; ++i) {
        const auto idx = static_cast<std::size_t>(i);
        try {
            out[idx] = fn(idx);
        } catch (...) {
            errors[idx] = std::current_exception();
        }
    }
    for (const auto& e : errors)
        if (e) std::rethrow_exception(e);
    return out;
}

constexpr std::size_t kFrameWindow = 7;

} // namespace

int max_threads() {
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

std::vector<FrameSample> frame_sweep(const Curve& curve, std::span<const double> grid, const FrameOptions& options, Exec exec) {
    return map_indices<FrameSample>(grid.size(), [&](std::size_t i) { return frame_at(curve, grid[i], options); }, exec);
}

std::vector<CurvatureSample> frame_derivative_sweep(const FramedCurve& curve, double h, Exec exec) {
    const std::span<const double> s = curve.s;
    const std::size_t width = std::min(kFrameWindow, s.size());
    return map_indices<CurvatureSample>(
        curve.size(),
        [&](std::size_t i) {
            const std::size_t lo = fd::window_start(s, s[i], width);
            const auto nodes = s.subspan(lo, width);
            // Interpolated T, N, B1 at s_i + j h, j = -2..2.
            std::array<std::array<Vec4, 5>, 3> fields{};
            for (int j = -2; j <= 2; ++j) {
                const auto w = fd::fornberg_weights(nodes, s[i] + j * h, 0)[0];
                for (std::size_t m = 0; m < width; ++m) {
                    const auto& fr = curve.frames[lo + m];
                    const auto col = static_cast<std::size_t>(j + 2);
                    fields[0][col] += w[m] * fr.T;
                    fields[1][col] += w[m] * fr.N;
                    fields[2][col] += w[m] * fr.B1;
                }
            }
            auto d1 = [h](const std::array<Vec4, 5>& f) { return (f[0] - 8.0 * f[1] + 8.0 * f[3] - f[4]) / (12.0 * h); };
            const Vec4 dT = d1(fields[0]);
            const Vec4 dN = d1(fields[1]);
            const Vec4 dB1 = d1(fields[2]);
            const auto& fr = curve.frames[i];
            const double e1 = fr.sig.eps1;
            const double e2 = fr.sig.eps2;
            return CurvatureSample{pseudo_norm(dT), -e1 * e2 * inner(dN, fr.B1), e2 * inner(dB1, fr.B2)};
        },
        exec);
}

SlantSweep slant_sweep(const CurvatureProfile& profile, std::span<const double> grid, Exec exec) {
    const double eps1 = profile.signature().eps1;
    const auto terms = map_indices<SlantTerms>(grid.size(), [&](std::size_t i) { return profile.slant_terms(grid[i]); }, exec);
    SlantSweep out;
    const std::size_t n = grid.size();
    out.F.resize(n);
    out.residual.resize(n);
    out.dg.resize(n);
    out.k1g.resize(n);
    out.g.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        const auto& t = terms[i];
        const double ratio = t.dg / t.k1;
        out.F[i] = t.g * t.g + eps1 * ratio * ratio;
        out.residual[i] = t.df + t.k1 * t.g;
        out.dg[i] = t.dg;
        out.k1g[i] = t.k1 * std::abs(t.g);
        out.g[i] = t.g;
    }
    return out;
}

std::vector<Vec4> axis_sweep(const FramedCurve& curve, const CurvatureProfile& profile, Exec exec) {
    const double eps1 = profile.signature().eps1;
    return map_indices<Vec4>(
        curve.size(),
        [&](std::size_t i) {
            const auto t = profile.slant_terms(curve.s[i]);
            const auto& fr = curve.frames[i];
            return -t.f * fr.T + (eps1 * t.g) * fr.N - fr.B2;
        },
        exec);
}

} // namespace slant4::kernels
