// Serial reference vs OpenMP kernels on the grid sweeps. Prints best-of-N wall times and
// checks that both paths agree exactly.

#include "slant4/curve.hpp"
#include "slant4/generator.hpp"
#include "slant4/kernels.hpp"

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <numbers>

using namespace slant4;
using namespace slant4::kernels;

namespace {

double best_ms(int reps, const std::function<void()>& fn) {
    double best = 1e300;
    for (int r = 0; r < reps; ++r) {
        const auto t0 = std::chrono::steady_clock::now();
        fn();
        const auto t1 = std::chrono::steady_clock::now();
        best = std::min(best, std::chrono::duration<double, std::milli>(t1 - t0).count());
    }
    return best;
}

void row(const char* name, std::size_t n, double serial, double parallel, bool same) {
    std::printf("%-24s %8zu %12.3f %12.3f %8.2fx  %s\n", name, n, serial, parallel, serial / parallel, same ? "identical" : "MISMATCH");
}

} // namespace

int main(int argc, char** argv) {
    const std::size_t n = argc > 1 ? std::strtoul(argv[1], nullptr, 10) : 200000;
    const int reps = argc > 2 ? std::atoi(argv[2]) : 5;
    std::printf("threads: %d, grid points: %zu, repetitions: %d\n", max_threads(), n, reps);
    std::printf("%-24s %8s %12s %12s %9s\n", "kernel", "points", "serial ms", "parallel ms", "speedup");

    const Curve hyp = hyperbolic_circular(1.0, std::numbers::sqrt2);
    const auto grid = uniform_grid(0.0, 5.0, n);
    std::vector<FrameSample> fa, fb;
    const double f_s = best_ms(reps, [&] { fa = frame_sweep(hyp, grid, {}, Exec::Serial); });
    const double f_p = best_ms(reps, [&] { fb = frame_sweep(hyp, grid, {}, Exec::Parallel); });
    bool same = fa.size() == fb.size();
    for (std::size_t i = 0; same && i < fa.size(); ++i) same = fa[i].frame.B2 == fb[i].frame.B2 && fa[i].k.k3 == fb[i].k.k3;
    row("frame_sweep", n, f_s, f_p, same);

    SlantSpec spec;
    spec.sig = {-1, 1};
    spec.k1 = ScalarField::linear(1.0, 0.2);
    spec.C = 1.0;
    spec.D = 0.3;
    spec.s_max = 1.0;
    spec.step = 1.0 / static_cast<double>(n);
    const auto gen = generate_slant_curve(spec);
    const std::size_t m = gen.curve.size();

    std::vector<CurvatureSample> da, db;
    const double d_s = best_ms(reps, [&] { da = frame_derivative_sweep(gen.curve, 1e-4, Exec::Serial); });
    const double d_p = best_ms(reps, [&] { db = frame_derivative_sweep(gen.curve, 1e-4, Exec::Parallel); });
    same = da.size() == db.size();
    for (std::size_t i = 0; same && i < da.size(); ++i) same = da[i].k1 == db[i].k1 && da[i].k2 == db[i].k2 && da[i].k3 == db[i].k3;
    row("frame_derivative_sweep", m, d_s, d_p, same);

    SlantSweep sa, sb;
    const auto sgrid = std::vector<double>(gen.curve.s.begin(), gen.curve.s.end());
    const double s_s = best_ms(reps, [&] { sa = slant_sweep(gen.profile, sgrid, Exec::Serial); });
    const double s_p = best_ms(reps, [&] { sb = slant_sweep(gen.profile, sgrid, Exec::Parallel); });
    row("slant_sweep", m, s_s, s_p, sa.F == sb.F && sa.residual == sb.residual);

    std::vector<Vec4> ua, ub;
    const double a_s = best_ms(reps, [&] { ua = axis_sweep(gen.curve, gen.profile, Exec::Serial); });
    const double a_p = best_ms(reps, [&] { ub = axis_sweep(gen.curve, gen.profile, Exec::Parallel); });
    row("axis_sweep", m, a_s, a_p, ua == ub);
    return 0;
}
