#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support.hpp"

#include "slant4/error.hpp"
#include "slant4/generator.hpp"
#include "slant4/kernels.hpp"

#include <omp.h>

#include <cmath>
#include <numbers>

using namespace slant4;
using namespace slant4::kernels;

namespace {

struct Threads {
    Threads() { omp_set_num_threads(4); }
};
const Threads force_threads;

GeneratedCurve sample_curve() {
    SlantSpec spec;
    spec.sig = {-1, 1};
    spec.k1 = ScalarField::linear(1.0, 0.2);
    spec.C = 1.0;
    spec.D = 0.3;
    spec.s_max = 1.0;
    return generate_slant_curve(spec);
}

bool same(const Vec4& a, const Vec4& b) { return a == b; }

} // namespace

TEST_CASE("frame sweep: parallel equals serial") {
    const Curve c = hyperbolic_circular(1.0, std::numbers::sqrt2);
    const auto grid = uniform_grid(0.0, 5.0, 501);
    const auto a = frame_sweep(c, grid, {}, Exec::Serial);
    const auto b = frame_sweep(c, grid, {}, Exec::Parallel);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(same(a[i].frame.T, b[i].frame.T));
        CHECK(same(a[i].frame.B2, b[i].frame.B2));
        CHECK(a[i].k.k3 == b[i].k.k3);
    }
}

TEST_CASE("derivative, slant and axis sweeps: parallel equals serial") {
    const auto gen = sample_curve();
    const auto da = frame_derivative_sweep(gen.curve, 1e-4, Exec::Serial);
    const auto db = frame_derivative_sweep(gen.curve, 1e-4, Exec::Parallel);
    REQUIRE(da.size() == db.size());
    for (std::size_t i = 0; i < da.size(); ++i) {
        CHECK(da[i].k1 == db[i].k1);
        CHECK(da[i].k2 == db[i].k2);
        CHECK(da[i].k3 == db[i].k3);
    }

    const auto grid = default_grid(gen.profile);
    const auto sa = slant_sweep(gen.profile, grid, Exec::Serial);
    const auto sb = slant_sweep(gen.profile, grid, Exec::Parallel);
    CHECK(sa.F == sb.F);
    CHECK(sa.residual == sb.residual);
    CHECK(sa.g == sb.g);

    const auto ua = axis_sweep(gen.curve, gen.profile, Exec::Serial);
    const auto ub = axis_sweep(gen.curve, gen.profile, Exec::Parallel);
    REQUIRE(ua.size() == ub.size());
    for (std::size_t i = 0; i < ua.size(); ++i) CHECK(same(ua[i], ub[i]));
}

TEST_CASE("the first failing grid point decides the error") {
    const Curve hyp = hyperbolic_circular(1.0, std::numbers::sqrt2);
    const Curve straight = line(Vec4{}, Vec4::basis(1));
    const Curve fast = line(Vec4{}, 2.0 * Vec4::basis(1));
    // Valid up to s = 1, degenerate up to 2, then not unit speed.
    const Curve mixed = Curve::analytic(
        0.0, 3.0, [&](double s) { return hyp.evaluate(s); },
        [&](double s, int k) {
            const Curve& c = s < 1.0 ? hyp : (s < 2.0 ? straight : fast);
            return c.derivatives(s, 4)[static_cast<std::size_t>(k - 1)];
        });
    const auto grid = uniform_grid(0.0, 3.0, 301);
    for (Exec e : {Exec::Serial, Exec::Parallel}) {
        try {
            frame_sweep(mixed, grid, {}, e);
            FAIL("expected an exception");
        } catch (const Error& err) {
            CHECK(err.kind() == ErrorKind::DegenerateFrame);
        }
    }
}

TEST_CASE("thread count") { CHECK(max_threads() >= 1); }
