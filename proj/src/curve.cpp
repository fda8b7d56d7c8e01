#include "slant4/curve.hpp"

#include "csv.hpp"
#include "slant4/error.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace slant4 {

void SampledCurve::validate() const {
    if (s.size() != points.size()) throw Error(ErrorKind::InvalidArgument, "parameter and point counts differ");
    for (std::size_t i = 1; i < s.size(); ++i)
        if (!(s[i] > s[i - 1]))
            throw Error(ErrorKind::NonMonotoneParameter, "s is not strictly increasing at row " + std::to_string(i + 1));
    if (s.size() < kMinSamples)
        throw Error(ErrorKind::TooFewSamples, std::to_string(s.size()) + " samples, need at least " + std::to_string(kMinSamples));
}

Curve Curve::analytic(double s_min, double s_max, Evaluator x, AnalyticDerivative dx) {
    Curve c(s_min, s_max, DerivativeMode::Analytic);
    c.x_ = std::move(x);
    c.dx_ = std::move(dx);
    return c;
}

Curve Curve::finite_difference(double s_min, double s_max, Evaluator x, double h) {
    if (!(h > 0.0)) throw Error(ErrorKind::InvalidArgument, "finite-difference step must be positive");
    Curve c(s_min, s_max, DerivativeMode::FiniteDifference);
    c.x_ = std::move(x);
    c.h_ = h;
    return c;
}

Curve Curve::from_samples(SampledCurve samples, std::size_t window, int degree) {
    samples.validate();
    Curve c(samples.s.front(), samples.s.back(), DerivativeMode::LocalPolynomial);
    c.poly_ = std::make_shared<const LocalPolynomial>(std::move(samples.s), std::move(samples.points), degree, window);
    return c;
}

void Curve::require_in_domain(double s) const {
    if (!(s >= s_min_ && s <= s_max_))
        throw Error(ErrorKind::OutOfDomain, "s = " + std::to_string(s) + " outside [" + std::to_string(s_min_) + ", " + std::to_string(s_max_) + "]");
}

Vec4 Curve::evaluate(double s) const {
    require_in_domain(s);
    if (mode_ == DerivativeMode::LocalPolynomial) return poly_->evaluate(s, 0)[0];
    return x_(s);
}

std::vector<Vec4> Curve::derivatives(double s, int max_order) const {
    require_in_domain(s);
    if (max_order < 1 || max_order > 4) throw Error(ErrorKind::InvalidArgument, "derivative order must be in 1..4");
    const auto n = static_cast<std::size_t>(max_order);
    std::vector<Vec4> out;
    out.reserve(n);
    switch (mode_) {
    case DerivativeMode::Analytic:
        for (int k = 1; k <= max_order; ++k) out.push_back(dx_(s, k));
        break;
    case DerivativeMode::FiniteDifference: {
        if (s - 2.0 * h_ < s_min_ || s + 2.0 * h_ > s_max_)
            throw Error(ErrorKind::StencilOutOfRange, "stencil around s = " + std::to_string(s) + " leaves the domain");
        const std::array<Vec4, 5> f{x_(s - 2 * h_), x_(s - h_), x_(s), x_(s + h_), x_(s + 2 * h_)};
        const auto d = fd::central_5pt(f, h_);
        out.assign(d.begin(), d.begin() + static_cast<std::ptrdiff_t>(n));
        break;
    }
    case DerivativeMode::LocalPolynomial: {
        auto v = poly_->evaluate(s, max_order);
        out.assign(v.begin() + 1, v.end());
        break;
    }
    }
    return out;
}

Curve hyperbolic_circular(double a, double b, double s_min, double s_max) {
    auto x = [a, b](double s) { return Vec4(a * std::sinh(s), a * std::cosh(s), b * std::cos(s), b * std::sin(s)); };
    auto dx = [a, b](double s, int k) {
        const bool odd = (k % 2) != 0;
        const double phase = s + 0.5 * std::numbers::pi * k;
        return Vec4(a * (odd ? std::cosh(s) : std::sinh(s)), a * (odd ? std::sinh(s) : std::cosh(s)), b * std::cos(phase), b * std::sin(phase));
    };
    return Curve::analytic(s_min, s_max, x, dx);
}

Curve line(const Vec4& origin, const Vec4& direction, double s_min, double s_max) {
    return Curve::analytic(
        s_min, s_max, [origin, direction](double s) { return origin + s * direction; },
        [direction](double, int k) { return k == 1 ? direction : Vec4{}; });
}

Curve builtin_family(std::string_view name, std::span<const double> params, double s_min, double s_max) {
    if (name == "hyperbolic_circular") {
        if (params.size() != 2) throw Error(ErrorKind::InvalidArgument, "hyperbolic_circular takes (a, b)");
        const double a = params[0];
        const double b = params[1];
        if (std::abs(b * b - a * a - 1.0) > kUnitSpeedTolAnalytic)
            throw Error(ErrorKind::NotUnitSpeed, "hyperbolic_circular needs b^2 - a^2 = 1");
        return hyperbolic_circular(a, b, s_min, s_max);
    }
    if (name == "line") {
        if (params.empty()) return line(Vec4{}, Vec4::basis(1), s_min, s_max);
        if (params.size() != 4) throw Error(ErrorKind::InvalidArgument, "line takes no parameters or a 4-component direction");
        return line(Vec4{}, Vec4(params[0], params[1], params[2], params[3]), s_min, s_max);
    }
    throw Error(ErrorKind::InvalidArgument, "unknown curve family '" + std::string(name) + "'");
}

UnitSpeedReport check_unit_speed(const Curve& curve, std::span<const double> grid, double tol) {
    UnitSpeedReport r;
    for (double s : grid) {
        const Vec4 t = curve.derivatives(s, 1)[0];
        r.max_deviation = std::max(r.max_deviation, std::abs(inner(t, t) - 1.0));
    }
    r.pass = r.max_deviation <= tol;
    return r;
}

SampledCurve parse_curve_csv(std::string_view text) {
    const auto table = detail::parse_csv(text);
    static constexpr std::array<std::string_view, 5> expected{"s", "x1", "x2", "x3", "x4"};
    if (table.header.size() < expected.size())
        throw Error(ErrorKind::ParseError, "header must start with s,x1,x2,x3,x4");
    for (std::size_t i = 0; i < expected.size(); ++i)
        if (table.header[i] != expected[i]) throw Error(ErrorKind::ParseError, "header must start with s,x1,x2,x3,x4");
    SampledCurve out;
    for (const auto& row : table.rows) {
        out.s.push_back(row[0]);
        out.points.emplace_back(row[1], row[2], row[3], row[4]);
    }
    out.validate();
    return out;
}

SampledCurve load_curve_csv(const std::filesystem::path& path) { return parse_curve_csv(detail::read_file(path)); }

std::vector<double> uniform_grid(double a, double b, std::size_t n) {
    if (n == 0) return {};
    if (n == 1) return {a};
    std::vector<double> g(n);
    const double h = (b - a) / static_cast<double>(n - 1);
    for (std::size_t i = 0; i < n; ++i) g[i] = a + h * static_cast<double>(i);
    g.back() = b;
    return g;
}

} // namespace slant4
