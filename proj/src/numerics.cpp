#include "slant4/numerics.hpp"

#include "slant4/error.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <string>

namespace slant4 {

namespace {

double parse_real(std::string_view text) {
    double out = 0.0;
    const auto* first = text.data();
    const auto* last = text.data() + text.size();
    if (!text.empty() && *first == '+') ++first;
    auto [ptr, ec] = std::from_chars(first, last, out);
    if (ec != std::errc{} || ptr != last || !std::isfinite(out))
        throw Error(ErrorKind::ParseError, "not a real number: '" + std::string(text) + "'");
    return out;
}

} // namespace

ScalarField ScalarField::constant(double c) {
    return {[c](double) { return Jet{c, 0.0, 0.0}; }, "const:" + std::to_string(c)};
}

ScalarField ScalarField::linear(double a, double b) {
    return {[a, b](double s) { return Jet{a + b * s, b, 0.0}; }, "linear:" + std::to_string(a) + "," + std::to_string(b)};
}

ScalarField ScalarField::from_values(std::function<double(double)> f, double h, std::string description) {
    return {[f = std::move(f), h](double s) {
                const std::array<double, 5> y{f(s - 2 * h), f(s - h), f(s), f(s + h), f(s + 2 * h)};
                const auto d = fd::central_5pt(y, h);
                return Jet{y[2], d[0], d[1]};
            },
            std::move(description)};
}

ScalarField ScalarField::parse(std::string_view text) {
    const auto colon = text.find(':');
    if (colon == std::string_view::npos)
        throw Error(ErrorKind::ParseError, "function spec must be const:<v> or linear:<a>,<b>, got '" + std::string(text) + "'");
    const auto kind = text.substr(0, colon);
    const auto args = text.substr(colon + 1);
    if (kind == "const") return constant(parse_real(args));
    if (kind == "linear") {
        const auto comma = args.find(',');
        if (comma == std::string_view::npos)
            throw Error(ErrorKind::ParseError, "linear spec needs two values, got '" + std::string(text) + "'");
        return linear(parse_real(args.substr(0, comma)), parse_real(args.substr(comma + 1)));
    }
    throw Error(ErrorKind::ParseError, "unknown function kind '" + std::string(kind) + "'");
}

namespace fd {

std::vector<std::vector<double>> fornberg_weights(std::span<const double> x, double x0, int max_order) {
    const std::size_t n = x.size();
    const auto m = static_cast<std::size_t>(max_order);
    std::vector<std::vector<double>> c(m + 1, std::vector<double>(n, 0.0));
    double c1 = 1.0;
    double c4 = x[0] - x0;
    c[0][0] = 1.0;
    for (std::size_t i = 1; i < n; ++i) {
        const std::size_t mn = std::min(i, m);
        double c2 = 1.0;
        const double c5 = c4;
        c4 = x[i] - x0;
        for (std::size_t j = 0; j < i; ++j) {
            const double c3 = x[i] - x[j];
            c2 *= c3;
            if (j == i - 1) {
                for (std::size_t k = mn; k >= 1; --k)
                    c[k][i] = c1 * (static_cast<double>(k) * c[k - 1][i - 1] - c5 * c[k][i - 1]) / c2;
                c[0][i] = -c1 * c5 * c[0][i - 1] / c2;
            }
            for (std::size_t k = mn; k >= 1; --k)
                c[k][j] = (c4 * c[k][j] - static_cast<double>(k) * c[k - 1][j]) / c3;
            c[0][j] = c4 * c[0][j] / c3;
        }
        c1 = c2;
    }
    return c;
}

std::size_t window_start(std::span<const double> nodes, double x, std::size_t width) {
    const std::size_t n = nodes.size();
    if (n <= width) return 0;
    const auto it = std::lower_bound(nodes.begin(), nodes.end(), x);
    auto centre = static_cast<std::size_t>(it - nodes.begin());
    if (centre > 0 && (centre == n || x - nodes[centre - 1] < nodes[centre] - x)) --centre;
    const std::size_t half = width / 2;
    const std::size_t start = centre > half ? centre - half : 0;
    return std::min(start, n - width);
}

std::vector<double> derivative_on_nodes(std::span<const double> s, std::span<const double> y) {
    const std::size_t n = s.size();
    const std::size_t width = std::min<std::size_t>(5, n);
    std::vector<double> out(n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t lo = window_start(s, s[i], width);
        const auto w = fornberg_weights(s.subspan(lo, width), s[i], 1);
        double acc = 0.0;
        for (std::size_t j = 0; j < width; ++j) acc += w[1][j] * y[lo + j];
        out[i] = acc;
    }
    return out;
}

std::vector<double> cumulative_integral(std::span<const double> s, std::span<const double> y) {
    const std::size_t n = s.size();
    std::vector<double> out(n, 0.0);
    if (n < 2) return out;
    const std::size_t width = std::min<std::size_t>(4, n);
    // Two-point Gauss-Legendre is exact for the cubic interpolant on each interval.
    const double g = 0.5 / std::sqrt(3.0);
    for (std::size_t i = 0; i + 1 < n; ++i) {
        const double mid = 0.5 * (s[i] + s[i + 1]);
        const double len = s[i + 1] - s[i];
        const std::size_t lo = window_start(s, mid, width);
        const auto nodes = s.subspan(lo, width);
        double acc = 0.0;
        for (double xg : {mid - g * len, mid + g * len}) {
            const auto w = fornberg_weights(nodes, xg, 0);
            for (std::size_t j = 0; j < width; ++j) acc += w[0][j] * y[lo + j];
        }
        out[i + 1] = out[i] + 0.5 * len * acc;
    }
    return out;
}

double interpolate(std::span<const double> s, std::span<const double> y, double x, std::size_t width) {
    width = std::min(width, s.size());
    const std::size_t lo = window_start(s, x, width);
    const auto w = fornberg_weights(s.subspan(lo, width), x, 0);
    double acc = 0.0;
    for (std::size_t j = 0; j < width; ++j) acc += w[0][j] * y[lo + j];
    return acc;
}

} // namespace fd

double simpson(const std::function<double(double)>& f, double a, double b, double max_width) {
    if (a == b) return 0.0;
    auto panels = static_cast<long>(std::ceil(std::abs(b - a) / max_width));
    panels = std::max(1L, panels);
    const double h = (b - a) / static_cast<double>(panels);
    double acc = 0.0;
    for (long i = 0; i < panels; ++i) {
        const double x0 = a + static_cast<double>(i) * h;
        acc += f(x0) + 4.0 * f(x0 + 0.5 * h) + f(x0 + h);
    }
    return acc * h / 6.0;
}

CumulativeSimpson::CumulativeSimpson(std::function<double(double)> f, double a, double b, double panel)
    : f_(std::move(f)), a_(a), b_(b), panel_(panel) {
    if (!(b >= a) || !(panel > 0.0)) throw Error(ErrorKind::InvalidArgument, "cumulative integral needs a <= b and panel > 0");
    const auto panels = static_cast<std::size_t>(std::ceil((b - a) / panel));
    running_.assign(panels + 1, 0.0);
    for (std::size_t i = 0; i < panels; ++i) {
        const double x0 = a + static_cast<double>(i) * panel;
        running_[i + 1] = running_[i] + (f_(x0) + 4.0 * f_(x0 + 0.5 * panel) + f_(x0 + panel)) * panel / 6.0;
    }
}

double CumulativeSimpson::operator()(double s) const {
    if (s < a_ || s > b_) throw Error(ErrorKind::OutOfDomain, "integral requested outside [" + std::to_string(a_) + ", " + std::to_string(b_) + "]");
    auto i = static_cast<std::size_t>(std::floor((s - a_) / panel_));
    i = std::min(i, running_.size() - 1);
    const double x0 = a_ + static_cast<double>(i) * panel_;
    const double rest = s - x0;
    if (rest <= 0.0) return running_[i];
    return running_[i] + (f_(x0) + 4.0 * f_(x0 + 0.5 * rest) + f_(s)) * rest / 6.0;
}

LocalPolynomial::LocalPolynomial(std::vector<double> s, std::vector<Vec4> points, int degree, std::size_t window)
    : s_(std::move(s)), points_(std::move(points)), degree_(degree), window_(std::min(window, s_.size())) {
    if (s_.size() != points_.size()) throw Error(ErrorKind::InvalidArgument, "sample and point counts differ");
    if (window_ < static_cast<std::size_t>(degree_ + 1))
        throw Error(ErrorKind::TooFewSamples, "polynomial window smaller than degree + 1");
}

std::vector<Vec4> LocalPolynomial::evaluate(double s, int max_order) const {
    const std::size_t lo = fd::window_start(s_, s, window_);
    const double half = 0.5 * (s_[lo + window_ - 1] - s_[lo]);
    const auto cols = static_cast<Eigen::Index>(degree_ + 1);
    const auto rows = static_cast<Eigen::Index>(window_);
    Eigen::MatrixXd vander(rows, cols);
    Eigen::MatrixXd rhs(rows, 4);
    for (Eigen::Index r = 0; r < rows; ++r) {
        const double t = (s_[lo + static_cast<std::size_t>(r)] - s) / half;
        double p = 1.0;
        for (Eigen::Index c = 0; c < cols; ++c, p *= t) vander(r, c) = p;
        for (Eigen::Index c = 0; c < 4; ++c) rhs(r, c) = points_[lo + static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
    }
    const Eigen::MatrixXd coef = vander.colPivHouseholderQr().solve(rhs);
    std::vector<Vec4> out(static_cast<std::size_t>(max_order) + 1);
    double factorial = 1.0;
    double scale = 1.0;
    for (int k = 0; k <= max_order; ++k) {
        if (k > 0) {
            factorial *= k;
            scale *= half;
        }
        if (k > degree_) break;
        for (std::size_t c = 0; c < 4; ++c)
            out[static_cast<std::size_t>(k)][c] = coef(k, static_cast<Eigen::Index>(c)) * factorial / scale;
    }
    return out;
}

} // namespace slant4
