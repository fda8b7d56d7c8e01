// slant4: analyze sampled curves, generate B2-slant helices, verify curvature profiles.
//
// Exit codes: 0 success (verify: slant), 1 verify: not slant, 2 any error.

#include "slant4/error.hpp"
#include "slant4/frenet.hpp"
#include "slant4/generator.hpp"
#include "slant4/io.hpp"
#include "slant4/kernels.hpp"
#include "slant4/slant.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

namespace {

using namespace slant4;

constexpr int kExitNotSlant = 1;
constexpr int kExitError = 2;

struct Config {
    std::string input;
    std::string out;
    std::string report;
    std::optional<double> fd_step;
    double step = kDefaultRkStep;
    std::optional<double> tol;
    std::string eps1 = "+1";
    std::string eps2 = "+1";
    std::string k1 = "const:1";
    std::string k2 = "const:1";
    double C = 1.0;
    double D = 0.0;
    double s_min = 0.0;
    double s_max = 1.0;
    double grid_step = 0.05;
    std::size_t window = 0;
    double fit_width = 0.4;
    int degree = kDefaultFitDegree;
};

int sign_flag(const std::string& text) { return text.front() == '-' ? -1 : 1; }

Signature signature(const Config& cfg) {
    const Signature sig{sign_flag(cfg.eps1), sign_flag(cfg.eps2)};
    if (!validate_signature(sig)) throw Error(ErrorKind::SignatureViolation, "eps1 = eps2 = -1 is not admissible");
    return sig;
}

void require_positive(double v, const char* name) {
    if (!(v > 0.0) || !std::isfinite(v)) throw Error(ErrorKind::InvalidArgument, std::string(name) + " must be positive");
}

void emit(const std::string& text, const std::string& path) {
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream os(path, std::ios::binary);
    if (!os) throw Error(ErrorKind::IoError, "cannot write " + path);
    os << text;
    if (!os) throw Error(ErrorKind::IoError, "failed writing " + path);
}

std::string report_text(const SlantReport& r) { return to_json(r).dump(2) + "\n"; }

std::string read_all(const std::string& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw Error(ErrorKind::IoError, "cannot open " + path);
    std::ostringstream ss;
    ss << is.rdbuf();
    return ss.str();
}

std::vector<double> stepped_grid(double a, double b, double h) {
    const auto n = static_cast<std::size_t>(std::floor((b - a) / h * (1.0 + 1e-12))) + 1;
    std::vector<double> g(n);
    for (std::size_t i = 0; i < n; ++i) g[i] = a + h * static_cast<double>(i);
    return g;
}

// Samples covering `width` in s at the median spacing, and at least 4 (degree + 1).
std::size_t fit_window(const SampledCurve& samples, double width, int degree) {
    std::vector<double> gaps;
    for (std::size_t i = 1; i < samples.s.size(); ++i) gaps.push_back(samples.s[i] - samples.s[i - 1]);
    std::nth_element(gaps.begin(), gaps.begin() + static_cast<std::ptrdiff_t>(gaps.size() / 2), gaps.end());
    const double median = gaps[gaps.size() / 2];
    const auto by_width = static_cast<std::size_t>(std::llround(width / median)) + 1;
    return std::max(by_width, static_cast<std::size_t>(4 * (degree + 1)));
}

int analyze(const Config& cfg) {
    const std::string text = read_all(cfg.input);
    if (has_framed_header(text)) {
        // Stored frames: curvatures from differences of the frame fields.
        const double h = cfg.fd_step.value_or(1e-4);
        require_positive(h, "--fd-step");
        const auto fc = parse_framed_csv(text);
        const auto profile = curvature_profile(fc, h);
        const auto grid = default_grid(profile);
        emit(report_text(make_report(fc, profile, grid, cfg.tol.value_or(kSlantTolSampled))), cfg.report);
        return 0;
    }
    require_positive(cfg.grid_step, "--grid-step");
    require_positive(cfg.fit_width, "--fit-width");
    if (cfg.fd_step) throw Error(ErrorKind::InvalidArgument, "--fd-step applies to framed input only");
    auto samples = parse_curve_csv(text);
    // One-sided fits near the ends are noisier; keep the grid half a window inside.
    const std::size_t n = samples.s.size();
    const std::size_t window = cfg.window > 0 ? cfg.window : fit_window(samples, cfg.fit_width, cfg.degree);
    const std::size_t trim = std::min(std::min(window, n) / 2, (n - 1) / 4);
    const double a = samples.s[trim], b = samples.s[n - 1 - trim];
    const Curve curve = Curve::from_samples(std::move(samples), window, cfg.degree);
    const auto grid = stepped_grid(a, b, cfg.grid_step);
    const FrameOptions opts{kUnitSpeedTolSampled, kNullTolerance};
    const auto profile = curvature_profile(curve, grid, opts);
    const auto sweep = kernels::frame_sweep(curve, grid, opts);
    FramedCurve fc;
    for (std::size_t i = 0; i < grid.size(); ++i) {
        fc.s.push_back(grid[i]);
        fc.points.push_back(curve.evaluate(grid[i]));
        fc.frames.push_back(sweep[i].frame);
        fc.defect.push_back(orthonormality_defect(sweep[i].frame));
    }
    emit(report_text(make_report(fc, profile, grid, cfg.tol.value_or(kSlantTolSampled))), cfg.report);
    return 0;
}

int generate(const Config& cfg) {
    require_positive(cfg.step, "--step");
    SlantSpec spec;
    spec.sig = signature(cfg);
    spec.k1 = ScalarField::parse(cfg.k1);
    spec.k2 = ScalarField::parse(cfg.k2);
    spec.C = cfg.C;
    spec.D = cfg.D;
    spec.s_min = cfg.s_min;
    spec.s_max = cfg.s_max;
    spec.step = cfg.step;
    if (!(spec.s_max >= spec.s_min)) throw Error(ErrorKind::InvalidArgument, "--s-max must not be below --s-min");
    const double tol = cfg.tol.value_or(kSlantTolAnalytic);
    require_positive(tol, "--tol");
    const auto gen = generate_slant_curve(spec, tol);
    if (!cfg.out.empty()) {
        std::ostringstream os;
        write_framed_csv(os, gen.curve);
        emit(os.str(), cfg.out);
    }
    emit(report_text(gen.report), cfg.report);
    return 0;
}

int verify(const Config& cfg) {
    const Signature sig = signature(cfg);
    const double tol = cfg.tol.value_or(kSlantTolSampled);
    require_positive(tol, "--tol");
    const auto profile = load_profile_csv(cfg.input, sig);
    const auto grid = default_grid(profile);
    const auto report = make_report(profile, canonical_frame(sig), grid, tol);
    const std::string text = report_text(report);
    std::cout << text;
    if (!cfg.report.empty()) emit(text, cfg.report);
    return report.verdict.is_slant ? 0 : kExitNotSlant;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Spacelike curves in Minkowski 4-space: Frenet frames and B2-slant helices"};
    app.require_subcommand(1);
    Config cfg;
    const auto signs = CLI::IsMember({"+1", "-1", "1"});

    auto* an = app.add_subcommand("analyze", "Frame, curvatures and slant verdict of a curve CSV (s,x1,x2,x3,x4)");
    an->add_option("--input", cfg.input, "Curve CSV")->required();
    an->add_option("--report", cfg.report, "JSON report path (default: stdout)");
    an->add_option("--tol", cfg.tol, "Slant tolerance (default 1e-3)");
    an->add_option("--fd-step", cfg.fd_step, "Frame differencing step for framed CSV input (default 1e-4)");
    an->add_option("--grid-step", cfg.grid_step, "Analysis grid spacing for point input")->capture_default_str();
    an->add_option("--fit-width", cfg.fit_width, "Span in s of each local polynomial fit")->capture_default_str();
    an->add_option("--window", cfg.window, "Samples per local polynomial fit (overrides --fit-width)");
    an->add_option("--degree", cfg.degree, "Degree of the local polynomial fit")->check(CLI::Range(4, 12))->capture_default_str();

    auto* gen = app.add_subcommand("generate", "Integrate a slant helix from k1, k2, C, D");
    gen->add_option("--out", cfg.out, "Framed curve CSV path");
    gen->add_option("--report", cfg.report, "JSON report path (default: stdout)");
    gen->add_option("--step", cfg.step, "RK4 step")->capture_default_str();
    gen->add_option("--tol", cfg.tol, "Slant tolerance (default 1e-6)");
    gen->add_option("--eps1", cfg.eps1, "Sign of <N,N>")->check(signs)->capture_default_str();
    gen->add_option("--eps2", cfg.eps2, "Sign of <B2,B2>")->check(signs)->capture_default_str();
    gen->add_option("--k1", cfg.k1, "const:<v> or linear:<a>,<b>")->capture_default_str();
    gen->add_option("--k2", cfg.k2, "const:<v> or linear:<a>,<b>")->capture_default_str();
    gen->add_option("--C", cfg.C)->capture_default_str();
    gen->add_option("--D", cfg.D)->capture_default_str();
    gen->add_option("--s-min", cfg.s_min)->capture_default_str();
    gen->add_option("--s-max", cfg.s_max)->capture_default_str();

    auto* ver = app.add_subcommand("verify", "Slant verdict for a profile CSV (s,k1,k2,k3)");
    ver->add_option("--input", cfg.input, "Profile CSV")->required();
    ver->add_option("--report", cfg.report, "Also write the JSON report here");
    ver->add_option("--tol", cfg.tol, "Slant tolerance (default 1e-3)");
    ver->add_option("--eps1", cfg.eps1, "Sign of <N,N>")->check(signs)->capture_default_str();
    ver->add_option("--eps2", cfg.eps2, "Sign of <B2,B2>")->check(signs)->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitError;
    }

    try {
        if (an->parsed()) return analyze(cfg);
        if (gen->parsed()) return generate(cfg);
        return verify(cfg);
    } catch (const std::exception& e) {
        std::string msg = e.what();
        for (char& c : msg)
            if (c == '\n') c = ' ';
        std::cerr << "error: " << msg << '\n';
        return kExitError;
    }
}
