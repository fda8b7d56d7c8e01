#include "slant4/io.hpp"

#include "csv.hpp"
#include "slant4/error.hpp"

namespace slant4 {

namespace {

nlohmann::ordered_json optional_number(const std::optional<double>& v) {
    if (v) return *v;
    return nullptr;
}

} // namespace

nlohmann::ordered_json to_json(const SlantReport& report) {
    nlohmann::ordered_json j;
    j["is_slant"] = report.verdict.is_slant;
    j["F_mean"] = report.verdict.F_mean;
    j["F_spread"] = report.verdict.F_spread;
    j["f_residual_max"] = report.verdict.f_residual_max;
    j["degenerate_constant_ratio"] = report.verdict.degenerate_constant_ratio;
    const auto& u = report.axis_at_start.components();
    j["axis"] = nlohmann::ordered_json::array({u[0], u[1], u[2], u[3]});
    j["axis_class"] = to_string(report.axis_class);
    j["axis_norm_squared"] = report.axis_norm_squared;
    j["B2_angle"] = report.B2_angle;
    j["B2_angle_variation"] = optional_number(report.B2_angle_variation);
    j["m"] = optional_number(report.m);
    return j;
}

CurvatureProfile parse_profile_csv(std::string_view text, Signature sig) {
    const auto table = detail::parse_csv(text);
    if (table.header != std::vector<std::string>{"s", "k1", "k2", "k3"}) throw Error(ErrorKind::ParseError, "profile header must be s,k1,k2,k3");
    std::vector<double> s;
    std::vector<CurvatureSample> k;
    for (const auto& row : table.rows) {
        s.push_back(row[0]);
        k.push_back({row[1], row[2], row[3]});
    }
    return CurvatureProfile::sampled(std::move(s), std::move(k), sig);
}

CurvatureProfile load_profile_csv(const std::filesystem::path& path, Signature sig) { return parse_profile_csv(detail::read_file(path), sig); }

} // namespace slant4
