#pragma once

#include "slant4/profile.hpp"
#include "slant4/slant.hpp"

#include <json.hpp>

#include <filesystem>
#include <string_view>

namespace slant4 {

/// Report keys: is_slant, F_mean, F_spread, f_residual_max, degenerate_constant_ratio, axis,
/// axis_class, axis_norm_squared, B2_angle, B2_angle_variation, m.
nlohmann::ordered_json to_json(const SlantReport& report);

/// Reads `s,k1,k2,k3` with a header row into a sampled profile.
CurvatureProfile parse_profile_csv(std::string_view text, Signature sig);
CurvatureProfile load_profile_csv(const std::filesystem::path& path, Signature sig);

} // namespace slant4
