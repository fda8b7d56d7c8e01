#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace slant4::detail {

struct CsvTable {
    std::vector<std::string> header;
    std::vector<std::vector<double>> rows;
};

/// Header row plus rows of reals. Throws Error{ParseError}.
CsvTable parse_csv(std::string_view text);

std::string read_file(const std::filesystem::path& path);

/// Shortest representation that round-trips a double.
std::string format_real(double x);

} // namespace slant4::detail
