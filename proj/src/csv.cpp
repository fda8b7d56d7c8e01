#include "csv.hpp"

#include "slant4/error.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

namespace slant4::detail {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
    return s;
}

std::vector<std::string_view> split(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    while (true) {
        const auto comma = line.find(',', start);
        out.push_back(trim(line.substr(start, comma - start)));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return out;
}

} // namespace

CsvTable parse_csv(std::string_view text) {
    if (text.size() >= 3 && text.substr(0, 3) == "\xEF\xBB\xBF") text.remove_prefix(3);
    CsvTable table;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        auto nl = text.find('\n', pos);
        if (nl == std::string_view::npos) nl = text.size();
        const auto line = trim(text.substr(pos, nl - pos));
        pos = nl + 1;
        ++line_no;
        if (line.empty()) continue;
        const auto fields = split(line);
        if (table.header.empty()) {
            for (auto f : fields) table.header.emplace_back(f);
            continue;
        }
        if (fields.size() != table.header.size())
            throw Error(ErrorKind::ParseError, "line " + std::to_string(line_no) + ": expected " + std::to_string(table.header.size()) +
                                                   " fields, got " + std::to_string(fields.size()));
        std::vector<double> row;
        row.reserve(fields.size());
        for (auto f : fields) {
            double v = 0.0;
            const char* first = f.data();
            if (!f.empty() && *first == '+') ++first;
            const auto [ptr, ec] = std::from_chars(first, f.data() + f.size(), v);
            if (f.empty() || ec != std::errc{} || ptr != f.data() + f.size() || !std::isfinite(v))
                throw Error(ErrorKind::ParseError, "line " + std::to_string(line_no) + ": bad number '" + std::string(f) + "'");
            row.push_back(v);
        }
        table.rows.push_back(std::move(row));
    }
    if (table.header.empty()) throw Error(ErrorKind::ParseError, "empty file: header row required");
    return table;
}

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorKind::IoError, "cannot open " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string format_real(double x) {
    std::array<char, 32> buf{};
    const auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), x);
    return std::string(buf.data(), ptr);
}

} // namespace slant4::detail
