#include "corrsens/csv.hpp"

#include <cctype>
#include <charconv>
#include <cstdio>
#include <istream>
#include <ostream>

namespace corrsens {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
        s.remove_prefix(1);
    }
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
        s.remove_suffix(1);
    }
    return s;
}

double parse_field(std::string_view field, std::size_t line) {
    field = trim(field);
    double value = 0.0;
    const auto [ptr, ec] =
        std::from_chars(field.data(), field.data() + field.size(), value);
    if (ec != std::errc{} || ptr != field.data() + field.size()) {
        throw InputError("CSV line " + std::to_string(line) +
                         ": not a number: '" + std::string(field) + "'");
    }
    return value;
}

}  // namespace

std::optional<Point2> CsvPointReader::next() {
    std::string raw;
    while (std::getline(in_, raw)) {
        ++line_;
        if (!raw.empty() && raw.back() == '\r') {
            raw.pop_back();
        }
        const std::string_view stripped = trim(raw);
        if (stripped.empty() || stripped.front() == '#') {
            continue;
        }
        if (!header_seen_) {
            const std::size_t comma = stripped.find(',');
            if (comma == std::string_view::npos ||
                trim(stripped.substr(0, comma)) != "x" ||
                trim(stripped.substr(comma + 1)) != "y") {
                throw InputError("CSV line " + std::to_string(line_) +
                                 ": expected header 'x,y'");
            }
            header_seen_ = true;
            continue;
        }
        const std::size_t comma = stripped.find(',');
        if (comma == std::string_view::npos ||
            stripped.find(',', comma + 1) != std::string_view::npos) {
            throw InputError("CSV line " + std::to_string(line_) +
                             ": expected exactly two fields");
        }
        Point2 p;
        p.x = parse_field(stripped.substr(0, comma), line_);
        p.y = parse_field(stripped.substr(comma + 1), line_);
        if (!p.finite()) {
            throw InputError("CSV line " + std::to_string(line_) +
                             ": non-finite coordinate");
        }
        return p;
    }
    if (!header_seen_) {
        throw InputError("CSV input is empty (missing 'x,y' header)");
    }
    return std::nullopt;
}

std::vector<Point2> read_points_csv(std::istream& in) {
    CsvPointReader reader(in);
    std::vector<Point2> points;
    while (auto p = reader.next()) {
        points.push_back(*p);
    }
    return points;
}

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

void write_points_csv(std::ostream& out, std::span<const Point2> points) {
    out << "x,y\n";
    for (const Point2& p : points) {
        out << format_double(p.x) << ',' << format_double(p.y) << '\n';
    }
}

}  // namespace corrsens
