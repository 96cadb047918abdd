#pragma once

#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "corrsens/types.hpp"

namespace corrsens {

// Incremental reader for the dataset format: a header line "x,y", one
// decimal pair per row, '#'-prefixed comment lines skipped, LF or CRLF
// accepted. Errors name the offending 1-based line.
class CsvPointReader {
public:
    explicit CsvPointReader(std::istream& in) : in_(in) {}

    // next data row, or nullopt at end of input
    std::optional<Point2> next();

    [[nodiscard]] std::size_t line() const noexcept { return line_; }

private:
    std::istream& in_;
    std::size_t line_ = 0;
    bool header_seen_ = false;
};

[[nodiscard]] std::vector<Point2> read_points_csv(std::istream& in);

// Header plus one row per point, 17 significant digits (lossless round-trip).
void write_points_csv(std::ostream& out, std::span<const Point2> points);

// 17-significant-digit decimal rendering of a double.
[[nodiscard]] std::string format_double(double v);

}  // namespace corrsens
