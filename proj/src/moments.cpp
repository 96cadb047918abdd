#include "corrsens/moments.hpp"

#include <cmath>
#include <string>

namespace corrsens {

OnlineMoments update(const OnlineMoments& m, Point2 p) {
    if (!p.finite()) {
        throw InputError("non-finite coordinate in update");
    }
    OnlineMoments out;
    out.count = m.count + 1;
    const double inv_n = 1.0 / static_cast<double>(out.count);
    // deltas against the old means
    const double dx = p.x - m.mean_x;
    const double dy = p.y - m.mean_y;
    out.mean_x = m.mean_x + dx * inv_n;
    out.mean_y = m.mean_y + dy * inv_n;
    // deltas against the new means
    const double dx2 = p.x - out.mean_x;
    const double dy2 = p.y - out.mean_y;
    out.m2_x = m.m2_x + dx * dx2;
    out.m2_y = m.m2_y + dy * dy2;
    out.c_xy = m.c_xy + dx * dy2;
    return out;
}

OnlineMoments from_dataset(std::span<const Point2> points) {
    OnlineMoments acc;
    for (std::size_t i = 0; i < points.size(); ++i) {
        if (!points[i].finite()) {
            throw InputError("non-finite coordinate at index " +
                             std::to_string(i));
        }
        acc = update(acc, points[i]);
    }
    return acc;
}

bool degenerate_axis(double m2, double mean, std::uint64_t count) noexcept {
    const double floor =
        1e-24 * std::max(1.0, mean * mean) * static_cast<double>(count);
    return m2 <= floor;
}

MomentSummary summarize(const OnlineMoments& m) {
    if (m.count < 2) {
        throw InputError("insufficient data: at least 2 points required");
    }
    if (degenerate_axis(m.m2_x, m.mean_x, m.count) ||
        degenerate_axis(m.m2_y, m.mean_y, m.count)) {
        throw DegenerateVarianceError();
    }
    const double n = static_cast<double>(m.count);
    MomentSummary s;
    s.count = m.count;
    s.mean_x = m.mean_x;
    s.mean_y = m.mean_y;
    s.sx = std::sqrt(m.m2_x / n);
    s.sy = std::sqrt(m.m2_y / n);
    s.sxy = m.c_xy / n;
    return s;
}

}  // namespace corrsens
