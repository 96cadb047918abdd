#pragma once

#include <cmath>
#include <stdexcept>
#include <string>

namespace corrsens {

// Malformed or out-of-contract input (bad CSV, non-finite coordinates,
// insufficient data, ...). The CLI maps this to exit code 1.
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A dataset whose variance along one axis is numerically zero; the PCC and
// everything downstream of it is undefined for such data.
class DegenerateVarianceError : public InputError {
public:
    DegenerateVarianceError() : InputError("degenerate variance") {}
    explicit DegenerateVarianceError(const std::string& what) : InputError(what) {}
};

// A broken internal invariant (non-converging continued fraction, correlation
// escaping [-1,1] beyond tolerance). The CLI maps this to exit code 2.
class InternalError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

struct Point2 {
    double x = 0.0;
    double y = 0.0;

    [[nodiscard]] bool finite() const noexcept {
        return std::isfinite(x) && std::isfinite(y);
    }
};

// Axis-aligned rectangle [lx,ux] x [ly,uy] bounding admissible new points.
// Degenerate (zero-width or zero-height) rectangles are permitted.
struct FeasibleRegion {
    double lx = 0.0;
    double ux = 0.0;
    double ly = 0.0;
    double uy = 0.0;

    void require_valid() const {
        if (!std::isfinite(lx) || !std::isfinite(ux) || !std::isfinite(ly) ||
            !std::isfinite(uy)) {
            throw InputError("feasible region bounds must be finite");
        }
        if (lx > ux || ly > uy) {
            throw InputError("feasible region requires lx <= ux and ly <= uy");
        }
    }

    [[nodiscard]] bool contains(Point2 p) const noexcept {
        return p.x >= lx && p.x <= ux && p.y >= ly && p.y <= uy;
    }

    [[nodiscard]] double span_x() const noexcept { return ux - lx; }
    [[nodiscard]] double span_y() const noexcept { return uy - ly; }
};

}  // namespace corrsens
