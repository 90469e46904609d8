#pragma once

#include <optional>

namespace matchkit {

/// Axis-aligned box in center-size form, normalized canvas units.
/// Corner form (x0, y0, x1, y1) is derived, never stored.
struct Box {
    double cx = 0.0;
    double cy = 0.0;
    double w = 0.0;
    double h = 0.0;

    double x0() const { return cx - 0.5 * w; }
    double y0() const { return cy - 0.5 * h; }
    double x1() const { return cx + 0.5 * w; }
    double y1() const { return cy + 0.5 * h; }
    double area() const { return w * h; }

    static Box from_corners(double x0, double y0, double x1, double y1);

    bool operator==(const Box&) const = default;
};

/// Finite fields and non-negative extents.
bool is_valid(const Box& b);

/// Intersection over union in [0, 1]. Zero union area yields 0 by convention
/// (clipped mosaic boxes must flow through match statistics).
double iou(const Box& a, const Box& b);

/// Generalized IoU in (-1, 1]: iou - (enclosing - union) / enclosing.
/// Degenerate enclosing area yields 0 by convention.
double giou(const Box& a, const Box& b);

/// L1 distance in center-size coordinates: |dcx| + |dcy| + |dw| + |dh|.
double l1_distance(const Box& a, const Box& b);

/// Boxes whose post-clip area falls below this fraction of the canvas are
/// dropped from annotation sets.
inline constexpr double kMinBoxArea = 1e-6;

/// Scale center and size by `scale` (> 0), then offset the center by
/// (dx, dy). The result is clipped to the unit canvas in corner form;
/// returns nullopt when the clipped area falls below kMinBoxArea.
std::optional<Box> transform(const Box& b, double scale, double dx, double dy);

}  // namespace matchkit
