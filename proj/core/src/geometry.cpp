#include "matchkit/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace matchkit {

Box Box::from_corners(double x0, double y0, double x1, double y1) {
    return Box{0.5 * (x0 + x1), 0.5 * (y0 + y1), x1 - x0, y1 - y0};
}

bool is_valid(const Box& b) {
    return std::isfinite(b.cx) && std::isfinite(b.cy) && std::isfinite(b.w) &&
           std::isfinite(b.h) && b.w >= 0.0 && b.h >= 0.0;
}

namespace {

double intersection_area(const Box& a, const Box& b) {
    const double iw = std::min(a.x1(), b.x1()) - std::max(a.x0(), b.x0());
    if (iw <= 0.0) return 0.0;
    const double ih = std::min(a.y1(), b.y1()) - std::max(a.y0(), b.y0());
    if (ih <= 0.0) return 0.0;
    return iw * ih;
}

void require_valid(const Box& a, const Box& b) {
    if (!is_valid(a) || !is_valid(b)) throw std::invalid_argument("invalid box");
}

}  // namespace

double iou(const Box& a, const Box& b) {
    require_valid(a, b);
    const double inter = intersection_area(a, b);
    const double uni = a.area() + b.area() - inter;
    if (uni <= 0.0) return 0.0;
    return inter / uni;
}

double giou(const Box& a, const Box& b) {
    require_valid(a, b);
    const double inter = intersection_area(a, b);
    const double uni = a.area() + b.area() - inter;
    const double ew = std::max(a.x1(), b.x1()) - std::min(a.x0(), b.x0());
    const double eh = std::max(a.y1(), b.y1()) - std::min(a.y0(), b.y0());
    const double enclose = ew * eh;
    if (enclose <= 0.0) return 0.0;
    const double i = uni > 0.0 ? inter / uni : 0.0;
    return i - (enclose - uni) / enclose;
}

double l1_distance(const Box& a, const Box& b) {
    return std::abs(a.cx - b.cx) + std::abs(a.cy - b.cy) + std::abs(a.w - b.w) +
           std::abs(a.h - b.h);
}

std::optional<Box> transform(const Box& b, double scale, double dx, double dy) {
    if (!is_valid(b) || !(scale > 0.0) || !std::isfinite(dx) || !std::isfinite(dy))
        throw std::invalid_argument("transform: invalid box or parameters");

    const Box mapped{b.cx * scale + dx, b.cy * scale + dy, b.w * scale, b.h * scale};

    const double x0 = std::clamp(mapped.x0(), 0.0, 1.0);
    const double y0 = std::clamp(mapped.y0(), 0.0, 1.0);
    const double x1 = std::clamp(mapped.x1(), 0.0, 1.0);
    const double y1 = std::clamp(mapped.y1(), 0.0, 1.0);

    const Box clipped = Box::from_corners(x0, y0, x1, y1);
    if (clipped.area() < kMinBoxArea) return std::nullopt;
    return clipped;
}

}  // namespace matchkit
