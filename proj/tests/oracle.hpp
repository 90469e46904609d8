// Reference implementations used only by tests. Everything here is written
// directly from the defining formulas, independent of the library code it
// checks, so a bug would have to appear twice to slip through.
#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <stdexcept>
#include <vector>

namespace oracle {

// ---- classification losses, transcribed term by term ----

inline double focal(double p, int y, double alpha, double gamma) {
    if (y == 1) return -alpha * std::pow(1.0 - p, gamma) * std::log(p);
    return -(1.0 - alpha) * std::pow(p, gamma) * std::log(1.0 - p);
}

inline double varifocal(double p, double q, double alpha, double gamma) {
    if (q > 0.0) return -q * (q * std::log(p) + (1.0 - q) * std::log(1.0 - p));
    return -alpha * std::pow(p, gamma) * std::log(1.0 - p);
}

inline double mal(double p, double q, int y, double gamma) {
    if (y == 1) {
        const double t = std::pow(q, gamma);
        return -t * std::log(p) - (1.0 - t) * std::log(1.0 - p);
    }
    return -std::pow(p, gamma) * std::log(1.0 - p);
}

// ---- numeric helpers ----

inline double central_diff(const std::function<double(double)>& f, double x, double h) {
    return (f(x + h) - f(x - h)) / (2.0 * h);
}

// Argmin of a convex scalar function on (lo, hi) by ternary search.
inline double ternary_argmin(const std::function<double(double)>& f, double lo, double hi,
                             int iters = 200) {
    for (int i = 0; i < iters; ++i) {
        const double m1 = lo + (hi - lo) / 3.0;
        const double m2 = hi - (hi - lo) / 3.0;
        if (f(m1) < f(m2)) hi = m2; else lo = m1;
    }
    return 0.5 * (lo + hi);
}

// ---- exhaustive assignment search ----

// Minimum total cost over all injections target -> distinct prediction.
// cost is indexed [prediction][target]; requires n_preds >= n_targets.
inline double min_assignment_cost(const std::vector<std::vector<double>>& cost) {
    const int n_preds = static_cast<int>(cost.size());
    const int n_targets = n_preds == 0 ? 0 : static_cast<int>(cost[0].size());
    if (n_targets == 0) return 0.0;
    if (n_preds < n_targets) throw std::invalid_argument("needs n_preds >= n_targets");

    double best = std::numeric_limits<double>::infinity();
    const std::function<void(int, std::uint32_t, double)> rec =
        [&](int target, std::uint32_t used, double acc) {
            if (target == n_targets) {
                best = std::min(best, acc);
                return;
            }
            for (int p = 0; p < n_preds; ++p) {
                if (used & (1u << p)) continue;
                rec(target + 1, used | (1u << p), acc + cost[p][target]);
            }
        };
    rec(0, 0u, 0.0);
    return best;
}

// ---- plain box arithmetic on corner tuples (x0, y0, x1, y1) ----

struct Corners {
    double x0, y0, x1, y1;
    double area() const { return std::max(0.0, x1 - x0) * std::max(0.0, y1 - y0); }
};

inline double corners_iou(const Corners& a, const Corners& b) {
    const double iw = std::min(a.x1, b.x1) - std::max(a.x0, b.x0);
    const double ih = std::min(a.y1, b.y1) - std::max(a.y0, b.y0);
    const double inter = std::max(0.0, iw) * std::max(0.0, ih);
    const double uni = a.area() + b.area() - inter;
    return uni > 0.0 ? inter / uni : 0.0;
}

inline double corners_giou(const Corners& a, const Corners& b) {
    const double iw = std::min(a.x1, b.x1) - std::max(a.x0, b.x0);
    const double ih = std::min(a.y1, b.y1) - std::max(a.y0, b.y0);
    const double inter = std::max(0.0, iw) * std::max(0.0, ih);
    const double uni = a.area() + b.area() - inter;
    const double ew = std::max(a.x1, b.x1) - std::min(a.x0, b.x0);
    const double eh = std::max(a.y1, b.y1) - std::min(a.y0, b.y0);
    const double enclose = ew * eh;
    if (enclose <= 0.0) return 0.0;
    return (uni > 0.0 ? inter / uni : 0.0) - (enclose - uni) / enclose;
}

}  // namespace oracle
