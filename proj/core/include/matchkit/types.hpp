#pragma once

#include <string>
#include <vector>

#include "matchkit/geometry.hpp"

namespace matchkit {

/// Ground-truth box plus integer class label.
struct Target {
    Box box;
    int label = 0;

    bool operator==(const Target&) const = default;
};

/// Predicted box plus foreground probability (single foreground class).
struct Prediction {
    Box box;
    double score = 0.0;

    bool operator==(const Prediction&) const = default;
};

/// Per-image annotation set. Boxes are normalized; canvas dimensions are
/// carried in pixels for raster work and COCO round-trips.
struct ImageAnnotations {
    std::string id;
    int width = 0;
    int height = 0;
    std::vector<Target> targets;

    bool operator==(const ImageAnnotations&) const = default;
};

}  // namespace matchkit
