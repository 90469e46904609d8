#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "matchkit/types.hpp"

namespace matchkit {

/// Annotated image collection with its label map. Every target label must
/// exist in `categories`.
struct Dataset {
    enum class Provenance { kCocoJson, kSynthetic };

    std::vector<ImageAnnotations> images;
    std::map<int, std::string> categories;
    Provenance provenance = Provenance::kSynthetic;
    std::uint64_t seed = 0;  // meaningful for synthetic provenance

    double mean_targets_per_image() const;
};

struct CocoLoadReport {
    int dropped_boxes = 0;
};

class CocoError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Load COCO-format annotations: images[{id,width,height}],
/// annotations[{image_id,bbox:[x,y,w,h],category_id}], categories[{id,name}].
/// Pixel bboxes are normalized by the image dimensions; degenerate boxes
/// are dropped and counted, structural problems throw CocoError naming the
/// offending record.
Dataset load_coco(const std::filesystem::path& path, CocoLoadReport* report = nullptr);

/// Inverse of load_coco; bboxes denormalized back to pixels.
void save_coco(const Dataset& ds, const std::filesystem::path& path);

}  // namespace matchkit
