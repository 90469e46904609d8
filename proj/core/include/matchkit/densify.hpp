#pragma once

#include <cstdint>
#include <vector>

#include "matchkit/schedule.hpp"
#include "matchkit/types.hpp"

namespace matchkit {

/// Per-minibatch probabilities of the two target-densifying augmentations.
struct AugPolicy {
    double mosaic_prob = 0.5;
    double mixup_prob = 0.5;
    std::uint64_t seed = 0;

    void validate() const;  // throws std::invalid_argument
};

/// Approximate average-targets-per-image presets (~10 / ~25 / ~50): the
/// baseline applies nothing, the default the standard probabilities, the
/// max both augmentations every minibatch.
enum class DensifyPreset { kBaseline, kDefault, kMax };

AugPolicy preset_policy(DensifyPreset preset, std::uint64_t seed);

/// Mosaic by quadrant stitching: each input is scaled by 0.5 and placed in
/// one quadrant (a top-left, b top-right, c bottom-left, d bottom-right).
/// Output canvas equals a's canvas; boxes clipped to zero area are dropped.
ImageAnnotations mosaic4(const ImageAnnotations& a, const ImageAnnotations& b,
                         const ImageAnnotations& c, const ImageAnnotations& d);

/// Annotation union of two images on the same canvas. `ratio` is the raster
/// blend weight and never affects the target lists.
ImageAnnotations mixup(const ImageAnnotations& a, const ImageAnnotations& b, double ratio);

/// Apply the policy to one minibatch. The RNG is derived from
/// (policy.seed, batch_index); each augmentation fires at most once per
/// minibatch. Identity when the schedule has Dense O2O disabled.
std::vector<ImageAnnotations> apply_policy(const std::vector<ImageAnnotations>& batch,
                                           const AugPolicy& policy, const AugState& flags,
                                           std::uint64_t batch_index);

}  // namespace matchkit
