#pragma once

#include <cstdint>
#include <vector>

#include "matchkit/dataset.hpp"
#include "matchkit/types.hpp"

namespace matchkit {

/// One synthetic image worth of predictions and targets.
struct Scene {
    std::vector<Prediction> preds;
    std::vector<Target> targets;
};

/// Knobs of the synthetic prediction model: targets uniform in the canvas
/// within size bounds; predictions are jittered target copies (confidence
/// anti-correlated with the jitter) plus low-confidence uniform distractors.
struct SynthSceneParams {
    int n_targets = 4;
    int n_preds = 30;
    double noise = 0.35;
    double min_size = 0.08;
    double max_size = 0.35;
};

Scene synth_scene(const SynthSceneParams& params, std::uint64_t seed);

/// Targets only, for datasets and the toy trainer.
std::vector<Target> synth_targets(int n, double min_size, double max_size,
                                  std::uint64_t seed);

/// Synthetic COCO-compatible dataset on a 512x512 canvas with a single
/// foreground category; target counts uniform in [targets_min, targets_max].
Dataset synth_dataset(int n_images, int targets_min, int targets_max, std::uint64_t seed);

}  // namespace matchkit
