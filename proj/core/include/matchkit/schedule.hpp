#pragma once

#include <cstdint>

namespace matchkit {

/// Flat-cosine learning-rate schedule plus the three-phase augmentation
/// policy (warmup without advanced augmentation, dense span, tail with
/// everything off).
struct ScheduleConfig {
    int total_epochs = 60;
    int warmup_epochs_lr = 2;
    double flat_fraction = 0.5;  // share of the post-warmup budget held at base_lr
    double base_lr = 5e-4;
    double min_lr = 2.5e-4;

    int aug_warmup_epochs = 4;
    double dense_o2o_off_fraction = 0.5;
    int no_aug_tail_epochs = 2;

    // Per-parameter-group rates surfaced for configuration completeness;
    // lr_at() does not consume them.
    double backbone_lr = 0.0;
    double backbone_min_lr = 0.0;

    void validate() const;  // throws std::invalid_argument
};

struct AugState {
    bool advanced_aug_on = false;
    bool dense_o2o_on = false;

    bool operator==(const AugState&) const = default;
};

/// Learning rate at a continuous position in training, epoch_progress in
/// [0, 1]. Linear warmup to base_lr, flat plateau, cosine decay to min_lr;
/// exact at both joins and at the final step.
double lr_at(double epoch_progress, const ScheduleConfig& cfg);

/// Augmentation flags for an epoch in [0, total_epochs). Phases:
/// [0, aug_warmup) off; [aug_warmup, floor(off_fraction*total)) dense;
/// then advanced-only; last no_aug_tail_epochs off.
AugState aug_at(int epoch, const ScheduleConfig& cfg);

}  // namespace matchkit
