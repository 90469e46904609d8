#include "matchkit/schedule.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace matchkit {

void ScheduleConfig::validate() const {
    if (total_epochs <= 0) throw std::invalid_argument("schedule: total_epochs must be > 0");
    if (warmup_epochs_lr < 0 || warmup_epochs_lr >= total_epochs)
        throw std::invalid_argument("schedule: warmup_epochs_lr out of range");
    if (!(flat_fraction > 0.0 && flat_fraction < 1.0))
        throw std::invalid_argument("schedule: flat_fraction must lie in (0, 1)");
    if (!(base_lr > 0.0)) throw std::invalid_argument("schedule: base_lr must be > 0");
    if (!(min_lr > 0.0 && min_lr <= base_lr))
        throw std::invalid_argument("schedule: min_lr must lie in (0, base_lr]");
    if (aug_warmup_epochs < 0 || no_aug_tail_epochs < 0)
        throw std::invalid_argument("schedule: negative augmentation spans");
    if (aug_warmup_epochs + no_aug_tail_epochs >= total_epochs)
        throw std::invalid_argument("schedule: aug warmup + tail must be < total_epochs");
    if (!(dense_o2o_off_fraction >= 0.0 && dense_o2o_off_fraction <= 1.0))
        throw std::invalid_argument("schedule: dense_o2o_off_fraction out of range");
}

double lr_at(double epoch_progress, const ScheduleConfig& cfg) {
    cfg.validate();
    if (!(epoch_progress >= 0.0 && epoch_progress <= 1.0))
        throw std::invalid_argument("lr_at: epoch_progress must lie in [0, 1]");

    const double warmup_end = static_cast<double>(cfg.warmup_epochs_lr) / cfg.total_epochs;
    if (warmup_end > 0.0 && epoch_progress < warmup_end)
        return cfg.base_lr * (epoch_progress / warmup_end);

    const double flat_end = warmup_end + cfg.flat_fraction * (1.0 - warmup_end);
    if (epoch_progress <= flat_end) return cfg.base_lr;

    const double s = (epoch_progress - flat_end) / (1.0 - flat_end);
    if (s >= 1.0) return cfg.min_lr;
    const double cosine = 0.5 * (1.0 + std::cos(M_PI * s));
    return cfg.min_lr + (cfg.base_lr - cfg.min_lr) * cosine;
}

AugState aug_at(int epoch, const ScheduleConfig& cfg) {
    cfg.validate();
    if (epoch < 0 || epoch >= cfg.total_epochs)
        throw std::invalid_argument("aug_at: epoch out of range");

    const int dense_start = cfg.aug_warmup_epochs;
    const int tail_start = cfg.total_epochs - cfg.no_aug_tail_epochs;
    const int dense_end = std::clamp(
        static_cast<int>(std::floor(cfg.dense_o2o_off_fraction * cfg.total_epochs)),
        dense_start, tail_start);

    if (epoch < dense_start) return {false, false};
    if (epoch < dense_end) return {true, true};
    if (epoch < tail_start) return {true, false};
    return {false, false};
}

}  // namespace matchkit
