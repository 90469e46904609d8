#pragma once

#include <span>
#include <utility>
#include <vector>

#include "matchkit/types.hpp"

namespace matchkit {

/// Weights of the matching cost terms. At least one must be positive.
struct CostWeights {
    double w_cls = 2.0;
    double w_l1 = 5.0;
    double w_giou = 2.0;

    void validate() const;  // throws std::invalid_argument
};

/// Dense cost matrix, row-major over predictions.
struct CostMatrix {
    int n_preds = 0;
    int n_targets = 0;
    std::vector<double> values;

    double at(int pred, int target) const { return values[pred * n_targets + target]; }
    double& at(int pred, int target) { return values[pred * n_targets + target]; }
};

/// Positive pairs plus the leftover predictions for one image.
/// `pairs` holds (prediction index, target index), sorted by target then
/// prediction; pairs and unmatched_predictions partition the predictions.
struct MatchResult {
    std::vector<std::pair<int, int>> pairs;
    std::vector<int> unmatched_predictions;
    double total_cost = 0.0;
};

/// Entry (i, j) = w_cls * (-score_i) + w_l1 * L1(box_i, box_j)
///              + w_giou * (1 - giou(box_i, box_j)).
/// Targets must be nonempty; predictions may be empty (0 x n matrix).
CostMatrix cost_matrix(std::span<const Prediction> preds, std::span<const Target> targets,
                       const CostWeights& w);

/// Minimum-total-cost one-to-one assignment covering every target.
/// When predictions outnumber targets the extras go to
/// unmatched_predictions; when targets outnumber predictions, dummy
/// predictions at prohibitive cost fill in and the targets they absorb are
/// simply absent from `pairs`. total_cost sums real pairs only.
MatchResult hungarian(const CostMatrix& cost);

/// SimOTA-style one-to-many assignment.
struct O2mParams {
    int k_max = 10;
    int topk_for_dynamic_k = 10;
    CostWeights weights;
};

/// Each target j receives k_j = clamp(round(sum of its top-k IoUs), 1, k_max)
/// lowest-cost predictions; a prediction claimed by several targets keeps
/// its cheapest one, and a target orphaned by that resolution falls back to
/// its cheapest still-free prediction so every target keeps at least one
/// positive whenever predictions suffice.
MatchResult o2m_assign(std::span<const Prediction> preds, std::span<const Target> targets,
                       const O2mParams& params);

int count_positives(const MatchResult& result);

}  // namespace matchkit
