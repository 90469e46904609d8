#include "matchkit/matching.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace matchkit {

namespace {

// Cost assigned to padding rows when targets outnumber predictions. Real
// entries stay far below this (weights ~ units, box terms bounded).
constexpr double kPadCost = 1e6;

constexpr double kInf = std::numeric_limits<double>::infinity();

}  // namespace

void CostWeights::validate() const {
    if (!(w_cls >= 0.0) || !(w_l1 >= 0.0) || !(w_giou >= 0.0))
        throw std::invalid_argument("CostWeights: weights must be >= 0");
    if (w_cls == 0.0 && w_l1 == 0.0 && w_giou == 0.0)
        throw std::invalid_argument("CostWeights: at least one weight must be > 0");
}

CostMatrix cost_matrix(std::span<const Prediction> preds, std::span<const Target> targets,
                       const CostWeights& w) {
    w.validate();
    if (targets.empty()) throw std::invalid_argument("cost_matrix: no targets");
    for (const auto& t : targets)
        if (!is_valid(t.box)) throw std::invalid_argument("cost_matrix: invalid target box");
    for (const auto& p : preds)
        if (!is_valid(p.box) || !std::isfinite(p.score))
            throw std::invalid_argument("cost_matrix: invalid prediction");

    CostMatrix m{static_cast<int>(preds.size()), static_cast<int>(targets.size()), {}};
    m.values.resize(preds.size() * targets.size());
    for (int i = 0; i < m.n_preds; ++i) {
        for (int j = 0; j < m.n_targets; ++j) {
            m.at(i, j) = w.w_cls * (-preds[i].score) +
                         w.w_l1 * l1_distance(preds[i].box, targets[j].box) +
                         w.w_giou * (1.0 - giou(preds[i].box, targets[j].box));
        }
    }
    return m;
}

MatchResult hungarian(const CostMatrix& cost) {
    const int n_preds = cost.n_preds;
    const int n_targets = cost.n_targets;
    if (n_targets == 0) {
        MatchResult r;
        r.unmatched_predictions.resize(n_preds);
        std::iota(r.unmatched_predictions.begin(), r.unmatched_predictions.end(), 0);
        return r;
    }
    if (n_preds == 0) throw std::invalid_argument("hungarian: no predictions for targets");
    for (double v : cost.values)
        if (!std::isfinite(v)) throw std::invalid_argument("hungarian: non-finite cost");

    // Shortest-augmenting-path solver over rows = targets, columns =
    // (possibly padded) predictions; 1-based potentials u/v, p[j] = target
    // occupying column j.
    const int n = n_targets;
    const int m = std::max(n_preds, n_targets);
    const auto entry = [&](int target, int col) {
        return col < n_preds ? cost.at(col, target) : kPadCost;
    };

    std::vector<double> u(n + 1, 0.0), v(m + 1, 0.0);
    std::vector<int> p(m + 1, 0), way(m + 1, 0);
    for (int i = 1; i <= n; ++i) {
        p[0] = i;
        int j0 = 0;
        std::vector<double> minv(m + 1, kInf);
        std::vector<char> used(m + 1, 0);
        do {
            used[j0] = 1;
            const int i0 = p[j0];
            int j1 = 0;
            double delta = kInf;
            for (int j = 1; j <= m; ++j) {
                if (used[j]) continue;
                const double cur = entry(i0 - 1, j - 1) - u[i0] - v[j];
                if (cur < minv[j]) {
                    minv[j] = cur;
                    way[j] = j0;
                }
                if (minv[j] < delta) {
                    delta = minv[j];
                    j1 = j;
                }
            }
            for (int j = 0; j <= m; ++j) {
                if (used[j]) {
                    u[p[j]] += delta;
                    v[j] -= delta;
                } else {
                    minv[j] -= delta;
                }
            }
            j0 = j1;
        } while (p[j0] != 0);
        do {
            const int j1 = way[j0];
            p[j0] = p[j1];
            j0 = j1;
        } while (j0);
    }

    MatchResult r;
    std::vector<char> pred_used(n_preds, 0);
    for (int j = 1; j <= m; ++j) {
        if (p[j] == 0 || j > n_preds) continue;  // free column or padding
        const int pred = j - 1;
        const int target = p[j] - 1;
        r.pairs.emplace_back(pred, target);
        pred_used[pred] = 1;
        r.total_cost += cost.at(pred, target);
    }
    std::sort(r.pairs.begin(), r.pairs.end(),
              [](const auto& a, const auto& b) { return a.second < b.second; });
    for (int i = 0; i < n_preds; ++i)
        if (!pred_used[i]) r.unmatched_predictions.push_back(i);
    return r;
}

MatchResult o2m_assign(std::span<const Prediction> preds, std::span<const Target> targets,
                       const O2mParams& params) {
    if (params.k_max < 1) throw std::invalid_argument("o2m_assign: k_max must be >= 1");
    if (params.topk_for_dynamic_k < 1)
        throw std::invalid_argument("o2m_assign: topk_for_dynamic_k must be >= 1");
    const int n_preds = static_cast<int>(preds.size());
    const int n_targets = static_cast<int>(targets.size());

    MatchResult r;
    if (n_targets == 0 || n_preds == 0) {
        r.unmatched_predictions.resize(n_preds);
        std::iota(r.unmatched_predictions.begin(), r.unmatched_predictions.end(), 0);
        return r;
    }

    const CostMatrix cost = cost_matrix(preds, targets, params.weights);

    // claim[j] = the k_j cheapest predictions for target j.
    std::vector<std::vector<int>> claims(n_targets);
    std::vector<int> order(n_preds);
    std::vector<double> ious(n_preds);
    for (int j = 0; j < n_targets; ++j) {
        for (int i = 0; i < n_preds; ++i) ious[i] = iou(preds[i].box, targets[j].box);

        std::vector<double> top(ious);
        const int k_pool = std::min(params.topk_for_dynamic_k, n_preds);
        std::partial_sort(top.begin(), top.begin() + k_pool, top.end(), std::greater<>());
        const double iou_sum = std::accumulate(top.begin(), top.begin() + k_pool, 0.0);
        const int k_j = std::clamp(static_cast<int>(std::lround(iou_sum)), 1,
                                   std::min(params.k_max, n_preds));

        std::iota(order.begin(), order.end(), 0);
        std::sort(order.begin(), order.end(), [&](int a, int b) {
            if (cost.at(a, j) != cost.at(b, j)) return cost.at(a, j) < cost.at(b, j);
            return a < b;
        });
        claims[j].assign(order.begin(), order.begin() + k_j);
    }

    // A prediction claimed by several targets keeps its cheapest one
    // (lowest target index on ties).
    std::vector<int> kept_target(n_preds, -1);
    for (int j = 0; j < n_targets; ++j) {
        for (int i : claims[j]) {
            if (kept_target[i] < 0 || cost.at(i, j) < cost.at(i, kept_target[i]))
                kept_target[i] = j;
        }
    }

    std::vector<int> positives_per_target(n_targets, 0);
    for (int i = 0; i < n_preds; ++i)
        if (kept_target[i] >= 0) ++positives_per_target[kept_target[i]];

    // Orphan fallback: a target that lost every claim takes its cheapest
    // still-free prediction, in target index order.
    for (int j = 0; j < n_targets; ++j) {
        if (positives_per_target[j] > 0) continue;
        int best = -1;
        for (int i = 0; i < n_preds; ++i) {
            if (kept_target[i] >= 0) continue;
            if (best < 0 || cost.at(i, j) < cost.at(best, j)) best = i;
        }
        if (best >= 0) {
            kept_target[best] = j;
            ++positives_per_target[j];
        }
    }

    for (int j = 0; j < n_targets; ++j) {
        for (int i = 0; i < n_preds; ++i) {
            if (kept_target[i] == j) {
                r.pairs.emplace_back(i, j);
                r.total_cost += cost.at(i, j);
            }
        }
    }
    for (int i = 0; i < n_preds; ++i)
        if (kept_target[i] < 0) r.unmatched_predictions.push_back(i);
    return r;
}

int count_positives(const MatchResult& result) {
    return static_cast<int>(result.pairs.size());
}

}  // namespace matchkit
