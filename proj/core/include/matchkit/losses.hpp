#pragma once

#include <span>
#include <vector>

namespace matchkit {

enum class LossVariant { kFocal, kVarifocal, kMatchability };

/// Focusing/balance parameters shared by the three classification losses.
/// The matchability-aware variant ignores alpha.
struct LossParams {
    LossVariant variant = LossVariant::kMatchability;
    double gamma = 1.5;
    double alpha = 0.75;

    static LossParams focal_defaults() { return {LossVariant::kFocal, 2.0, 0.25}; }
    static LossParams varifocal_defaults() { return {LossVariant::kVarifocal, 2.0, 0.75}; }
    static LossParams mal_defaults() { return {LossVariant::kMatchability, 1.5, 0.75}; }

    void validate() const;  // throws std::invalid_argument
};

/// Scalar loss value plus its analytic derivative w.r.t. the predicted
/// probability p. The soft label q is treated as a constant.
struct LossEval {
    double value = 0.0;
    double dvalue_dp = 0.0;
};

/// Probabilities are clamped to [kProbEps, 1 - kProbEps] before logs.
inline constexpr double kProbEps = 1e-7;

/// Confidence-modulated cross-entropy; y selects the foreground/background
/// branch. p must lie in [0, 1], y in {0, 1}.
LossEval focal_loss(double p, int y, const LossParams& params);

/// IoU-weighted classification loss. q > 0 selects the foreground branch
/// with soft label q; q = 0 selects the focal-shaped background branch.
LossEval varifocal_loss(double p, double q, const LossParams& params);

/// Matchability-aware loss: foreground soft label q^gamma, background
/// p^gamma-modulated cross-entropy with no alpha. y = 0 requires q = 0.
LossEval mal(double p, double q, int y, const LossParams& params);

/// Uniform entry point used by the trainer and landscape sampling.
/// y = 1: foreground with soft label q; y = 0: background (q ignored,
/// treated as 0). Focal ignores q entirely.
LossEval eval_loss(double p, double q, int y, const LossParams& params);

/// Loss surface for y = 1: row i, column j holds loss(p_grid[j], q_grid[i]).
/// Grids must be nonempty, p strictly inside (0, 1), q inside [0, 1].
std::vector<std::vector<double>> landscape(const LossParams& params,
                                           std::span<const double> p_grid,
                                           std::span<const double> q_grid);

}  // namespace matchkit
