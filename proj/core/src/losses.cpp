#include "matchkit/losses.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace matchkit {

void LossParams::validate() const {
    if (!(gamma > 0.0)) throw std::invalid_argument("LossParams: gamma must be > 0");
    if (!(alpha >= 0.0 && alpha <= 1.0))
        throw std::invalid_argument("LossParams: alpha must be in [0, 1]");
}

namespace {

double clamp_prob(double p) {
    if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("p must be in [0, 1]");
    return std::clamp(p, kProbEps, 1.0 - kProbEps);
}

void check_q(double q) {
    if (!(q >= 0.0 && q <= 1.0)) throw std::invalid_argument("q must be in [0, 1]");
}

void check_y(int y) {
    if (y != 0 && y != 1) throw std::invalid_argument("y must be 0 or 1");
}

// Background branch shared by focal (up to alpha) and mal: -c * p^g * log(1-p).
LossEval negative_branch(double p, double coeff, double gamma) {
    const double pg = std::pow(p, gamma);
    const double log1mp = std::log(1.0 - p);
    return {-coeff * pg * log1mp,
            -coeff * (gamma * std::pow(p, gamma - 1.0) * log1mp - pg / (1.0 - p))};
}

// Soft-target cross-entropy: -t*log(p) - (1-t)*log(1-p), minimized at p = t.
LossEval soft_cross_entropy(double p, double t) {
    return {-t * std::log(p) - (1.0 - t) * std::log(1.0 - p),
            -t / p + (1.0 - t) / (1.0 - p)};
}

}  // namespace

LossEval focal_loss(double p, int y, const LossParams& params) {
    params.validate();
    check_y(y);
    p = clamp_prob(p);
    if (y == 1) {
        const double om = 1.0 - p;
        const double omg = std::pow(om, params.gamma);
        const double logp = std::log(p);
        return {-params.alpha * omg * logp,
                params.alpha * (params.gamma * std::pow(om, params.gamma - 1.0) * logp -
                                omg / p)};
    }
    return negative_branch(p, 1.0 - params.alpha, params.gamma);
}

LossEval varifocal_loss(double p, double q, const LossParams& params) {
    params.validate();
    check_q(q);
    p = clamp_prob(p);
    if (q > 0.0) {
        const LossEval ce = soft_cross_entropy(p, q);
        return {q * ce.value, q * ce.dvalue_dp};
    }
    return negative_branch(p, params.alpha, params.gamma);
}

LossEval mal(double p, double q, int y, const LossParams& params) {
    params.validate();
    check_q(q);
    check_y(y);
    if (y == 0 && q > 0.0)
        throw std::invalid_argument("mal: background sample (y=0) cannot carry q > 0");
    p = clamp_prob(p);
    if (y == 1) return soft_cross_entropy(p, std::pow(q, params.gamma));
    return negative_branch(p, 1.0, params.gamma);
}

LossEval eval_loss(double p, double q, int y, const LossParams& params) {
    switch (params.variant) {
        case LossVariant::kFocal:
            return focal_loss(p, y, params);
        case LossVariant::kVarifocal:
            return varifocal_loss(p, y == 1 ? q : 0.0, params);
        case LossVariant::kMatchability:
            return mal(p, y == 1 ? q : 0.0, y, params);
    }
    throw std::invalid_argument("unknown loss variant");
}

std::vector<std::vector<double>> landscape(const LossParams& params,
                                           std::span<const double> p_grid,
                                           std::span<const double> q_grid) {
    if (p_grid.empty() || q_grid.empty())
        throw std::invalid_argument("landscape: empty grid");
    for (double p : p_grid)
        if (!(p > 0.0 && p < 1.0))
            throw std::invalid_argument("landscape: p grid must lie strictly inside (0, 1)");
    for (double q : q_grid) check_q(q);

    std::vector<std::vector<double>> m(q_grid.size(), std::vector<double>(p_grid.size()));
    for (std::size_t i = 0; i < q_grid.size(); ++i)
        for (std::size_t j = 0; j < p_grid.size(); ++j)
            m[i][j] = eval_loss(p_grid[j], q_grid[i], 1, params).value;
    return m;
}

}  // namespace matchkit
