#include "matchkit/densify.hpp"

#include <stdexcept>

#include "matchkit/rng.hpp"

namespace matchkit {

void AugPolicy::validate() const {
    if (!(mosaic_prob >= 0.0 && mosaic_prob <= 1.0) ||
        !(mixup_prob >= 0.0 && mixup_prob <= 1.0))
        throw std::invalid_argument("AugPolicy: probabilities must lie in [0, 1]");
}

AugPolicy preset_policy(DensifyPreset preset, std::uint64_t seed) {
    switch (preset) {
        case DensifyPreset::kBaseline: return {0.0, 0.0, seed};
        case DensifyPreset::kDefault: return {0.5, 0.5, seed};
        case DensifyPreset::kMax: return {1.0, 1.0, seed};
    }
    throw std::invalid_argument("unknown densify preset");
}

namespace {

void append_quadrant(const ImageAnnotations& src, double dx, double dy,
                     std::vector<Target>& out) {
    for (const Target& t : src.targets) {
        if (auto mapped = transform(t.box, 0.5, dx, dy)) out.push_back({*mapped, t.label});
    }
}

}  // namespace

ImageAnnotations mosaic4(const ImageAnnotations& a, const ImageAnnotations& b,
                         const ImageAnnotations& c, const ImageAnnotations& d) {
    ImageAnnotations out;
    out.id = a.id;
    out.width = a.width;
    out.height = a.height;
    append_quadrant(a, 0.0, 0.0, out.targets);
    append_quadrant(b, 0.5, 0.0, out.targets);
    append_quadrant(c, 0.0, 0.5, out.targets);
    append_quadrant(d, 0.5, 0.5, out.targets);
    return out;
}

ImageAnnotations mixup(const ImageAnnotations& a, const ImageAnnotations& b, double ratio) {
    if (!(ratio > 0.0 && ratio < 1.0))
        throw std::invalid_argument("mixup: ratio must lie in (0, 1)");
    if (a.width != b.width || a.height != b.height)
        throw std::invalid_argument("mixup: canvas dimensions differ (resize upstream)");
    ImageAnnotations out = a;
    out.targets.insert(out.targets.end(), b.targets.begin(), b.targets.end());
    return out;
}

std::vector<ImageAnnotations> apply_policy(const std::vector<ImageAnnotations>& batch,
                                           const AugPolicy& policy, const AugState& flags,
                                           std::uint64_t batch_index) {
    policy.validate();
    if (!flags.dense_o2o_on || batch.empty()) return batch;

    auto rng = make_rng(policy.seed, batch_index);
    const int n = static_cast<int>(batch.size());
    std::vector<ImageAnnotations> out = batch;

    if (uniform(rng) < policy.mosaic_prob) {
        // Partners drawn from the original batch, with replacement.
        for (int i = 0; i < n; ++i) {
            const int j1 = uniform_int(rng, 0, n - 1);
            const int j2 = uniform_int(rng, 0, n - 1);
            const int j3 = uniform_int(rng, 0, n - 1);
            out[i] = mosaic4(batch[i], batch[j1], batch[j2], batch[j3]);
        }
    }

    if (uniform(rng) < policy.mixup_prob) {
        const std::vector<ImageAnnotations> base = out;
        for (int i = 0; i < n; ++i) {
            int j = i;
            if (n > 1) {
                j = uniform_int(rng, 0, n - 2);
                if (j >= i) ++j;
            }
            const double ratio = uniform(rng, 0.3, 0.7);
            // Normalized annotations make the upstream resize a canvas swap.
            ImageAnnotations partner = base[j];
            partner.width = base[i].width;
            partner.height = base[i].height;
            out[i] = mixup(base[i], partner, ratio);
        }
    }
    return out;
}

}  // namespace matchkit
