#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <vector>

namespace matchkit {

/// Row-major 8-bit RGB buffer.
struct Image {
    int width = 0;
    int height = 0;
    std::vector<std::uint8_t> rgb;

    static Image solid(int w, int h, std::uint8_t r, std::uint8_t g, std::uint8_t b);
    std::uint8_t* pixel(int x, int y) { return rgb.data() + 3 * (y * width + x); }
    const std::uint8_t* pixel(int x, int y) const { return rgb.data() + 3 * (y * width + x); }
};

void write_ppm(const Image& img, const std::filesystem::path& path);
Image read_ppm(const std::filesystem::path& path);

/// Half-scale (nearest neighbor) the four inputs into the quadrants of a's
/// canvas, mirroring the annotation-level mosaic.
Image mosaic4_raster(const Image& a, const Image& b, const Image& c, const Image& d);

/// Alpha blend: ratio * a + (1 - ratio) * b. Dimensions must match.
Image mixup_raster(const Image& a, const Image& b, double ratio);

enum class ComposeMode { kMosaic4, kMixup };

/// Dispatch over the two composition modes; kMosaic4 needs 4 inputs,
/// kMixup needs 2 (ratio applies to kMixup only).
Image compose_raster(std::span<const Image> inputs, ComposeMode mode, double ratio = 0.5);

}  // namespace matchkit
