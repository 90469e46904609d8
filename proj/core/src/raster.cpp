#include "matchkit/raster.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace matchkit {

Image Image::solid(int w, int h, std::uint8_t r, std::uint8_t g, std::uint8_t b) {
    Image img{w, h, std::vector<std::uint8_t>(static_cast<std::size_t>(w) * h * 3)};
    for (std::size_t i = 0; i < img.rgb.size(); i += 3) {
        img.rgb[i] = r;
        img.rgb[i + 1] = g;
        img.rgb[i + 2] = b;
    }
    return img;
}

void write_ppm(const Image& img, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("write_ppm: cannot open " + path.string());
    out << "P6\n" << img.width << " " << img.height << "\n255\n";
    out.write(reinterpret_cast<const char*>(img.rgb.data()),
              static_cast<std::streamsize>(img.rgb.size()));
    if (!out) throw std::runtime_error("write_ppm: write failed for " + path.string());
}

Image read_ppm(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("read_ppm: cannot open " + path.string());
    std::string magic;
    int w = 0, h = 0, maxval = 0;
    in >> magic >> w >> h >> maxval;
    if (magic != "P6" || w <= 0 || h <= 0 || maxval != 255)
        throw std::runtime_error("read_ppm: unsupported PPM header in " + path.string());
    in.get();  // single whitespace after the header
    Image img{w, h, std::vector<std::uint8_t>(static_cast<std::size_t>(w) * h * 3)};
    in.read(reinterpret_cast<char*>(img.rgb.data()),
            static_cast<std::streamsize>(img.rgb.size()));
    if (!in) throw std::runtime_error("read_ppm: truncated pixel data in " + path.string());
    return img;
}

namespace {

void blit_half(const Image& src, Image& dst, int ox, int oy) {
    const int qw = dst.width / 2;
    const int qh = dst.height / 2;
    for (int y = 0; y < qh; ++y) {
        for (int x = 0; x < qw; ++x) {
            const int sx = std::min(src.width - 1, x * src.width / qw);
            const int sy = std::min(src.height - 1, y * src.height / qh);
            const std::uint8_t* s = src.pixel(sx, sy);
            std::uint8_t* d = dst.pixel(ox + x, oy + y);
            d[0] = s[0];
            d[1] = s[1];
            d[2] = s[2];
        }
    }
}

}  // namespace

Image mosaic4_raster(const Image& a, const Image& b, const Image& c, const Image& d) {
    if (a.width < 2 || a.height < 2)
        throw std::invalid_argument("mosaic4_raster: canvas too small");
    Image out = Image::solid(a.width, a.height, 0, 0, 0);
    blit_half(a, out, 0, 0);
    blit_half(b, out, out.width / 2, 0);
    blit_half(c, out, 0, out.height / 2);
    blit_half(d, out, out.width / 2, out.height / 2);
    return out;
}

Image mixup_raster(const Image& a, const Image& b, double ratio) {
    if (a.width != b.width || a.height != b.height)
        throw std::invalid_argument("mixup_raster: dimensions differ");
    if (!(ratio > 0.0 && ratio < 1.0))
        throw std::invalid_argument("mixup_raster: ratio must lie in (0, 1)");
    Image out = a;
    for (std::size_t i = 0; i < out.rgb.size(); ++i) {
        out.rgb[i] = static_cast<std::uint8_t>(
            std::lround(ratio * a.rgb[i] + (1.0 - ratio) * b.rgb[i]));
    }
    return out;
}

Image compose_raster(std::span<const Image> inputs, ComposeMode mode, double ratio) {
    switch (mode) {
        case ComposeMode::kMosaic4:
            if (inputs.size() != 4)
                throw std::invalid_argument("compose_raster: mosaic needs 4 inputs");
            return mosaic4_raster(inputs[0], inputs[1], inputs[2], inputs[3]);
        case ComposeMode::kMixup:
            if (inputs.size() != 2)
                throw std::invalid_argument("compose_raster: mixup needs 2 inputs");
            return mixup_raster(inputs[0], inputs[1], ratio);
    }
    throw std::invalid_argument("compose_raster: unknown mode");
}

}  // namespace matchkit
