#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace caf {

// Single-channel 8-bit raster, row-major. 0 is ink, 255 is background.
struct GrayImage {
    int width = 0;
    int height = 0;
    std::vector<uint8_t> pixels;

    GrayImage() = default;
    GrayImage(int w, int h, uint8_t fill = 255)
        : width(w), height(h), pixels(static_cast<size_t>(w) * static_cast<size_t>(h), fill) {}

    uint8_t& at(int x, int y) { return pixels[static_cast<size_t>(y) * width + x]; }
    uint8_t at(int x, int y) const { return pixels[static_cast<size_t>(y) * width + x]; }
    bool in_bounds(int x, int y) const { return x >= 0 && x < width && y >= 0 && y < height; }

    // Fraction of pixels at full ink (value 0).
    double ink_coverage() const;
};

struct LabeledSample {
    GrayImage image;
    std::string label;
};

}  // namespace caf
