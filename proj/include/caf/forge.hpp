#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "caf/codec.hpp"
#include "caf/image.hpp"
#include "caf/random.hpp"

namespace caf {

// Configuration for synthesizing slanted-text verification-code images.
// Glyphs come from the embedded bitmap atlas; strokes are hard ink (0) on
// white (255), no anti-aliasing, no occluding lines, no shadow.
struct ForgeConfig {
    std::string alphabet = Alphabet::default_alnum().chars();
    int code_length = 6;
    int width = 180;
    int height = 50;
    // Max per-character horizontal shear, degrees; actual angle is uniform
    // in [-skew_range_deg, +skew_range_deg].
    double skew_range_deg = 25.0;
    // Fractional glyph-size variation; scale is uniform in [1-j, 1+j].
    double scale_jitter = 0.15;
    // Nominal glyph height as a fraction of the image height.
    double glyph_scale = 0.62;
    // Max vertical offset as a fraction of the image height.
    double vertical_jitter = 0.10;
    uint64_t seed = 0;
};

// Minimum rendered glyph width; width must fit code_length of these.
inline constexpr int kMinGlyphWidth = 8;

// Throws ValueError on any invariant violation (duplicate alphabet chars,
// bad sizes, skew outside [0, 45], ...).
void validate_config(const ForgeConfig& cfg);

// Uniform i.i.d. label over the alphabet.
std::string random_label(const ForgeConfig& cfg, RandomSource& rs);

// Renders one code deterministically from (cfg, label, rs state): each glyph
// is sheared by a uniform random angle, scaled by 1 +/- scale_jitter and
// placed left to right with a small random vertical offset; nearest-neighbor
// resampling from the atlas.
GrayImage render_code(const ForgeConfig& cfg, std::string_view label, RandomSource& rs);

// Exactly n samples with pairwise-distinct labels (rejection resampling
// against a seen-set); deterministic order given cfg.seed. Throws
// CapacityError when n exceeds the label space.
std::vector<LabeledSample> generate_dataset(const ForgeConfig& cfg, int64_t n);

}  // namespace caf
