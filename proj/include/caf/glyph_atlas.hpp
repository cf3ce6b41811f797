#pragma once

#include <cstdint>
#include <iterator>

namespace caf {

// Fixed-height 1-bit glyph bitmap. Rows are packed LSB-first, bit x of
// rows[y] is the pixel at (x, y); all glyphs share a common cell height so
// baselines stay aligned when glyphs are scaled together.
struct GlyphBitmap {
    char ch;
    int width;
    int height;
    const uint32_t* rows;

    bool ink(int x, int y) const { return (rows[y] >> x) & 1u; }
};

// Lookup in the embedded atlas (0-9, A-Z, a-z). Returns nullptr for
// characters outside the atlas.
const GlyphBitmap* find_glyph(char c);

int glyph_count();

}  // namespace caf
