#!/usr/bin/env python3
"""Regenerate src/glyph_atlas_data.cpp.

Rasterizes the 62 alphanumeric glyphs from DejaVu Sans Mono Bold (bundled
with matplotlib) into fixed-height 1-bit bitmaps and emits them as C++
arrays. The generated file is checked in and is the source of truth for
rendering; rerun this only to change the font or metrics, then commit the
result.

Usage: python3 scripts/gen_glyph_atlas.py > src/glyph_atlas_data.cpp
"""

import os
import sys

from PIL import Image, ImageDraw, ImageFont

CHARS = "0123456789ABCDEFGHIJKLMNOPQRSTUVWXYZabcdefghijklmnopqrstuvwxyz"
FONT_SIZE = 28
PAD = 8  # draw offset so antialiased edges are never clipped


def find_font():
    import matplotlib

    path = os.path.join(
        os.path.dirname(matplotlib.__file__),
        "mpl-data", "fonts", "ttf", "DejaVuSansMono-Bold.ttf",
    )
    if not os.path.exists(path):
        raise FileNotFoundError(path)
    return path


def glyph_bitmap(font, ch, cell_h):
    img = Image.new("L", (FONT_SIZE * 2 + 2 * PAD, cell_h + 2 * PAD), 0)
    draw = ImageDraw.Draw(img)
    draw.text((PAD, PAD), ch, fill=255, font=font)
    px = img.load()
    w, h = img.size
    ink_cols = [x for x in range(w) if any(px[x, y] >= 128 for y in range(h))]
    if not ink_cols:
        raise RuntimeError(f"glyph {ch!r} rendered empty")
    x0, x1 = min(ink_cols), max(ink_cols)
    width = x1 - x0 + 1
    assert width <= 32, f"glyph {ch!r} wider than 32px ({width})"
    rows = []
    for y in range(PAD, PAD + cell_h):
        bits = 0
        for x in range(x0, x1 + 1):
            if px[x, y] >= 128:
                bits |= 1 << (x - x0)
        rows.append(bits)
    return width, rows


def ident(ch):
    if ch.isdigit():
        return f"d{ch}"
    return f"u{ch}" if ch.isupper() else f"l{ch}"


def main():
    font = ImageFont.truetype(find_font(), FONT_SIZE)
    ascent, descent = font.getmetrics()
    cell_h = ascent + descent

    out = sys.stdout
    out.write("// Generated by scripts/gen_glyph_atlas.py -- do not edit by hand.\n")
    out.write(f"// Font: DejaVu Sans Mono Bold, {FONT_SIZE}px; "
              f"cell height {cell_h}px (ascent {ascent}, descent {descent}).\n")
    out.write('#include "caf/glyph_atlas.hpp"\n\n')
    out.write("namespace caf {\nnamespace {\n\n")

    entries = []
    for ch in CHARS:
        width, rows = glyph_bitmap(font, ch, cell_h)
        name = f"kRows_{ident(ch)}"
        words = ", ".join(f"0x{r:08x}" for r in rows)
        out.write(f"constexpr uint32_t {name}[] = {{{words}}};\n")
        entries.append((ch, width, name))

    out.write("\nconstexpr GlyphBitmap kGlyphs[] = {\n")
    for ch, width, name in entries:
        out.write(f"    {{'{ch}', {width}, {cell_h}, {name}}},\n")
    out.write("};\n\n}  // namespace\n\n")
    out.write("const GlyphBitmap* find_glyph(char c) {\n")
    out.write("    for (const auto& g : kGlyphs)\n")
    out.write("        if (g.ch == c) return &g;\n")
    out.write("    return nullptr;\n}\n\n")
    out.write("int glyph_count() { return static_cast<int>(std::size(kGlyphs)); }\n\n")
    out.write("}  // namespace caf\n")


if __name__ == "__main__":
    main()
