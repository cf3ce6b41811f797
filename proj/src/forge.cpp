#include "caf/forge.hpp"

#include <cmath>
#include <unordered_set>

#include "caf/error.hpp"
#include "caf/glyph_atlas.hpp"
#include "caf/parallel.hpp"

namespace caf {

double GrayImage::ink_coverage() const {
    if (pixels.empty()) return 0.0;
    int64_t ink = 0;
    for (uint8_t p : pixels)
        if (p == 0) ++ink;
    return static_cast<double>(ink) / static_cast<double>(pixels.size());
}

void validate_config(const ForgeConfig& cfg) {
    Alphabet alpha(cfg.alphabet);  // checks duplicates and size bounds
    for (char c : cfg.alphabet)
        if (!find_glyph(c)) throw ValueError(std::string("no glyph in atlas for character '") + c + "'");
    if (cfg.code_length < 1) throw ValueError("code_length must be >= 1");
    if (cfg.height < 8) throw ValueError("height must be >= 8");
    if (cfg.width < cfg.code_length * kMinGlyphWidth)
        throw ValueError("width " + std::to_string(cfg.width) + " below minimum " +
                         std::to_string(cfg.code_length * kMinGlyphWidth) + " for code_length " +
                         std::to_string(cfg.code_length));
    if (cfg.skew_range_deg < 0.0 || cfg.skew_range_deg > 45.0)
        throw ValueError("skew_range_deg must be in [0, 45]");
    if (cfg.scale_jitter < 0.0 || cfg.scale_jitter >= 1.0)
        throw ValueError("scale_jitter must be in [0, 1)");
    if (cfg.glyph_scale <= 0.0 || cfg.glyph_scale > 1.0)
        throw ValueError("glyph_scale must be in (0, 1]");
    if (cfg.vertical_jitter < 0.0 || cfg.vertical_jitter > 0.5)
        throw ValueError("vertical_jitter must be in [0, 0.5]");
}

std::string random_label(const ForgeConfig& cfg, RandomSource& rs) {
    std::string label(static_cast<size_t>(cfg.code_length), '\0');
    for (char& c : label)
        c = cfg.alphabet[static_cast<size_t>(rs.next_below(cfg.alphabet.size()))];
    return label;
}

namespace {

// Draws one glyph with shear `tan_a`, target size gw x gh, top-left (x0, y0).
// Inverse-mapped nearest neighbor: for each target pixel, undo the shear and
// sample the atlas bitmap.
void blit_glyph(GrayImage& img, const GlyphBitmap& g, int x0, int y0, int gw, int gh, double tan_a) {
    const double mid = (gh - 1) / 2.0;
    const double sx = static_cast<double>(g.width) / gw;
    const double sy = static_cast<double>(g.height) / gh;
    const int reach = static_cast<int>(std::ceil(std::abs(tan_a) * mid)) + 1;
    for (int ty = 0; ty < gh; ++ty) {
        const int y = y0 + ty;
        if (y < 0 || y >= img.height) continue;
        const double shear = tan_a * (ty - mid);
        for (int tx = -reach; tx < gw + reach; ++tx) {
            const double xrel = tx - shear;
            if (xrel < 0.0 || xrel >= gw) continue;
            const int ax = static_cast<int>((xrel + 0.5) * sx);
            const int ay = static_cast<int>((ty + 0.5) * sy);
            if (ax < 0 || ax >= g.width || ay < 0 || ay >= g.height) continue;
            const int x = x0 + tx;
            if (x < 0 || x >= img.width) continue;
            if (g.ink(ax, ay)) img.at(x, y) = 0;
        }
    }
}

}  // namespace

GrayImage render_code(const ForgeConfig& cfg, std::string_view label, RandomSource& rs) {
    validate_config(cfg);
    check_label(Alphabet(cfg.alphabet), cfg.code_length, label);

    GrayImage img(cfg.width, cfg.height, 255);
    const double slot_w = static_cast<double>(cfg.width) / cfg.code_length;
    const double deg2rad = 3.14159265358979323846 / 180.0;

    for (int i = 0; i < cfg.code_length; ++i) {
        // Fixed draw order per glyph: angle, scale, vertical, horizontal.
        const double angle = cfg.skew_range_deg > 0.0
                                 ? rs.uniform(-cfg.skew_range_deg, cfg.skew_range_deg)
                                 : 0.0;
        const double scale = cfg.scale_jitter > 0.0
                                 ? 1.0 + rs.uniform(-cfg.scale_jitter, cfg.scale_jitter)
                                 : 1.0;
        const double vjit = cfg.vertical_jitter > 0.0
                                ? rs.uniform(-cfg.vertical_jitter, cfg.vertical_jitter)
                                : 0.0;
        const double hjit = rs.uniform(-0.12, 0.12);

        const GlyphBitmap* g = find_glyph(label[static_cast<size_t>(i)]);
        int gh = static_cast<int>(std::lround(cfg.height * cfg.glyph_scale * scale));
        gh = std::min(std::max(gh, 5), cfg.height);
        int gw = std::max(3, static_cast<int>(std::lround(static_cast<double>(gh) * g->width / g->height)));

        const double x_center = (i + 0.5) * slot_w + hjit * slot_w;
        const int x0 = static_cast<int>(std::lround(x_center - gw / 2.0));
        int y0 = static_cast<int>(std::lround((cfg.height - gh) * (0.5 + vjit)));
        y0 = std::min(std::max(y0, 0), cfg.height - gh);

        blit_glyph(img, *g, x0, y0, gw, gh, std::tan(angle * deg2rad));
    }
    return img;
}

std::vector<LabeledSample> generate_dataset(const ForgeConfig& cfg, int64_t n) {
    validate_config(cfg);
    if (n < 0) throw ValueError("sample count must be >= 0");

    // Label space |alphabet|^code_length, saturating at 2^63-1.
    const double space_log = cfg.code_length * std::log2(static_cast<double>(cfg.alphabet.size()));
    if (space_log < 63.0) {
        int64_t space = 1;
        for (int i = 0; i < cfg.code_length; ++i) space *= static_cast<int64_t>(cfg.alphabet.size());
        if (n > space)
            throw CapacityError("requested " + std::to_string(n) + " unique labels from a space of " +
                                std::to_string(space));
    }

    RandomSource root(cfg.seed);
    RandomSource label_rs = root.child("labels");
    RandomSource render_root = root.child("render");

    std::vector<LabeledSample> samples(static_cast<size_t>(n));
    std::unordered_set<std::string> seen;
    seen.reserve(static_cast<size_t>(n) * 2);
    for (int64_t i = 0; i < n; ++i) {
        std::string label = random_label(cfg, label_rs);
        while (!seen.insert(label).second) label = random_label(cfg, label_rs);
        samples[static_cast<size_t>(i)].label = std::move(label);
    }

    // Per-sample child streams keyed by index: rendering is order-free.
    parallel_for(n, 64, [&](int64_t begin, int64_t end) {
        for (int64_t i = begin; i < end; ++i) {
            RandomSource rs = render_root.child(static_cast<uint64_t>(i));
            samples[static_cast<size_t>(i)].image = render_code(cfg, samples[static_cast<size_t>(i)].label, rs);
        }
    });
    return samples;
}

}  // namespace caf
