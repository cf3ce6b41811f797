// Generated by scripts/gen_glyph_atlas.py -- do not edit by hand.
// Font: DejaVu Sans Mono Bold, 28px; cell height 33px (ascent 26, descent 7).
#include "caf/glyph_atlas.hpp"

namespace caf {
namespace {

constexpr uint32_t kRows_d0[] = {0x00000000, 0x00000000, 0x00000000, 0x00000000, 0x00000000, 0x00000000, 0x000001f0, 0x000007fc, 0x000007fe, 0x00000f1e, 0x00000f0f, 0x00001e0f, 0x00001e0f, 0x00001e0f, 0x00001eef, 0x00001eef, 0x00001eef, 0x00001e0f, 0x00001e0f, 0x00001e0f, 0x00001e0f, 0x00000f0f, 0x00000f1e, 0x000007fe, 0x000007fc, 0x000001f0, 0x00000000, 0x00000000, 0x00000000, 0x00000000, 0x00000000, 0x00000000, 0x00000000};
constexpr uint32_t kRows_d1[] = {0x00000000, 0x00000000, 0x00000000, 0x00000000, 0x00000000, 0x00000000, 0x000000fc, 0x000000ff, 0x000000ff, 0x000000f3, 0x000000f0, 0x000000f0, 0x000000f0, 0x000000f0, 0x000000f0, 0x000000f0, 0x000000f0, 0x000000f0, 0x000000f0, 0x000000f0, 0x000000f0, 0x000000f0, 0x000000f0, 0x00001fff, 0x00001fff, 0x00001fff, 0x00000000, 0x00000000, 0x00000000, 0x00000000, 0x00000000, 0x00000000, 0x00000000};
constexpr uint32_t kRows_d2[] = {0x00000000, 0x00000000, 0x00000000, 0x00000000, 0x00000000, 0x00000000, 0x000001fc, 0x000007ff, 0x00000fff, 0x00000f87, 0x00000f01, 0x00000f00, 0x00000f00, 0x00000f00, 0x00000f80, 0x00000780, 0x000003c0, 0x000001e0, 0x000000f0, 0x00000078, 0x0000003c, 0x0000001e, 0x0000000f, 0x00001fff, 0x00001fff, 0x00001fff, 0x00000000, 0x00000000, 0x00000000, 0x00000000, 0x00000000, 0x00000000, 0x00000000};
constexpr uint32_t kRows_d3[] = {0x00000000, 0x00000000, 0x00000000, 0x00000000, 0x00000000, 0x00000000, 0x000001fc, 0x000007ff, 0x00000fff, 0x00000f07, 0x00001e01, 0x00000e00, 0x00000f00, 0x000007f8, 0x000001f8, 0x000007f8, 0x00000f80, 0x00001e00, 0x00001e00, 0x00001e00, 0x00001e00, 0x00001e00, 0x00001f07, 0x00000fff, 0x000007ff, 0x000001fc, 0x00000000, 0x00000000, 0x00000000, 0x00000000, 0x00000000, 0x00000000, 0x00000000};
constexpr uint32_t kRows_d4[] = {0x00000000, 0x00000000, 0x00000000, 0x00000000, 0x00000000, 0x00000000, 0x00000f00, 0x00000f80, 0x00000fc0, 0x00000fc0, 0x00000fe0, 0x00000ff0, 0x00000f70, 0x00000f38, 0x00000f3c, 0x00000f1c, 0x00000f0e, 0x00000f0f, 0x00007fff, 0x00007fff, 0x00007fff, 0x00000f00, 0x00000f00, 0x00000f00, 0x00000f00, 0x00000f00, 0x00000000, 0x00000000, 0x00000000, 0x00000000, 0x00000000, 0x00000000, 0x00000000};
constexpr uint32_t kRows_d5[] = {0x00000000, 0x00000000, 0x00000000, 0x00000000, 0x00000000, 0x00000000, 0x00000ffe, 0x00000ffe, 0x00000ffe, 0x0000000e, 0x0000000e, 0x0000000e, 0x0000000e, 0x000001fe, 0x000007fe, 0x00000ffe, 0x00000f82, 0x00001f00, 0x00001e00, 0x00001e00, 0x00001e00, 0x00001f01, 0x00000f83, 0x00000fff, 0x000007ff, 0x000001fc, 0x00000000, 0x00000000, 0x00000000, 0x00000000, 0x00000000, 0x00000000, 0x00000000};
constexpr uint32_t kRows_d6[] = {0x00000000, 0x00000000, 0x00000000, 0x00000000, 0x00000000, 0x00000000, 0x000007e0, 0x00000ff8, 0x00000ffc, 0x00000c3e, 0x0000081e, 0x0000000f, 0x000003ef, 0x00000fff, 0x00000fff, 0x00001f1f, 0x00001e1f, 0x00001e0f, 0x00001e0f, 0x00001e0f, 0x00001e0f, 0x00001e1e, 0x00001f1e, 0x00000ffe, 0x000007fc, 0x000003f0, 0x00000000, 0x00000000, 0x00000000, 0x00000000, 0x00000000, 0x00000000, 0x00000000};
constexpr uint32_t kRows_d7[] = {0x00000000, 0x00000000, 0x00000000, 0x00000000, 0x00000000, 0x00000000, 0x00001fff, 0x00001fff, 0x00001fff, 0x00000f00, 0x00000f00, 0x00000f80, 0x00000780, 0x00000780, 0x000003c0, 0x000003c0, 0x000003e0, 0x000001e0, 0x000001e0, 0x000000f0, 0x000000f0, 0x000000f8, 0x00000078, 0x00000078, 0x0000003c, 0x0000003c, 0x00000000, 0x00000000, 0x00000000, 0x00000000, 0x00000000, 0x00000000, 0x00000000};
constexpr uint32_t kRows_d8[] = {0x00000000, 0x00000000, 0x00000000, 0x00000000, 0x00000000, 0x00000000, 0x000001f0, 0x000007fc, 0x00000ffe, 0x00000f1e, 0x00001e0f, 0x00001e0f, 0x00000e0f, 0x00000f1e, 0x000007fc, 0x000003f8, 0x000007fe, 0x00000f1e, 0x00001e0f, 0x00001e07, 0x00001e07, 0x00001e0f, 0x00001f1f, 0x00000ffe, 0x000007fc, 0x000003f8, 0x00000000, 0x00000000, 0x00000000, 0x00000000, 0x00000000, 0x00000000, 0x00000000};
constexpr uint32_t kRows_d9[] = {0x00000000, 0x00000000, 0x00000000, 0x00000000, 0x00000000, 0x00000000, 0x000001f8, 0x000007fc, 0x000007fe, 0x00000f1f, 0x00000f0f, 0x00001e0f, 0x00001e07, 0x00001e07, 0x00001e0f, 0x00001f0f, 0x00001f1f, 0x00001ffe, 0x00001ffe, 0x00001ef8, 0x00000e00, 0x00000f00, 0x00000f86, 0x000007fe, 0x000003fe, 0x000000fc, 0x00000000, 0x00000000, 0x00000000, 0x00000000, 0x00000000, 0x00000000, 0x00000000};
constexpr uint32_t kRows_uA[] = {0x00000000, 0x00000000, 0x00000000, 0x00000000, 0x00000000, 0x00000000, 0x000003e0, 0x000003e0, 0x000007f0, 0x000007f0, 0x000007f0, 0x00000778, 0x00000f78, 0x00000f78, 0x00000e38, 0x00001e3c, 0x00001e3c, 0x00001e3c, 0x00001ffc, 0x00003ffe, 0x00003ffe, 0x00003c1e, 0x00003c0f, 0x0000780f, 0x0000780f, 0x0000780f, 0x00000000, 0x00000000, 0x00000000, 0x00000000, 0x00000000, 0x00000000, 0x00000000};
constexpr uint32_t kRows_uB[] = {0x00000000, 0x00000000, 0x00000000, 0x00000000, 0x00000000, 0x00000000, 0x000003ff, 0x00000fff, 0x00001fff, 0x00001f0f, 0x00001e0f, 0x00001e0f, 0x00001f0f, 0x00000fff, 0x000003ff, 0x00000fff, 0x00001f0f, 0x00001e0f, 0x00003c0f, 0x00003c0f, 0x00003c0f, 0x00003e0f, 0x00001e0f, 0x00001fff, 0x00000fff, 0x000003ff, 0x00000000, 0x00000000, 0x00000000, 0x00000000, 0x00000000, 0x00000000, 0x00000000};
constexpr uint32_t kRows_uC[] = {0x00000000, 0x00000000, 0x00000000, 0x00000000, 0x00000000, 0x00000000, 0x000007e0, 0x00001ff8, 0x00001ffc, 0x0000187c, 0x0000103e, 0x0000001e, 0x0000001f, 0x0000000f, 0x0000000f, 0x0000000f, 0x0000000f, 0x0000000f, 0x0000000f, 0x0000001f, 0x0000001e, 0x0000103e, 0x0000187c, 0x00001ffc, 0x00001ff8, 0x000007e0, 0x00000000, 0x00000000, 0x00000000, 0x00000000, 0x00000000, 0x00000000, 0x00000000};
constexpr uint32_t kRows_uD[] = {0x00000000, 0x00000000, 0x00000000, 0x00000000, 0x00000000, 0x00000000, 0x000000ff, 0x000003ff, 0x000007ff, 0x00000f8f, 0x00001f0f, 0x00001e0f, 0x00001e0f, 0x00001e0f, 0x00003e0f, 0x00003e0f, 0x00003e0f, 0x00003e0f, 0x00001e0f, 0x00001e0f, 0x00001e0f, 0x00001f0f, 0x00000f8f, 0x000007ff, 0x000003ff, 0x000000ff, 0x00000000, 0x00000000, 0x00000000, 0x00000000, 0x00000000, 0x00000000, 0x00000000};
constexpr uint32_t kRows_uE[] = {0x00000000, 0x00000000, 0x00000000, 0x00000000, 0x00000000, 0x00000000, 0x00001fff, 0x00001fff, 0x00001fff, 0x0000000f, 0x0000000f, 0x0000000f, 0x0000000f, 0x00000fff, 0x00000fff, 0x00000fff, 0x0000000f, 0x0000000f, 0x0000000f, 0x0000000f, 0x0000000f, 0x0000000f, 0x0000000f, 0x00001fff, 0x00001fff, 0x00001fff, 0x00000000, 0x00000000, 0x00000000, 0x00000000, 0x00000000, 0x00000000, 0x00000000};
constexpr uint32_t kRows_uF[] = {0x00000000, 0x00000000, 0x00000000, 0x00000000, 0x00000000, 0x00000000, 0x00001fff, 0x00001fff, 0x00001fff, 0x0000001f, 0x0000001f, 0x0000001f, 0x0000001f, 0x00000fff, 0x00000fff, 0x00000fff, 0x0000001f, 0x0000001f, 0x0000001f, 0x0000001f, 0x0000001f, 0x0000001f, 0x0000001f, 0x0000001f, 0x0000001f, 0x0000001f, 0x00000000, 0x00000000, 0x00000000, 0x00000000, 0x00000000, 0x00000000, 0x00000000};
constexpr uint32_t kRows_uG[] = {0x00000000, 0x00000000, 0x00000000, 0x00000000, 0x00000000, 0x00000000, 0x000007e0, 0x00001ff8, 0x00001ffc, 0x0000183e, 0x0000001e, 0x0000001f, 0x0000000f, 0x0000000f, 0x0000000f, 0x00001f8f, 0x00001f8f, 0x00001f8f, 0x00001c0f, 0x00001c0f, 0x00001c1f, 0x00001c1e, 0x00001c3e, 0x00001ffc, 0x00001ff8, 0x000007e0, 0x00000000, 0x00000000, 0x00000000, 0x00000000, 0x00000000, 0x00000000, 0x00000000};
constexpr uint32_t kRows_uH[] = {0x00000000, 0x00000000, 0x00000000, 0x00000000, 0x00000000, 0x00000000, 0x00001e0f, 0x00001e0f, 0x00001e0f, 0x00001e0f, 0x00001e0f, 0x00001e0f, 0x00001e0f, 0x00001fff, 0x00001fff, 0x00001fff, 0x00001e0f, 0x00001e0f, 0x00001e0f, 0x00001e0f, 0x00001e0f, 0x00001e0f, 0x00001e0f, 0x00001e0f, 0x00001e0f, 0x00001e0f, 0x00000000, 0x00000000, 0x00000000, 0x00000000, 0x00000000, 0x00000000, 0x00000000};
constexpr uint32_t kRows_uI[] = {0x00000000, 0x00000000, 0x00000000, 0x00000000, 0x00000000, 0x00000000, 0x00001fff, 0x00001fff, 0x00001fff, 0x000000f0, 0x000000f0, 0x000000f0, 0x000000f0, 0x000000f0, 0x000000f0, 0x000000f0, 0x000000f0, 0x000000f0, 0x000000f0, 0x000000f0, 0x000000f0, 0x000000f0, 0x000000f0, 0x00001fff, 0x00001fff, 0x00001fff, 0x00000000, 0x00000000, 0x00000000, 0x00000000, 0x00000000, 0x00000000, 0x00000000};
constexpr uint32_t kRows_uJ[] = {0x00000000, 0x00000000, 0x00000000, 0x00000000, 0x00000000, 0x00000000, 0x00001ff0, 0x00001ff0, 0x00001ff0, 0x00001e00, 0x00001e00, 0x00001e00, 0x00001e00, 0x00001e00, 0x00001e00, 0x00001e00, 0x00001e00, 0x00001e00, 0x00001e00, 0x00001e00, 0x00001e00, 0x00001f00, 0x00000f07, 0x00000fff, 0x000007ff, 0x000003fc, 0x00000000, 0x00000000, 0x00000000, 0x00000000, 0x00000000, 0x00000000, 0x00000000};
constexpr uint32_t kRows_uK[] = {0x00000000, 0x00000000, 0x00000000, 0x00000000, 0x00000000, 0x00000000, 0x00003c0f, 0x00001e0f, 0x00000f0f, 0x00000f8f, 0x000007cf, 0x000003cf, 0x000001ef, 0x000000ff, 0x000000ff, 0x000001ff, 0x000003ff, 0x000003df, 0x000007cf, 0x0000078f, 0x00000f8f, 0x00000f0f, 0x00001f0f, 0x00001e0f, 0x00003e0f, 0x00003c0f, 0x00000000, 0x00000000, 0x00000000, 0x00000000, 0x00000000, 0x00000000, 0x00000000};
constexpr uint32_t kRows_uL[] = {0x00000000, 0x00000000, 0x00000000, 0x00000000, 0x00000000, 0x00000000, 0x0000000f, 0x0000000f, 0x0000000f, 0x0000000f, 0x0000000f, 0x0000000f, 0x0000000f, 0x0000000f, 0x0000000f, 0x0000000f, 0x0000000f, 0x0000000f, 0x0000000f, 0x0000000f, 0x0000000f, 0x0000000f, 0x0000000f, 0x00001fff, 0x00001fff, 0x00001fff, 0x00000000, 0x00000000, 0x00000000, 0x00000000, 0x00000000, 0x00000000, 0x00000000};
constexpr uint32_t kRows_uM[] = {0x00000000, 0x00000000, 0x00000000, 0x00000000, 0x00000000, 0x00000000, 0x00007c1f, 0x00007e1f, 0x00007e3f, 0x00007e3f, 0x00007e3f, 0x00007f3f, 0x00007f7f, 0x00007b7f, 0x00007bef, 0x00007bef, 0x00007bef, 0x000079ef, 0x000079cf, 0x0000780f, 0x0000780f, 0x0000780f, 0x0000780f, 0x0000780f, 0x0000780f, 0x0000780f, 0x00000000, 0x00000000, 0x00000000, 0x00000000, 0x00000000, 0x00000000, 0x00000000};
constexpr uint32_t kRows_uN[] = {0x00000000, 0x00000000, 0x00000000, 0x00000000, 0x00000000, 0x00000000, 0x00001c0f, 0x00001c1f, 0x00001c1f, 0x00001c1f, 0x00001c3f, 0x00001c3f, 0x00001c7f, 0x00001c77, 0x00001c77, 0x00001ce7, 0x00001ce7, 0x00001cc7, 0x00001dc7, 0x00001fc7, 0x00001f87, 0x00001f87, 0x00001f07, 0x00001f07, 0x00001f07, 0x00001e07, 0x00000000, 0x00000000, 0x00000000, 0x00000000, 0x00000000, 0x00000000, 0x00000000};
constexpr uint32_t kRows_uO[] = {0x00000000, 0x00000000, 0x00000000, 0x00000000, 0x00000000, 0x00000000, 0x000003e0, 0x00000ff8, 0x00001ffc, 0x00001e3c, 0x00003c1e, 0x00003c1e, 0x00003c1e, 0x00003c1f, 0x00007c0f, 0x00007c0f, 0x00007c0f, 0x00007c0f, 0x00003c1f, 0x00003c1e, 0x00003c1e, 0x00003c1e, 0x00001e3c, 0x00001ffc, 0x00000ff8, 0x000003e0, 0x00000000, 0x00000000, 0x00000000, 0x00000000, 0x00000000, 0x00000000, 0x00000000};
constexpr uint32_t kRows_uP[] = {0x00000000, 0x00000000, 0x00000000, 0x00000000, 0x00000000, 0x00000000, 0x000003ff, 0x00000fff, 0x00001fff, 0x00001f0f, 0x00001e0f, 0x00003e0f, 0x00003e0f, 0x00003e0f, 0x00001e0f, 0x00001f0f, 0x00001fff, 0x00000fff, 0x000003ff, 0x0000000f, 0x0000000f, 0x0000000f, 0x0000000f, 0x0000000f, 0x0000000f, 0x0000000f, 0x00000000, 0x00000000, 0x00000000, 0x00000000, 0x00000000, 0x00000000, 0x00000000};
constexpr uint32_t kRows_uQ[] = {0x00000000, 0x00000000, 0x00000000, 0x00000000, 0x00000000, 0x00000000, 0x000003e0, 0x00000ff8, 0x00001ffc, 0x00001e3c, 0x00003c1e, 0x00003c1e, 0x00003c1e, 0x00003c1f, 0x00007c0f, 0x00007c0f, 0x00007c0f, 0x00007c0f, 0x00003c1f, 0x00003c1e, 0x00003c1e, 0x00003c1e, 0x00001e3c, 0x00001ffc, 0x00000ff8, 0x00000fe0, 0x00001f00, 0x00001e00, 0x00000800, 0x00000000, 0x00000000, 0x00000000, 0x00000000};
constexpr uint32_t kRows_uR[] = {0x00000000, 0x00000000, 0x00000000, 0x00000000, 0x00000000, 0x00000000, 0x000001ff, 0x000007ff, 0x00000fff, 0x00001f0f, 0x00001e0f, 0x00001e0f, 0x00001e0f, 0x00001e0f, 0x00000f0f, 0x00000fff, 0x000003ff, 0x000003ff, 0x000007cf, 0x00000f8f, 0x00000f0f, 0x00001f0f, 0x00001e0f, 0x00003e0f, 0x00003c0f, 0x00007c0f, 0x00000000, 0x00000000, 0x00000000, 0x00000000, 0x00000000, 0x00000000, 0x00000000};
constexpr uint32_t kRows_uS[] = {0x00000000, 0x00000000, 0x00000000, 0x00000000, 0x00000000, 0x00000000, 0x000003f8, 0x00000ffc, 0x00000ffe, 0x00000e1f, 0x0000080f, 0x0000000f, 0x0000000f, 0x0000003f, 0x000000ff, 0x000003fe, 0x00000ff8, 0x00000fe0, 0x00001f00, 0x00001e00, 0x00001e00, 0x00001e01, 0x00001f07, 0x00000fff, 0x000007ff, 0x000001fc, 0x00000000, 0x00000000, 0x00000000, 0x00000000, 0x00000000, 0x00000000, 0x00000000};
constexpr uint32_t kRows_uT[] = {0x00000000, 0x00000000, 0x00000000, 0x00000000, 0x00000000, 0x00000000, 0x00007fff, 0x00007fff, 0x00007fff, 0x000001e0, 0x000001e0, 0x000001e0, 0x000001e0, 0x000001e0, 0x000001e0, 0x000001e0, 0x000001e0, 0x000001e0, 0x000001e0, 0x000001e0, 0x000001e0, 0x000001e0, 0x000001e0, 0x000001e0, 0x000001e0, 0x000001e0, 0x00000000, 0x00000000, 0x00000000, 0x00000000, 0x00000000, 0x00000000, 0x00000000};
constexpr uint32_t kRows_uU[] = {0x00000000, 0x00000000, 0x00000000, 0x00000000, 0x00000000, 0x00000000, 0x00003c0f, 0x00003c0f, 0x00003c0f, 0x00003c0f, 0x00003c0f, 0x00003c0f, 0x00003c0f, 0x00003c0f, 0x00003c0f, 0x00003c0f, 0x00003c0f, 0x00003c0f, 0x00003c0f, 0x00003c0f, 0x00003c1e, 0x00003c1e, 0x00003e3e, 0x00001ffc, 0x00000ffc, 0x000007f0, 0x00000000, 0x00000000, 0x00000000, 0x00000000, 0x00000000, 0x00000000, 0x00000000};
constexpr uint32_t kRows_uV[] = {0x00000000, 0x00000000, 0x00000000, 0x00000000, 0x00000000, 0x00000000, 0x0000780f, 0x0000780f, 0x00003c0f, 0x00003c1e, 0x00003c1e, 0x00003c1e, 0x00001c1e, 0x00001e1c, 0x00001e3c, 0x00001e3c, 0x00001e3c, 0x00000e38, 0x00000f78, 0x00000f78, 0x00000f78, 0x00000770, 0x000007f0, 0x000007f0, 0x000007f0, 0x000003e0, 0x00000000, 0x00000000, 0x00000000, 0x00000000, 0x00000000, 0x00000000, 0x00000000};
constexpr uint32_t kRows_uW[] = {0x00000000, 0x00000000, 0x00000000, 0x00000000, 0x00000000, 0x00000000, 0x0001e00f, 0x0001e00f, 0x0001e00f, 0x0000e00f, 0x0000e00e, 0x0000e38e, 0x0000e3ce, 0x0000e7ce, 0x0000e7ce, 0x0000e7ce, 0x0000f7de, 0x0000f6de, 0x00007efc, 0x00007efc, 0x00007c7c, 0x00007c7c, 0x00007c7c, 0x00007c7c, 0x00007c7c, 0x0000783c, 0x00000000, 0x00000000, 0x00000000, 0x00000000, 0x00000000, 0x00000000, 0x00000000};
constexpr uint32_t kRows_uX[] = {0x00000000, 0x00000000, 0x00000000, 0x00000000, 0x00000000, 0x00000000, 0x0000780f, 0x00003c1f, 0x00003c1e, 0x00001e3c, 0x00001e3c, 0x00000f78, 0x000007f8, 0x000007f0, 0x000003e0, 0x000003e0, 0x000003e0, 0x000007f0, 0x000007f0, 0x00000ff8, 0x00000f78, 0x00001e3c, 0x00001e3e, 0x00003c1e, 0x00007c0f, 0x0000780f, 0x00000000, 0x00000000, 0x00000000, 0x00000000, 0x00000000, 0x00000000, 0x00000000};
constexpr uint32_t kRows_uY[] = {0x00000000, 0x00000000, 0x00000000, 0x00000000, 0x00000000, 0x00000000, 0x0000f01f, 0x0000f01e, 0x0000783e, 0x0000783c, 0x00003c7c, 0x00003c78, 0x00001ef8, 0x00001ef0, 0x00000fe0, 0x00000fe0, 0x000007c0, 0x000007c0, 0x000003c0, 0x000003c0, 0x000003c0, 0x000003c0, 0x000003c0, 0x000003c0, 0x000003c0, 0x000003c0, 0x00000000, 0x00000000, 0x00000000, 0x00000000, 0x00000000, 0x00000000, 0x00000000};
constexpr uint32_t kRows_uZ[] = {0x00000000, 0x00000000, 0x00000000, 0x00000000, 0x00000000, 0x00000000, 0x00003fff, 0x00003fff, 0x00003fff, 0x00003f00, 0x00001f00, 0x00000f80, 0x00000fc0, 0x000007c0, 0x000003e0, 0x000001f0, 0x000001f0, 0x000000f8, 0x0000007c, 0x0000007c, 0x0000003e, 0x0000001f, 0x0000001f, 0x00003fff, 0x00003fff, 0x00003fff, 0x00000000, 0x00000000, 0x00000000, 0x00000000, 0x00000000, 0x00000000, 0x00000000};
constexpr uint32_t kRows_la[] = {0x00000000, 0x00000000, 0x00000000, 0x00000000, 0x00000000, 0x00000000, 0x00000000, 0x00000000, 0x00000000, 0x00000000, 0x00000000, 0x000007f8, 0x00001ffc, 0x00001ffc, 0x00003c04, 0x00003c00, 0x00003ff0, 0x00003ffc, 0x00003ffe, 0x00003c3f, 0x00003c1f, 0x00003c1f, 0x00003e1f, 0x00003ffe, 0x00003ffc, 0x00003cf8, 0x00000000, 0x00000000, 0x00000000, 0x00000000, 0x00000000, 0x00000000, 0x00000000};
constexpr uint32_t kRows_lb[] = {0x00000000, 0x00000000, 0x00000000, 0x00000000, 0x00000000, 0x0000000f, 0x0000000f, 0x0000000f, 0x0000000f, 0x0000000f, 0x0000000f, 0x000003cf, 0x00000fef, 0x00000fff, 0x00001f1f, 0x00001e1f, 0x00001e0f, 0x00003c0f, 0x00003c0f, 0x00003c0f, 0x00001e0f, 0x00001e1f, 0x00001f1f, 0x00000fff, 0x00000fef, 0x000003cf, 0x00000000, 0x00000000, 0x00000000, 0x00000000, 0x00000000, 0x00000000, 0x00000000};
constexpr uint32_t kRows_lc[] = {0x00000000, 0x00000000, 0x00000000, 0x00000000, 0x00000000, 0x00000000, 0x00000000, 0x00000000, 0x00000000, 0x00000000, 0x00000000, 0x000007e0, 0x00001ff8, 0x00001ffc, 0x0000083e, 0x0000001e, 0x0000001e, 0x0000000f, 0x0000000f, 0x0000000f, 0x0000001e, 0x0000001e, 0x0000083e, 0x00001ffc, 0x00001ff8, 0x000007e0, 0x00000000, 0x00000000, 0x00000000, 0x00000000, 0x00000000, 0x00000000, 0x00000000};
constexpr uint32_t kRows_ld[] = {0x00000000, 0x00000000, 0x00000000, 0x00000000, 0x00000000, 0x00003c00, 0x00003c00, 0x00003c00, 0x00003c00, 0x00003c00, 0x00003c00, 0x00003cf0, 0x00003dfc, 0x00003ffe, 0x00003f3e, 0x00003e1e, 0x00003c0f, 0x00003c0f, 0x00003c0f, 0x00003c0f, 0x00003c0f, 0x00003e1e, 0x00003f3e, 0x00003ffe, 0x00003dfc, 0x00003cf8, 0x00000000, 0x00000000, 0x00000000, 0x00000000, 0x00000000, 0x00000000, 0x00000000};
constexpr uint32_t kRows_le[] = {0x00000000, 0x00000000, 0x00000000, 0x00000000, 0x00000000, 0x00000000, 0x00000000, 0x00000000, 0x00000000, 0x00000000, 0x00000000, 0x000007e0, 0x00000ff8, 0x00001ffc, 0x00003e3e, 0x00003c1e, 0x0000781f, 0x00007fff, 0x00007fff, 0x00007fff, 0x0000000f, 0x0000001e, 0x0000303e, 0x00003ffc, 0x00003ff8, 0x00000fe0, 0x00000000, 0x00000000, 0x00000000, 0x00000000, 0x00000000, 0x00000000, 0x00000000};
constexpr uint32_t kRows_lf[] = {0x00000000, 0x00000000, 0x00000000, 0x00000000, 0x00000000, 0x00001fc0, 0x00001fe0, 0x00001ff0, 0x000000f0, 0x000000f0, 0x000000f0, 0x00001fff, 0x00001fff, 0x00001fff, 0x000000f0, 0x000000f0, 0x000000f0, 0x000000f0, 0x000000f0, 0x000000f0, 0x000000f0, 0x000000f0, 0x000000f0, 0x000000f0, 0x000000f0, 0x000000f0, 0x00000000, 0x00000000, 0x00000000, 0x00000000, 0x00000000, 0x00000000, 0x00000000};
constexpr uint32_t kRows_lg[] = {0x00000000, 0x00000000, 0x00000000, 0x00000000, 0x00000000, 0x00000000, 0x00000000, 0x00000000, 0x00000000, 0x00000000, 0x00000000, 0x00003cf0, 0x00003ffc, 0x00003ffc, 0x00003e3e, 0x00003e1e, 0x00003c1e, 0x00003c0f, 0x00003c0f, 0x00003c0f, 0x00003c1f, 0x00003e1e, 0x00003e3e, 0x00003ffc, 0x00003ffc, 0x00003cf0, 0x00003c00, 0x00003c00, 0x00001e04, 0x00001ffc, 0x00000ffc, 0x000003f8, 0x00000000};
constexpr uint32_t kRows_lh[] = {0x00000000, 0x00000000, 0x00000000, 0x00000000, 0x00000000, 0x0000000f, 0x0000000f, 0x0000000f, 0x0000000f, 0x0000000f, 0x0000000f, 0x000003cf, 0x00000fef, 0x00000fff, 0x00000f1f, 0x00001f1f, 0x00001e0f, 0x00001e0f, 0x00001e0f, 0x00001e0f, 0x00001e0f, 0x00001e0f, 0x00001e0f, 0x00001e0f, 0x00001e0f, 0x00001e0f, 0x00000000, 0x00000000, 0x00000000, 0x00000000, 0x00000000, 0x00000000, 0x00000000};
constexpr uint32_t kRows_li[] = {0x00000000, 0x00000000, 0x00000000, 0x000001e0, 0x000001e0, 0x000001e0, 0x000001e0, 0x000001e0, 0x00000000, 0x00000000, 0x00000000, 0x000001fe, 0x000001fe, 0x000001fe, 0x000001e0, 0x000001e0, 0x000001e0, 0x000001e0, 0x000001e0, 0x000001e0, 0x000001e0, 0x000001e0, 0x000001e0, 0x00003fff, 0x00003fff, 0x00003fff, 0x00000000, 0x00000000, 0x00000000, 0x00000000, 0x00000000, 0x00000000, 0x00000000};
constexpr uint32_t kRows_lj[] = {0x00000000, 0x00000000, 0x00000000, 0x000003c0, 0x000003c0, 0x000003c0, 0x000003c0, 0x000003c0, 0x00000000, 0x00000000, 0x00000000, 0x000003fc, 0x000003fc, 0x000003fc, 0x000003c0, 0x000003c0, 0x000003c0, 0x000003c0, 0x000003c0, 0x000003c0, 0x000003c0, 0x000003c0, 0x000003c0, 0x000003c0, 0x000003c0, 0x000003c0, 0x000003c0, 0x000003e0, 0x000001e0, 0x000001ff, 0x000000ff, 0x0000007f, 0x00000000};
constexpr uint32_t kRows_lk[] = {0x00000000, 0x00000000, 0x00000000, 0x00000000, 0x00000000, 0x0000000f, 0x0000000f, 0x0000000f, 0x0000000f, 0x0000000f, 0x0000000f, 0x00003e0f, 0x00000f0f, 0x0000078f, 0x000003cf, 0x000001ff, 0x000000ff, 0x000001ff, 0x000001ff, 0x000003df, 0x0000078f, 0x0000078f, 0x00000f0f, 0x00001f0f, 0x00001e0f, 0x00003c0f, 0x00000000, 0x00000000, 0x00000000, 0x00000000, 0x00000000, 0x00000000, 0x00000000};
constexpr uint32_t kRows_ll[] = {0x00000000, 0x00000000, 0x00000000, 0x00000000, 0x00000000, 0x000000ff, 0x000000ff, 0x000000ff, 0x000000f0, 0x000000f0, 0x000000f0, 0x000000f0, 0x000000f0, 0x000000f0, 0x000000f0, 0x000000f0, 0x000000f0, 0x000000f0, 0x000000f0, 0x000000f0, 0x000000f0, 0x000001f0, 0x000001e0, 0x00003fe0, 0x00003fc0, 0x00003f80, 0x00000000, 0x00000000, 0x00000000, 0x00000000, 0x00000000, 0x00000000, 0x00000000};
constexpr uint32_t kRows_lm[] = {0x00000000, 0x00000000, 0x00000000, 0x00000000, 0x00000000, 0x00000000, 0x00000000, 0x00000000, 0x00000000, 0x00000000, 0x00000000, 0x00001c77, 0x00003fff, 0x00003fff, 0x000079ef, 0x000079c7, 0x000071c7, 0x000071c7, 0x000071c7, 0x000071c7, 0x000071c7, 0x000071c7, 0x000071c7, 0x000071c7, 0x000071c7, 0x000071c7, 0x00000000, 0x00000000, 0x00000000, 0x00000000, 0x00000000, 0x00000000, 0x00000000};
constexpr uint32_t kRows_ln[] = {0x00000000, 0x00000000, 0x00000000, 0x00000000, 0x00000000, 0x00000000, 0x00000000, 0x00000000, 0x00000000, 0x00000000, 0x00000000, 0x000003cf, 0x00000fff, 0x00000fff, 0x00000f1f, 0x00001f1f, 0x00001e0f, 0x00001e0f, 0x00001e0f, 0x00001e0f, 0x00001e0f, 0x00001e0f, 0x00001e0f, 0x00001e0f, 0x00001e0f, 0x00001e0f, 0x00000000, 0x00000000, 0x00000000, 0x00000000, 0x00000000, 0x00000000, 0x00000000};
constexpr uint32_t kRows_lo[] = {0x00000000, 0x00000000, 0x00000000, 0x00000000, 0x00000000, 0x00000000, 0x00000000, 0x00000000, 0x00000000, 0x00000000, 0x00000000, 0x000003e0, 0x00000ff8, 0x00001ffc, 0x00003e3e, 0x00003c1e, 0x00003c1e, 0x00003c0f, 0x00003c0f, 0x00003c0f, 0x00003c1e, 0x00003c1e, 0x00003e3e, 0x00001ffc, 0x00000ff8, 0x000003e0, 0x00000000, 0x00000000, 0x00000000, 0x00000000, 0x00000000, 0x00000000, 0x00000000};
constexpr uint32_t kRows_lp[] = {0x00000000, 0x00000000, 0x00000000, 0x00000000, 0x00000000, 0x00000000, 0x00000000, 0x00000000, 0x00000000, 0x00000000, 0x00000000, 0x000003cf, 0x00000fef, 0x00000fff, 0x00001f1f, 0x00001e1f, 0x00001e0f, 0x00003c0f, 0x00003c0f, 0x00003c0f, 0x00001e0f, 0x00001e1f, 0x00001f1f, 0x00000fff, 0x00000fef, 0x000003cf, 0x0000000f, 0x0000000f, 0x0000000f, 0x0000000f, 0x0000000f, 0x0000000f, 0x00000000};
constexpr uint32_t kRows_lq[] = {0x00000000, 0x00000000, 0x00000000, 0x00000000, 0x00000000, 0x00000000, 0x00000000, 0x00000000, 0x00000000, 0x00000000, 0x00000000, 0x00003cf8, 0x00003dfc, 0x00003ffe, 0x00003f3e, 0x00003e1e, 0x00003c0f, 0x00003c0f, 0x00003c0f, 0x00003c0f, 0x00003c0f, 0x00003e1e, 0x00003f3e, 0x00003ffe, 0x00003dfc, 0x00003cf0, 0x00003c00, 0x00003c00, 0x00003c00, 0x00003c00, 0x00003c00, 0x00003c00, 0x00000000};
constexpr uint32_t kRows_lr[] = {0x00000000, 0x00000000, 0x00000000, 0x00000000, 0x00000000, 0x00000000, 0x00000000, 0x00000000, 0x00000000, 0x00000000, 0x00000000, 0x000007cf, 0x00000fef, 0x00000fff, 0x00000c3f, 0x0000001f, 0x0000000f, 0x0000000f, 0x0000000f, 0x0000000f, 0x0000000f, 0x0000000f, 0x0000000f, 0x0000000f, 0x0000000f, 0x0000000f, 0x00000000, 0x00000000, 0x00000000, 0x00000000, 0x00000000, 0x00000000, 0x00000000};
constexpr uint32_t kRows_ls[] = {0x00000000, 0x00000000, 0x00000000, 0x00000000, 0x00000000, 0x00000000, 0x00000000, 0x00000000, 0x00000000, 0x00000000, 0x00000000, 0x000003f8, 0x00000ffc, 0x00000ffe, 0x0000041f, 0x0000000f, 0x0000003f, 0x000003fe, 0x000007fc, 0x00000ff0, 0x00000f00, 0x00001e00, 0x00000f02, 0x00000ffe, 0x000007fe, 0x000003f8, 0x00000000, 0x00000000, 0x00000000, 0x00000000, 0x00000000, 0x00000000, 0x00000000};
constexpr uint32_t kRows_lt[] = {0x00000000, 0x00000000, 0x00000000, 0x00000000, 0x00000000, 0x00000000, 0x00000000, 0x00000078, 0x00000078, 0x00000078, 0x00000078, 0x00001fff, 0x00001fff, 0x00001fff, 0x00000078, 0x00000078, 0x00000078, 0x00000078, 0x00000078, 0x00000078, 0x00000078, 0x00000078, 0x000000f0, 0x00001ff0, 0x00001ff0, 0x00001fc0, 0x00000000, 0x00000000, 0x00000000, 0x00000000, 0x00000000, 0x00000000, 0x00000000};
constexpr uint32_t kRows_lu[] = {0x00000000, 0x00000000, 0x00000000, 0x00000000, 0x00000000, 0x00000000, 0x00000000, 0x00000000, 0x00000000, 0x00000000, 0x00000000, 0x00001f0f, 0x00001f0f, 0x00001f0f, 0x00001f0f, 0x00001f0f, 0x00001f0f, 0x00001f0f, 0x00001f0f, 0x00001f0f, 0x00001f0f, 0x00001f0f, 0x00001f9f, 0x00001ffe, 0x00001ffe, 0x00001f7c, 0x00000000, 0x00000000, 0x00000000, 0x00000000, 0x00000000, 0x00000000, 0x00000000};
constexpr uint32_t kRows_lv[] = {0x00000000, 0x00000000, 0x00000000, 0x00000000, 0x00000000, 0x00000000, 0x00000000, 0x00000000, 0x00000000, 0x00000000, 0x00000000, 0x0000780f, 0x00003c1e, 0x00003c1e, 0x00003c1e, 0x00001e1c, 0x00001e3c, 0x00001e3c, 0x00000e38, 0x00000f78, 0x00000f78, 0x00000770, 0x000007f0, 0x000007f0, 0x000003f0, 0x000003e0, 0x00000000, 0x00000000, 0x00000000, 0x00000000, 0x00000000, 0x00000000, 0x00000000};
constexpr uint32_t kRows_lw[] = {0x00000000, 0x00000000, 0x00000000, 0x00000000, 0x00000000, 0x00000000, 0x00000000, 0x00000000, 0x00000000, 0x00000000, 0x00000000, 0x0001e007, 0x0001e00f, 0x0000e00f, 0x0000e00e, 0x0000e38e, 0x0000e3ce, 0x0000f7ce, 0x000077de, 0x000076dc, 0x000076dc, 0x00007efc, 0x00007e7c, 0x00007c7c, 0x00003c78, 0x00003c78, 0x00000000, 0x00000000, 0x00000000, 0x00000000, 0x00000000, 0x00000000, 0x00000000};
constexpr uint32_t kRows_lx[] = {0x00000000, 0x00000000, 0x00000000, 0x00000000, 0x00000000, 0x00000000, 0x00000000, 0x00000000, 0x00000000, 0x00000000, 0x00000000, 0x00003c1e, 0x00003e3e, 0x00001e3c, 0x00000f78, 0x000007f8, 0x000007f0, 0x000003e0, 0x000003e0, 0x000003f0, 0x000007f0, 0x00000f78, 0x00001f7c, 0x00001e3c, 0x00003c1e, 0x00007c1f, 0x00000000, 0x00000000, 0x00000000, 0x00000000, 0x00000000, 0x00000000, 0x00000000};
constexpr uint32_t kRows_ly[] = {0x00000000, 0x00000000, 0x00000000, 0x00000000, 0x00000000, 0x00000000, 0x00000000, 0x00000000, 0x00000000, 0x00000000, 0x00000000, 0x0000780f, 0x00007c1f, 0x00003c1e, 0x00003c1e, 0x00001e3c, 0x00001e3c, 0x00001e3c, 0x00000f78, 0x00000f78, 0x00000ff0, 0x000007f0, 0x000007f0, 0x000003e0, 0x000003e0, 0x000003c0, 0x000001e0, 0x000001e0, 0x000000f0, 0x000000fe, 0x0000007e, 0x0000003e, 0x00000000};
constexpr uint32_t kRows_lz[] = {0x00000000, 0x00000000, 0x00000000, 0x00000000, 0x00000000, 0x00000000, 0x00000000, 0x00000000, 0x00000000, 0x00000000, 0x00000000, 0x00001ffe, 0x00001ffe, 0x00001ffe, 0x00000f00, 0x00000780, 0x000007c0, 0x000003e0, 0x000001f0, 0x000000f8, 0x0000007c, 0x0000003c, 0x0000001e, 0x00001fff, 0x00001fff, 0x00001fff, 0x00000000, 0x00000000, 0x00000000, 0x00000000, 0x00000000, 0x00000000, 0x00000000};

constexpr GlyphBitmap kGlyphs[] = {
    {'0', 13, 33, kRows_d0},
    {'1', 13, 33, kRows_d1},
    {'2', 13, 33, kRows_d2},
    {'3', 13, 33, kRows_d3},
    {'4', 15, 33, kRows_d4},
    {'5', 13, 33, kRows_d5},
    {'6', 13, 33, kRows_d6},
    {'7', 13, 33, kRows_d7},
    {'8', 13, 33, kRows_d8},
    {'9', 13, 33, kRows_d9},
    {'A', 15, 33, kRows_uA},
    {'B', 14, 33, kRows_uB},
    {'C', 13, 33, kRows_uC},
    {'D', 14, 33, kRows_uD},
    {'E', 13, 33, kRows_uE},
    {'F', 13, 33, kRows_uF},
    {'G', 13, 33, kRows_uG},
    {'H', 13, 33, kRows_uH},
    {'I', 13, 33, kRows_uI},
    {'J', 13, 33, kRows_uJ},
    {'K', 14, 33, kRows_uK},
    {'L', 13, 33, kRows_uL},
    {'M', 15, 33, kRows_uM},
    {'N', 13, 33, kRows_uN},
    {'O', 15, 33, kRows_uO},
    {'P', 14, 33, kRows_uP},
    {'Q', 15, 33, kRows_uQ},
    {'R', 15, 33, kRows_uR},
    {'S', 13, 33, kRows_uS},
    {'T', 15, 33, kRows_uT},
    {'U', 14, 33, kRows_uU},
    {'V', 15, 33, kRows_uV},
    {'W', 17, 33, kRows_uW},
    {'X', 15, 33, kRows_uX},
    {'Y', 16, 33, kRows_uY},
    {'Z', 14, 33, kRows_uZ},
    {'a', 14, 33, kRows_la},
    {'b', 14, 33, kRows_lb},
    {'c', 13, 33, kRows_lc},
    {'d', 14, 33, kRows_ld},
    {'e', 15, 33, kRows_le},
    {'f', 13, 33, kRows_lf},
    {'g', 14, 33, kRows_lg},
    {'h', 13, 33, kRows_lh},
    {'i', 14, 33, kRows_li},
    {'j', 10, 33, kRows_lj},
    {'k', 14, 33, kRows_lk},
    {'l', 14, 33, kRows_ll},
    {'m', 15, 33, kRows_lm},
    {'n', 13, 33, kRows_ln},
    {'o', 14, 33, kRows_lo},
    {'p', 14, 33, kRows_lp},
    {'q', 14, 33, kRows_lq},
    {'r', 12, 33, kRows_lr},
    {'s', 13, 33, kRows_ls},
    {'t', 13, 33, kRows_lt},
    {'u', 13, 33, kRows_lu},
    {'v', 15, 33, kRows_lv},
    {'w', 17, 33, kRows_lw},
    {'x', 15, 33, kRows_lx},
    {'y', 15, 33, kRows_ly},
    {'z', 13, 33, kRows_lz},
};

}  // namespace

const GlyphBitmap* find_glyph(char c) {
    for (const auto& g : kGlyphs)
        if (g.ch == c) return &g;
    return nullptr;
}

int glyph_count() { return static_cast<int>(std::size(kGlyphs)); }

}  // namespace caf
