#include "caf/random.hpp"

#include "caf/error.hpp"

namespace caf {

namespace {

constexpr uint64_t kGolden = 0x9E3779B97F4A7C15ULL;
constexpr uint64_t kSeedSalt = 0xD1B54A32D192ED03ULL;
constexpr uint64_t kChildSalt = 0xA24BAED4963EE407ULL;

// murmur3 64-bit finalizer; full avalanche on distinct inputs.
constexpr uint64_t mix(uint64_t z) {
    z ^= z >> 33;
    z *= 0xFF51AFD7ED558CCDULL;
    z ^= z >> 33;
    z *= 0xC4CEB9FE1A85EC53ULL;
    z ^= z >> 33;
    return z;
}

}  // namespace

RandomSource::RandomSource(uint64_t seed) : key_(mix(seed + kSeedSalt)), counter_(0) {}

RandomSource RandomSource::child(uint64_t tag) const {
    RandomSource c;
    c.key_ = mix(mix(key_ ^ kChildSalt) + tag * kGolden);
    c.counter_ = 0;
    return c;
}

RandomSource RandomSource::child(std::string_view tag) const {
    return child(hash_tag(tag));
}

uint64_t RandomSource::hash_tag(std::string_view tag) {
    // FNV-1a over the tag bytes.
    uint64_t h = 0xCBF29CE484222325ULL;
    for (unsigned char c : tag) {
        h ^= c;
        h *= 0x100000001B3ULL;
    }
    return h;
}

uint64_t RandomSource::value_at(uint64_t index) const {
    return mix(key_ + (index + 1) * kGolden);
}

uint64_t RandomSource::next_u64() {
    return value_at(counter_++);
}

double RandomSource::double_at(uint64_t index) const {
    return static_cast<double>(value_at(index) >> 11) * 0x1.0p-53;
}

double RandomSource::next_double() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double RandomSource::uniform(double lo, double hi) {
    if (!(lo < hi)) throw ValueError("uniform range requires lo < hi");
    return lo + (hi - lo) * next_double();
}

uint64_t RandomSource::next_below(uint64_t n) {
    if (n == 0) throw ValueError("next_below requires n >= 1");
    // Lemire multiply-shift; bias is O(2^-64), irrelevant here.
    return static_cast<uint64_t>((static_cast<unsigned __int128>(next_u64()) * n) >> 64);
}

Tensor RandomSource::uniform_tensor(std::vector<int64_t> shape, double lo, double hi) {
    if (!(lo < hi)) throw ValueError("uniform range requires lo < hi");
    Tensor t(std::move(shape));
    const double span = hi - lo;
    for (int64_t i = 0; i < t.size(); ++i) t[i] = lo + span * next_double();
    return t;
}

}  // namespace caf
