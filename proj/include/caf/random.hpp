#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "caf/tensor.hpp"

namespace caf {

// Splittable counter-based random source. A stream is (key, counter); the
// i-th output is a pure function of (key, i), so draws can also be read by
// index without advancing shared state. Child streams are derived from
// (key, tag) and never overlap their parent. Identical seeds produce
// identical streams on every platform.
class RandomSource {
  public:
    RandomSource() : RandomSource(0) {}
    explicit RandomSource(uint64_t seed);

    RandomSource child(uint64_t tag) const;
    RandomSource child(std::string_view tag) const;

    uint64_t next_u64();
    // Random access into the stream; does not advance the counter.
    uint64_t value_at(uint64_t index) const;

    // [0, 1), 53-bit resolution.
    double next_double();
    double double_at(uint64_t index) const;

    // [lo, hi); throws ValueError when lo >= hi.
    double uniform(double lo, double hi);

    // [0, n), n >= 1.
    uint64_t next_below(uint64_t n);

    Tensor uniform_tensor(std::vector<int64_t> shape, double lo, double hi);

    template <class T>
    void shuffle(std::vector<T>& items) {
        for (size_t i = items.size(); i > 1; --i) {
            size_t j = static_cast<size_t>(next_below(i));
            std::swap(items[i - 1], items[j]);
        }
    }

    uint64_t key() const { return key_; }
    uint64_t counter() const { return counter_; }

    static uint64_t hash_tag(std::string_view tag);

  private:
    uint64_t key_ = 0;
    uint64_t counter_ = 0;
};

}  // namespace caf
