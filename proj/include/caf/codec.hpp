#pragma once

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "caf/tensor.hpp"

namespace caf {

// Ordered character set with a char <-> class-index bijection. The default
// ordering is digits, then uppercase, then lowercase, giving indices
// 0-9 -> 0..9, A-Z -> 10..35, a-z -> 36..61.
class Alphabet {
  public:
    explicit Alphabet(std::string chars);
    static const Alphabet& default_alnum();

    int size() const { return static_cast<int>(chars_.size()); }
    const std::string& chars() const { return chars_; }
    bool contains(char c) const { return index_of(c) >= 0; }
    // -1 when the character is not in the alphabet.
    int index_of(char c) const { return lookup_[static_cast<unsigned char>(c)]; }
    char char_at(int index) const;

  private:
    std::string chars_;
    std::array<int, 256> lookup_;
};

// Output head geometry: `length` characters, each classified over `classes`
// alphabet entries; the flat head has length*classes neurons, the block for
// position i starting at i*classes.
struct HeadLayout {
    int length = 0;
    int classes = 0;

    int total() const { return length * classes; }
};

// Per-character probability distributions: `length` rows of `classes`
// probabilities each, stored row-major. Each row sums to 1.
struct PredDist {
    int length = 0;
    int classes = 0;
    std::vector<double> p;

    double at(int row, int cls) const { return p[static_cast<size_t>(row) * classes + cls]; }
};

// Class index of a character; throws ValueError for characters outside the
// alphabet.
int encode_char(const Alphabet& alpha, char x);

// Inverse mapping; throws ValueError for indices outside [0, size).
char decode_index(const Alphabet& alpha, int index);

// Flat output-neuron id for character x at position i: i*classes + index(x).
int neuron_index(const Alphabet& alpha, const HeadLayout& layout, int position, char x);

// One-hot target of length layout.total(): one hot entry per character block.
Tensor encode_label(const Alphabet& alpha, const HeadLayout& layout, std::string_view label);

// Per-row argmax decoded through the alphabet; ties resolve to the lowest
// class index.
std::string decode_prediction(const Alphabet& alpha, const PredDist& dist);

// Validates label length and membership; throws ValueError.
void check_label(const Alphabet& alpha, int expected_length, std::string_view label);

}  // namespace caf
