#include "caf/codec.hpp"

#include "caf/error.hpp"

namespace caf {

namespace {

constexpr std::string_view kDefaultChars =
    "0123456789ABCDEFGHIJKLMNOPQRSTUVWXYZabcdefghijklmnopqrstuvwxyz";

}  // namespace

Alphabet::Alphabet(std::string chars) : chars_(std::move(chars)) {
    if (chars_.size() < 2 || chars_.size() > 62)
        throw ValueError("alphabet size must be in [2, 62], got " + std::to_string(chars_.size()));
    lookup_.fill(-1);
    for (size_t i = 0; i < chars_.size(); ++i) {
        unsigned char c = static_cast<unsigned char>(chars_[i]);
        if (lookup_[c] >= 0) throw ValueError(std::string("duplicate alphabet character '") + chars_[i] + "'");
        lookup_[c] = static_cast<int>(i);
    }
}

const Alphabet& Alphabet::default_alnum() {
    static const Alphabet alpha{std::string(kDefaultChars)};
    return alpha;
}

char Alphabet::char_at(int index) const {
    if (index < 0 || index >= size())
        throw ValueError("class index " + std::to_string(index) + " outside [0, " + std::to_string(size()) + ")");
    return chars_[static_cast<size_t>(index)];
}

int encode_char(const Alphabet& alpha, char x) {
    int idx = alpha.index_of(x);
    if (idx < 0) throw ValueError(std::string("character '") + x + "' is not in the alphabet");
    return idx;
}

char decode_index(const Alphabet& alpha, int index) {
    return alpha.char_at(index);
}

int neuron_index(const Alphabet& alpha, const HeadLayout& layout, int position, char x) {
    if (alpha.size() != layout.classes)
        throw ValueError("alphabet size does not match head layout classes");
    if (position < 0 || position >= layout.length)
        throw ValueError("position " + std::to_string(position) + " outside [0, " +
                         std::to_string(layout.length) + ")");
    return position * layout.classes + encode_char(alpha, x);
}

Tensor encode_label(const Alphabet& alpha, const HeadLayout& layout, std::string_view label) {
    if (static_cast<int>(label.size()) != layout.length)
        throw ValueError("label length " + std::to_string(label.size()) + " does not match head length " +
                         std::to_string(layout.length));
    Tensor onehot({layout.total()});
    for (int i = 0; i < layout.length; ++i)
        onehot[neuron_index(alpha, layout, i, label[static_cast<size_t>(i)])] = 1.0;
    return onehot;
}

std::string decode_prediction(const Alphabet& alpha, const PredDist& dist) {
    if (dist.classes != alpha.size())
        throw ShapeError("prediction row length " + std::to_string(dist.classes) +
                         " does not match alphabet size " + std::to_string(alpha.size()));
    if (dist.p.size() != static_cast<size_t>(dist.length) * dist.classes)
        throw ShapeError("prediction buffer does not match length*classes");
    std::string out;
    out.reserve(static_cast<size_t>(dist.length));
    for (int i = 0; i < dist.length; ++i) {
        int best = 0;
        double best_p = dist.at(i, 0);
        for (int c = 1; c < dist.classes; ++c) {
            if (dist.at(i, c) > best_p) {
                best_p = dist.at(i, c);
                best = c;
            }
        }
        out.push_back(alpha.char_at(best));
    }
    return out;
}

void check_label(const Alphabet& alpha, int expected_length, std::string_view label) {
    if (static_cast<int>(label.size()) != expected_length)
        throw ValueError("label \"" + std::string(label) + "\" has length " + std::to_string(label.size()) +
                         ", expected " + std::to_string(expected_length));
    for (char c : label)
        if (!alpha.contains(c)) throw ValueError(std::string("label character '") + c + "' is not in the alphabet");
}

}  // namespace caf
