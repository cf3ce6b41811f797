#include "caf/tensor.hpp"

#include <cmath>
#include <string>
#include <utility>

#include "caf/error.hpp"

namespace caf {

namespace {

std::string shape_str(const std::vector<int64_t>& shape) {
    std::string s = "[";
    for (size_t i = 0; i < shape.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(shape[i]);
    }
    return s + "]";
}

}  // namespace

int64_t checked_element_count(const std::vector<int64_t>& shape) {
    if (shape.empty()) throw ShapeError("tensor shape must have at least one extent");
    int64_t n = 1;
    for (int64_t e : shape) {
        if (e < 1) throw ShapeError("invalid extent " + std::to_string(e) + " in shape " + shape_str(shape));
        n *= e;
    }
    return n;
}

Tensor::Tensor(std::vector<int64_t> shape, double fill)
    : shape_(std::move(shape)), data_(static_cast<size_t>(checked_element_count(shape_)), fill) {}

Tensor Tensor::filled(std::vector<int64_t> shape, double value) {
    return Tensor(std::move(shape), value);
}

Tensor Tensor::from_values(std::vector<int64_t> shape, std::vector<double> values) {
    int64_t n = checked_element_count(shape);
    if (n != static_cast<int64_t>(values.size()))
        throw ShapeError("value count " + std::to_string(values.size()) + " does not match shape " +
                         shape_str(shape));
    Tensor t;
    t.shape_ = std::move(shape);
    t.data_ = std::move(values);
    return t;
}

int64_t Tensor::flat_index(std::span<const int64_t> coords) const {
    if (coords.size() != shape_.size()) throw ShapeError("coordinate rank does not match tensor rank");
    int64_t idx = 0;
    for (size_t d = 0; d < shape_.size(); ++d) {
        if (coords[d] < 0 || coords[d] >= shape_[d])
            throw ShapeError("coordinate out of range in dimension " + std::to_string(d));
        idx = idx * shape_[d] + coords[d];
    }
    return idx;
}

double& Tensor::at(std::initializer_list<int64_t> coords) {
    return data_[static_cast<size_t>(flat_index(std::span<const int64_t>(coords.begin(), coords.size())))];
}

double Tensor::at(std::initializer_list<int64_t> coords) const {
    return data_[static_cast<size_t>(flat_index(std::span<const int64_t>(coords.begin(), coords.size())))];
}

Tensor Tensor::reshaped(std::vector<int64_t> new_shape) const {
    if (checked_element_count(new_shape) != size())
        throw ShapeError("reshape " + shape_str(shape_) + " -> " + shape_str(new_shape) +
                         " changes element count");
    Tensor t;
    t.shape_ = std::move(new_shape);
    t.data_ = data_;
    return t;
}

bool Tensor::all_finite() const {
    for (double v : data_)
        if (!std::isfinite(v)) return false;
    return true;
}

void Tensor::fill(double value) {
    for (double& v : data_) v = value;
}

namespace detail {

void gemm(const double* a, const double* b, double* c, int64_t m, int64_t k, int64_t n) {
    for (int64_t i = 0; i < m; ++i) {
        double* crow = c + i * n;
        for (int64_t j = 0; j < n; ++j) crow[j] = 0.0;
        const double* arow = a + i * k;
        for (int64_t p = 0; p < k; ++p) {
            const double av = arow[p];
            const double* brow = b + p * n;
            for (int64_t j = 0; j < n; ++j) crow[j] += av * brow[j];
        }
    }
}

void gemm_at(const double* a, const double* b, double* c, int64_t k, int64_t m, int64_t n) {
    for (int64_t p = 0; p < k; ++p) {
        const double* arow = a + p * m;
        const double* brow = b + p * n;
        for (int64_t i = 0; i < m; ++i) {
            const double av = arow[i];
            double* crow = c + i * n;
            for (int64_t j = 0; j < n; ++j) crow[j] += av * brow[j];
        }
    }
}

void gemm_bt(const double* a, const double* b, double* c, int64_t m, int64_t k, int64_t n) {
    for (int64_t i = 0; i < m; ++i) {
        const double* arow = a + i * k;
        double* crow = c + i * n;
        for (int64_t j = 0; j < n; ++j) {
            const double* brow = b + j * k;
            double acc = 0.0;
            for (int64_t p = 0; p < k; ++p) acc += arow[p] * brow[p];
            crow[j] += acc;
        }
    }
}

}  // namespace detail

Tensor matmul(const Tensor& a, const Tensor& b) {
    if (a.rank() != 2 || b.rank() != 2) throw ShapeError("matmul requires rank-2 tensors");
    if (a.extent(1) != b.extent(0))
        throw ShapeError("matmul inner extent mismatch: " + std::to_string(a.extent(1)) + " vs " +
                         std::to_string(b.extent(0)));
    Tensor c({a.extent(0), b.extent(1)});
    detail::gemm(a.data(), b.data(), c.data(), a.extent(0), a.extent(1), b.extent(1));
    return c;
}

}  // namespace caf
