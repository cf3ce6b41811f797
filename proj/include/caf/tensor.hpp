#pragma once

#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace caf {

// Dense row-major tensor of 64-bit floats. Shapes are validated on
// construction (every extent >= 1); there is no broadcasting, all shape
// mismatches in the operations below are hard errors.
class Tensor {
  public:
    Tensor() = default;
    explicit Tensor(std::vector<int64_t> shape, double fill = 0.0);

    static Tensor filled(std::vector<int64_t> shape, double value);
    static Tensor zeros(std::vector<int64_t> shape) { return Tensor(std::move(shape), 0.0); }
    static Tensor zeros_like(const Tensor& other) { return Tensor(other.shape(), 0.0); }
    static Tensor from_values(std::vector<int64_t> shape, std::vector<double> values);

    const std::vector<int64_t>& shape() const { return shape_; }
    int rank() const { return static_cast<int>(shape_.size()); }
    int64_t extent(int dim) const { return shape_[static_cast<size_t>(dim)]; }
    int64_t size() const { return static_cast<int64_t>(data_.size()); }

    double* data() { return data_.data(); }
    const double* data() const { return data_.data(); }
    std::span<double> values() { return data_; }
    std::span<const double> values() const { return data_; }

    double& operator[](int64_t i) { return data_[static_cast<size_t>(i)]; }
    double operator[](int64_t i) const { return data_[static_cast<size_t>(i)]; }

    // Row-major flat index of a full coordinate.
    int64_t flat_index(std::span<const int64_t> coords) const;
    double& at(std::initializer_list<int64_t> coords);
    double at(std::initializer_list<int64_t> coords) const;

    // Reinterpret with a new shape of equal element count.
    Tensor reshaped(std::vector<int64_t> new_shape) const;

    bool same_shape(const Tensor& other) const { return shape_ == other.shape_; }
    bool all_finite() const;

    void fill(double value);

  private:
    std::vector<int64_t> shape_;
    std::vector<double> data_;
};

// Standard matrix product of two rank-2 tensors, [M,K] x [K,N] -> [M,N].
Tensor matmul(const Tensor& a, const Tensor& b);

int64_t checked_element_count(const std::vector<int64_t>& shape);

namespace detail {

// Raw GEMM kernels used by the layer code. All accumulate with a fixed
// summation order so results do not depend on thread count.
//   gemm:    C  = A[M,K] * B[K,N]
//   gemm_at: C += A[K,M]^T * B[K,N]   (A stored [K,M], i.e. transposed use)
//   gemm_bt: C += A[M,K] * B[N,K]^T
void gemm(const double* a, const double* b, double* c, int64_t m, int64_t k, int64_t n);
void gemm_at(const double* a, const double* b, double* c, int64_t k, int64_t m, int64_t n);
void gemm_bt(const double* a, const double* b, double* c, int64_t m, int64_t k, int64_t n);

}  // namespace detail

}  // namespace caf
