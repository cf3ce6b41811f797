#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "caf/codec.hpp"
#include "caf/image.hpp"
#include "caf/random.hpp"
#include "caf/tensor.hpp"

namespace caf {

struct ConvSpec {
    int filters = 0;
    int kernel = 0;
    int pad = 0;
    int stride = 1;
};

struct PoolSpec {
    int window = 0;
    int stride = 1;
};

// Topology: conv -> ReLU -> dropout -> max-pool, repeated per stage, then
// flatten -> fc1 -> ReLU -> dropout -> fc2 -> grouped softmax (independent
// softmax over each character block of the head).
struct NetConfig {
    int input_h = 0;
    int input_w = 0;
    std::vector<ConvSpec> convs;
    std::vector<PoolSpec> pools;  // one per conv stage
    int fc1_width = 0;
    HeadLayout head;
    double dropout_rate = 0.5;
};

// floor((in + 2*pad - kernel) / stride) + 1; throws ShapeError when the
// kernel exceeds the padded extent or the result would be < 1.
int out_extent(int in, int kernel, int pad, int stride);

struct StageShape {
    int channels = 0;
    int h = 0;
    int w = 0;
    int64_t count() const { return static_cast<int64_t>(channels) * h * w; }
};

struct NetShapes {
    std::vector<StageShape> conv_out;
    std::vector<StageShape> pool_out;
    int64_t flat = 0;
};

// Validates the whole pipeline and returns every intermediate extent.
NetShapes compute_shapes(const NetConfig& cfg);

// All learnable tensors in declaration order: convN.weight/.bias per stage,
// then fc1.weight/.bias, head.weight/.bias. `decay` marks tensors subject
// to L2 weight decay (weights yes, biases no).
struct ModelParams {
    struct Entry {
        std::string name;
        Tensor value;
        bool decay = false;
    };
    std::vector<Entry> entries;

    int64_t total_size() const;
    bool all_finite() const;
};

// Fan-in-scaled uniform init (+-sqrt(6/fan_in)) for weights, zero biases.
ModelParams init_params(const NetConfig& cfg, RandomSource& rs);

enum class Mode { train, eval };

// Everything backward needs, plus the grouped-softmax probabilities.
struct ForwardCache {
    Mode mode = Mode::eval;
    int64_t batch = 0;
    Tensor input;                                // [N,1,H,W]
    std::vector<Tensor> conv_pre;                // per stage, pre-ReLU
    std::vector<Tensor> drop_mask;               // per stage; size 0 when inactive
    std::vector<Tensor> stage_out;               // per stage, post-pool
    std::vector<std::vector<int32_t>> pool_argmax;  // per stage, per-sample-relative flat index
    Tensor fc1_pre;                              // [N, fc1]
    Tensor fc1_mask;                             // size 0 when inactive
    Tensor probs;                                // [N, head.total()]
};

// Full pipeline over a batch. In train mode with dropout_rate > 0, inverted
// dropout masks are drawn from per-site child streams of rs (counter-based,
// so results do not depend on evaluation order); eval mode never touches rs.
ForwardCache forward(const ModelParams& params, const NetConfig& cfg, const Tensor& batch, Mode mode,
                     RandomSource rs);

std::vector<PredDist> to_pred_dists(const Tensor& probs, const HeadLayout& head);

// Mean over samples of the summed per-character cross-entropy. Predicted
// probabilities are clamped at 1e-12 before the log.
double loss_value(const Tensor& probs, std::span<const int> target_classes, const HeadLayout& head);

// Spec-facing overload on one-hot targets [N, head.total()].
double loss_value(const Tensor& probs, const Tensor& one_hot_targets, const HeadLayout& head);

// Analytic gradients for every parameter tensor, aligned with
// params.entries. Requires a train-mode cache from the same batch; dropout
// masks are replayed from the cache.
std::vector<Tensor> backward(const ModelParams& params, const NetConfig& cfg, const ForwardCache& cache,
                             std::span<const int> target_classes);

struct GradCheckEntry {
    std::string tensor;
    double max_rel_err = 0.0;
    int64_t checked = 0;
};

// Central-difference check of backward() against the loss, one report entry
// per parameter tensor. Requires cfg.dropout_rate == 0. max_coords == 0
// checks every coordinate.
std::vector<GradCheckEntry> grad_check(const NetConfig& cfg, RandomSource& rs, int batch_size = 2,
                                       double fd_step = 1e-5, int64_t max_coords = 0);

// Batch assembly: pixels map to [0,1] with ink = 1 (strokes carry signal).
Tensor make_batch(const std::vector<LabeledSample>& data, std::span<const int64_t> indices,
                  const NetConfig& cfg);

// Flat list of class indices, head.length entries per selected sample.
std::vector<int> make_target_classes(const Alphabet& alpha, const HeadLayout& head,
                                     const std::vector<LabeledSample>& data,
                                     std::span<const int64_t> indices);

}  // namespace caf
