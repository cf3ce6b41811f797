#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "caf/codec.hpp"
#include "caf/image.hpp"
#include "caf/net.hpp"
#include "caf/random.hpp"

namespace caf {

struct OptimConfig {
    double alpha0 = 1e-2;        // initial learning rate
    double beta = 0.75;          // decay exponent
    double gamma = 1e-4;         // decay rate
    double momentum = 0.9;
    double weight_decay = 5e-4;  // L2, applied to weights only
    int batch_size = 64;
};

void validate_config(const OptimConfig& cfg);

// alpha0 * (1 + gamma*t)^(-beta)
double lr_at(const OptimConfig& cfg, int64_t t);

// Mutable training state. `t` counts every step ever applied and persists
// across retraining rounds. `rs` is the run-level stream; each step derives
// its dropout stream from (rs, t) and each epoch its shuffle from (rs, e),
// so training is replayable from (seed, t) alone -- which is what makes
// checkpoint resume bit-exact.
struct TrainState {
    ModelParams params;
    std::vector<Tensor> velocity;
    int64_t t = 0;
    RandomSource rs;
};

TrainState make_train_state(const NetConfig& cfg, RandomSource init_rs, RandomSource run_rs);

// SGD update: g += decay*w (weights only), v = mu*v - lr(t)*g, w += v, t += 1.
// Consumes grads in place.
void apply_gradients(TrainState& state, const OptimConfig& cfg, std::vector<Tensor>& grads);

// One mini-batch step; returns the batch loss. Throws DivergedError on a
// non-finite loss or gradient.
double step(TrainState& state, const OptimConfig& optim, const NetConfig& net, const Tensor& batch,
            std::span<const int> target_classes);

// Mini-batch index plan: shuffled epochs without replacement, the epoch-e
// permutation drawn from a child stream keyed by e. Within one epoch every
// dataset index appears in exactly one batch (the last may be short). A pure
// function of (run stream, n, batch_size, t).
std::vector<int64_t> batch_indices(const RandomSource& run_rs, int64_t n, int batch_size, int64_t t);

struct EvalPoint {
    int64_t iter = 0;
    double lr = 0.0;
    double loss = 0.0;  // most recent batch loss
    double seq_acc = 0.0;
    double char_acc = 0.0;
};

struct TrainTrace {
    std::vector<double> loss_per_iter;
    std::vector<EvalPoint> evals;
};

// Runs `iterations` steps over `train`, evaluating holdout sequence and
// per-character accuracy every eval_interval iterations and at the final
// step. iterations == 0 leaves the state untouched and the trace empty.
TrainTrace train_for(TrainState& state, const OptimConfig& optim, const NetConfig& net,
                     const Alphabet& alpha, const std::vector<LabeledSample>& train,
                     int64_t iterations, const std::vector<LabeledSample>& holdout,
                     int64_t eval_interval);

// Eval-mode loss over the first min(batch_size, n) samples; used for the
// iteration-0 metrics row.
double probe_loss(const ModelParams& params, const NetConfig& net, const Alphabet& alpha,
                  const std::vector<LabeledSample>& data, int batch_size);

}  // namespace caf
