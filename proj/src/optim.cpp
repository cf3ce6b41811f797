#include "caf/optim.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "caf/error.hpp"
#include "caf/uncertainty.hpp"

namespace caf {

void validate_config(const OptimConfig& cfg) {
    if (!(cfg.alpha0 > 0.0)) throw ValueError("alpha0 must be > 0");
    if (cfg.momentum < 0.0 || cfg.momentum >= 1.0) throw ValueError("momentum must be in [0, 1)");
    if (cfg.weight_decay < 0.0) throw ValueError("weight_decay must be >= 0");
    if (cfg.gamma < 0.0) throw ValueError("gamma must be >= 0");
    if (cfg.beta < 0.0) throw ValueError("beta must be >= 0");
    if (cfg.batch_size < 1) throw ValueError("batch_size must be >= 1");
}

double lr_at(const OptimConfig& cfg, int64_t t) {
    if (t < 0) throw ValueError("iteration must be >= 0");
    return cfg.alpha0 * std::pow(1.0 + cfg.gamma * static_cast<double>(t), -cfg.beta);
}

TrainState make_train_state(const NetConfig& cfg, RandomSource init_rs, RandomSource run_rs) {
    TrainState state;
    state.params = init_params(cfg, init_rs);
    state.velocity.reserve(state.params.entries.size());
    for (const auto& e : state.params.entries) state.velocity.push_back(Tensor::zeros_like(e.value));
    state.t = 0;
    state.rs = run_rs;
    return state;
}

void apply_gradients(TrainState& state, const OptimConfig& cfg, std::vector<Tensor>& grads) {
    validate_config(cfg);
    if (grads.size() != state.params.entries.size())
        throw ShapeError("gradient count does not match parameter count");
    const double lr = lr_at(cfg, state.t);
    for (size_t i = 0; i < grads.size(); ++i) {
        auto& entry = state.params.entries[i];
        Tensor& g = grads[i];
        Tensor& v = state.velocity[i];
        if (!g.same_shape(entry.value)) throw ShapeError("gradient shape mismatch for " + entry.name);
        const int64_t n = g.size();
        if (entry.decay && cfg.weight_decay > 0.0) {
            for (int64_t j = 0; j < n; ++j) g[j] += cfg.weight_decay * entry.value[j];
        }
        for (int64_t j = 0; j < n; ++j) {
            v[j] = cfg.momentum * v[j] - lr * g[j];
            entry.value[j] += v[j];
        }
    }
    ++state.t;
}

double step(TrainState& state, const OptimConfig& optim, const NetConfig& net, const Tensor& batch,
            std::span<const int> target_classes) {
    RandomSource step_rs = state.rs.child("step").child(static_cast<uint64_t>(state.t));
    ForwardCache cache = forward(state.params, net, batch, Mode::train, step_rs);
    const double loss = loss_value(cache.probs, target_classes, net.head);
    if (!std::isfinite(loss)) throw DivergedError("non-finite loss", state.t);
    std::vector<Tensor> grads = backward(state.params, net, cache, target_classes);
    for (size_t i = 0; i < grads.size(); ++i)
        if (!grads[i].all_finite())
            throw DivergedError("non-finite gradient in " + state.params.entries[i].name, state.t);
    apply_gradients(state, optim, grads);
    return loss;
}

std::vector<int64_t> batch_indices(const RandomSource& run_rs, int64_t n, int batch_size, int64_t t) {
    if (n < 1) throw ValueError("dataset must be non-empty");
    if (batch_size < 1) throw ValueError("batch_size must be >= 1");
    const int64_t bpe = (n + batch_size - 1) / batch_size;  // batches per epoch
    const int64_t epoch = t / bpe;
    const int64_t slot = t % bpe;
    std::vector<int64_t> perm(static_cast<size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    RandomSource shuffle_rs = run_rs.child("shuffle").child(static_cast<uint64_t>(epoch));
    shuffle_rs.shuffle(perm);
    const int64_t begin = slot * batch_size;
    const int64_t end = std::min(n, begin + batch_size);
    return std::vector<int64_t>(perm.begin() + begin, perm.begin() + end);
}

TrainTrace train_for(TrainState& state, const OptimConfig& optim, const NetConfig& net,
                     const Alphabet& alpha, const std::vector<LabeledSample>& train,
                     int64_t iterations, const std::vector<LabeledSample>& holdout,
                     int64_t eval_interval) {
    if (iterations < 0) throw ValueError("iterations must be >= 0");
    if (eval_interval < 1) throw ValueError("eval_interval must be >= 1");
    if (iterations > 0 && train.empty()) throw ValueError("training set must be non-empty");

    TrainTrace trace;
    for (int64_t i = 0; i < iterations; ++i) {
        std::vector<int64_t> idx =
            batch_indices(state.rs, static_cast<int64_t>(train.size()), optim.batch_size, state.t);
        Tensor batch = make_batch(train, idx, net);
        std::vector<int> targets = make_target_classes(alpha, net.head, train, idx);
        const double loss = step(state, optim, net, batch, targets);
        trace.loss_per_iter.push_back(loss);

        const bool at_interval = (i + 1) % eval_interval == 0;
        const bool last = i + 1 == iterations;
        if (at_interval || last) {
            EvalPoint pt;
            pt.iter = state.t;
            pt.lr = lr_at(optim, state.t);
            pt.loss = loss;
            if (!holdout.empty()) {
                EvalStats stats = evaluate(state.params, net, alpha, holdout, optim.batch_size);
                pt.seq_acc = stats.seq_acc;
                pt.char_acc = stats.char_acc;
            }
            if (!trace.evals.empty() && trace.evals.back().iter == pt.iter) continue;
            trace.evals.push_back(pt);
        }
    }
    return trace;
}

double probe_loss(const ModelParams& params, const NetConfig& net, const Alphabet& alpha,
                  const std::vector<LabeledSample>& data, int batch_size) {
    if (data.empty()) throw ValueError("probe needs a non-empty dataset");
    const int64_t n = std::min<int64_t>(static_cast<int64_t>(data.size()), batch_size);
    std::vector<int64_t> idx(static_cast<size_t>(n));
    std::iota(idx.begin(), idx.end(), 0);
    Tensor batch = make_batch(data, idx, net);
    std::vector<int> targets = make_target_classes(alpha, net.head, data, idx);
    RandomSource unused;
    ForwardCache cache = forward(params, net, batch, Mode::eval, unused);
    return loss_value(cache.probs, targets, net.head);
}

}  // namespace caf
