#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "caf/codec.hpp"
#include "caf/image.hpp"
#include "caf/net.hpp"
#include "caf/random.hpp"

namespace caf {

// Best-vs-second-best uncertainty of one prediction: the mean over character
// positions of secondmax(row)/max(row). 0 means fully confident, 1 means the
// top two classes tie (uniform rows give exactly 1). Throws ValueError when
// a row has fewer than two classes.
double eta(const PredDist& dist);

struct ScoredSample {
    int64_t pool_index = 0;
    std::string predicted;
    bool correct = false;
    double eta = 0.0;
};

enum class Strategy { most_uncertain, least_uncertain, random_pick, take_all };

struct SelectionPolicy {
    Strategy strategy = Strategy::most_uncertain;
    int64_t budget = 0;  // ignored by take_all
};

const char* strategy_name(Strategy s);
Strategy strategy_from_name(const std::string& name);

// Eval-mode forward over the pool in mini-batches; output order matches pool
// order, pool_index is the position within `pool`.
std::vector<ScoredSample> score_pool(const ModelParams& params, const NetConfig& net,
                                     const Alphabet& alpha, const std::vector<LabeledSample>& pool,
                                     int batch_size);

// Filters to correctly classified samples, then applies the strategy.
// most/least order by eta (ties broken by lower pool_index); random picks
// uniformly without replacement. Fewer candidates than the budget is not an
// error: everything available is returned. Result is ascending pool_index.
std::vector<int64_t> select(const std::vector<ScoredSample>& scored, const SelectionPolicy& policy,
                            RandomSource& rs);

struct EvalStats {
    double seq_acc = 0.0;
    double char_acc = 0.0;
    double mean_eta = 0.0;
    int64_t count = 0;
};

EvalStats evaluate(const ModelParams& params, const NetConfig& net, const Alphabet& alpha,
                   const std::vector<LabeledSample>& data, int batch_size);

}  // namespace caf
