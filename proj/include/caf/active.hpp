#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "caf/forge.hpp"
#include "caf/io.hpp"
#include "caf/net.hpp"
#include "caf/optim.hpp"
#include "caf/uncertainty.hpp"

namespace caf {

enum class SetPolicy { augment, replace };

const char* set_policy_name(SetPolicy p);
SetPolicy set_policy_from_name(const std::string& name);

// Per-round iteration budget: an entry (through_round, iterations) covers
// every round <= through_round; lookup takes the first covering entry.
// Round 0 is the initial training phase.
struct ScheduleEntry {
    int through_round = 0;
    int64_t iterations = 0;
};

struct LoopConfig {
    int rounds = 0;
    int64_t initial_train_size = 0;
    int64_t pool_size = 0;
    int64_t holdout_size = 0;
    SelectionPolicy selection;
    SetPolicy set_policy = SetPolicy::augment;
    std::vector<ScheduleEntry> schedule;
    int64_t eval_interval = 0;
    int repeats = 2;
    // augment: selected samples leave the pool (no double-adding).
    bool consume_pool = true;
    // replace: the whole pool is rescored fresh each round.
    bool rescore_full_pool = true;
    bool reset_weights_each_round = false;
    bool reset_optimizer_each_round = false;
};

void validate_config(const LoopConfig& cfg);
int64_t schedule_budget(const std::vector<ScheduleEntry>& schedule, int round);

struct RoundRecord {
    int repeat = 0;
    int round = 0;
    std::vector<int64_t> selected;  // pool indices (position in the generated pool block)
    std::vector<std::string> selected_labels;
    int64_t train_set_size = 0;
    double pool_correct_rate = 0.0;
    double eta_min = 0.0, eta_mean = 0.0, eta_max = 0.0;
    std::vector<EvalPoint> trace;
    bool skipped = false;  // replace round with an empty selection
};

struct ExperimentResult {
    std::vector<std::vector<RoundRecord>> per_repeat;
    std::vector<double> round0_acc;     // holdout accuracy after initial training, per repeat
    std::vector<double> final_acc;      // last round's holdout accuracy, per repeat
    double final_acc_mean = 0.0;
    std::vector<MetricsRow> metrics;
};

// The full protocol: generate disjoint train/pool/holdout sets, train the
// initial model on the round-0 budget, then per round score the pool, select
// among correctly classified samples, grow or replace the training set (the
// loop observes only the correct/incorrect bit plus its own predicted text,
// which becomes the training label) and retrain on the round's budget.
// Every stream is derived from (seed, repeat), so two runs with one seed are
// identical and strategy comparisons share datasets and initial weights.
// When dump_dir is set, each repeat's datasets are saved under
// dump_dir/rep<r>/{train,pool,holdout}.
ExperimentResult run_experiment(const ForgeConfig& forge, const NetConfig& net,
                                const OptimConfig& optim, const LoopConfig& loop, uint64_t seed,
                                const std::filesystem::path* dump_dir = nullptr);

struct StrategyOutcome {
    Strategy strategy;
    double round0_acc_mean = 0.0;
    std::vector<double> per_round_acc;  // mean over repeats, index 0 = round 1
    double final_acc_mean = 0.0;
    ExperimentResult result;
};

// Runs the experiment once per strategy with shared datasets and initial
// weights (identical derived seeds), differing only in selection.
std::vector<StrategyOutcome> compare_strategies(const ForgeConfig& forge, const NetConfig& net,
                                                const OptimConfig& optim, const LoopConfig& loop,
                                                const std::vector<Strategy>& strategies, uint64_t seed);

// One JSON object per RoundRecord, keys matching the field names.
void write_round_records(const ExperimentResult& result, const std::filesystem::path& path);

}  // namespace caf
