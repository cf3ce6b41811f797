#include "caf/active.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>

#include <nlohmann/json.hpp>

#include "caf/error.hpp"

namespace caf {

const char* set_policy_name(SetPolicy p) {
    return p == SetPolicy::augment ? "augment" : "replace";
}

SetPolicy set_policy_from_name(const std::string& name) {
    if (name == "augment") return SetPolicy::augment;
    if (name == "replace") return SetPolicy::replace;
    throw ValueError("unknown set policy \"" + name + "\" (expected augment|replace)");
}

void validate_config(const LoopConfig& cfg) {
    if (cfg.rounds < 0) throw ValueError("rounds must be >= 0");
    if (cfg.initial_train_size < 1) throw ValueError("initial_train_size must be >= 1");
    if (cfg.pool_size < 1) throw ValueError("pool_size must be >= 1");
    if (cfg.holdout_size < 1) throw ValueError("holdout_size must be >= 1");
    if (cfg.eval_interval < 1) throw ValueError("eval_interval must be >= 1");
    if (cfg.repeats < 1) throw ValueError("repeats must be >= 1");
    if (cfg.selection.budget < 0) throw ValueError("selection budget must be >= 0");
    if (cfg.schedule.empty()) throw ValueError("iteration schedule must be non-empty");
    int64_t prev_iters = cfg.schedule.front().iterations;
    int prev_round = cfg.schedule.front().through_round;
    for (size_t i = 1; i < cfg.schedule.size(); ++i) {
        if (cfg.schedule[i].through_round <= prev_round)
            throw ValueError("schedule through_round values must increase");
        if (cfg.schedule[i].iterations > prev_iters)
            throw ValueError("schedule iterations must be non-increasing");
        prev_round = cfg.schedule[i].through_round;
        prev_iters = cfg.schedule[i].iterations;
    }
    if (prev_round < cfg.rounds)
        throw ValueError("schedule covers rounds up to " + std::to_string(prev_round) + " but " +
                         std::to_string(cfg.rounds) + " rounds are configured");
    for (const auto& e : cfg.schedule)
        if (e.iterations < 0) throw ValueError("schedule iterations must be >= 0");
}

int64_t schedule_budget(const std::vector<ScheduleEntry>& schedule, int round) {
    for (const auto& e : schedule)
        if (round <= e.through_round) return e.iterations;
    throw ValueError("no schedule entry covers round " + std::to_string(round));
}

namespace {

void check_consistency(const ForgeConfig& forge, const NetConfig& net, const LoopConfig& loop) {
    validate_config(forge);
    validate_config(loop);
    compute_shapes(net);
    if (static_cast<int>(forge.alphabet.size()) != net.head.classes)
        throw ValueError("alphabet size " + std::to_string(forge.alphabet.size()) +
                         " does not match head classes " + std::to_string(net.head.classes));
    if (forge.code_length != net.head.length)
        throw ValueError("code_length does not match head length");
    if (forge.width != net.input_w || forge.height != net.input_h)
        throw ValueError("forge image size does not match net input size");
}

double eta_of(const std::vector<ScoredSample>& scored, const std::vector<int64_t>& order,
              double (*pick)(double, double), double init) {
    double v = init;
    for (int64_t idx : order) v = pick(v, scored[static_cast<size_t>(idx)].eta);
    return v;
}

void append_metrics(std::vector<MetricsRow>& rows, const TrainTrace& trace, int run, int round,
                    int64_t train_size, double mean_eta) {
    for (const auto& pt : trace.evals) {
        MetricsRow row;
        row.run = run;
        row.round = round;
        row.iter = pt.iter;
        row.lr = pt.lr;
        row.loss = pt.loss;
        row.seq_acc = pt.seq_acc;
        row.char_acc = pt.char_acc;
        row.train_size = train_size;
        row.mean_eta = mean_eta;
        rows.push_back(row);
    }
}

}  // namespace

ExperimentResult run_experiment(const ForgeConfig& forge, const NetConfig& net,
                                const OptimConfig& optim, const LoopConfig& loop, uint64_t seed,
                                const std::filesystem::path* dump_dir) {
    check_consistency(forge, net, loop);
    validate_config(optim);
    const Alphabet alpha(forge.alphabet);

    ExperimentResult result;
    result.per_repeat.resize(static_cast<size_t>(loop.repeats));

    for (int rep = 0; rep < loop.repeats; ++rep) {
        RandomSource rep_root = RandomSource(seed).child("repeat").child(static_cast<uint64_t>(rep));

        ForgeConfig data_cfg = forge;
        data_cfg.seed = rep_root.child("data").next_u64();
        const int64_t total = loop.initial_train_size + loop.pool_size + loop.holdout_size;
        std::vector<LabeledSample> all = generate_dataset(data_cfg, total);

        // Disjoint index blocks: [0, init) train, [init, init+pool) pool, rest holdout.
        std::vector<LabeledSample> train_set(all.begin(), all.begin() + loop.initial_train_size);
        std::vector<LabeledSample> pool(all.begin() + loop.initial_train_size,
                                        all.begin() + loop.initial_train_size + loop.pool_size);
        std::vector<LabeledSample> holdout(all.begin() + loop.initial_train_size + loop.pool_size,
                                           all.end());
        all.clear();
        all.shrink_to_fit();

        if (dump_dir) {
            const std::filesystem::path rep_dir = *dump_dir / ("rep" + std::to_string(rep));
            save_dataset(train_set, rep_dir / "train");
            save_dataset(pool, rep_dir / "pool");
            save_dataset(holdout, rep_dir / "holdout");
        }

        RandomSource init_rs = rep_root.child("init");
        TrainState state = make_train_state(net, init_rs, rep_root.child("sgd"));
        RandomSource select_rs = rep_root.child("select");

        // Initial training (round 0).
        TrainTrace trace0 = train_for(state, optim, net, alpha, train_set,
                                      schedule_budget(loop.schedule, 0), holdout, loop.eval_interval);
        double current_acc = trace0.evals.empty()
                                 ? evaluate(state.params, net, alpha, holdout, optim.batch_size).seq_acc
                                 : trace0.evals.back().seq_acc;
        result.round0_acc.push_back(current_acc);
        append_metrics(result.metrics, trace0, rep, 0, static_cast<int64_t>(train_set.size()), 0.0);

        // Pool bookkeeping: global index (position in the generated pool
        // block) of every sample still available for scoring.
        std::vector<int64_t> available(static_cast<size_t>(loop.pool_size));
        for (int64_t i = 0; i < loop.pool_size; ++i) available[static_cast<size_t>(i)] = i;

        for (int round = 1; round <= loop.rounds; ++round) {
            const bool consume = loop.set_policy == SetPolicy::augment && loop.consume_pool;
            const std::vector<int64_t>& view_idx = available;
            std::vector<LabeledSample> view;
            view.reserve(view_idx.size());
            for (int64_t gi : view_idx) view.push_back(pool[static_cast<size_t>(gi)]);

            RoundRecord rec;
            rec.repeat = rep;
            rec.round = round;

            if (view.empty()) {
                rec.skipped = true;
                rec.train_set_size = static_cast<int64_t>(train_set.size());
                std::fprintf(stderr, "round=%d strategy=%s train_size=%zu pool_correct=%g acc=%g (empty pool, skipped)\n",
                             round, strategy_name(loop.selection.strategy), train_set.size(), 0.0, current_acc);
                result.per_repeat[static_cast<size_t>(rep)].push_back(std::move(rec));
                continue;
            }

            std::vector<ScoredSample> scored =
                score_pool(state.params, net, alpha, view, optim.batch_size);
            int64_t n_correct = 0;
            for (const auto& s : scored) n_correct += s.correct ? 1 : 0;
            rec.pool_correct_rate = static_cast<double>(n_correct) / static_cast<double>(scored.size());

            RandomSource round_select = select_rs.child(static_cast<uint64_t>(round));
            std::vector<int64_t> picked_local = select(scored, loop.selection, round_select);

            rec.selected.reserve(picked_local.size());
            rec.selected_labels.reserve(picked_local.size());
            double eta_sum = 0.0, eta_min = 1.0, eta_max = 0.0;
            for (int64_t li : picked_local) {
                const ScoredSample& s = scored[static_cast<size_t>(li)];
                rec.selected.push_back(view_idx[static_cast<size_t>(li)]);
                rec.selected_labels.push_back(s.predicted);
                eta_sum += s.eta;
                eta_min = std::min(eta_min, s.eta);
                eta_max = std::max(eta_max, s.eta);
            }
            if (!picked_local.empty()) {
                rec.eta_min = eta_min;
                rec.eta_mean = eta_sum / static_cast<double>(picked_local.size());
                rec.eta_max = eta_max;
            }

            if (loop.set_policy == SetPolicy::replace && picked_local.empty()) {
                // Retraining on an empty set is undefined; warn and move on.
                rec.skipped = true;
                rec.train_set_size = static_cast<int64_t>(train_set.size());
                std::fprintf(stderr,
                             "round=%d strategy=%s train_size=%zu pool_correct=%g acc=%g "
                             "(empty selection, round skipped)\n",
                             round, strategy_name(loop.selection.strategy), train_set.size(),
                             rec.pool_correct_rate, current_acc);
                result.per_repeat[static_cast<size_t>(rep)].push_back(std::move(rec));
                continue;
            }

            // The loop may only use its own predicted text as the training
            // label; selection guarantees it matches the generator's label.
            if (loop.set_policy == SetPolicy::replace) {
                std::vector<LabeledSample> next;
                next.reserve(picked_local.size());
                for (size_t i = 0; i < picked_local.size(); ++i) {
                    LabeledSample s = pool[static_cast<size_t>(rec.selected[i])];
                    s.label = rec.selected_labels[i];
                    next.push_back(std::move(s));
                }
                train_set = std::move(next);
            } else {
                for (size_t i = 0; i < picked_local.size(); ++i) {
                    LabeledSample s = pool[static_cast<size_t>(rec.selected[i])];
                    s.label = rec.selected_labels[i];
                    train_set.push_back(std::move(s));
                }
                if (consume) {
                    std::vector<int64_t> next_avail;
                    next_avail.reserve(available.size() - picked_local.size());
                    size_t sel_pos = 0;
                    for (size_t i = 0; i < available.size(); ++i) {
                        if (sel_pos < picked_local.size() &&
                            static_cast<int64_t>(i) == picked_local[sel_pos]) {
                            ++sel_pos;
                            continue;
                        }
                        next_avail.push_back(available[i]);
                    }
                    available = std::move(next_avail);
                }
            }

            if (loop.reset_weights_each_round) {
                RandomSource reset_rs = rep_root.child("reinit").child(static_cast<uint64_t>(round));
                state.params = init_params(net, reset_rs);
                for (auto& v : state.velocity) v.fill(0.0);
            }
            if (loop.reset_optimizer_each_round) {
                for (auto& v : state.velocity) v.fill(0.0);
                state.t = 0;
            }

            TrainTrace trace = train_for(state, optim, net, alpha, train_set,
                                         schedule_budget(loop.schedule, round), holdout,
                                         loop.eval_interval);
            if (!trace.evals.empty()) current_acc = trace.evals.back().seq_acc;
            rec.train_set_size = static_cast<int64_t>(train_set.size());
            for (const auto& pt : trace.evals) rec.trace.push_back(pt);
            append_metrics(result.metrics, trace, rep, round, rec.train_set_size, rec.eta_mean);

            std::fprintf(stderr, "round=%d strategy=%s train_size=%lld pool_correct=%g acc=%g\n", round,
                         strategy_name(loop.selection.strategy),
                         static_cast<long long>(rec.train_set_size), rec.pool_correct_rate, current_acc);
            result.per_repeat[static_cast<size_t>(rep)].push_back(std::move(rec));
        }
        result.final_acc.push_back(current_acc);
    }

    double sum = 0.0;
    for (double a : result.final_acc) sum += a;
    result.final_acc_mean = sum / static_cast<double>(result.final_acc.size());
    return result;
}

std::vector<StrategyOutcome> compare_strategies(const ForgeConfig& forge, const NetConfig& net,
                                                const OptimConfig& optim, const LoopConfig& loop,
                                                const std::vector<Strategy>& strategies, uint64_t seed) {
    if (strategies.size() < 2) throw ValueError("strategy comparison needs at least 2 strategies");
    std::vector<StrategyOutcome> outcomes;
    for (Strategy s : strategies) {
        LoopConfig cfg = loop;
        cfg.selection.strategy = s;
        StrategyOutcome out;
        out.strategy = s;
        out.result = run_experiment(forge, net, optim, cfg, seed);

        double r0 = 0.0;
        for (double a : out.result.round0_acc) r0 += a;
        out.round0_acc_mean = r0 / static_cast<double>(out.result.round0_acc.size());
        out.final_acc_mean = out.result.final_acc_mean;

        out.per_round_acc.assign(static_cast<size_t>(loop.rounds), 0.0);
        for (const auto& records : out.result.per_repeat) {
            double last = 0.0;
            for (const auto& rec : records) {
                if (!rec.trace.empty()) last = rec.trace.back().seq_acc;
                if (rec.round >= 1 && rec.round <= loop.rounds)
                    out.per_round_acc[static_cast<size_t>(rec.round - 1)] += last;
            }
        }
        for (auto& v : out.per_round_acc) v /= static_cast<double>(loop.repeats);
        outcomes.push_back(std::move(out));
    }
    return outcomes;
}

void write_round_records(const ExperimentResult& result, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open " + path.string() + " for writing");
    for (const auto& records : result.per_repeat) {
        for (const auto& rec : records) {
            nlohmann::json j;
            j["repeat"] = rec.repeat;
            j["round"] = rec.round;
            j["selected"] = rec.selected;
            j["selected_labels"] = rec.selected_labels;
            j["train_set_size"] = rec.train_set_size;
            j["pool_correct_rate"] = rec.pool_correct_rate;
            j["eta_min"] = rec.eta_min;
            j["eta_mean"] = rec.eta_mean;
            j["eta_max"] = rec.eta_max;
            nlohmann::json trace = nlohmann::json::array();
            for (const auto& pt : rec.trace) trace.push_back({{"iter", pt.iter}, {"seq_acc", pt.seq_acc}});
            j["trace"] = std::move(trace);
            j["skipped"] = rec.skipped;
            out << j.dump() << "\n";
        }
    }
    if (!out) throw IoError("short write to " + path.string());
}

}  // namespace caf
