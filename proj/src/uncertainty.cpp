#include "caf/uncertainty.hpp"

#include <algorithm>
#include <numeric>

#include "caf/error.hpp"

namespace caf {

double eta(const PredDist& dist) {
    if (dist.classes < 2) throw ValueError("uncertainty needs at least 2 classes per row");
    if (dist.length < 1 || dist.p.size() != static_cast<size_t>(dist.length) * dist.classes)
        throw ShapeError("malformed prediction distribution");
    double sum = 0.0;
    for (int i = 0; i < dist.length; ++i) {
        const double* row = dist.p.data() + static_cast<size_t>(i) * dist.classes;
        double best = row[0], second = row[1];
        if (second > best) std::swap(best, second);
        for (int c = 2; c < dist.classes; ++c) {
            const double v = row[c];
            if (v > best) {
                second = best;
                best = v;
            } else if (v > second) {
                second = v;
            }
        }
        sum += second / best;
    }
    return sum / dist.length;
}

const char* strategy_name(Strategy s) {
    switch (s) {
        case Strategy::most_uncertain: return "most";
        case Strategy::least_uncertain: return "least";
        case Strategy::random_pick: return "random";
        case Strategy::take_all: return "all";
    }
    return "?";
}

Strategy strategy_from_name(const std::string& name) {
    if (name == "most") return Strategy::most_uncertain;
    if (name == "least") return Strategy::least_uncertain;
    if (name == "random") return Strategy::random_pick;
    if (name == "all") return Strategy::take_all;
    throw ValueError("unknown strategy \"" + name + "\" (expected most|least|random|all)");
}

std::vector<ScoredSample> score_pool(const ModelParams& params, const NetConfig& net,
                                     const Alphabet& alpha, const std::vector<LabeledSample>& pool,
                                     int batch_size) {
    if (pool.empty()) throw ValueError("pool must be non-empty");
    if (batch_size < 1) throw ValueError("batch_size must be >= 1");
    const int64_t n = static_cast<int64_t>(pool.size());
    std::vector<ScoredSample> scored(pool.size());
    RandomSource unused;  // eval mode draws nothing
    for (int64_t begin = 0; begin < n; begin += batch_size) {
        const int64_t end = std::min(n, begin + batch_size);
        std::vector<int64_t> idx(static_cast<size_t>(end - begin));
        std::iota(idx.begin(), idx.end(), begin);
        Tensor batch = make_batch(pool, idx, net);
        ForwardCache cache = forward(params, net, batch, Mode::eval, unused);
        std::vector<PredDist> dists = to_pred_dists(cache.probs, net.head);
        for (int64_t s = begin; s < end; ++s) {
            const PredDist& d = dists[static_cast<size_t>(s - begin)];
            ScoredSample& out = scored[static_cast<size_t>(s)];
            out.pool_index = s;
            out.predicted = decode_prediction(alpha, d);
            out.correct = out.predicted == pool[static_cast<size_t>(s)].label;
            out.eta = eta(d);
        }
    }
    return scored;
}

std::vector<int64_t> select(const std::vector<ScoredSample>& scored, const SelectionPolicy& policy,
                            RandomSource& rs) {
    if (policy.budget < 0) throw ValueError("selection budget must be >= 0");
    std::vector<const ScoredSample*> correct;
    correct.reserve(scored.size());
    for (const auto& s : scored)
        if (s.correct) correct.push_back(&s);

    std::vector<int64_t> picked;
    switch (policy.strategy) {
        case Strategy::take_all:
            for (const auto* s : correct) picked.push_back(s->pool_index);
            break;
        case Strategy::most_uncertain:
        case Strategy::least_uncertain: {
            const bool desc = policy.strategy == Strategy::most_uncertain;
            std::sort(correct.begin(), correct.end(), [desc](const ScoredSample* a, const ScoredSample* b) {
                if (a->eta != b->eta) return desc ? a->eta > b->eta : a->eta < b->eta;
                return a->pool_index < b->pool_index;
            });
            const size_t k = std::min<size_t>(correct.size(), static_cast<size_t>(policy.budget));
            for (size_t i = 0; i < k; ++i) picked.push_back(correct[i]->pool_index);
            break;
        }
        case Strategy::random_pick: {
            std::vector<int64_t> indices;
            indices.reserve(correct.size());
            for (const auto* s : correct) indices.push_back(s->pool_index);
            rs.shuffle(indices);
            const size_t k = std::min<size_t>(indices.size(), static_cast<size_t>(policy.budget));
            picked.assign(indices.begin(), indices.begin() + static_cast<int64_t>(k));
            break;
        }
    }
    std::sort(picked.begin(), picked.end());
    return picked;
}

EvalStats evaluate(const ModelParams& params, const NetConfig& net, const Alphabet& alpha,
                   const std::vector<LabeledSample>& data, int batch_size) {
    std::vector<ScoredSample> scored = score_pool(params, net, alpha, data, batch_size);
    EvalStats stats;
    stats.count = static_cast<int64_t>(scored.size());
    int64_t seq_hits = 0, char_hits = 0, char_total = 0;
    double eta_sum = 0.0;
    for (const auto& s : scored) {
        seq_hits += s.correct ? 1 : 0;
        const std::string& truth = data[static_cast<size_t>(s.pool_index)].label;
        for (size_t i = 0; i < truth.size(); ++i)
            char_hits += (i < s.predicted.size() && s.predicted[i] == truth[i]) ? 1 : 0;
        char_total += static_cast<int64_t>(truth.size());
        eta_sum += s.eta;
    }
    stats.seq_acc = static_cast<double>(seq_hits) / static_cast<double>(stats.count);
    stats.char_acc = static_cast<double>(char_hits) / static_cast<double>(char_total);
    stats.mean_eta = eta_sum / static_cast<double>(stats.count);
    return stats;
}

}  // namespace caf
