#include "caf/net.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>

#include "caf/error.hpp"
#include "caf/parallel.hpp"

namespace caf {

namespace {

// Samples per work block; fixed so per-block gradient partials reduce in a
// thread-count-independent order.
constexpr int64_t kSampleBlock = 8;

void check_stage_counts(const NetConfig& cfg) {
    if (cfg.convs.empty()) throw ValueError("net config needs at least one conv stage");
    if (cfg.convs.size() != cfg.pools.size())
        throw ValueError("conv and pool spec counts differ");
    if (cfg.input_h < 1 || cfg.input_w < 1) throw ValueError("input extents must be >= 1");
    if (cfg.fc1_width < 1) throw ValueError("fc1 width must be >= 1");
    if (cfg.head.length < 1 || cfg.head.classes < 2)
        throw ValueError("head needs length >= 1 and classes >= 2");
    if (cfg.dropout_rate < 0.0 || cfg.dropout_rate >= 1.0)
        throw ValueError("dropout rate must be in [0, 1)");
}

}  // namespace

int out_extent(int in, int kernel, int pad, int stride) {
    if (in < 1 || kernel < 1) throw ShapeError("extent and kernel must be >= 1");
    if (stride < 1) throw ShapeError("stride must be >= 1");
    if (pad < 0) throw ShapeError("pad must be >= 0");
    if (kernel > in + 2 * pad)
        throw ShapeError("kernel " + std::to_string(kernel) + " exceeds padded extent " +
                         std::to_string(in + 2 * pad));
    int out = (in + 2 * pad - kernel) / stride + 1;
    if (out < 1) throw ShapeError("non-positive output extent");
    return out;
}

NetShapes compute_shapes(const NetConfig& cfg) {
    check_stage_counts(cfg);
    NetShapes shapes;
    StageShape cur{1, cfg.input_h, cfg.input_w};
    for (size_t s = 0; s < cfg.convs.size(); ++s) {
        const ConvSpec& cs = cfg.convs[s];
        if (cs.filters < 1) throw ValueError("conv filters must be >= 1");
        StageShape conv_out{cs.filters, out_extent(cur.h, cs.kernel, cs.pad, cs.stride),
                            out_extent(cur.w, cs.kernel, cs.pad, cs.stride)};
        shapes.conv_out.push_back(conv_out);
        const PoolSpec& ps = cfg.pools[s];
        StageShape pool_out{cs.filters, out_extent(conv_out.h, ps.window, 0, ps.stride),
                            out_extent(conv_out.w, ps.window, 0, ps.stride)};
        shapes.pool_out.push_back(pool_out);
        cur = pool_out;
    }
    shapes.flat = cur.count();
    return shapes;
}

int64_t ModelParams::total_size() const {
    int64_t n = 0;
    for (const auto& e : entries) n += e.value.size();
    return n;
}

bool ModelParams::all_finite() const {
    for (const auto& e : entries)
        if (!e.value.all_finite()) return false;
    return true;
}

ModelParams init_params(const NetConfig& cfg, RandomSource& rs) {
    NetShapes shapes = compute_shapes(cfg);
    ModelParams params;
    int in_ch = 1;
    for (size_t s = 0; s < cfg.convs.size(); ++s) {
        const ConvSpec& cs = cfg.convs[s];
        const int64_t fan_in = static_cast<int64_t>(in_ch) * cs.kernel * cs.kernel;
        const double bound = std::sqrt(6.0 / static_cast<double>(fan_in));
        std::string base = "conv" + std::to_string(s + 1);
        params.entries.push_back(
            {base + ".weight",
             rs.uniform_tensor({cs.filters, in_ch, cs.kernel, cs.kernel}, -bound, bound), true});
        params.entries.push_back({base + ".bias", Tensor::zeros({cs.filters}), false});
        in_ch = cs.filters;
    }
    {
        const double bound = std::sqrt(6.0 / static_cast<double>(shapes.flat));
        params.entries.push_back(
            {"fc1.weight", rs.uniform_tensor({cfg.fc1_width, shapes.flat}, -bound, bound), true});
        params.entries.push_back({"fc1.bias", Tensor::zeros({cfg.fc1_width}), false});
    }
    {
        const double bound = std::sqrt(6.0 / static_cast<double>(cfg.fc1_width));
        params.entries.push_back(
            {"head.weight", rs.uniform_tensor({cfg.head.total(), cfg.fc1_width}, -bound, bound), true});
        params.entries.push_back({"head.bias", Tensor::zeros({cfg.head.total()}), false});
    }
    return params;
}

namespace {

struct ConvGeom {
    int in_ch, in_h, in_w;
    int filters, kernel, pad, stride;
    int out_h, out_w;
    int64_t col_rows() const { return static_cast<int64_t>(in_ch) * kernel * kernel; }
    int64_t out_hw() const { return static_cast<int64_t>(out_h) * out_w; }
};

void im2col(const double* in, const ConvGeom& g, double* col) {
    const int64_t ohw = g.out_hw();
    for (int c = 0; c < g.in_ch; ++c) {
        const double* plane = in + static_cast<int64_t>(c) * g.in_h * g.in_w;
        for (int ky = 0; ky < g.kernel; ++ky) {
            for (int kx = 0; kx < g.kernel; ++kx) {
                double* row = col + ((static_cast<int64_t>(c) * g.kernel + ky) * g.kernel + kx) * ohw;
                for (int oy = 0; oy < g.out_h; ++oy) {
                    const int iy = oy * g.stride - g.pad + ky;
                    double* dst = row + static_cast<int64_t>(oy) * g.out_w;
                    if (iy < 0 || iy >= g.in_h) {
                        std::memset(dst, 0, sizeof(double) * static_cast<size_t>(g.out_w));
                        continue;
                    }
                    const double* src = plane + static_cast<int64_t>(iy) * g.in_w;
                    for (int ox = 0; ox < g.out_w; ++ox) {
                        const int ix = ox * g.stride - g.pad + kx;
                        dst[ox] = (ix >= 0 && ix < g.in_w) ? src[ix] : 0.0;
                    }
                }
            }
        }
    }
}

void col2im_add(const double* col, const ConvGeom& g, double* in_grad) {
    const int64_t ohw = g.out_hw();
    for (int c = 0; c < g.in_ch; ++c) {
        double* plane = in_grad + static_cast<int64_t>(c) * g.in_h * g.in_w;
        for (int ky = 0; ky < g.kernel; ++ky) {
            for (int kx = 0; kx < g.kernel; ++kx) {
                const double* row = col + ((static_cast<int64_t>(c) * g.kernel + ky) * g.kernel + kx) * ohw;
                for (int oy = 0; oy < g.out_h; ++oy) {
                    const int iy = oy * g.stride - g.pad + ky;
                    if (iy < 0 || iy >= g.in_h) continue;
                    double* dst = plane + static_cast<int64_t>(iy) * g.in_w;
                    const double* src = row + static_cast<int64_t>(oy) * g.out_w;
                    for (int ox = 0; ox < g.out_w; ++ox) {
                        const int ix = ox * g.stride - g.pad + kx;
                        if (ix >= 0 && ix < g.in_w) dst[ix] += src[ox];
                    }
                }
            }
        }
    }
}

ConvGeom conv_geom(const ConvSpec& cs, const StageShape& in) {
    ConvGeom g;
    g.in_ch = in.channels;
    g.in_h = in.h;
    g.in_w = in.w;
    g.filters = cs.filters;
    g.kernel = cs.kernel;
    g.pad = cs.pad;
    g.stride = cs.stride;
    g.out_h = out_extent(in.h, cs.kernel, cs.pad, cs.stride);
    g.out_w = out_extent(in.w, cs.kernel, cs.pad, cs.stride);
    return g;
}

void conv_forward(const Tensor& in, const Tensor& weight, const Tensor& bias, const ConvGeom& g,
                  int64_t batch, Tensor& out) {
    const int64_t in_sz = static_cast<int64_t>(g.in_ch) * g.in_h * g.in_w;
    const int64_t out_sz = static_cast<int64_t>(g.filters) * g.out_hw();
    parallel_for(batch, kSampleBlock, [&](int64_t s0, int64_t s1) {
        std::vector<double> col(static_cast<size_t>(g.col_rows() * g.out_hw()));
        for (int64_t s = s0; s < s1; ++s) {
            im2col(in.data() + s * in_sz, g, col.data());
            double* o = out.data() + s * out_sz;
            detail::gemm(weight.data(), col.data(), o, g.filters, g.col_rows(), g.out_hw());
            for (int f = 0; f < g.filters; ++f) {
                const double b = bias[f];
                double* row = o + static_cast<int64_t>(f) * g.out_hw();
                for (int64_t i = 0; i < g.out_hw(); ++i) row[i] += b;
            }
        }
    });
}

// dW/db accumulate over fixed sample blocks reduced in block order, so the
// result is independent of thread scheduling. in_grad may be null.
void conv_backward(const Tensor& in, const Tensor& weight, const Tensor& d_out, const ConvGeom& g,
                   int64_t batch, Tensor& d_weight, Tensor& d_bias, Tensor* in_grad) {
    const int64_t in_sz = static_cast<int64_t>(g.in_ch) * g.in_h * g.in_w;
    const int64_t out_sz = static_cast<int64_t>(g.filters) * g.out_hw();
    const int64_t nblocks = (batch + kSampleBlock - 1) / kSampleBlock;
    const int64_t wsize = d_weight.size();
    std::vector<std::vector<double>> dw_part(static_cast<size_t>(nblocks));
    std::vector<std::vector<double>> db_part(static_cast<size_t>(nblocks));

    parallel_for(batch, kSampleBlock, [&](int64_t s0, int64_t s1) {
        const int64_t blk = s0 / kSampleBlock;
        auto& dw = dw_part[static_cast<size_t>(blk)];
        auto& db = db_part[static_cast<size_t>(blk)];
        dw.assign(static_cast<size_t>(wsize), 0.0);
        db.assign(static_cast<size_t>(g.filters), 0.0);
        std::vector<double> col(static_cast<size_t>(g.col_rows() * g.out_hw()));
        std::vector<double> dcol(in_grad ? static_cast<size_t>(g.col_rows() * g.out_hw()) : 0);
        for (int64_t s = s0; s < s1; ++s) {
            const double* dout = d_out.data() + s * out_sz;
            im2col(in.data() + s * in_sz, g, col.data());
            detail::gemm_bt(dout, col.data(), dw.data(), g.filters, g.out_hw(), g.col_rows());
            for (int f = 0; f < g.filters; ++f) {
                const double* row = dout + static_cast<int64_t>(f) * g.out_hw();
                double acc = 0.0;
                for (int64_t i = 0; i < g.out_hw(); ++i) acc += row[i];
                db[static_cast<size_t>(f)] += acc;
            }
            if (in_grad) {
                std::fill(dcol.begin(), dcol.end(), 0.0);
                detail::gemm_at(weight.data(), dout, dcol.data(), g.filters, g.col_rows(), g.out_hw());
                col2im_add(dcol.data(), g, in_grad->data() + s * in_sz);
            }
        }
    });

    for (int64_t b = 0; b < nblocks; ++b) {
        const auto& dw = dw_part[static_cast<size_t>(b)];
        const auto& db = db_part[static_cast<size_t>(b)];
        for (int64_t i = 0; i < wsize; ++i) d_weight[i] += dw[static_cast<size_t>(i)];
        for (int f = 0; f < g.filters; ++f) d_bias[f] += db[static_cast<size_t>(f)];
    }
}

void maxpool_forward(const Tensor& in, const StageShape& in_shape, const PoolSpec& ps, int64_t batch,
                     Tensor& out, const StageShape& out_shape, std::vector<int32_t>& argmax) {
    const int64_t in_sz = in_shape.count();
    const int64_t out_sz = out_shape.count();
    argmax.assign(static_cast<size_t>(batch * out_sz), 0);
    parallel_for(batch, kSampleBlock, [&](int64_t s0, int64_t s1) {
        for (int64_t s = s0; s < s1; ++s) {
            const double* src = in.data() + s * in_sz;
            double* dst = out.data() + s * out_sz;
            int32_t* arg = argmax.data() + s * out_sz;
            int64_t o = 0;
            for (int c = 0; c < in_shape.channels; ++c) {
                const double* plane = src + static_cast<int64_t>(c) * in_shape.h * in_shape.w;
                const int64_t plane_off = static_cast<int64_t>(c) * in_shape.h * in_shape.w;
                for (int py = 0; py < out_shape.h; ++py) {
                    for (int px = 0; px < out_shape.w; ++px, ++o) {
                        const int y0 = py * ps.stride;
                        const int x0 = px * ps.stride;
                        double best = plane[static_cast<int64_t>(y0) * in_shape.w + x0];
                        int32_t best_idx = static_cast<int32_t>(plane_off + static_cast<int64_t>(y0) * in_shape.w + x0);
                        for (int wy = 0; wy < ps.window; ++wy) {
                            for (int wx = 0; wx < ps.window; ++wx) {
                                const int64_t idx = static_cast<int64_t>(y0 + wy) * in_shape.w + (x0 + wx);
                                const double v = plane[idx];
                                // ties keep the first maximal position in scan order
                                if (v > best) {
                                    best = v;
                                    best_idx = static_cast<int32_t>(plane_off + idx);
                                }
                            }
                        }
                        dst[o] = best;
                        arg[o] = best_idx;
                    }
                }
            }
        }
    });
}

void maxpool_backward(const Tensor& d_out, const std::vector<int32_t>& argmax, int64_t batch,
                      int64_t in_sz, int64_t out_sz, Tensor& d_in) {
    parallel_for(batch, kSampleBlock, [&](int64_t s0, int64_t s1) {
        for (int64_t s = s0; s < s1; ++s) {
            const double* dout = d_out.data() + s * out_sz;
            const int32_t* arg = argmax.data() + s * out_sz;
            double* din = d_in.data() + s * in_sz;
            for (int64_t o = 0; o < out_sz; ++o) din[arg[o]] += dout[o];
        }
    });
}

// y = max(x, 0) * mask; mask entries are 0 or 1/(1-p). A size-0 mask means
// identity dropout.
void relu_dropout_forward(const Tensor& pre, const Tensor& mask, Tensor& act) {
    const int64_t n = pre.size();
    const bool masked = mask.size() == n;
    parallel_for(n, 1 << 14, [&](int64_t i0, int64_t i1) {
        for (int64_t i = i0; i < i1; ++i) {
            double v = pre[i] > 0.0 ? pre[i] : 0.0;
            act[i] = masked ? v * mask[i] : v;
        }
    });
}

void relu_dropout_backward(const Tensor& pre, const Tensor& mask, Tensor& grad) {
    const int64_t n = pre.size();
    const bool masked = mask.size() == n;
    parallel_for(n, 1 << 14, [&](int64_t i0, int64_t i1) {
        for (int64_t i = i0; i < i1; ++i) {
            double g = pre[i] > 0.0 ? grad[i] : 0.0;
            grad[i] = masked ? g * mask[i] : g;
        }
    });
}

// Inverted-dropout mask drawn by absolute element index from a counter-based
// stream: parallel-safe and independent of evaluation order.
Tensor draw_mask(const RandomSource& site, double rate, std::vector<int64_t> shape) {
    Tensor mask(std::move(shape));
    const double keep_scale = 1.0 / (1.0 - rate);
    const int64_t n = mask.size();
    parallel_for(n, 1 << 14, [&](int64_t i0, int64_t i1) {
        for (int64_t i = i0; i < i1; ++i)
            mask[i] = site.double_at(static_cast<uint64_t>(i)) >= rate ? keep_scale : 0.0;
    });
    return mask;
}

// out[M,N] = a[M,K] * b[N,K]^T + bias[N] rowwise, sample rows in parallel.
void linear_forward(const Tensor& a, const Tensor& weight, const Tensor& bias, Tensor& out) {
    const int64_t m = a.extent(0), k = a.extent(1), n = weight.extent(0);
    parallel_for(m, kSampleBlock, [&](int64_t r0, int64_t r1) {
        detail::gemm_bt(a.data() + r0 * k, weight.data(), out.data() + r0 * n, r1 - r0, k, n);
        for (int64_t r = r0; r < r1; ++r) {
            double* row = out.data() + r * n;
            for (int64_t j = 0; j < n; ++j) row[j] += bias[j];
        }
    });
}

void grouped_softmax(Tensor& logits_to_probs, const HeadLayout& head, int64_t batch) {
    const int total = head.total();
    parallel_for(batch, kSampleBlock, [&](int64_t s0, int64_t s1) {
        for (int64_t s = s0; s < s1; ++s) {
            double* row = logits_to_probs.data() + s * total;
            for (int i = 0; i < head.length; ++i) {
                double* blk = row + static_cast<int64_t>(i) * head.classes;
                double mx = blk[0];
                for (int c = 1; c < head.classes; ++c) mx = std::max(mx, blk[c]);
                double sum = 0.0;
                for (int c = 0; c < head.classes; ++c) {
                    blk[c] = std::exp(blk[c] - mx);
                    sum += blk[c];
                }
                const double inv = 1.0 / sum;
                for (int c = 0; c < head.classes; ++c) blk[c] *= inv;
            }
        }
    });
}

}  // namespace

ForwardCache forward(const ModelParams& params, const NetConfig& cfg, const Tensor& batch, Mode mode,
                     RandomSource rs) {
    NetShapes shapes = compute_shapes(cfg);
    if (batch.rank() != 4 || batch.extent(1) != 1 || batch.extent(2) != cfg.input_h ||
        batch.extent(3) != cfg.input_w)
        throw ShapeError("batch shape does not match net input (expected [N,1," +
                         std::to_string(cfg.input_h) + "," + std::to_string(cfg.input_w) + "])");
    const size_t stages = cfg.convs.size();
    if (params.entries.size() != 2 * stages + 4)
        throw ValueError("parameter count does not match net config");

    ForwardCache cache;
    cache.mode = mode;
    cache.batch = batch.extent(0);
    cache.input = batch;
    cache.conv_pre.resize(stages);
    cache.drop_mask.resize(stages);
    cache.stage_out.resize(stages);
    cache.pool_argmax.resize(stages);

    const bool dropping = mode == Mode::train && cfg.dropout_rate > 0.0;
    const int64_t n = cache.batch;
    RandomSource conv_drop = rs.child("conv_drop");

    StageShape cur{1, cfg.input_h, cfg.input_w};
    const Tensor* stage_in = &cache.input;
    for (size_t s = 0; s < stages; ++s) {
        const ConvGeom g = conv_geom(cfg.convs[s], cur);
        const StageShape& conv_shape = shapes.conv_out[s];
        cache.conv_pre[s] = Tensor({n, conv_shape.channels, conv_shape.h, conv_shape.w});
        conv_forward(*stage_in, params.entries[2 * s].value, params.entries[2 * s + 1].value, g, n,
                     cache.conv_pre[s]);

        Tensor act({n, conv_shape.channels, conv_shape.h, conv_shape.w});
        if (dropping)
            cache.drop_mask[s] = draw_mask(conv_drop.child(static_cast<uint64_t>(s)), cfg.dropout_rate,
                                           act.shape());
        relu_dropout_forward(cache.conv_pre[s], cache.drop_mask[s], act);

        const StageShape& pool_shape = shapes.pool_out[s];
        cache.stage_out[s] = Tensor({n, pool_shape.channels, pool_shape.h, pool_shape.w});
        maxpool_forward(act, conv_shape, cfg.pools[s], n, cache.stage_out[s], pool_shape,
                        cache.pool_argmax[s]);
        cur = pool_shape;
        stage_in = &cache.stage_out[s];
    }

    const Tensor flat = cache.stage_out.back().reshaped({n, shapes.flat});
    const Tensor& w1 = params.entries[2 * stages].value;
    const Tensor& b1 = params.entries[2 * stages + 1].value;
    cache.fc1_pre = Tensor({n, cfg.fc1_width});
    linear_forward(flat, w1, b1, cache.fc1_pre);

    Tensor fc1_act({n, cfg.fc1_width});
    if (dropping) cache.fc1_mask = draw_mask(rs.child("fc1_drop"), cfg.dropout_rate, fc1_act.shape());
    relu_dropout_forward(cache.fc1_pre, cache.fc1_mask, fc1_act);

    const Tensor& w2 = params.entries[2 * stages + 2].value;
    const Tensor& b2 = params.entries[2 * stages + 3].value;
    cache.probs = Tensor({n, cfg.head.total()});
    linear_forward(fc1_act, w2, b2, cache.probs);
    grouped_softmax(cache.probs, cfg.head, n);
    return cache;
}

std::vector<PredDist> to_pred_dists(const Tensor& probs, const HeadLayout& head) {
    if (probs.rank() != 2 || probs.extent(1) != head.total())
        throw ShapeError("probability tensor does not match head layout");
    std::vector<PredDist> out(static_cast<size_t>(probs.extent(0)));
    for (int64_t s = 0; s < probs.extent(0); ++s) {
        PredDist& d = out[static_cast<size_t>(s)];
        d.length = head.length;
        d.classes = head.classes;
        d.p.assign(probs.data() + s * head.total(), probs.data() + (s + 1) * head.total());
    }
    return out;
}

double loss_value(const Tensor& probs, std::span<const int> target_classes, const HeadLayout& head) {
    const int64_t n = probs.extent(0);
    if (probs.rank() != 2 || probs.extent(1) != head.total())
        throw ShapeError("probability tensor does not match head layout");
    if (static_cast<int64_t>(target_classes.size()) != n * head.length)
        throw ShapeError("target class count does not match batch");
    double total = 0.0;
    for (int64_t s = 0; s < n; ++s) {
        const double* row = probs.data() + s * head.total();
        for (int i = 0; i < head.length; ++i) {
            const int cls = target_classes[static_cast<size_t>(s * head.length + i)];
            if (cls < 0 || cls >= head.classes) throw ValueError("target class out of range");
            const double p = row[static_cast<int64_t>(i) * head.classes + cls];
            total -= std::log(std::max(p, 1e-12));
        }
    }
    return total / static_cast<double>(n);
}

double loss_value(const Tensor& probs, const Tensor& one_hot_targets, const HeadLayout& head) {
    if (!probs.same_shape(one_hot_targets)) throw ShapeError("probs and targets must share a shape");
    const int64_t n = probs.extent(0);
    std::vector<int> classes;
    classes.reserve(static_cast<size_t>(n * head.length));
    for (int64_t s = 0; s < n; ++s) {
        const double* row = one_hot_targets.data() + s * head.total();
        for (int i = 0; i < head.length; ++i) {
            const double* blk = row + static_cast<int64_t>(i) * head.classes;
            int hot = -1;
            for (int c = 0; c < head.classes; ++c) {
                if (blk[c] == 1.0) {
                    if (hot >= 0) throw ValueError("target block has more than one hot entry");
                    hot = c;
                } else if (blk[c] != 0.0) {
                    throw ValueError("target block is not one-hot");
                }
            }
            if (hot < 0) throw ValueError("target block has no hot entry");
            classes.push_back(hot);
        }
    }
    return loss_value(probs, classes, head);
}

std::vector<Tensor> backward(const ModelParams& params, const NetConfig& cfg, const ForwardCache& cache,
                             std::span<const int> target_classes) {
    if (cache.mode != Mode::train) throw Error("backward requires a train-mode forward cache");
    NetShapes shapes = compute_shapes(cfg);
    const size_t stages = cfg.convs.size();
    const int64_t n = cache.batch;
    if (static_cast<int64_t>(target_classes.size()) != n * cfg.head.length)
        throw ShapeError("target class count does not match cached batch");

    std::vector<Tensor> grads(params.entries.size());
    for (size_t i = 0; i < params.entries.size(); ++i)
        grads[i] = Tensor::zeros_like(params.entries[i].value);

    const int total = cfg.head.total();
    const double inv_n = 1.0 / static_cast<double>(n);

    // d(loss)/d(logits) of the grouped softmax cross-entropy: (p - y)/N.
    Tensor d_logits = cache.probs;
    for (int64_t s = 0; s < n; ++s) {
        double* row = d_logits.data() + s * total;
        for (int i = 0; i < cfg.head.length; ++i) {
            const int cls = target_classes[static_cast<size_t>(s * cfg.head.length + i)];
            if (cls < 0 || cls >= cfg.head.classes) throw ValueError("target class out of range");
            row[static_cast<int64_t>(i) * cfg.head.classes + cls] -= 1.0;
        }
        for (int j = 0; j < total; ++j) row[j] *= inv_n;
    }

    // Recompute fc1 activation from the cached pre-activation and mask.
    Tensor fc1_act({n, cfg.fc1_width});
    relu_dropout_forward(cache.fc1_pre, cache.fc1_mask, fc1_act);

    const Tensor& w2 = params.entries[2 * stages + 2].value;
    Tensor& d_w2 = grads[2 * stages + 2];
    Tensor& d_b2 = grads[2 * stages + 3];
    detail::gemm_at(d_logits.data(), fc1_act.data(), d_w2.data(), n, total, cfg.fc1_width);
    for (int64_t s = 0; s < n; ++s) {
        const double* row = d_logits.data() + s * total;
        for (int j = 0; j < total; ++j) d_b2[j] += row[j];
    }

    Tensor d_fc1 = matmul(d_logits.reshaped({n, total}), w2);
    relu_dropout_backward(cache.fc1_pre, cache.fc1_mask, d_fc1);

    const Tensor flat_in = cache.stage_out.back().reshaped({n, shapes.flat});
    const Tensor& w1 = params.entries[2 * stages].value;
    Tensor& d_w1 = grads[2 * stages];
    Tensor& d_b1 = grads[2 * stages + 1];
    detail::gemm_at(d_fc1.data(), flat_in.data(), d_w1.data(), n, cfg.fc1_width, shapes.flat);
    for (int64_t s = 0; s < n; ++s) {
        const double* row = d_fc1.data() + s * cfg.fc1_width;
        for (int j = 0; j < cfg.fc1_width; ++j) d_b1[j] += row[j];
    }

    Tensor d_stage = matmul(d_fc1, w1);  // [n, flat]
    {
        const StageShape& last = shapes.pool_out.back();
        d_stage = d_stage.reshaped({n, last.channels, last.h, last.w});
    }

    for (size_t s = stages; s-- > 0;) {
        const StageShape& conv_shape = shapes.conv_out[s];
        const StageShape in_shape = s == 0 ? StageShape{1, cfg.input_h, cfg.input_w} : shapes.pool_out[s - 1];
        Tensor d_act({n, conv_shape.channels, conv_shape.h, conv_shape.w});
        maxpool_backward(d_stage, cache.pool_argmax[s], n, conv_shape.count(),
                         shapes.pool_out[s].count(), d_act);
        relu_dropout_backward(cache.conv_pre[s], cache.drop_mask[s], d_act);

        const ConvGeom g = conv_geom(cfg.convs[s], in_shape);
        const Tensor& stage_in = s == 0 ? cache.input : cache.stage_out[s - 1];
        if (s > 0) {
            Tensor d_prev({n, in_shape.channels, in_shape.h, in_shape.w});
            conv_backward(stage_in, params.entries[2 * s].value, d_act, g, n, grads[2 * s],
                          grads[2 * s + 1], &d_prev);
            d_stage = std::move(d_prev);
        } else {
            conv_backward(stage_in, params.entries[0].value, d_act, g, n, grads[0], grads[1], nullptr);
        }
    }
    return grads;
}

std::vector<GradCheckEntry> grad_check(const NetConfig& cfg, RandomSource& rs, int batch_size,
                                       double fd_step, int64_t max_coords) {
    if (cfg.dropout_rate != 0.0) throw ValueError("grad_check requires dropout_rate == 0");
    if (batch_size < 1) throw ValueError("batch_size must be >= 1");

    RandomSource init_rs = rs.child("init");
    ModelParams params = init_params(cfg, init_rs);

    RandomSource data_rs = rs.child("data");
    Tensor batch = data_rs.uniform_tensor({batch_size, 1, cfg.input_h, cfg.input_w}, 0.0, 1.0);
    std::vector<int> targets(static_cast<size_t>(batch_size) * cfg.head.length);
    for (int& t : targets) t = static_cast<int>(data_rs.next_below(static_cast<uint64_t>(cfg.head.classes)));

    RandomSource fwd_rs = rs.child("fwd");
    ForwardCache cache = forward(params, cfg, batch, Mode::train, fwd_rs);
    std::vector<Tensor> analytic = backward(params, cfg, cache, targets);

    auto loss_at = [&](const ModelParams& p) {
        ForwardCache c = forward(p, cfg, batch, Mode::train, fwd_rs);
        return loss_value(c.probs, targets, cfg.head);
    };

    std::vector<GradCheckEntry> report;
    for (size_t e = 0; e < params.entries.size(); ++e) {
        Tensor& value = params.entries[e].value;
        const int64_t count = value.size();
        const int64_t step = max_coords > 0 && count > max_coords ? count / max_coords : 1;
        GradCheckEntry entry{params.entries[e].name, 0.0, 0};
        for (int64_t i = 0; i < count; i += step) {
            const double saved = value[i];
            value[i] = saved + fd_step;
            const double up = loss_at(params);
            value[i] = saved - fd_step;
            const double down = loss_at(params);
            value[i] = saved;
            const double numeric = (up - down) / (2.0 * fd_step);
            const double a = analytic[e][i];
            const double rel = std::abs(a - numeric) / std::max({std::abs(a), std::abs(numeric), 1e-8});
            entry.max_rel_err = std::max(entry.max_rel_err, rel);
            ++entry.checked;
        }
        report.push_back(std::move(entry));
    }
    return report;
}

Tensor make_batch(const std::vector<LabeledSample>& data, std::span<const int64_t> indices,
                  const NetConfig& cfg) {
    const int64_t n = static_cast<int64_t>(indices.size());
    if (n == 0) throw ValueError("batch needs at least one sample");
    Tensor batch({n, 1, cfg.input_h, cfg.input_w});
    const int64_t img_sz = static_cast<int64_t>(cfg.input_h) * cfg.input_w;
    for (int64_t s = 0; s < n; ++s) {
        const LabeledSample& sample = data[static_cast<size_t>(indices[static_cast<size_t>(s)])];
        if (sample.image.width != cfg.input_w || sample.image.height != cfg.input_h)
            throw ShapeError("image " + std::to_string(sample.image.width) + "x" +
                             std::to_string(sample.image.height) + " does not match net input " +
                             std::to_string(cfg.input_w) + "x" + std::to_string(cfg.input_h));
        double* dst = batch.data() + s * img_sz;
        const uint8_t* src = sample.image.pixels.data();
        for (int64_t i = 0; i < img_sz; ++i) dst[i] = (255.0 - src[i]) / 255.0;
    }
    return batch;
}

std::vector<int> make_target_classes(const Alphabet& alpha, const HeadLayout& head,
                                     const std::vector<LabeledSample>& data,
                                     std::span<const int64_t> indices) {
    std::vector<int> out;
    out.reserve(indices.size() * static_cast<size_t>(head.length));
    for (int64_t idx : indices) {
        const std::string& label = data[static_cast<size_t>(idx)].label;
        check_label(alpha, head.length, label);
        for (char c : label) out.push_back(encode_char(alpha, c));
    }
    return out;
}

}  // namespace caf
