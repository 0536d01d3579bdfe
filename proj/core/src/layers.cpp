#include "wellcast/layers.hpp"

#include <algorithm>
#include <cmath>

#include "wellcast/errors.hpp"

namespace wellcast {

std::string_view layer_kind_name(LayerKind k) {
    switch (k) {
        case LayerKind::dense: return "dense";
        case LayerKind::conv1d: return "conv1d";
        case LayerKind::maxpool1d: return "maxpool1d";
        case LayerKind::flatten: return "flatten";
        case LayerKind::lstm: return "lstm";
    }
    return "?";
}

std::string_view activation_name(Activation a) {
    switch (a) {
        case Activation::linear: return "linear";
        case Activation::relu: return "relu";
        case Activation::tanh: return "tanh";
        case Activation::hard_sigmoid: return "hard_sigmoid";
    }
    return "?";
}

LayerKind layer_kind_from_name(std::string_view name) {
    if (name == "dense") return LayerKind::dense;
    if (name == "conv1d") return LayerKind::conv1d;
    if (name == "maxpool1d") return LayerKind::maxpool1d;
    if (name == "flatten") return LayerKind::flatten;
    if (name == "lstm") return LayerKind::lstm;
    throw ConfigError("unknown layer kind: " + std::string(name));
}

Activation activation_from_name(std::string_view name) {
    if (name == "linear") return Activation::linear;
    if (name == "relu") return Activation::relu;
    if (name == "tanh") return Activation::tanh;
    if (name == "hard_sigmoid") return Activation::hard_sigmoid;
    throw ConfigError("unknown activation: " + std::string(name));
}

double hard_sigmoid(double x) { return std::max(0.0, std::min(1.0, 0.2 * x + 0.5)); }

double apply_activation(Activation act, double x) {
    switch (act) {
        case Activation::linear: return x;
        case Activation::relu: return x > 0 ? x : 0.0;
        case Activation::tanh: return std::tanh(x);
        case Activation::hard_sigmoid: return hard_sigmoid(x);
    }
    return x;
}

double activation_grad(Activation act, double pre) {
    switch (act) {
        case Activation::linear: return 1.0;
        case Activation::relu: return pre > 0 ? 1.0 : 0.0;
        case Activation::tanh: {
            const double t = std::tanh(pre);
            return 1.0 - t * t;
        }
        case Activation::hard_sigmoid: return pre > -2.5 && pre < 2.5 ? 0.2 : 0.0;
    }
    return 1.0;
}

LayerSpec LayerSpec::dense(std::size_t units, Activation act) {
    LayerSpec s;
    s.kind = LayerKind::dense;
    s.units = units;
    s.activation = act;
    return s;
}

LayerSpec LayerSpec::conv1d(std::size_t filters, std::size_t kernel, Activation act,
                            std::size_t stride) {
    LayerSpec s;
    s.kind = LayerKind::conv1d;
    s.units = filters;
    s.kernel = kernel;
    s.stride = stride;
    s.activation = act;
    return s;
}

LayerSpec LayerSpec::maxpool1d(std::size_t kernel, std::size_t stride) {
    LayerSpec s;
    s.kind = LayerKind::maxpool1d;
    s.kernel = kernel;
    s.stride = stride;
    return s;
}

LayerSpec LayerSpec::flatten() {
    LayerSpec s;
    s.kind = LayerKind::flatten;
    return s;
}

LayerSpec LayerSpec::lstm(std::size_t units, bool return_sequences) {
    LayerSpec s;
    s.kind = LayerKind::lstm;
    s.units = units;
    s.activation = Activation::tanh;
    s.return_sequences = return_sequences;
    return s;
}

namespace {

[[noreturn]] void shape_error(const LayerSpec& spec, const std::vector<std::size_t>& in,
                              const std::string& why) {
    throw ConfigError("shape: " + std::string(layer_kind_name(spec.kind)) + " cannot consume " +
                      Tensor::shape_string(in) + ": " + why);
}

std::size_t windowed_length(std::size_t length, std::size_t kernel, std::size_t stride) {
    return (length - kernel) / stride + 1;  // valid (no padding)
}

}  // namespace

std::vector<std::size_t> output_shape(const LayerSpec& spec,
                                      const std::vector<std::size_t>& input) {
    switch (spec.kind) {
        case LayerKind::dense: {
            if (input.size() != 1) shape_error(spec, input, "expects a vector");
            if (spec.units < 1) shape_error(spec, input, "zero width");
            return {spec.units};
        }
        case LayerKind::conv1d: {
            if (input.size() != 2) shape_error(spec, input, "expects (length x channels)");
            if (spec.kernel < 1 || spec.stride < 1) shape_error(spec, input, "bad kernel/stride");
            if (input[0] < spec.kernel) shape_error(spec, input, "input shorter than kernel");
            return {windowed_length(input[0], spec.kernel, spec.stride), spec.units};
        }
        case LayerKind::maxpool1d: {
            if (input.size() != 2) shape_error(spec, input, "expects (length x channels)");
            if (spec.kernel < 1 || spec.stride < 1) shape_error(spec, input, "bad kernel/stride");
            if (input[0] < spec.kernel) shape_error(spec, input, "input shorter than kernel");
            return {windowed_length(input[0], spec.kernel, spec.stride), input[1]};
        }
        case LayerKind::flatten: {
            std::size_t n = 1;
            for (std::size_t d : input) n *= d;
            if (input.empty() || n == 0) shape_error(spec, input, "empty input");
            return {n};
        }
        case LayerKind::lstm: {
            if (input.size() != 2) shape_error(spec, input, "expects (time x channels)");
            if (spec.units < 1) shape_error(spec, input, "zero hidden size");
            if (spec.return_sequences) return {input[0], spec.units};
            return {spec.units};
        }
    }
    shape_error(spec, input, "unknown layer kind");
}

LayerParams make_layer_params(const LayerSpec& spec, const std::vector<std::size_t>& input) {
    LayerParams p;
    switch (spec.kind) {
        case LayerKind::dense:
            p.tensors.emplace_back(std::vector<std::size_t>{input[0], spec.units});
            p.names.emplace_back("W");
            p.tensors.emplace_back(std::vector<std::size_t>{spec.units});
            p.names.emplace_back("b");
            break;
        case LayerKind::conv1d:
            p.tensors.emplace_back(std::vector<std::size_t>{spec.kernel, input[1], spec.units});
            p.names.emplace_back("W");
            p.tensors.emplace_back(std::vector<std::size_t>{spec.units});
            p.names.emplace_back("b");
            break;
        case LayerKind::lstm: {
            const std::size_t c = input[1], u = spec.units;
            static constexpr const char* gate[4] = {"i", "f", "c", "o"};
            for (int g = 0; g < 4; ++g) {
                p.tensors.emplace_back(std::vector<std::size_t>{c, u});
                p.names.emplace_back(std::string("Wx_") + gate[g]);
            }
            for (int g = 0; g < 4; ++g) {
                p.tensors.emplace_back(std::vector<std::size_t>{u, u});
                p.names.emplace_back(std::string("Wh_") + gate[g]);
            }
            for (int g = 0; g < 4; ++g) {
                p.tensors.emplace_back(std::vector<std::size_t>{u});
                p.names.emplace_back(std::string("b_") + gate[g]);
            }
            break;
        }
        case LayerKind::maxpool1d:
        case LayerKind::flatten:
            break;  // parameter-free
    }
    return p;
}

// ---------------------------------------------------------------------------
// dense

Tensor dense_forward(const Tensor& x, const LayerSpec& spec, const LayerParams& params,
                     LayerCache* cache) {
    const std::size_t in = x.numel(), out = spec.units;
    const Tensor& w = params.tensors[0];
    const Tensor& b = params.tensors[1];
    Tensor z({out});
    for (std::size_t j = 0; j < out; ++j) z[j] = b[j];
    for (std::size_t i = 0; i < in; ++i) {
        const double xi = x[i];
        const double* wrow = w.data() + i * out;
        for (std::size_t j = 0; j < out; ++j) z[j] += xi * wrow[j];
    }
    Tensor y({out});
    for (std::size_t j = 0; j < out; ++j) y[j] = apply_activation(spec.activation, z[j]);
    if (cache) {
        cache->input = x;
        cache->preact = std::move(z);
        cache->valid = true;
    }
    return y;
}

Tensor dense_backward(const Tensor& dy, const LayerSpec& spec, const LayerParams& params,
                      const LayerCache& cache, LayerParams& grads) {
    const std::size_t in = cache.input.numel(), out = spec.units;
    const Tensor& w = params.tensors[0];
    Tensor& dw = grads.tensors[0];
    Tensor& db = grads.tensors[1];

    // delta = dL/dz
    std::vector<double> delta(out);
    for (std::size_t j = 0; j < out; ++j)
        delta[j] = dy[j] * activation_grad(spec.activation, cache.preact[j]);

    for (std::size_t j = 0; j < out; ++j) db[j] += delta[j];
    Tensor dx({in});
    for (std::size_t i = 0; i < in; ++i) {
        const double xi = cache.input[i];
        const double* wrow = w.data() + i * out;
        double* dwrow = dw.data() + i * out;
        double acc = 0;
        for (std::size_t j = 0; j < out; ++j) {
            dwrow[j] += xi * delta[j];
            acc += wrow[j] * delta[j];
        }
        dx[i] = acc;
    }
    return dx;
}

// ---------------------------------------------------------------------------
// conv1d: valid cross-correlation over the length axis.

Tensor conv1d_forward(const Tensor& x, const LayerSpec& spec, const LayerParams& params,
                      LayerCache* cache) {
    const std::size_t length = x.dim(0), channels = x.dim(1);
    const std::size_t k = spec.kernel, stride = spec.stride, filters = spec.units;
    if (length < k) shape_error(spec, x.shape(), "input shorter than kernel");
    const std::size_t out_len = windowed_length(length, k, stride);
    const Tensor& w = params.tensors[0];  // (K x C x F)
    const Tensor& b = params.tensors[1];

    Tensor z({out_len, filters});
    for (std::size_t l = 0; l < out_len; ++l) {
        double* zrow = z.data() + l * filters;
        for (std::size_t f = 0; f < filters; ++f) zrow[f] = b[f];
        for (std::size_t t = 0; t < k; ++t) {
            const double* xrow = x.data() + (l * stride + t) * channels;
            const double* wslab = w.data() + t * channels * filters;
            for (std::size_t c = 0; c < channels; ++c) {
                const double xv = xrow[c];
                const double* wrow = wslab + c * filters;
                for (std::size_t f = 0; f < filters; ++f) zrow[f] += xv * wrow[f];
            }
        }
    }
    Tensor y({out_len, filters});
    for (std::size_t i = 0; i < y.numel(); ++i) y[i] = apply_activation(spec.activation, z[i]);
    if (cache) {
        cache->input = x;
        cache->preact = std::move(z);
        cache->valid = true;
    }
    return y;
}

Tensor conv1d_backward(const Tensor& dy, const LayerSpec& spec, const LayerParams& params,
                       const LayerCache& cache, LayerParams& grads) {
    const Tensor& x = cache.input;
    const std::size_t channels = x.dim(1);
    const std::size_t k = spec.kernel, stride = spec.stride, filters = spec.units;
    const std::size_t out_len = dy.dim(0);
    const Tensor& w = params.tensors[0];
    Tensor& dw = grads.tensors[0];
    Tensor& db = grads.tensors[1];

    Tensor dx(x.shape());
    std::vector<double> delta(filters);
    for (std::size_t l = 0; l < out_len; ++l) {
        for (std::size_t f = 0; f < filters; ++f) {
            delta[f] = dy.at(l, f) * activation_grad(spec.activation, cache.preact.at(l, f));
            db[f] += delta[f];
        }
        for (std::size_t t = 0; t < k; ++t) {
            const std::size_t row = l * stride + t;
            const double* xrow = x.data() + row * channels;
            double* dxrow = dx.data() + row * channels;
            const double* wslab = w.data() + t * channels * filters;
            double* dwslab = dw.data() + t * channels * filters;
            for (std::size_t c = 0; c < channels; ++c) {
                const double xv = xrow[c];
                const double* wrow = wslab + c * filters;
                double* dwrow = dwslab + c * filters;
                double acc = 0;
                for (std::size_t f = 0; f < filters; ++f) {
                    dwrow[f] += xv * delta[f];
                    acc += wrow[f] * delta[f];
                }
                dxrow[c] += acc;
            }
        }
    }
    return dx;
}

// ---------------------------------------------------------------------------
// maxpool1d

Tensor maxpool1d_forward(const Tensor& x, const LayerSpec& spec, LayerCache* cache) {
    const std::size_t length = x.dim(0), channels = x.dim(1);
    const std::size_t k = spec.kernel, stride = spec.stride;
    if (length < k) shape_error(spec, x.shape(), "input shorter than kernel");
    const std::size_t out_len = windowed_length(length, k, stride);

    Tensor y({out_len, channels});
    std::vector<std::size_t> argmax(out_len * channels);
    for (std::size_t l = 0; l < out_len; ++l) {
        for (std::size_t c = 0; c < channels; ++c) {
            std::size_t best_row = l * stride;
            double best = x.at(best_row, c);
            for (std::size_t t = 1; t < k; ++t) {
                const double v = x.at(l * stride + t, c);
                if (v > best) {
                    best = v;
                    best_row = l * stride + t;
                }
            }
            y.at(l, c) = best;
            argmax[l * channels + c] = best_row;
        }
    }
    if (cache) {
        cache->input = x;
        cache->argmax = std::move(argmax);
        cache->valid = true;
    }
    return y;
}

Tensor maxpool1d_backward(const Tensor& dy, const LayerSpec& spec, const LayerCache& cache) {
    (void)spec;
    const std::size_t out_len = dy.dim(0), channels = dy.dim(1);
    Tensor dx(cache.input.shape());
    for (std::size_t l = 0; l < out_len; ++l)
        for (std::size_t c = 0; c < channels; ++c)
            dx.at(cache.argmax[l * channels + c], c) += dy.at(l, c);
    return dx;
}

// ---------------------------------------------------------------------------
// flatten

Tensor flatten_forward(const Tensor& x, LayerCache* cache) {
    Tensor y({x.numel()});
    std::copy(x.data(), x.data() + x.numel(), y.data());
    if (cache) {
        cache->input = x;
        cache->valid = true;
    }
    return y;
}

Tensor flatten_backward(const Tensor& dy, const LayerCache& cache) {
    Tensor dx(cache.input.shape());
    std::copy(dy.data(), dy.data() + dy.numel(), dx.data());
    return dx;
}

// ---------------------------------------------------------------------------
// lstm
//
// Gates use the hard sigmoid, candidate and hidden output use tanh:
//   i_t = hs(Wx_i x_t + Wh_i h_{t-1} + b_i)        f_t, o_t analogous
//   g_t = tanh(Wx_c x_t + Wh_c h_{t-1} + b_c)
//   c_t = f_t * c_{t-1} + i_t * g_t
//   h_t = o_t * tanh(c_t)

Tensor lstm_forward(const Tensor& x, const LayerSpec& spec, const LayerParams& params,
                    LayerCache* cache, const Tensor* h0, const Tensor* c0) {
    const std::size_t steps = x.dim(0), channels = x.dim(1), units = spec.units;

    const Tensor* wx = &params.tensors[0];  // [0..3]
    const Tensor* wh = &params.tensors[4];  // [4..7]
    const Tensor* bias = &params.tensors[8];

    Tensor z[4], gate[4];
    for (int g = 0; g < 4; ++g) {
        z[g] = Tensor({steps, units});
        gate[g] = Tensor({steps, units});
    }
    Tensor cell({steps, units}), hidden({steps, units}), tanh_cell({steps, units});

    std::vector<double> h_prev(units, 0.0), c_prev(units, 0.0);
    if (h0) std::copy(h0->data(), h0->data() + units, h_prev.begin());
    if (c0) std::copy(c0->data(), c0->data() + units, c_prev.begin());

    for (std::size_t t = 0; t < steps; ++t) {
        const double* xt = x.data() + t * channels;
        for (int g = 0; g < 4; ++g) {
            double* zg = z[g].data() + t * units;
            const double* b = bias[g].data();
            for (std::size_t u = 0; u < units; ++u) zg[u] = b[u];
            const double* wxm = wx[g].data();
            for (std::size_t c = 0; c < channels; ++c) {
                const double xv = xt[c];
                const double* row = wxm + c * units;
                for (std::size_t u = 0; u < units; ++u) zg[u] += xv * row[u];
            }
            const double* whm = wh[g].data();
            for (std::size_t p = 0; p < units; ++p) {
                const double hv = h_prev[p];
                const double* row = whm + p * units;
                for (std::size_t u = 0; u < units; ++u) zg[u] += hv * row[u];
            }
        }
        for (std::size_t u = 0; u < units; ++u) {
            const double iv = hard_sigmoid(z[kGateI].at(t, u));
            const double fv = hard_sigmoid(z[kGateF].at(t, u));
            const double ov = hard_sigmoid(z[kGateO].at(t, u));
            const double gv = std::tanh(z[kGateC].at(t, u));
            gate[kGateI].at(t, u) = iv;
            gate[kGateF].at(t, u) = fv;
            gate[kGateO].at(t, u) = ov;
            gate[kGateC].at(t, u) = gv;
            const double cv = fv * c_prev[u] + iv * gv;
            const double tc = std::tanh(cv);
            cell.at(t, u) = cv;
            tanh_cell.at(t, u) = tc;
            hidden.at(t, u) = ov * tc;
        }
        for (std::size_t u = 0; u < units; ++u) {
            const double cv = cell.at(t, u), hv = hidden.at(t, u);
            if (!std::isfinite(cv) || !std::isfinite(hv))
                throw NumericError("lstm_forward: non-finite state at step " + std::to_string(t));
            c_prev[u] = cv;
            h_prev[u] = hv;
        }
    }

    Tensor out;
    if (spec.return_sequences) {
        out = hidden;
    } else {
        out = Tensor({units});
        if (steps > 0)
            std::copy(hidden.data() + (steps - 1) * units, hidden.data() + steps * units,
                      out.data());
    }
    if (cache) {
        cache->input = x;
        cache->zi = std::move(z[kGateI]);
        cache->zf = std::move(z[kGateF]);
        cache->zc = std::move(z[kGateC]);
        cache->zo = std::move(z[kGateO]);
        cache->gi = std::move(gate[kGateI]);
        cache->gf = std::move(gate[kGateF]);
        cache->gc = std::move(gate[kGateC]);
        cache->go = std::move(gate[kGateO]);
        cache->cell = std::move(cell);
        cache->hidden = std::move(hidden);
        cache->tanh_cell = std::move(tanh_cell);
        cache->valid = true;
    }
    return out;
}

Tensor lstm_backward(const Tensor& dy, const LayerSpec& spec, const LayerParams& params,
                     const LayerCache& cache, LayerParams& grads) {
    const Tensor& x = cache.input;
    const std::size_t steps = x.dim(0), channels = x.dim(1), units = spec.units;

    const Tensor* wx = &params.tensors[0];
    const Tensor* wh = &params.tensors[4];
    Tensor* dwx = &grads.tensors[0];
    Tensor* dwh = &grads.tensors[4];
    Tensor* db = &grads.tensors[8];

    Tensor dx(x.shape());
    std::vector<double> dh(units, 0.0), dc(units, 0.0), dh_prev(units, 0.0);
    std::vector<double> delta[4];
    for (auto& d : delta) d.assign(units, 0.0);

    for (std::size_t ts = steps; ts-- > 0;) {
        // Upstream gradient reaching h_t: from the layer output plus the
        // recurrence into step t+1 (already accumulated in dh).
        if (spec.return_sequences) {
            for (std::size_t u = 0; u < units; ++u) dh[u] += dy.at(ts, u);
        } else if (ts == steps - 1) {
            for (std::size_t u = 0; u < units; ++u) dh[u] += dy[u];
        }

        for (std::size_t u = 0; u < units; ++u) {
            const double tc = cache.tanh_cell.at(ts, u);
            const double ov = cache.go.at(ts, u);
            // h = o * tanh(c)
            delta[kGateO][u] = dh[u] * tc * activation_grad(Activation::hard_sigmoid,
                                                            cache.zo.at(ts, u));
            dc[u] += dh[u] * ov * (1.0 - tc * tc);

            const double c_prev = ts > 0 ? cache.cell.at(ts - 1, u) : 0.0;
            delta[kGateF][u] = dc[u] * c_prev * activation_grad(Activation::hard_sigmoid,
                                                                cache.zf.at(ts, u));
            delta[kGateI][u] = dc[u] * cache.gc.at(ts, u) *
                               activation_grad(Activation::hard_sigmoid, cache.zi.at(ts, u));
            const double gv = cache.gc.at(ts, u);
            delta[kGateC][u] = dc[u] * cache.gi.at(ts, u) * (1.0 - gv * gv);
        }

        const double* xt = x.data() + ts * channels;
        const double* h_prev = ts > 0 ? cache.hidden.data() + (ts - 1) * units : nullptr;
        std::fill(dh_prev.begin(), dh_prev.end(), 0.0);
        for (int g = 0; g < 4; ++g) {
            const std::vector<double>& del = delta[g];
            double* dbg = db[g].data();
            for (std::size_t u = 0; u < units; ++u) dbg[u] += del[u];

            double* dwxm = dwx[g].data();
            double* dxrow = dx.data() + ts * channels;
            const double* wxm = wx[g].data();
            for (std::size_t c = 0; c < channels; ++c) {
                double* dwrow = dwxm + c * units;
                const double* wrow = wxm + c * units;
                const double xv = xt[c];
                double acc = 0;
                for (std::size_t u = 0; u < units; ++u) {
                    dwrow[u] += xv * del[u];
                    acc += wrow[u] * del[u];
                }
                dxrow[c] += acc;
            }
            if (h_prev) {
                double* dwhm = dwh[g].data();
                for (std::size_t p = 0; p < units; ++p) {
                    double* dwrow = dwhm + p * units;
                    const double hv = h_prev[p];
                    for (std::size_t u = 0; u < units; ++u) dwrow[u] += hv * del[u];
                }
            }
            const double* whm = wh[g].data();
            for (std::size_t p = 0; p < units; ++p) {
                const double* wrow = whm + p * units;
                double acc = 0;
                for (std::size_t u = 0; u < units; ++u) acc += wrow[u] * del[u];
                dh_prev[p] += acc;
            }
        }

        // Prepare gradients flowing into step t-1.
        for (std::size_t u = 0; u < units; ++u) {
            dc[u] *= cache.gf.at(ts, u);
            dh[u] = dh_prev[u];
        }
    }
    return dx;
}

}  // namespace wellcast
