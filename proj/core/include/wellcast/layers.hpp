#ifndef WELLCAST_LAYERS_HPP
#define WELLCAST_LAYERS_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "wellcast/tensor.hpp"

namespace wellcast {

enum class LayerKind { dense, conv1d, maxpool1d, flatten, lstm };
enum class Activation { linear, relu, tanh, hard_sigmoid };

std::string_view layer_kind_name(LayerKind k);
std::string_view activation_name(Activation a);
LayerKind layer_kind_from_name(std::string_view name);
Activation activation_from_name(std::string_view name);

double apply_activation(Activation act, double x);
// Derivative with respect to the pre-activation value.
double activation_grad(Activation act, double pre);

// Hard sigmoid: the piecewise-linear gate activation, clamp(0.2 x + 0.5).
double hard_sigmoid(double x);

struct LayerSpec {
    LayerKind kind = LayerKind::dense;
    std::size_t units = 0;   // dense width / conv filters / lstm hidden size
    std::size_t kernel = 1;  // conv1d, maxpool1d
    std::size_t stride = 1;  // conv1d, maxpool1d
    Activation activation = Activation::linear;
    bool return_sequences = false;  // lstm

    static LayerSpec dense(std::size_t units, Activation act);
    static LayerSpec conv1d(std::size_t filters, std::size_t kernel, Activation act,
                            std::size_t stride = 1);
    static LayerSpec maxpool1d(std::size_t kernel, std::size_t stride = 1);
    static LayerSpec flatten();
    static LayerSpec lstm(std::size_t units, bool return_sequences);
};

// Output shape of one layer; throws ConfigError when the input cannot be
// consumed (rank mismatch, window longer than the input, empty output).
std::vector<std::size_t> output_shape(const LayerSpec& spec,
                                      const std::vector<std::size_t>& input);

// Parameter tensors of one layer, in a fixed documented order:
//   dense:  W (in x out), b (out)
//   conv1d: W (K x C_in x F), b (F)
//   lstm:   Wx_i, Wx_f, Wx_c, Wx_o (C_in x U), Wh_* (U x U), b_* (U)
struct LayerParams {
    std::vector<Tensor> tensors;
    std::vector<std::string> names;

    std::size_t count() const {
        std::size_t n = 0;
        for (const auto& t : tensors) n += t.numel();
        return n;
    }
};

LayerParams make_layer_params(const LayerSpec& spec, const std::vector<std::size_t>& input);

// LSTM gate order within LayerParams.
inline constexpr std::size_t kGateI = 0, kGateF = 1, kGateC = 2, kGateO = 3;

// Everything the backward pass needs from the forward pass.
struct LayerCache {
    Tensor input;
    Tensor preact;               // dense/conv pre-activations
    std::vector<std::size_t> argmax;  // maxpool winners, flattened L' x C
    // LSTM traces, all (T x U):
    Tensor zi, zf, zc, zo;       // gate pre-activations
    Tensor gi, gf, gc, go;       // activated gates (gc = tanh candidate)
    Tensor cell, hidden, tanh_cell;
    bool valid = false;
};

// Forward passes. `cache` may be null for inference-only calls.
Tensor dense_forward(const Tensor& x, const LayerSpec& spec, const LayerParams& params,
                     LayerCache* cache);
Tensor conv1d_forward(const Tensor& x, const LayerSpec& spec, const LayerParams& params,
                      LayerCache* cache);
Tensor maxpool1d_forward(const Tensor& x, const LayerSpec& spec, LayerCache* cache);
Tensor flatten_forward(const Tensor& x, LayerCache* cache);
// Initial states default to zero vectors when null.
Tensor lstm_forward(const Tensor& x, const LayerSpec& spec, const LayerParams& params,
                    LayerCache* cache, const Tensor* h0 = nullptr, const Tensor* c0 = nullptr);

// Backward passes: take dL/d(output), accumulate parameter gradients into
// `grads` (same layout as params), return dL/d(input).
Tensor dense_backward(const Tensor& dy, const LayerSpec& spec, const LayerParams& params,
                      const LayerCache& cache, LayerParams& grads);
Tensor conv1d_backward(const Tensor& dy, const LayerSpec& spec, const LayerParams& params,
                       const LayerCache& cache, LayerParams& grads);
Tensor maxpool1d_backward(const Tensor& dy, const LayerSpec& spec, const LayerCache& cache);
Tensor flatten_backward(const Tensor& dy, const LayerCache& cache);
Tensor lstm_backward(const Tensor& dy, const LayerSpec& spec, const LayerParams& params,
                     const LayerCache& cache, LayerParams& grads);

}  // namespace wellcast

#endif  // WELLCAST_LAYERS_HPP
