#ifndef WELLCAST_NETWORK_HPP
#define WELLCAST_NETWORK_HPP

#include <cstdint>
#include <vector>

#include "wellcast/layers.hpp"

namespace wellcast {

// A feed-forward chain of layers with per-layer reverse-mode backward
// passes. One instance is confined to a single training context; trained
// parameters can be copied out and shared freely.
class Network {
  public:
    Network(std::vector<LayerSpec> specs, std::vector<std::size_t> input_shape);

    // Glorot-uniform kernels, orthogonal LSTM recurrent kernels, zero
    // biases with the forget-gate bias at 1. Fully determined by the seed.
    void init_params(std::uint64_t seed);

    const std::vector<LayerSpec>& specs() const { return specs_; }
    const std::vector<std::size_t>& input_shape() const { return shapes_.front(); }
    // shapes()[0] is the input shape, shapes()[i + 1] layer i's output.
    const std::vector<std::vector<std::size_t>>& shapes() const { return shapes_; }

    Tensor forward(const Tensor& x, bool keep_cache = false);
    // Requires a cached forward pass; accumulates into the gradient
    // tensors and returns dL/d(input).
    Tensor backward(const Tensor& dy);

    void zero_grads();

    std::vector<LayerParams>& params() { return params_; }
    const std::vector<LayerParams>& params() const { return params_; }
    std::vector<LayerParams>& grads() { return grads_; }

    std::vector<Tensor*> param_tensors();
    std::vector<Tensor*> grad_tensors();

    std::size_t param_count() const;

    // Flat row-major parameter vector, layer by layer, tensor by tensor.
    std::vector<double> flat_params() const;
    void set_flat_params(const std::vector<double>& flat);

  private:
    std::vector<LayerSpec> specs_;
    std::vector<std::vector<std::size_t>> shapes_;
    std::vector<LayerParams> params_;
    std::vector<LayerParams> grads_;
    std::vector<LayerCache> caches_;
    bool have_cache_ = false;
};

}  // namespace wellcast

#endif  // WELLCAST_NETWORK_HPP
