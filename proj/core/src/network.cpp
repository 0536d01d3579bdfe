#include "wellcast/network.hpp"

#include <cmath>
#include <stdexcept>

#include "wellcast/errors.hpp"
#include "wellcast/linalg.hpp"
#include "wellcast/rng.hpp"

namespace wellcast {

Network::Network(std::vector<LayerSpec> specs, std::vector<std::size_t> input_shape)
    : specs_(std::move(specs)) {
    if (specs_.empty()) throw ConfigError("network: empty layer chain");
    shapes_.push_back(std::move(input_shape));
    for (const auto& spec : specs_) {
        const auto& in = shapes_.back();
        params_.push_back(make_layer_params(spec, in));
        grads_.push_back(make_layer_params(spec, in));
        shapes_.push_back(output_shape(spec, in));
    }
    caches_.resize(specs_.size());
}

void Network::init_params(std::uint64_t seed) {
    Rng rng(seed);
    auto glorot = [&](Tensor& w, std::size_t fan_in, std::size_t fan_out) {
        const double limit = std::sqrt(6.0 / static_cast<double>(fan_in + fan_out));
        for (std::size_t i = 0; i < w.numel(); ++i) w[i] = rng.uniform(-limit, limit);
    };
    for (std::size_t li = 0; li < specs_.size(); ++li) {
        const LayerSpec& spec = specs_[li];
        LayerParams& p = params_[li];
        switch (spec.kind) {
            case LayerKind::dense:
                glorot(p.tensors[0], shapes_[li][0], spec.units);
                p.tensors[1].fill(0.0);
                break;
            case LayerKind::conv1d:
                glorot(p.tensors[0], spec.kernel * shapes_[li][1], spec.kernel * spec.units);
                p.tensors[1].fill(0.0);
                break;
            case LayerKind::lstm: {
                const std::size_t c = shapes_[li][1], u = spec.units;
                for (int g = 0; g < 4; ++g) glorot(p.tensors[static_cast<std::size_t>(g)], c, u);
                for (int g = 0; g < 4; ++g) {
                    std::vector<double> m(u * u);
                    for (auto& v : m) v = rng.normal();
                    orthonormalize_square(m, u);
                    Tensor& wh = p.tensors[4 + static_cast<std::size_t>(g)];
                    std::copy(m.begin(), m.end(), wh.data());
                }
                for (int g = 0; g < 4; ++g) p.tensors[8 + static_cast<std::size_t>(g)].fill(0.0);
                p.tensors[8 + kGateF].fill(1.0);  // forget-gate bias
                break;
            }
            case LayerKind::maxpool1d:
            case LayerKind::flatten:
                break;
        }
    }
}

Tensor Network::forward(const Tensor& x, bool keep_cache) {
    if (x.shape() != shapes_.front())
        throw ConfigError("network: input shape " + Tensor::shape_string(x.shape()) +
                          " does not match expected " + Tensor::shape_string(shapes_.front()));
    Tensor cur = x;
    for (std::size_t li = 0; li < specs_.size(); ++li) {
        LayerCache* cache = keep_cache ? &caches_[li] : nullptr;
        const LayerSpec& spec = specs_[li];
        switch (spec.kind) {
            case LayerKind::dense: cur = dense_forward(cur, spec, params_[li], cache); break;
            case LayerKind::conv1d: cur = conv1d_forward(cur, spec, params_[li], cache); break;
            case LayerKind::maxpool1d: cur = maxpool1d_forward(cur, spec, cache); break;
            case LayerKind::flatten: cur = flatten_forward(cur, cache); break;
            case LayerKind::lstm: cur = lstm_forward(cur, spec, params_[li], cache); break;
        }
    }
    have_cache_ = keep_cache;
    return cur;
}

Tensor Network::backward(const Tensor& dy) {
    if (!have_cache_) throw std::logic_error("network: backward without a cached forward pass");
    Tensor cur = dy;
    for (std::size_t li = specs_.size(); li-- > 0;) {
        const LayerSpec& spec = specs_[li];
        const LayerCache& cache = caches_[li];
        switch (spec.kind) {
            case LayerKind::dense:
                cur = dense_backward(cur, spec, params_[li], cache, grads_[li]);
                break;
            case LayerKind::conv1d:
                cur = conv1d_backward(cur, spec, params_[li], cache, grads_[li]);
                break;
            case LayerKind::maxpool1d: cur = maxpool1d_backward(cur, spec, cache); break;
            case LayerKind::flatten: cur = flatten_backward(cur, cache); break;
            case LayerKind::lstm:
                cur = lstm_backward(cur, spec, params_[li], cache, grads_[li]);
                break;
        }
    }
    return cur;
}

void Network::zero_grads() {
    for (auto& lp : grads_)
        for (auto& t : lp.tensors) t.fill(0.0);
}

std::vector<Tensor*> Network::param_tensors() {
    std::vector<Tensor*> out;
    for (auto& lp : params_)
        for (auto& t : lp.tensors) out.push_back(&t);
    return out;
}

std::vector<Tensor*> Network::grad_tensors() {
    std::vector<Tensor*> out;
    for (auto& lp : grads_)
        for (auto& t : lp.tensors) out.push_back(&t);
    return out;
}

std::size_t Network::param_count() const {
    std::size_t n = 0;
    for (const auto& lp : params_) n += lp.count();
    return n;
}

std::vector<double> Network::flat_params() const {
    std::vector<double> flat;
    flat.reserve(param_count());
    for (const auto& lp : params_)
        for (const auto& t : lp.tensors) flat.insert(flat.end(), t.data(), t.data() + t.numel());
    return flat;
}

void Network::set_flat_params(const std::vector<double>& flat) {
    if (flat.size() != param_count())
        throw ConfigError("network: parameter vector size mismatch: got " +
                          std::to_string(flat.size()) + ", expected " +
                          std::to_string(param_count()));
    std::size_t off = 0;
    for (auto& lp : params_)
        for (auto& t : lp.tensors) {
            std::copy(flat.begin() + static_cast<std::ptrdiff_t>(off),
                      flat.begin() + static_cast<std::ptrdiff_t>(off + t.numel()), t.data());
            off += t.numel();
        }
}

}  // namespace wellcast
