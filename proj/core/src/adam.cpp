#include "wellcast/adam.hpp"

#include <cmath>
#include <stdexcept>

namespace wellcast {

AdamState::AdamState(const std::vector<Tensor*>& params) {
    m_.reserve(params.size());
    v_.reserve(params.size());
    for (const Tensor* p : params) {
        m_.push_back(Tensor::zeros_like(*p));
        v_.push_back(Tensor::zeros_like(*p));
    }
}

void AdamState::step(const std::vector<Tensor*>& params, const std::vector<Tensor*>& grads,
                     const AdamConfig& config) {
    if (params.size() != m_.size() || grads.size() != m_.size())
        throw std::invalid_argument("adam: parameter/gradient list mismatch");
    ++t_;
    const double bc1 = 1.0 - std::pow(config.beta1, static_cast<double>(t_));
    const double bc2 = 1.0 - std::pow(config.beta2, static_cast<double>(t_));
    for (std::size_t i = 0; i < params.size(); ++i) {
        Tensor& p = *params[i];
        const Tensor& g = *grads[i];
        Tensor& m = m_[i];
        Tensor& v = v_[i];
        for (std::size_t j = 0; j < p.numel(); ++j) {
            const double gj = g[j];
            m[j] = config.beta1 * m[j] + (1.0 - config.beta1) * gj;
            v[j] = config.beta2 * v[j] + (1.0 - config.beta2) * gj * gj;
            const double m_hat = m[j] / bc1;
            const double v_hat = v[j] / bc2;
            p[j] -= config.lr * m_hat / (std::sqrt(v_hat) + config.epsilon);
        }
    }
}

}  // namespace wellcast
