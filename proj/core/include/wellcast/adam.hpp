#ifndef WELLCAST_ADAM_HPP
#define WELLCAST_ADAM_HPP

#include <cstdint>
#include <vector>

#include "wellcast/tensor.hpp"

namespace wellcast {

struct AdamConfig {
    double lr = 0.001;
    double beta1 = 0.9;
    double beta2 = 0.999;
    double epsilon = 1e-8;
};

// Adam with bias-corrected moments. Moment tensors mirror the parameter
// tensors; the step counter is shared.
class AdamState {
  public:
    explicit AdamState(const std::vector<Tensor*>& params);

    void step(const std::vector<Tensor*>& params, const std::vector<Tensor*>& grads,
              const AdamConfig& config = {});

    std::uint64_t steps() const { return t_; }

  private:
    std::vector<Tensor> m_;
    std::vector<Tensor> v_;
    std::uint64_t t_ = 0;
};

}  // namespace wellcast

#endif  // WELLCAST_ADAM_HPP
