#ifndef WELLCAST_MODEL_ZOO_HPP
#define WELLCAST_MODEL_ZOO_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "wellcast/linreg.hpp"
#include "wellcast/network.hpp"
#include "wellcast/preprocess.hpp"

namespace wellcast {

enum class ModelFamily { linreg, cnn1d, lstm };

std::string_view model_family_name(ModelFamily f);
ModelFamily model_family_from_name(std::string_view name);

// Variant 1..5 from the architecture ladder; 0 means "final". The final
// LSTM coincides with variant 3, the final CNN with variant 4.
inline constexpr int kFinalVariant = 0;

std::string variant_name(int variant);
int variant_from_name(std::string_view name);

struct TrainConfig {
    double lr = 0.001;
    std::size_t epochs = 200;
    std::size_t batch = 32;
    std::uint64_t seed = 1;
};

struct ModelConfig {
    ModelFamily family = ModelFamily::lstm;
    int variant = kFinalVariant;
    std::vector<LayerSpec> layers;  // empty for linreg
    TrainConfig train;

    std::string name() const;  // e.g. "lstm-final", "cnn-2"
};

// Layer chains of the architecture ladder. Hidden widths not spelled out
// by the ladder reuse the final models' widths: LSTM stacks use 30 then 20
// units, dense stacks 20 then 16 (extras repeat 16), conv layers 64 filters
// with kernel 2 and stride 1 throughout. Output layer is Dense(1, linear).
ModelConfig build_model(ModelFamily family, int variant);

// A trained regressor of any family, ready to predict scaled targets.
class TrainedModel {
  public:
    TrainedModel(ModelConfig config, LinRegModel linreg);
    TrainedModel(ModelConfig config, Network net);

    const ModelConfig& config() const { return config_; }
    bool is_linreg() const { return linreg_.has_value(); }
    const LinRegModel& linreg() const { return *linreg_; }
    Network& net() { return *net_; }
    const Network& net() const { return *net_; }

    double predict(const SequenceSample& sample, std::size_t seq_len, std::size_t width);

    std::size_t param_count() const;

  private:
    ModelConfig config_;
    std::optional<LinRegModel> linreg_;
    std::optional<Network> net_;
};

}  // namespace wellcast

#endif  // WELLCAST_MODEL_ZOO_HPP
