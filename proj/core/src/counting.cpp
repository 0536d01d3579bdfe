#include "wellcast/counting.hpp"

namespace wellcast {

std::vector<std::vector<std::size_t>> trace_shapes(const std::vector<LayerSpec>& specs,
                                                   const std::vector<std::size_t>& input) {
    std::vector<std::vector<std::size_t>> shapes{input};
    for (const auto& spec : specs) shapes.push_back(output_shape(spec, shapes.back()));
    return shapes;
}

std::size_t count_params(const std::vector<LayerSpec>& specs,
                         const std::vector<std::size_t>& input) {
    const auto shapes = trace_shapes(specs, input);
    std::size_t total = 0;
    for (std::size_t i = 0; i < specs.size(); ++i) {
        const LayerSpec& spec = specs[i];
        const auto& in = shapes[i];
        switch (spec.kind) {
            case LayerKind::dense: total += in[0] * spec.units + spec.units; break;
            case LayerKind::conv1d: total += spec.kernel * in[1] * spec.units + spec.units; break;
            case LayerKind::lstm:
                total += 4 * (spec.units * (in[1] + spec.units) + spec.units);
                break;
            case LayerKind::maxpool1d:
            case LayerKind::flatten: break;
        }
    }
    return total;
}

std::uint64_t count_flops(const std::vector<LayerSpec>& specs,
                          const std::vector<std::size_t>& input) {
    const auto shapes = trace_shapes(specs, input);
    std::uint64_t total = 0;
    for (std::size_t i = 0; i < specs.size(); ++i) {
        const LayerSpec& spec = specs[i];
        const auto& in = shapes[i];
        const auto& out = shapes[i + 1];
        const std::uint64_t act = spec.activation == Activation::linear ? 0 : 1;
        switch (spec.kind) {
            case LayerKind::dense: {
                // 2*in MACs + bias + activation, per output element.
                total += static_cast<std::uint64_t>(spec.units) * (2 * in[0] + 1 + act);
                break;
            }
            case LayerKind::conv1d: {
                const std::uint64_t per_elem = 2 * spec.kernel * in[1] + 1 + act;
                total += static_cast<std::uint64_t>(out[0]) * spec.units * per_elem;
                break;
            }
            case LayerKind::maxpool1d: {
                total += static_cast<std::uint64_t>(out[0]) * out[1] * (spec.kernel - 1);
                break;
            }
            case LayerKind::flatten: break;
            case LayerKind::lstm: {
                const std::uint64_t steps = in[0], c = in[1], u = spec.units;
                const std::uint64_t per_gate = 2 * u * (c + u) + 2 * u + u;
                const std::uint64_t per_step = 4 * per_gate + 3 * u + 2 * u;
                total += steps * per_step;
                break;
            }
        }
    }
    return total;
}

}  // namespace wellcast
