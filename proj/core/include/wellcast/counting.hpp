#ifndef WELLCAST_COUNTING_HPP
#define WELLCAST_COUNTING_HPP

#include <cstdint>
#include <vector>

#include "wellcast/layers.hpp"

namespace wellcast {

// Output shapes of every layer for the given input; index 0 is the input
// shape itself. Throws on an invalid chain.
std::vector<std::vector<std::size_t>> trace_shapes(const std::vector<LayerSpec>& specs,
                                                   const std::vector<std::size_t>& input);

// Closed-form trainable parameter totals:
//   dense  in*out + out
//   conv1d K*C_in*F + F
//   lstm   4 * (units * (C_in + units) + units)
std::size_t count_params(const std::vector<LayerSpec>& specs,
                         const std::vector<std::size_t>& input);

// Single-sample inference FLOPs under this project's fixed convention:
// multiply-accumulate = 2 FLOPs, bias add = 1 per element, non-linear
// activation = 1 per element (linear = 0), max pooling = K - 1 compares per
// output element, batch size 1. LSTM layers are charged for every timestep:
// per gate and step, the two matvecs (2*U*(C+U)), combining the matvec
// results and the bias (2*U), and the gate activation (U); per step the cell
// update costs 3*U and the hidden output 2*U.
std::uint64_t count_flops(const std::vector<LayerSpec>& specs,
                          const std::vector<std::size_t>& input);

}  // namespace wellcast

#endif  // WELLCAST_COUNTING_HPP
