#pragma once

#include <cstdint>
#include <vector>

#include "stackgame/losses.hpp"
#include "stackgame/mat.hpp"

namespace stackgame {

/// A fully connected ReLU classifier. Hidden layers apply ReLU, the last
/// layer is affine and its outputs are the logits. Parameters live in the
/// clipped cube [-E, E]^K once projected.
///
/// Networks are immutable values for evaluation: forward/classify/gradients
/// never mutate, so a shared instance is safe to read from many threads.
struct Network {
    std::vector<int> layer_dims;  // n_0 (input) .. n_D (labels)
    std::vector<Mat> weights;     // W_l is n_l x n_{l-1}
    std::vector<Vec> biases;      // b_l has n_l entries
    double clip_bound = 10.0;     // E
    std::uint64_t seed = 0;       // initialization provenance, persisted

    int input_dim() const { return layer_dims.front(); }
    int output_dim() const { return layer_dims.back(); }
    int depth() const { return static_cast<int>(weights.size()); }
};

struct GradientPack {
    Vec wrt_params;  // flat, length param_count(net)
    Vec wrt_input;   // length n
    double loss_value = 0.0;
};

/// Weights drawn uniform on [-1/sqrt(fan_in), 1/sqrt(fan_in)], biases zero,
/// then projected into [-E, E]^K.
Network make_network(std::vector<int> layer_dims, double clip_bound, std::uint64_t seed);

/// Throws DimensionError if the stored shapes are inconsistent.
void validate_shape(const Network& net);

Vec forward(const Network& net, const Vec& x);

/// 1-based argmax of the logits, ties to the smallest index.
int classify(const Network& net, const Vec& x);

/// Exact reverse-mode gradients of L(C(x), y) in both the flattened
/// parameters and the input. ReLU subgradient at 0 is taken as 0.
GradientPack gradients(const Network& net, const Vec& x, int label, const LossSpec& loss);

/// Coordinate clamp of every parameter to [-E, E]; idempotent.
Network project_params(Network net);

int param_count(const Network& net);

/// Flat layout: per layer, W_l row-major then b_l.
Vec flatten_params(const Network& net);
Network with_params(Network net, const Vec& flat);

}  // namespace stackgame
