#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "stackgame/dataset.hpp"

namespace stackgame {

enum class Generator { two_gaussians, rings, xor_grid };

Generator generator_from_name(std::string_view name);
std::string_view generator_name(Generator g);

/// Desk-scale synthetic data. Every generator emits balanced labels (within
/// one sample) and rescales into [0,1]^dims when the raw draw leaves the
/// unit cube. class_separation is the knob that decides whether a robust
/// classifier exists at a given attack radius.
struct SyntheticSpec {
    Generator generator = Generator::two_gaussians;
    int n_samples = 100;
    double class_separation = 0.5;
    double noise = 0.05;
    int dims = 2;  // 1..8; rings and xor_grid need dims >= 2
    std::uint64_t seed = 0;
};

Dataset generate(const SyntheticSpec& spec);

}  // namespace stackgame
