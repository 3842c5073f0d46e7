#include "stackgame/synth.hpp"

#include <algorithm>
#include <cmath>

#include "stackgame/errors.hpp"
#include "stackgame/rng.hpp"

namespace stackgame {

Generator generator_from_name(std::string_view name) {
    if (name == "two_gaussians") return Generator::two_gaussians;
    if (name == "rings") return Generator::rings;
    if (name == "xor_grid") return Generator::xor_grid;
    throw ValueError("unknown generator: " + std::string(name));
}

std::string_view generator_name(Generator g) {
    switch (g) {
        case Generator::two_gaussians: return "two_gaussians";
        case Generator::rings: return "rings";
        case Generator::xor_grid: return "xor_grid";
    }
    return "?";
}

namespace {

constexpr double kTau = 6.283185307179586476925287;

/// Map every coordinate into [0,1]. Identity when the draw already fits, an
/// affine squeeze of [min(0,lo), max(1,hi)] per dimension otherwise.
void rescale_into_unit_cube(std::vector<Vec>& points) {
    if (points.empty()) return;
    const std::size_t dims = points.front().size();
    for (std::size_t j = 0; j < dims; ++j) {
        double lo = 0.0, hi = 1.0;
        for (const Vec& p : points) {
            lo = std::min(lo, p[j]);
            hi = std::max(hi, p[j]);
        }
        if (lo < 0.0 || hi > 1.0) {
            const double span = hi - lo;
            for (Vec& p : points) p[j] = (p[j] - lo) / span;
        }
        for (Vec& p : points) p[j] = std::clamp(p[j], 0.0, 1.0);
    }
}

}  // namespace

Dataset generate(const SyntheticSpec& spec) {
    if (spec.dims < 1 || spec.dims > 8)
        throw ValueError("dims must be in 1..8, got " + std::to_string(spec.dims));
    if (spec.n_samples < 1) throw ValueError("n_samples must be positive");
    if (spec.noise < 0.0) throw ValueError("noise must be non-negative");
    if (spec.generator == Generator::rings && spec.dims != 2)
        throw ValueError("rings generator is 2-D only");
    if (spec.generator == Generator::xor_grid && spec.dims < 2)
        throw ValueError("xor_grid generator needs dims >= 2");

    std::vector<Vec> inputs;
    std::vector<int> labels;
    inputs.reserve(spec.n_samples);
    labels.reserve(spec.n_samples);

    for (int i = 0; i < spec.n_samples; ++i) {
        Rng rng(derive_seed(spec.seed, 0xda7a, static_cast<std::uint64_t>(i)));
        const int label = (i % 2) + 1;  // alternate for exact balance
        Vec x(spec.dims, 0.0);
        switch (spec.generator) {
            case Generator::two_gaussians: {
                const double shift = (label == 1 ? -0.5 : 0.5) * spec.class_separation;
                x[0] = 0.5 + shift + spec.noise * rng.normal();
                for (int j = 1; j < spec.dims; ++j) x[j] = 0.5 + spec.noise * rng.normal();
                break;
            }
            case Generator::rings: {
                const double r_inner = 0.15;
                const double radius =
                    (label == 1 ? r_inner : std::min(0.45, r_inner + spec.class_separation)) +
                    spec.noise * rng.normal();
                const double angle = kTau * rng.u01();
                x[0] = 0.5 + radius * std::cos(angle);
                x[1] = 0.5 + radius * std::sin(angle);
                break;
            }
            case Generator::xor_grid: {
                const double off = std::clamp(spec.class_separation / 2.0, 0.02, 0.45);
                // label 1 sits on the two "same side" corners, label 2 on the others;
                // alternate between a label's two blobs for balance.
                const int blob = (i / 2) % 2;
                const double sx = blob == 0 ? -1.0 : 1.0;
                const double sy = (label == 1 ? sx : -sx);
                x[0] = 0.5 + sx * off + spec.noise * rng.normal();
                x[1] = 0.5 + sy * off + spec.noise * rng.normal();
                for (int j = 2; j < spec.dims; ++j) x[j] = rng.u01();
                break;
            }
        }
        inputs.push_back(std::move(x));
        labels.push_back(label);
    }

    rescale_into_unit_cube(inputs);
    return make_dataset(std::move(inputs), std::move(labels));
}

}  // namespace stackgame
