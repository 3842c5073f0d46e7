#pragma once

#include <cstdint>
#include <string>

#include "stackgame/dataset.hpp"
#include "stackgame/network.hpp"

namespace stackgame {

/// Projected gradient ascent over the infinity ball. step_size <= 0 selects
/// the default 2.5 * eps / steps.
struct PgdConfig {
    int steps = 40;
    double step_size = 0.0;
    int restarts = 4;
    bool include_zero_start = true;
    std::uint64_t seed = 0;
};

/// One perturbation per sample of the bound dataset; the Adversary's pure
/// strategy over finite data. Every delta satisfies ||delta||_inf <= epsilon
/// by construction (clamped, not approximate).
struct AttackBundle {
    double epsilon = 0.0;
    std::string dataset_id;
    std::vector<Vec> deltas;
    std::string note;  // e.g. surrogate-loss remark; not part of the file format
};

/// Best-effort maximizer of L(C(x + delta), y) over ||delta||_inf <= eps.
/// Deterministic given cfg.seed. With include_zero_start the result is never
/// worse than the clean point. adv01 requests run against the cw surrogate
/// (same maximizers where it matters, but differentiable).
Vec pgd_attack(const Network& net, const Vec& x, int label, double eps, const LossSpec& loss,
               const PgdConfig& cfg);

struct GridResult {
    Vec delta;
    double value = 0.0;
};

/// Exhaustive maximum over the lattice {-eps, -eps+step, ..., +eps}^n.
/// Exact best response up to grid resolution; n <= 3 enforced since the
/// lattice has (2*eps/step + 1)^n points. Ties resolve to the
/// lexicographically smallest offset.
GridResult grid_oracle(const Network& net, const Vec& x, int label, double eps,
                       const LossSpec& loss, double grid_step);

/// Lattice offsets used by grid_oracle, exposed for oracle-grade tests.
Vec grid_offsets(double eps, double grid_step);

enum class AttackMethod { pgd, grid };

struct BundleConfig {
    AttackMethod method = AttackMethod::pgd;
    PgdConfig pgd;
    double grid_step = 1e-2;
};

/// Per-sample best responses assembled into an Adversary strategy. Sample
/// attacks are independent (parallelized over the worker pool) with random
/// streams split per sample index, so any thread count gives the same bundle.
AttackBundle build_bundle(const Network& net, const Dataset& data, double eps,
                          const LossSpec& loss, const BundleConfig& cfg);

}  // namespace stackgame
