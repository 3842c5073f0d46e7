#include "stackgame/attacks.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>

#include "stackgame/errors.hpp"
#include "stackgame/rng.hpp"
#include "stackgame/util.hpp"

namespace stackgame {

namespace {

LossSpec surrogate_for(const LossSpec& loss) {
    if (loss.kind != LossKind::adv01) return loss;
    LossSpec s = loss;
    s.kind = LossKind::cw;  // same per-sample maximizer ordering, but differentiable
    return s;
}

Vec clamp_ball(Vec delta, double eps) {
    for (double& v : delta) v = std::clamp(v, -eps, eps);
    return delta;
}

Vec add(const Vec& x, const Vec& d) {
    Vec out(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) out[i] = x[i] + d[i];
    return out;
}

}  // namespace

Vec pgd_attack(const Network& net, const Vec& x, int label, double eps, const LossSpec& loss,
               const PgdConfig& cfg) {
    if (eps < 0.0) throw ValueError("attack radius must be non-negative");
    if (cfg.steps < 1) throw ValueError("pgd needs at least one step");
    const int n = static_cast<int>(x.size());
    if (eps == 0.0) {
        forward(net, x);  // still surface dimension errors
        return Vec(n, 0.0);
    }

    const LossSpec work = surrogate_for(loss);
    const double step = cfg.step_size > 0.0 ? cfg.step_size : 2.5 * eps / cfg.steps;

    Vec best_delta(n, 0.0);
    double best_value = eval_loss(work, forward(net, x), label);
    bool have_best = cfg.include_zero_start;

    const int first_run = cfg.include_zero_start ? 0 : 1;
    for (int run = first_run; run <= cfg.restarts; ++run) {
        Vec delta(n, 0.0);
        if (run > 0) {
            Rng rng(derive_seed(cfg.seed, 0xa77ac4, static_cast<std::uint64_t>(run)));
            for (double& v : delta) v = rng.uniform(-eps, eps);
        }
        for (int s = 0; s < cfg.steps; ++s) {
            GradientPack g = gradients(net, add(x, delta), label, work);
            if (!have_best || g.loss_value > best_value) {
                best_value = g.loss_value;
                best_delta = delta;
                have_best = true;
            }
            for (int i = 0; i < n; ++i) {
                double gi = g.wrt_input[i];
                delta[i] += step * (gi > 0.0 ? 1.0 : (gi < 0.0 ? -1.0 : 0.0));
            }
            delta = clamp_ball(std::move(delta), eps);
        }
        double final_value = eval_loss(work, forward(net, add(x, delta)), label);
        if (!have_best || final_value > best_value) {
            best_value = final_value;
            best_delta = delta;
            have_best = true;
        }
    }
    return best_delta;
}

Vec grid_offsets(double eps, double grid_step) {
    if (grid_step <= 0.0) throw ValueError("grid step must be positive");
    if (eps < 0.0) throw ValueError("attack radius must be non-negative");
    if (eps == 0.0) return {0.0};
    const long k_max = static_cast<long>(std::floor(eps / grid_step + 1e-9));
    // k * grid_step is bit-identical across different radii sharing the step,
    // which keeps lattices nested for nested balls.
    const bool pad_endpoints = (static_cast<double>(k_max) * grid_step) < eps - 1e-9 * std::max(1.0, eps);
    Vec offs;
    offs.reserve(2 * k_max + 3);
    if (pad_endpoints) offs.push_back(-eps);
    for (long k = -k_max; k <= k_max; ++k)
        offs.push_back(std::clamp(static_cast<double>(k) * grid_step, -eps, eps));
    if (pad_endpoints) offs.push_back(eps);
    return offs;
}

GridResult grid_oracle(const Network& net, const Vec& x, int label, double eps,
                       const LossSpec& loss, double grid_step) {
    const int n = static_cast<int>(x.size());
    if (n > 3)
        throw DimensionError("grid oracle is restricted to n <= 3, got n=" + std::to_string(n));
    const Vec offs = grid_offsets(eps, grid_step);
    const int levels = static_cast<int>(offs.size());

    GridResult best;
    best.delta.assign(n, 0.0);
    bool first = true;
    std::vector<int> idx(n, 0);
    Vec delta(n, offs[0]);
    // Odometer over the lattice; ascending per coordinate with the first
    // coordinate most significant, i.e. lexicographic visit order. Strict
    // improvement keeps the lexicographically smallest argmax.
    while (true) {
        double value = eval_loss(loss, forward(net, add(x, delta)), label);
        if (first || value > best.value) {
            best.value = value;
            best.delta = delta;
            first = false;
        }
        int pos = n - 1;
        while (pos >= 0 && idx[pos] == levels - 1) {
            idx[pos] = 0;
            delta[pos] = offs[0];
            --pos;
        }
        if (pos < 0) break;
        ++idx[pos];
        delta[pos] = offs[idx[pos]];
    }
    return best;
}

AttackBundle build_bundle(const Network& net, const Dataset& data, double eps,
                          const LossSpec& loss, const BundleConfig& cfg) {
    if (data.size() == 0) throw ValueError("cannot build a bundle for an empty dataset");
    AttackBundle bundle;
    bundle.epsilon = eps;
    bundle.dataset_id = data.id;
    bundle.deltas.assign(data.size(), Vec{});
    if (loss.kind == LossKind::adv01 && cfg.method == AttackMethod::pgd)
        bundle.note = "adv01 inner maximization ran against the cw surrogate";

    std::exception_ptr failure;
    std::mutex failure_mutex;
    parallel_for(data.size(), [&](int i) {
        try {
            if (cfg.method == AttackMethod::grid) {
                bundle.deltas[i] =
                    grid_oracle(net, data.inputs[i], data.labels[i], eps, loss, cfg.grid_step).delta;
            } else {
                PgdConfig per_sample = cfg.pgd;
                per_sample.seed = derive_seed(cfg.pgd.seed, 0x5a3b, static_cast<std::uint64_t>(i));
                bundle.deltas[i] =
                    pgd_attack(net, data.inputs[i], data.labels[i], eps, loss, per_sample);
            }
        } catch (...) {
            std::scoped_lock lock(failure_mutex);
            if (!failure) failure = std::current_exception();
        }
    });
    if (failure) std::rethrow_exception(failure);
    return bundle;
}

}  // namespace stackgame
