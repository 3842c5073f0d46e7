#pragma once

#include <string>
#include <string_view>

#include "stackgame/mat.hpp"

namespace stackgame {

/// The four payoff losses. mse/ce/cw are differentiable almost everywhere;
/// adv01 is the 0/-1 indicator derived from the sign of the cw margin and is
/// evaluation-only.
enum class LossKind { mse, ce, cw, adv01 };

LossKind loss_from_name(std::string_view name);
std::string_view loss_name(LossKind kind);

struct LossSpec {
    LossKind kind = LossKind::ce;
    /// Half-width B of the logit cube the Lipschitz constants are quoted on.
    /// Defaults to the empirical output bound reported by the metrics module.
    double logit_bound = 1.0;
};

/// Labels are 1-based throughout ({1..m}).
///   mse   : ||z - 1_y||_2^2
///   ce    : ln sum_i exp(z_i) - z_y   (max-shifted)
///   cw    : max_{l != y} z_l - z_y
///   adv01 : 0 if cw >= 0, else -1
double eval_loss(const LossSpec& loss, const Vec& logits, int label);

/// Gradient of eval_loss in the logits. cw ties among non-label maxima break
/// toward the smallest index. adv01 throws LossError.
Vec grad_loss(const LossSpec& loss, const Vec& logits, int label);

/// Lipschitz constant of the loss on [-B,B]^m with respect to the 2-norm:
/// 2*sqrt(m)*max{B,1} for mse, sqrt(2) for ce and cw. adv01 throws LossError.
double lipschitz_constant(const LossSpec& loss, int num_labels);

}  // namespace stackgame
