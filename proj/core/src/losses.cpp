#include "stackgame/losses.hpp"

#include <algorithm>
#include <cmath>

#include "stackgame/errors.hpp"

namespace stackgame {

LossKind loss_from_name(std::string_view name) {
    if (name == "mse") return LossKind::mse;
    if (name == "ce") return LossKind::ce;
    if (name == "cw") return LossKind::cw;
    if (name == "adv01") return LossKind::adv01;
    throw ValueError("unknown loss kind: " + std::string(name));
}

std::string_view loss_name(LossKind kind) {
    switch (kind) {
        case LossKind::mse: return "mse";
        case LossKind::ce: return "ce";
        case LossKind::cw: return "cw";
        case LossKind::adv01: return "adv01";
    }
    return "?";
}

namespace {

void check_label(const Vec& z, int label) {
    if (label < 1 || label > static_cast<int>(z.size()))
        throw ValueError("label " + std::to_string(label) + " outside {1.." +
                         std::to_string(z.size()) + "}");
}

/// max_{l != y} z_l, arg tie-broken to the smallest index.
std::pair<int, double> best_other(const Vec& z, int label) {
    int arg = -1;
    double best = 0.0;
    for (int l = 0; l < static_cast<int>(z.size()); ++l) {
        if (l == label - 1) continue;
        if (arg < 0 || z[l] > best) {
            arg = l;
            best = z[l];
        }
    }
    return {arg, best};
}

double cw_margin(const Vec& z, int label) {
    if (z.size() < 2)
        throw LossError("cw margin needs at least two labels, got m=" + std::to_string(z.size()));
    return best_other(z, label).second - z[label - 1];
}

}  // namespace

double eval_loss(const LossSpec& loss, const Vec& logits, int label) {
    check_label(logits, label);
    const int m = static_cast<int>(logits.size());
    switch (loss.kind) {
        case LossKind::mse: {
            double acc = 0.0;
            for (int i = 0; i < m; ++i) {
                double d = logits[i] - (i == label - 1 ? 1.0 : 0.0);
                acc += d * d;
            }
            return acc;
        }
        case LossKind::ce: {
            double zmax = *std::max_element(logits.begin(), logits.end());
            double acc = 0.0;
            for (double z : logits) acc += std::exp(z - zmax);
            return zmax + std::log(acc) - logits[label - 1];
        }
        case LossKind::cw:
            return cw_margin(logits, label);
        case LossKind::adv01:
            return cw_margin(logits, label) >= 0.0 ? 0.0 : -1.0;
    }
    throw ValueError("unreachable loss kind");
}

Vec grad_loss(const LossSpec& loss, const Vec& logits, int label) {
    check_label(logits, label);
    const int m = static_cast<int>(logits.size());
    Vec g(m, 0.0);
    switch (loss.kind) {
        case LossKind::mse:
            for (int i = 0; i < m; ++i) g[i] = 2.0 * (logits[i] - (i == label - 1 ? 1.0 : 0.0));
            return g;
        case LossKind::ce: {
            double zmax = *std::max_element(logits.begin(), logits.end());
            double acc = 0.0;
            for (double z : logits) acc += std::exp(z - zmax);
            for (int i = 0; i < m; ++i) g[i] = std::exp(logits[i] - zmax) / acc;
            g[label - 1] -= 1.0;
            return g;
        }
        case LossKind::cw: {
            if (m < 2)
                throw LossError("cw gradient needs at least two labels");
            auto [arg, best] = best_other(logits, label);
            (void)best;
            g[arg] = 1.0;
            g[label - 1] = -1.0;
            return g;
        }
        case LossKind::adv01:
            throw LossError("adv01 loss is not differentiable");
    }
    throw ValueError("unreachable loss kind");
}

double lipschitz_constant(const LossSpec& loss, int num_labels) {
    switch (loss.kind) {
        case LossKind::mse:
            return 2.0 * std::sqrt(static_cast<double>(num_labels)) * std::max(loss.logit_bound, 1.0);
        case LossKind::ce:
        case LossKind::cw:
            return std::sqrt(2.0);
        case LossKind::adv01:
            throw LossError("adv01 loss has no Lipschitz constant");
    }
    throw ValueError("unreachable loss kind");
}

}  // namespace stackgame
