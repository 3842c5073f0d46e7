#include "stackgame/metrics.hpp"

#include <algorithm>
#include <cmath>

#include "stackgame/errors.hpp"
#include "stackgame/rng.hpp"
#include "stackgame/util.hpp"

namespace stackgame {

namespace {

Vec add(const Vec& x, const Vec& d) {
    Vec out(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) out[i] = x[i] + d[i];
    return out;
}

/// Post-activation outputs of every layer; index 0 is the input itself.
std::vector<Vec> layer_outputs(const Network& net, const Vec& x) {
    std::vector<Vec> outs;
    outs.reserve(net.depth() + 1);
    outs.push_back(x);
    for (int l = 0; l < net.depth(); ++l) {
        Vec z = matvec(net.weights[l], outs.back());
        for (std::size_t i = 0; i < z.size(); ++i) z[i] += net.biases[l][i];
        if (l + 1 < net.depth())
            for (double& v : z) v = v > 0.0 ? v : 0.0;
        outs.push_back(std::move(z));
    }
    return outs;
}

double mean_over_samples(int n, const std::function<double(int)>& fn) {
    Vec values(n, 0.0);
    parallel_for(n, [&](int i) { values[i] = fn(i); });
    return mean(values);
}

}  // namespace

double clean_loss(const Network& net, const Dataset& data, const LossSpec& loss) {
    return mean_over_samples(data.size(), [&](int i) {
        return eval_loss(loss, forward(net, data.inputs[i]), data.labels[i]);
    });
}

double clean_accuracy(const Network& net, const Dataset& data) {
    Vec hits(data.size(), 0.0);
    parallel_for(data.size(), [&](int i) {
        hits[i] = classify(net, data.inputs[i]) == data.labels[i] ? 1.0 : 0.0;
    });
    return pairwise_sum(hits) / data.size();
}

double adversarial_risk(const Network& net, const Dataset& data, double eps, const LossSpec& loss,
                        const EvalConfig& cfg) {
    if (cfg.method == EvalMethod::grid_exact) {
        return mean_over_samples(data.size(), [&](int i) {
            return grid_oracle(net, data.inputs[i], data.labels[i], eps, loss, cfg.grid_step).value;
        });
    }
    return mean_over_samples(data.size(), [&](int i) {
        PgdConfig per_sample = cfg.pgd;
        per_sample.seed = derive_seed(cfg.pgd.seed, 0x4155, static_cast<std::uint64_t>(i));
        Vec delta = pgd_attack(net, data.inputs[i], data.labels[i], eps, loss, per_sample);
        return eval_loss(loss, forward(net, add(data.inputs[i], delta)), data.labels[i]);
    });
}

double adversarial_accuracy(const Network& net, const Dataset& data, double eps,
                            const EvalConfig& cfg) {
    const LossSpec cw{LossKind::cw, 1.0};
    Vec robust(data.size(), 0.0);
    if (cfg.method == EvalMethod::grid_exact) {
        const double kappa = cfg.margin_kappa >= 0.0
                                 ? cfg.margin_kappa
                                 : lipschitz_certificate(net).lambda_hat * cfg.grid_step / 2.0;
        parallel_for(data.size(), [&](int i) {
            double worst = grid_oracle(net, data.inputs[i], data.labels[i], eps, cw, cfg.grid_step).value;
            double clean = eval_loss(cw, forward(net, data.inputs[i]), data.labels[i]);
            robust[i] = (worst < 0.0 && clean <= -kappa) ? 1.0 : 0.0;
        });
    } else {
        parallel_for(data.size(), [&](int i) {
            PgdConfig per_sample = cfg.pgd;
            per_sample.seed = derive_seed(cfg.pgd.seed, 0x4141, static_cast<std::uint64_t>(i));
            Vec delta = pgd_attack(net, data.inputs[i], data.labels[i], eps, cw, per_sample);
            double found = eval_loss(cw, forward(net, add(data.inputs[i], delta)), data.labels[i]);
            robust[i] = found < 0.0 ? 1.0 : 0.0;
        });
    }
    return pairwise_sum(robust) / data.size();
}

double payoff(const Network& net, const AttackBundle& bundle, const Dataset& data,
              const LossSpec& loss) {
    if (bundle.dataset_id != data.id)
        throw BindingError("bundle was built for dataset " + bundle.dataset_id +
                           ", not " + data.id);
    if (static_cast<int>(bundle.deltas.size()) != data.size())
        throw BindingError("bundle holds " + std::to_string(bundle.deltas.size()) +
                           " deltas for " + std::to_string(data.size()) + " samples");
    return mean_over_samples(data.size(), [&](int i) {
        return eval_loss(loss, forward(net, add(data.inputs[i], bundle.deltas[i])), data.labels[i]);
    });
}

LipschitzCertificate lipschitz_certificate(const Network& net, const Dataset* data, double eps) {
    LipschitzCertificate cert;
    double product = 1.0;
    for (const Mat& w : net.weights) product *= spectral_norm(w, 100, 1e-10);
    cert.lambda_hat = std::sqrt(static_cast<double>(net.input_dim())) * product;

    // Logit bound over probe points: dataset samples plus cube corners (and
    // the center) when the corner count stays small.
    double max_logit = 0.0;
    auto probe = [&](const Vec& x) { max_logit = std::max(max_logit, norm_inf(forward(net, x))); };
    if (data != nullptr)
        for (const Vec& x : data->inputs) probe(x);
    const int n = net.input_dim();
    if (n <= 10) {
        Vec corner(n, 0.0);
        for (std::uint64_t mask = 0; mask < (1ULL << n); ++mask) {
            for (int j = 0; j < n; ++j) corner[j] = (mask >> j) & 1 ? 1.0 : 0.0;
            probe(corner);
        }
        probe(Vec(n, 0.5));
    } else if (data == nullptr) {
        probe(Vec(n, 0.5));
    }
    cert.omega_hat = max_logit + cert.lambda_hat * eps;
    return cert;
}

ParamLipschitzReport param_lipschitz_check(const Network& net, const Dataset& data, int trials,
                                           std::uint64_t seed, double alpha_scale) {
    if (trials < 1) throw ValueError("param_lipschitz_check needs trials >= 1");
    ParamLipschitzReport report;
    report.trials = trials;
    report.all_within = true;
    report.min_bound = std::numeric_limits<double>::infinity();
    const int depth = net.depth();

    for (int t = 0; t < trials; ++t) {
        Rng rng(derive_seed(seed, 0xde17a, static_cast<std::uint64_t>(t)));
        const Vec& x = data.inputs[t % data.size()];

        Network perturbed = net;
        double alpha_sq = 0.0;
        for (Mat& w : perturbed.weights)
            for (double& v : w.data) {
                double a = alpha_scale * rng.uniform(-1.0, 1.0);
                v += a;
                alpha_sq += a * a;
            }
        const double alpha_norm = std::sqrt(alpha_sq);
        if (alpha_norm == 0.0) continue;  // ratio undefined at alpha = 0

        const double ratio = norm2(sub(forward(net, x), forward(perturbed, x))) / alpha_norm;

        // Constructive bound: ||z_{D-1}|| plus, for each deeper split point,
        // the product of perturbed layer norms above it times the clean
        // hidden output below it.
        const std::vector<Vec> z = layer_outputs(net, x);
        double bound = norm2(z[depth - 1]);
        double prod = 1.0;
        for (int k = 2; k <= depth; ++k) {
            prod *= spectral_norm(perturbed.weights[depth - k + 1], 100, 1e-10);
            bound += prod * norm2(z[depth - k]);
        }

        report.max_ratio = std::max(report.max_ratio, ratio);
        report.min_bound = std::min(report.min_bound, bound);
        if (ratio > bound * (1.0 + 1e-12) + 1e-15) report.all_within = false;
    }
    return report;
}

RobustnessReport evaluate(const Network& net, const Dataset& data, double eps,
                          const LossSpec& loss, const EvalConfig& cfg) {
    RobustnessReport report;
    report.clean_accuracy = clean_accuracy(net, data);
    report.clean_loss = clean_loss(net, data, loss);
    report.adversarial_accuracy = adversarial_accuracy(net, data, eps, cfg);
    report.adversarial_risk = adversarial_risk(net, data, eps, loss, cfg);
    report.eps = eps;
    report.method = cfg.method;
    report.loss = loss;
    report.dataset_id = data.id;
    return report;
}

}  // namespace stackgame
