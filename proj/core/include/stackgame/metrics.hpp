#pragma once

#include <cstdint>

#include "stackgame/attacks.hpp"
#include "stackgame/dataset.hpp"
#include "stackgame/network.hpp"

namespace stackgame {

/// grid_exact is sound up to the lattice + margin rule below and available
/// for n <= 3 only; pgd_lower_bound works in any dimension but can miss
/// adversaries, so its AA is an upper bound on the true value.
enum class EvalMethod { pgd_lower_bound, grid_exact };

struct EvalConfig {
    EvalMethod method = EvalMethod::pgd_lower_bound;
    PgdConfig pgd;
    double grid_step = 5e-3;
    /// Safety margin for grid_exact robustness: a sample only counts as
    /// robust when its clean cw margin clears -kappa, discounting excursions
    /// between lattice points. Negative requests the default
    /// lambda_hat * grid_step / 2.
    double margin_kappa = -1.0;
};

struct RobustnessReport {
    double clean_accuracy = 0.0;
    double clean_loss = 0.0;
    double adversarial_accuracy = 0.0;
    double adversarial_risk = 0.0;
    double eps = 0.0;
    EvalMethod method = EvalMethod::pgd_lower_bound;
    LossSpec loss;
    std::string dataset_id;
};

/// Mean loss over the clean samples (empirical phi_0).
double clean_loss(const Network& net, const Dataset& data, const LossSpec& loss);

double clean_accuracy(const Network& net, const Dataset& data);

/// Mean over samples of the per-sample worst-case loss in the eps-ball.
double adversarial_risk(const Network& net, const Dataset& data, double eps, const LossSpec& loss,
                        const EvalConfig& cfg);

/// Fraction of samples whose whole eps-ball keeps the true label. Ties in
/// the argmax count as not robust.
double adversarial_accuracy(const Network& net, const Dataset& data, double eps,
                            const EvalConfig& cfg);

/// Empirical payoff phi_T: mean loss at the bundle's perturbed points.
/// Throws BindingError unless the bundle was built for this dataset.
double payoff(const Network& net, const AttackBundle& bundle, const Dataset& data,
              const LossSpec& loss);

struct LipschitzCertificate {
    /// sqrt(n) times the product of per-layer weight spectral norms; a bound
    /// on ||C(x+d) - C(x)||_2 / ||d||_inf. Biases drop out of differences.
    double lambda_hat = 0.0;
    /// Empirical logit bound: max ||C(x)||_inf over probe points plus
    /// lambda_hat * eps slack. An estimate, not a closed form.
    double omega_hat = 0.0;
};

/// Probe points are the dataset inputs (when given) plus the unit-cube
/// corners for small n. Spectral norms via power iteration, 100 iterations
/// at tolerance 1e-10.
LipschitzCertificate lipschitz_certificate(const Network& net, const Dataset* data = nullptr,
                                           double eps = 0.0);

struct ParamLipschitzReport {
    double max_ratio = 0.0;    // worst observed ||C_t(x) - C_{t+a}(x)|| / ||a||
    double min_bound = 0.0;    // smallest constructive bound seen across trials
    int trials = 0;
    bool all_within = false;   // every trial's ratio under its own bound
};

/// Perturbs the weight matrices (biases fixed, as the constructive bound
/// assumes) and compares the observed parameter-Lipschitz ratio against the
/// layer-norm product bound evaluated per trial.
ParamLipschitzReport param_lipschitz_check(const Network& net, const Dataset& data, int trials,
                                           std::uint64_t seed, double alpha_scale = 1e-3);

RobustnessReport evaluate(const Network& net, const Dataset& data, double eps,
                          const LossSpec& loss, const EvalConfig& cfg);

}  // namespace stackgame
