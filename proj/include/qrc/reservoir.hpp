#pragma once

#include <cstdint>
#include <vector>

#include "qrc/circuits.hpp"
#include "qrc/state.hpp"
#include "qrc/tasks.hpp"

namespace qrc {

// Readout vector (<X_0>, <Z_0>, ..., <X_{n-1}>, <Z_{n-1}>); every entry in [-1, 1].
using FeatureVector = std::vector<double>;

FeatureVector extract_features(const DensityMatrix &rho);
FeatureVector extract_features(const StateVector &psi);

struct RidgeModel {
    std::vector<double> weights;
    double intercept = 0.0;
    double alpha = 0.0;
};

// Minimizes ||y - X w - b||^2 + alpha ||w||^2 in closed form. The intercept
// is left unregularized: y and the columns of X are centered, the weights
// solved from the centered normal equations, and b recovered from the means.
// Both knobs default to the behavior used throughout the pipeline.
RidgeModel ridge_fit(const std::vector<FeatureVector> &X, const std::vector<double> &y,
                     double alpha, bool fit_intercept = true, bool standardize = false);

std::vector<double> ridge_predict(const RidgeModel &m, const std::vector<FeatureVector> &X);

double mse(const std::vector<double> &y_true, const std::vector<double> &y_pred);

struct TrialResult {
    double mse_test = 0.0;
    double mean_fidelity = 0.0;
};

// One reservoir trial: push every sample's ground state through the noisy
// circuit, read out features, fit ridge on the train split and score MSE on
// the test split. mean_fidelity averages <psi|rho|psi> between the noisy and
// noiseless outputs over all samples. p = 0 short-circuits to the pure-state
// simulation (bit-wise identical target, 100x cheaper than the density path).
TrialResult run_qrc_trial(const TaskDataset &dataset, const Circuit &circuit,
                          NoiseKind noise_kind, double p, double alpha);

} // namespace qrc
