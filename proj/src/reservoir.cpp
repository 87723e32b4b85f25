#include "qrc/reservoir.hpp"

#include <cmath>

#include <Eigen/Dense>

#include "qrc/pauli.hpp"

namespace qrc {

namespace {

template <typename State> FeatureVector features_from(const State &state) {
    const int n = state.n_qubits();
    FeatureVector f;
    f.reserve(2 * static_cast<std::size_t>(n));
    for (int q = 0; q < n; ++q) {
        f.push_back(expectation(state, PauliString::single(n, q, PauliLetter::X)));
        f.push_back(expectation(state, PauliString::single(n, q, PauliLetter::Z)));
    }
    return f;
}

} // namespace

FeatureVector extract_features(const DensityMatrix &rho) { return features_from(rho); }

FeatureVector extract_features(const StateVector &psi) { return features_from(psi); }

RidgeModel ridge_fit(const std::vector<FeatureVector> &X, const std::vector<double> &y,
                     double alpha, bool fit_intercept, bool standardize) {
    require(X.size() == y.size(), ErrorCode::InvalidArgument,
            "ridge_fit: X and y row counts differ");
    require(X.size() >= 2, ErrorCode::InvalidArgument, "ridge_fit: need at least 2 rows");
    require(alpha >= 0.0, ErrorCode::InvalidArgument, "ridge_fit: alpha must be >= 0");

    const Eigen::Index rows = static_cast<Eigen::Index>(X.size());
    const Eigen::Index cols = static_cast<Eigen::Index>(X[0].size());
    require(cols >= 1, ErrorCode::InvalidArgument, "ridge_fit: empty feature vectors");

    Eigen::MatrixXd mx(rows, cols);
    for (Eigen::Index r = 0; r < rows; ++r) {
        require(static_cast<Eigen::Index>(X[static_cast<std::size_t>(r)].size()) == cols,
                ErrorCode::InvalidArgument, "ridge_fit: ragged feature matrix");
        for (Eigen::Index c = 0; c < cols; ++c)
            mx(r, c) = X[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
    }
    Eigen::VectorXd vy =
        Eigen::Map<const Eigen::VectorXd>(y.data(), static_cast<Eigen::Index>(y.size()));

    Eigen::RowVectorXd x_mean = Eigen::RowVectorXd::Zero(cols);
    double y_mean = 0.0;
    if (fit_intercept) {
        x_mean = mx.colwise().mean();
        y_mean = vy.mean();
        mx.rowwise() -= x_mean;
        vy.array() -= y_mean;
    }

    Eigen::VectorXd scale = Eigen::VectorXd::Ones(cols);
    if (standardize) {
        for (Eigen::Index c = 0; c < cols; ++c) {
            const double sd = std::sqrt(mx.col(c).squaredNorm() / static_cast<double>(rows));
            if (sd > 0.0) {
                scale[c] = sd;
                mx.col(c) /= sd;
            }
        }
    }

    Eigen::MatrixXd normal = mx.transpose() * mx;
    normal.diagonal().array() += alpha;
    const Eigen::VectorXd rhs = mx.transpose() * vy;

    Eigen::VectorXd w;
    if (alpha == 0.0) {
        Eigen::FullPivLU<Eigen::MatrixXd> lu(normal);
        require(lu.isInvertible(), ErrorCode::InvalidArgument,
                "ridge_fit: singular normal equations at alpha = 0; use alpha > 0");
        w = lu.solve(rhs);
    } else {
        w = normal.ldlt().solve(rhs);
    }
    w.array() /= scale.array();

    RidgeModel model;
    model.alpha = alpha;
    model.weights.assign(w.data(), w.data() + w.size());
    model.intercept = fit_intercept ? y_mean - x_mean * w : 0.0;
    return model;
}

std::vector<double> ridge_predict(const RidgeModel &m, const std::vector<FeatureVector> &X) {
    std::vector<double> out;
    out.reserve(X.size());
    for (const FeatureVector &row : X) {
        require(row.size() == m.weights.size(), ErrorCode::InvalidArgument,
                "ridge_predict: feature dimension does not match the model");
        double v = m.intercept;
        for (std::size_t i = 0; i < row.size(); ++i)
            v += m.weights[i] * row[i];
        out.push_back(v);
    }
    return out;
}

double mse(const std::vector<double> &y_true, const std::vector<double> &y_pred) {
    require(!y_true.empty(), ErrorCode::InvalidArgument, "mse: empty input");
    require(y_true.size() == y_pred.size(), ErrorCode::InvalidArgument,
            "mse: length mismatch");
    double s = 0.0;
    for (std::size_t i = 0; i < y_true.size(); ++i) {
        const double r = y_true[i] - y_pred[i];
        s += r * r;
    }
    return s / static_cast<double>(y_true.size());
}

TrialResult run_qrc_trial(const TaskDataset &dataset, const Circuit &circuit,
                          NoiseKind noise_kind, double p, double alpha) {
    require(dataset.n_qubits == circuit.n_qubits, ErrorCode::InvalidArgument,
            "run_qrc_trial: dataset and circuit differ in qubit count");
    require(dataset.has_split(), ErrorCode::InvalidArgument,
            "run_qrc_trial: dataset has no train/test split");

    const std::size_t n_samples = dataset.size();
    std::vector<FeatureVector> features(n_samples);
    double fidelity_sum = 0.0;

    for (std::size_t i = 0; i < n_samples; ++i) {
        const StateVector psi = run_noiseless(circuit, dataset.samples[i].state);
        if (p == 0.0) {
            features[i] = extract_features(psi);
            fidelity_sum += 1.0;
        } else {
            const DensityMatrix rho =
                run_noisy(circuit, pure_to_density(dataset.samples[i].state), noise_kind, p);
            features[i] = extract_features(rho);
            fidelity_sum += fidelity_pure_mixed(psi, rho);
        }
    }

    std::vector<FeatureVector> x_train, x_test;
    std::vector<double> y_train, y_test;
    for (std::size_t i = 0; i < n_samples; ++i) {
        if (dataset.test_mask[i]) {
            x_test.push_back(features[i]);
            y_test.push_back(dataset.samples[i].target);
        } else {
            x_train.push_back(features[i]);
            y_train.push_back(dataset.samples[i].target);
        }
    }

    const RidgeModel model = ridge_fit(x_train, y_train, alpha);
    TrialResult result;
    result.mse_test = mse(y_test, ridge_predict(model, x_test));
    result.mean_fidelity = fidelity_sum / static_cast<double>(n_samples);
    return result;
}

} // namespace qrc
