// Test-only reference implementations. Everything here goes through dense
// Eigen matrices and explicit tensor products, deliberately avoiding the
// library's local-update kernels so the two routes stay independent.
#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include "qrc/channels.hpp"
#include "qrc/circuits.hpp"
#include "qrc/rng.hpp"
#include "qrc/state.hpp"

namespace oracle {

using Mat = Eigen::MatrixXcd;
using Vec = Eigen::VectorXcd;

inline Mat to_eigen(const qrc::DensityMatrix &rho) {
    const auto d = static_cast<Eigen::Index>(rho.dim());
    Mat m(d, d);
    for (Eigen::Index r = 0; r < d; ++r)
        for (Eigen::Index c = 0; c < d; ++c)
            m(r, c) = rho.at(static_cast<std::size_t>(r), static_cast<std::size_t>(c));
    return m;
}

inline Vec to_eigen(const qrc::StateVector &psi) {
    Vec v(static_cast<Eigen::Index>(psi.dim()));
    for (Eigen::Index i = 0; i < v.size(); ++i)
        v[i] = psi[static_cast<std::size_t>(i)];
    return v;
}

inline qrc::DensityMatrix from_eigen(int n_qubits, const Mat &m) {
    std::vector<qrc::cplx> elems(static_cast<std::size_t>(m.size()));
    for (Eigen::Index r = 0; r < m.rows(); ++r)
        for (Eigen::Index c = 0; c < m.cols(); ++c)
            elems[static_cast<std::size_t>(r * m.cols() + c)] = m(r, c);
    return qrc::DensityMatrix::from_elements(n_qubits, std::move(elems));
}

inline Mat kron(const Mat &a, const Mat &b) {
    Mat out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index r = 0; r < a.rows(); ++r)
        for (Eigen::Index c = 0; c < a.cols(); ++c)
            out.block(r * b.rows(), c * b.cols(), b.rows(), b.cols()) = a(r, c) * b;
    return out;
}

inline Mat mat2(const qrc::Mat2 &m) {
    Mat out(2, 2);
    out << m[0], m[1], m[2], m[3];
    return out;
}

// I (x) ... (x) op (x) ... (x) I with op at `qubit` (qubit 0 leftmost).
inline Mat embed_one_qubit(const Mat &op, int n_qubits, int qubit) {
    Mat left = Mat::Identity(Eigen::Index(1) << qubit, Eigen::Index(1) << qubit);
    Mat right = Mat::Identity(Eigen::Index(1) << (n_qubits - 1 - qubit),
                              Eigen::Index(1) << (n_qubits - 1 - qubit));
    return kron(kron(left, op), right);
}

// The dense-embedding form of the channel: sum_m M~_m rho M~_m^dagger with
// materialized 2^n x 2^n Kraus operators.
inline qrc::DensityMatrix apply_channel_dense(const qrc::DensityMatrix &rho,
                                              const qrc::KrausChannel &ch, int qubit) {
    const Mat dense = to_eigen(rho);
    Mat out = Mat::Zero(dense.rows(), dense.cols());
    for (const qrc::Mat2 &m : ch.ops) {
        const Mat full = embed_one_qubit(mat2(m), rho.n_qubits(), qubit);
        out += full * dense * full.adjoint();
    }
    return from_eigen(rho.n_qubits(), out);
}

// Full-matrix unitary of one gate.
inline Mat gate_unitary_dense(const qrc::Gate &g, int n_qubits) {
    const std::vector<qrc::cplx> u = qrc::gate_matrix(g);
    if (g.kind != qrc::GateKind::Cnot) {
        Mat m(2, 2);
        m << u[0], u[1], u[2], u[3];
        return embed_one_qubit(m, n_qubits, g.q0);
    }
    // Build CNOT from its basis action: |c t> -> |c, t ^ c>.
    const Eigen::Index d = Eigen::Index(1) << n_qubits;
    Mat m = Mat::Zero(d, d);
    const auto cm = std::size_t(1) << (n_qubits - 1 - g.q0);
    const auto tm = std::size_t(1) << (n_qubits - 1 - g.q1);
    for (std::size_t b = 0; b < static_cast<std::size_t>(d); ++b) {
        const std::size_t to = (b & cm) ? (b ^ tm) : b;
        m(static_cast<Eigen::Index>(to), static_cast<Eigen::Index>(b)) = 1.0;
    }
    return m;
}

inline qrc::StateVector run_noiseless_dense(const qrc::Circuit &c, const qrc::StateVector &psi0) {
    Vec v = to_eigen(psi0);
    for (const qrc::Gate &g : c.gates)
        v = gate_unitary_dense(g, c.n_qubits) * v;
    std::vector<qrc::cplx> amps(v.data(), v.data() + v.size());
    return qrc::StateVector::from_amplitudes(c.n_qubits, std::move(amps));
}

inline double min_eigenvalue(const qrc::DensityMatrix &rho) {
    Eigen::SelfAdjointEigenSolver<Mat> solver(to_eigen(rho));
    return solver.eigenvalues().minCoeff();
}

inline double max_abs_diff(const qrc::DensityMatrix &a, const qrc::DensityMatrix &b) {
    return (to_eigen(a) - to_eigen(b)).cwiseAbs().maxCoeff();
}

// -- seeded random instances ----------------------------------------------

inline qrc::StateVector random_state(int n_qubits, qrc::RandomStream &rng) {
    const std::size_t d = std::size_t(1) << n_qubits;
    std::vector<qrc::cplx> amps(d);
    for (qrc::cplx &a : amps) {
        // Box-Muller pair; isotropic in the complex plane
        const double u1 = 1.0 - rng.next_double();
        const double u2 = rng.next_double();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double theta = 2.0 * std::numbers::pi * u2;
        a = qrc::cplx(r * std::cos(theta), r * std::sin(theta));
    }
    double norm = 0.0;
    for (const qrc::cplx &a : amps)
        norm += std::norm(a);
    norm = std::sqrt(norm);
    for (qrc::cplx &a : amps)
        a /= norm;
    return qrc::StateVector::from_amplitudes(n_qubits, std::move(amps));
}

// Random full-rank mixed state: a convex mix of a few random pure states
// plus a sliver of the maximally mixed state.
inline qrc::DensityMatrix random_density(int n_qubits, qrc::RandomStream &rng) {
    const std::size_t d = std::size_t(1) << n_qubits;
    Mat acc = Mat::Zero(static_cast<Eigen::Index>(d), static_cast<Eigen::Index>(d));
    double weight_left = 1.0;
    const int parts = 3;
    for (int k = 0; k < parts; ++k) {
        const double w = k + 1 == parts ? weight_left : weight_left * rng.next_double();
        weight_left -= k + 1 == parts ? 0.0 : w;
        const Vec v = to_eigen(random_state(n_qubits, rng));
        acc += w * (v * v.adjoint());
    }
    acc = 0.95 * acc + 0.05 * Mat::Identity(acc.rows(), acc.cols()) / static_cast<double>(d);
    return from_eigen(n_qubits, acc);
}

// -- ridge oracle -----------------------------------------------------------

// Brute-force normal equations on the augmented system [X 1], penalizing
// every weight except the intercept; solved with a plain matrix inverse.
// Formulated differently from the library's centered solve on purpose.
struct RidgeOracleResult {
    std::vector<double> weights;
    double intercept;
};

inline RidgeOracleResult ridge_oracle(const std::vector<std::vector<double>> &X,
                                      const std::vector<double> &y, double alpha) {
    const Eigen::Index rows = static_cast<Eigen::Index>(X.size());
    const Eigen::Index cols = static_cast<Eigen::Index>(X[0].size());
    Eigen::MatrixXd a(rows, cols + 1);
    for (Eigen::Index r = 0; r < rows; ++r) {
        for (Eigen::Index c = 0; c < cols; ++c)
            a(r, c) = X[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
        a(r, cols) = 1.0;
    }
    Eigen::VectorXd vy =
        Eigen::Map<const Eigen::VectorXd>(y.data(), static_cast<Eigen::Index>(y.size()));
    Eigen::MatrixXd normal = a.transpose() * a;
    for (Eigen::Index c = 0; c < cols; ++c)
        normal(c, c) += alpha;
    const Eigen::VectorXd sol = normal.inverse() * (a.transpose() * vy);
    RidgeOracleResult out;
    out.weights.assign(sol.data(), sol.data() + cols);
    out.intercept = sol[cols];
    return out;
}

} // namespace oracle
