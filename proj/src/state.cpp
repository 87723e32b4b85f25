#include "qrc/state.hpp"

#include <cmath>

namespace qrc {

std::size_t dim_for_qubits(int n_qubits) {
    require(n_qubits >= 1, ErrorCode::InvalidArgument, "n_qubits must be >= 1");
    require(n_qubits <= kMaxQubits, ErrorCode::Limit,
            "n_qubits = " + std::to_string(n_qubits) + " exceeds the dense-storage cap of " +
                std::to_string(kMaxQubits) + " qubits");
    return std::size_t(1) << n_qubits;
}

StateVector::StateVector(int n_qubits)
    : n_qubits_(n_qubits), amps_(dim_for_qubits(n_qubits), cplx(0.0)) {
    amps_[0] = 1.0;
}

StateVector StateVector::from_amplitudes(int n_qubits, std::vector<cplx> amps) {
    std::size_t d = dim_for_qubits(n_qubits);
    require(amps.size() == d, ErrorCode::InvalidArgument,
            "expected " + std::to_string(d) + " amplitudes, got " + std::to_string(amps.size()));
    StateVector psi(n_qubits);
    psi.amps_ = std::move(amps);
    require(std::abs(psi.norm() - 1.0) < 1e-10, ErrorCode::InvalidArgument,
            "state vector is not normalized");
    return psi;
}

double StateVector::norm() const {
    double s = 0.0;
    for (const cplx &a : amps_)
        s += std::norm(a);
    return std::sqrt(s);
}

void StateVector::normalize() {
    double n = norm();
    require(n > 0.0, ErrorCode::InvalidArgument, "cannot normalize the zero vector");
    for (cplx &a : amps_)
        a /= n;
}

DensityMatrix::DensityMatrix(int n_qubits)
    : n_qubits_(n_qubits), dim_(dim_for_qubits(n_qubits)), elems_(dim_ * dim_, cplx(0.0)) {
    elems_[0] = 1.0;
}

DensityMatrix DensityMatrix::from_elements(int n_qubits, std::vector<cplx> elems) {
    std::size_t d = dim_for_qubits(n_qubits);
    require(elems.size() == d * d, ErrorCode::InvalidArgument,
            "expected " + std::to_string(d * d) + " elements, got " +
                std::to_string(elems.size()));
    DensityMatrix rho(n_qubits);
    rho.elems_ = std::move(elems);
    require(std::abs(rho.trace() - cplx(1.0)) < 1e-10, ErrorCode::InvalidArgument,
            "density matrix trace differs from 1");
    require(rho.hermiticity_defect() < 1e-10, ErrorCode::InvalidArgument,
            "density matrix is not Hermitian");
    return rho;
}

cplx DensityMatrix::trace() const {
    cplx t = 0.0;
    for (std::size_t i = 0; i < dim_; ++i)
        t += at(i, i);
    return t;
}

double DensityMatrix::hermiticity_defect() const {
    double worst = 0.0;
    for (std::size_t r = 0; r < dim_; ++r) {
        for (std::size_t c = r; c < dim_; ++c) {
            double defect = std::abs(at(r, c) - std::conj(at(c, r)));
            if (defect > worst)
                worst = defect;
        }
    }
    return worst;
}

DensityMatrix pure_to_density(const StateVector &psi) {
    require(std::abs(psi.norm() - 1.0) < 1e-10, ErrorCode::InvalidArgument,
            "pure_to_density requires a normalized state");
    DensityMatrix rho(psi.n_qubits());
    std::size_t d = rho.dim();
    for (std::size_t r = 0; r < d; ++r)
        for (std::size_t c = 0; c < d; ++c)
            rho.at(r, c) = psi[r] * std::conj(psi[c]);
    return rho;
}

double fidelity_pure_mixed(const StateVector &psi, const DensityMatrix &rho) {
    require(psi.n_qubits() == rho.n_qubits(), ErrorCode::InvalidArgument,
            "fidelity_pure_mixed: state and density matrix differ in qubit count");
    std::size_t d = psi.dim();
    cplx f = 0.0;
    for (std::size_t r = 0; r < d; ++r) {
        cplx row = 0.0;
        for (std::size_t c = 0; c < d; ++c)
            row += rho.at(r, c) * psi[c];
        f += std::conj(psi[r]) * row;
    }
    return f.real();
}

double purity(const DensityMatrix &rho) {
    // tr(rho^2) = sum_{rc} rho_rc * rho_cr = sum |rho_rc|^2 for Hermitian rho
    std::size_t d = rho.dim();
    double s = 0.0;
    for (std::size_t r = 0; r < d; ++r)
        for (std::size_t c = 0; c < d; ++c)
            s += (rho.at(r, c) * rho.at(c, r)).real();
    return s;
}

} // namespace qrc
