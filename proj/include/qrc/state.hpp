#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include "qrc/error.hpp"

namespace qrc {

using cplx = std::complex<double>;

// Dense storage caps out at 12 qubits (a 4096x4096 complex matrix); anything
// larger needs a different simulator architecture than this library provides.
inline constexpr int kMaxQubits = 12;

std::size_t dim_for_qubits(int n_qubits);

// Pure n-qubit state. Amplitudes follow the computational basis with qubit 0
// as the most significant bit of the index.
class StateVector {
  public:
    explicit StateVector(int n_qubits); // |0...0>
    static StateVector from_amplitudes(int n_qubits, std::vector<cplx> amps);

    int n_qubits() const { return n_qubits_; }
    std::size_t dim() const { return amps_.size(); }

    cplx &operator[](std::size_t i) { return amps_[i]; }
    const cplx &operator[](std::size_t i) const { return amps_[i]; }

    const std::vector<cplx> &amplitudes() const { return amps_; }
    std::vector<cplx> &amplitudes() { return amps_; }

    double norm() const;
    void normalize();

  private:
    int n_qubits_;
    std::vector<cplx> amps_;
};

// Mixed n-qubit state, row-major dense matrix with the same index convention
// as StateVector.
class DensityMatrix {
  public:
    explicit DensityMatrix(int n_qubits); // |0...0><0...0|
    static DensityMatrix from_elements(int n_qubits, std::vector<cplx> elems);

    int n_qubits() const { return n_qubits_; }
    std::size_t dim() const { return dim_; }

    cplx &at(std::size_t row, std::size_t col) { return elems_[row * dim_ + col]; }
    const cplx &at(std::size_t row, std::size_t col) const {
        return elems_[row * dim_ + col];
    }

    const std::vector<cplx> &elements() const { return elems_; }
    std::vector<cplx> &elements() { return elems_; }

    cplx trace() const;
    double hermiticity_defect() const; // max |rho - rho^dagger|

  private:
    int n_qubits_;
    std::size_t dim_;
    std::vector<cplx> elems_;
};

DensityMatrix pure_to_density(const StateVector &psi);

// <psi|rho|psi>, the squared-overlap convention for a pure reference state.
// (The square-root convention would report sqrt of these values.)
double fidelity_pure_mixed(const StateVector &psi, const DensityMatrix &rho);

double purity(const DensityMatrix &rho);

} // namespace qrc
