#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qrc/channels.hpp"
#include "qrc/state.hpp"

namespace qrc {

enum class GateKind {
    H,
    T,
    Cnot,
};

const char *gate_kind_name(GateKind kind);

struct Gate {
    GateKind kind;
    int q0;      // target for H/T, control for CNOT
    int q1 = -1; // CNOT target, -1 otherwise
};

// Seeded sequence of G3 = {CNOT, H, T} gates.
struct Circuit {
    int n_qubits = 0;
    std::uint64_t seed = 0;
    std::vector<Gate> gates;
};

void validate_gate(const Gate &g, int n_qubits);

// 2x2 (H, T) or 4x4 (CNOT, basis |control,target>) unitary, row-major.
std::vector<cplx> gate_matrix(const Gate &g);

// Draws n_gates gates: the kind uniform over {H, T, CNOT}, then the qubit
// assignment uniform (an ordered pair without replacement for CNOT).
// Deterministic in (n_qubits, n_gates, seed).
Circuit sample_circuit(int n_qubits, int n_gates, std::uint64_t seed);

StateVector run_noiseless(const Circuit &c, const StateVector &psi0);

// After each gate the single-qubit channel hits every qubit the gate touched.
// For CNOT the order is control first, then target; the two applications
// commute, the order is fixed only so runs are bit-reproducible.
inline constexpr bool kCnotNoiseOnControl = true;
inline constexpr bool kCnotNoiseOnTarget = true;

DensityMatrix run_noisy(const Circuit &c, const DensityMatrix &rho0, NoiseKind kind, double p);

void apply_gate_inplace(StateVector &psi, const Gate &g);
void apply_gate_inplace(DensityMatrix &rho, const Gate &g);

// JSON record {n_qubits, seed, gates:[{kind, qubits}]} for reproducibility dumps.
std::string circuit_to_json(const Circuit &c);
Circuit circuit_from_json(const std::string &text);

} // namespace qrc
