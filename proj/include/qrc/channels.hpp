#pragma once

#include <array>
#include <vector>

#include "qrc/state.hpp"

namespace qrc {

enum class NoiseKind {
    AmplitudeDamping,
    PhaseDamping,
    Depolarizing,
};

const char *noise_kind_name(NoiseKind kind);

// 2x2 complex matrix, row-major.
using Mat2 = std::array<cplx, 4>;

// Single-qubit noise model: the Kraus operators M_m of the map
// rho -> sum_m M_m rho M_m^dagger, together with its error probability.
struct KrausChannel {
    NoiseKind kind;
    double p;
    std::vector<Mat2> ops;
};

// M0 = [[1,0],[0,sqrt(1-p)]], M1 = [[0,sqrt(p)],[0,0]]: decay |1> -> |0>
// with probability p. Requires p in [0,1].
KrausChannel amplitude_damping(double p);

// M0 = sqrt(1-p) I, M1 = diag(sqrt(p),0), M2 = diag(0,sqrt(p)): kills
// coherences, leaves populations alone. Requires p in [0,1].
KrausChannel phase_damping(double p);

// M0 = sqrt(1-p) I, M_{1..3} = sqrt(p/3) {X,Y,Z}. Requires p in [0, 3/4]:
// beyond 3/4 the map stops being a contraction on the traceless Pauli
// components (the (1 - 4p/3) factor leaves [-1, 1]).
KrausChannel depolarizing(double p);

// max |sum_m M_m^dagger M_m - I|; zero for a trace-preserving channel.
double completeness_defect(const KrausChannel &ch);

// True iff the channel maps I to I (max |sum_m M_m M_m^dagger - I| < 1e-12).
bool is_unital(const KrausChannel &ch);

// Applies the channel to one qubit of an n-qubit state, i.e. the Kraus map
// with operators I x ... x M_m x ... x I. The update is local: every 2x2
// sub-block of rho over the target qubit's row/column bit is contracted with
// the channel's 4x4 superoperator, no 2^n x 2^n operator is materialized.
DensityMatrix apply_channel(const DensityMatrix &rho, const KrausChannel &ch, int qubit);
void apply_channel_inplace(DensityMatrix &rho, const KrausChannel &ch, int qubit);

} // namespace qrc
