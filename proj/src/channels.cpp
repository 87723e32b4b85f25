#include "qrc/channels.hpp"

#include <cmath>
#include <string>

namespace qrc {

const char *noise_kind_name(NoiseKind kind) {
    switch (kind) {
    case NoiseKind::AmplitudeDamping:
        return "amp";
    case NoiseKind::PhaseDamping:
        return "phase";
    case NoiseKind::Depolarizing:
        return "depol";
    }
    return "?";
}

namespace {

void check_probability(double p, double hi, const char *what) {
    require(p >= 0.0 && p <= hi, ErrorCode::InvalidArgument,
            std::string(what) + ": p = " + std::to_string(p) + " outside [0, " +
                std::to_string(hi) + "]");
}

} // namespace

KrausChannel amplitude_damping(double p) {
    check_probability(p, 1.0, "amplitude_damping");
    double s = std::sqrt(1.0 - p);
    double r = std::sqrt(p);
    return KrausChannel{NoiseKind::AmplitudeDamping, p,
                        {Mat2{1.0, 0.0, 0.0, s}, Mat2{0.0, r, 0.0, 0.0}}};
}

KrausChannel phase_damping(double p) {
    check_probability(p, 1.0, "phase_damping");
    double s = std::sqrt(1.0 - p);
    double r = std::sqrt(p);
    return KrausChannel{NoiseKind::PhaseDamping, p,
                        {Mat2{s, 0.0, 0.0, s}, Mat2{r, 0.0, 0.0, 0.0}, Mat2{0.0, 0.0, 0.0, r}}};
}

KrausChannel depolarizing(double p) {
    check_probability(p, 0.75, "depolarizing");
    double s = std::sqrt(1.0 - p);
    double r = std::sqrt(p / 3.0);
    const cplx i(0.0, 1.0);
    return KrausChannel{NoiseKind::Depolarizing, p,
                        {Mat2{s, 0.0, 0.0, s},        // sqrt(1-p) I
                         Mat2{0.0, r, r, 0.0},        // sqrt(p/3) X
                         Mat2{0.0, -i * r, i * r, 0.0}, // sqrt(p/3) Y
                         Mat2{r, 0.0, 0.0, -r}}};     // sqrt(p/3) Z
}

namespace {

double defect_from_identity(const std::array<cplx, 4> &m) {
    double d = 0.0;
    d = std::max(d, std::abs(m[0] - cplx(1.0)));
    d = std::max(d, std::abs(m[1]));
    d = std::max(d, std::abs(m[2]));
    d = std::max(d, std::abs(m[3] - cplx(1.0)));
    return d;
}

} // namespace

double completeness_defect(const KrausChannel &ch) {
    std::array<cplx, 4> acc{};
    for (const Mat2 &m : ch.ops) {
        // M^dagger M
        acc[0] += std::conj(m[0]) * m[0] + std::conj(m[2]) * m[2];
        acc[1] += std::conj(m[0]) * m[1] + std::conj(m[2]) * m[3];
        acc[2] += std::conj(m[1]) * m[0] + std::conj(m[3]) * m[2];
        acc[3] += std::conj(m[1]) * m[1] + std::conj(m[3]) * m[3];
    }
    return defect_from_identity(acc);
}

bool is_unital(const KrausChannel &ch) {
    std::array<cplx, 4> acc{};
    for (const Mat2 &m : ch.ops) {
        // M M^dagger
        acc[0] += m[0] * std::conj(m[0]) + m[1] * std::conj(m[1]);
        acc[1] += m[0] * std::conj(m[2]) + m[1] * std::conj(m[3]);
        acc[2] += m[2] * std::conj(m[0]) + m[3] * std::conj(m[1]);
        acc[3] += m[2] * std::conj(m[2]) + m[3] * std::conj(m[3]);
    }
    return defect_from_identity(acc) < 1e-12;
}

namespace {

// 4x4 superoperator on a row-vectorized 2x2 block: S = sum_m M_m (x) conj(M_m).
// For the three channels above S is real (the only complex Kraus operator, Y,
// enters as Y (x) conj(Y) whose entries are products of two imaginary numbers).
struct BlockSuperop {
    double s[4][4];
};

BlockSuperop build_superop(const KrausChannel &ch) {
    cplx acc[4][4] = {};
    for (const Mat2 &m : ch.ops) {
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j)
                for (int k = 0; k < 2; ++k)
                    for (int l = 0; l < 2; ++l)
                        acc[i * 2 + j][k * 2 + l] += m[i * 2 + k] * std::conj(m[j * 2 + l]);
    }
    BlockSuperop out{};
    for (int r = 0; r < 4; ++r) {
        for (int c = 0; c < 4; ++c) {
            require(std::abs(acc[r][c].imag()) < 1e-14, ErrorCode::Internal,
                    "channel superoperator has a complex entry");
            out.s[r][c] = acc[r][c].real();
        }
    }
    return out;
}

} // namespace

namespace {

// All three channels share the same superoperator sparsity: the populations
// (b00, b11) mix through a real 2x2 and both coherences scale by one factor.
struct StructuredAction {
    double m00, m01, m10, m11; // population mixing
    double g;                  // coherence scaling
};

bool extract_structure(const BlockSuperop &sop, StructuredAction &out) {
    const double eps = 1e-14;
    const int zero_pairs[8][2] = {{0, 1}, {0, 2}, {1, 0}, {1, 3},
                                  {2, 0}, {2, 3}, {3, 1}, {3, 2}};
    for (const auto &rc : zero_pairs)
        if (std::abs(sop.s[rc[0]][rc[1]]) > eps)
            return false;
    if (std::abs(sop.s[1][2]) > eps || std::abs(sop.s[2][1]) > eps)
        return false;
    if (std::abs(sop.s[1][1] - sop.s[2][2]) > eps)
        return false;
    out = {sop.s[0][0], sop.s[0][3], sop.s[3][0], sop.s[3][3], sop.s[1][1]};
    return true;
}

} // namespace

void apply_channel_inplace(DensityMatrix &rho, const KrausChannel &ch, int qubit) {
    const int n = rho.n_qubits();
    require(qubit >= 0 && qubit < n, ErrorCode::InvalidArgument,
            "apply_channel: qubit " + std::to_string(qubit) + " out of range for " +
                std::to_string(n) + " qubits");

    const BlockSuperop sop = build_superop(ch);
    const std::size_t d = rho.dim();
    const std::size_t half = d >> 1;
    const std::size_t mask = std::size_t(1) << (n - 1 - qubit);
    const std::size_t low = mask - 1;
    cplx *data = rho.elements().data();

    StructuredAction act{};
    if (extract_structure(sop, act)) {
        for (std::size_t ri = 0; ri < half; ++ri) {
            const std::size_t r0 = ((ri & ~low) << 1) | (ri & low);
            cplx *rowa = data + r0 * d;
            cplx *rowb = data + (r0 | mask) * d;
            for (std::size_t ci = 0; ci < half; ++ci) {
                const std::size_t c0 = ((ci & ~low) << 1) | (ci & low);
                const std::size_t c1 = c0 | mask;
                const cplx v0 = rowa[c0], v3 = rowb[c1];
                rowa[c0] = act.m00 * v0 + act.m01 * v3;
                rowb[c1] = act.m10 * v0 + act.m11 * v3;
                rowa[c1] *= act.g;
                rowb[c0] *= act.g;
            }
        }
        return;
    }

    for (std::size_t ri = 0; ri < half; ++ri) {
        const std::size_t r0 = ((ri & ~low) << 1) | (ri & low);
        cplx *rowa = data + r0 * d;
        cplx *rowb = data + (r0 | mask) * d;
        for (std::size_t ci = 0; ci < half; ++ci) {
            const std::size_t c0 = ((ci & ~low) << 1) | (ci & low);
            const std::size_t c1 = c0 | mask;
            const cplx v0 = rowa[c0], v1 = rowa[c1], v2 = rowb[c0], v3 = rowb[c1];
            rowa[c0] = sop.s[0][0] * v0 + sop.s[0][1] * v1 + sop.s[0][2] * v2 + sop.s[0][3] * v3;
            rowa[c1] = sop.s[1][0] * v0 + sop.s[1][1] * v1 + sop.s[1][2] * v2 + sop.s[1][3] * v3;
            rowb[c0] = sop.s[2][0] * v0 + sop.s[2][1] * v1 + sop.s[2][2] * v2 + sop.s[2][3] * v3;
            rowb[c1] = sop.s[3][0] * v0 + sop.s[3][1] * v1 + sop.s[3][2] * v2 + sop.s[3][3] * v3;
        }
    }
}

DensityMatrix apply_channel(const DensityMatrix &rho, const KrausChannel &ch, int qubit) {
    DensityMatrix out = rho;
    apply_channel_inplace(out, ch, qubit);
    return out;
}

} // namespace qrc
