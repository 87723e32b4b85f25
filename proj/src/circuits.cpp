#include "qrc/circuits.hpp"

#include <cmath>
#include <numbers>
#include <utility>

#include "json.hpp"

#include "qrc/rng.hpp"

namespace qrc {

const char *gate_kind_name(GateKind kind) {
    switch (kind) {
    case GateKind::H:
        return "H";
    case GateKind::T:
        return "T";
    case GateKind::Cnot:
        return "CNOT";
    }
    return "?";
}

void validate_gate(const Gate &g, int n_qubits) {
    require(g.q0 >= 0 && g.q0 < n_qubits, ErrorCode::InvalidArgument,
            "gate qubit out of range");
    if (g.kind == GateKind::Cnot) {
        require(g.q1 >= 0 && g.q1 < n_qubits, ErrorCode::InvalidArgument,
                "CNOT target out of range");
        require(g.q0 != g.q1, ErrorCode::InvalidArgument,
                "CNOT control and target must differ");
    } else {
        require(g.q1 == -1, ErrorCode::InvalidArgument,
                "single-qubit gate carries a second qubit index");
    }
}

namespace {

constexpr double kInvSqrt2 = 0.7071067811865475244;

cplx t_phase() { return std::polar(1.0, std::numbers::pi / 4.0); }

} // namespace

std::vector<cplx> gate_matrix(const Gate &g) {
    switch (g.kind) {
    case GateKind::H:
        return {kInvSqrt2, kInvSqrt2, kInvSqrt2, -kInvSqrt2};
    case GateKind::T:
        return {1.0, 0.0, 0.0, t_phase()};
    case GateKind::Cnot:
        return {1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 1, 0, 0, 1, 0};
    }
    throw Error(ErrorCode::Internal, "unknown gate kind");
}

Circuit sample_circuit(int n_qubits, int n_gates, std::uint64_t seed) {
    require(n_qubits >= 2, ErrorCode::InvalidArgument,
            "sample_circuit requires n_qubits >= 2 (CNOT needs two qubits)");
    require(n_qubits <= kMaxQubits, ErrorCode::Limit, "n_qubits exceeds dense-storage cap");
    require(n_gates >= 0, ErrorCode::InvalidArgument, "n_gates must be >= 0");

    Circuit c;
    c.n_qubits = n_qubits;
    c.seed = seed;
    c.gates.reserve(static_cast<std::size_t>(n_gates));

    RandomStream rng(seed);
    const std::uint64_t n = static_cast<std::uint64_t>(n_qubits);
    for (int i = 0; i < n_gates; ++i) {
        switch (rng.next_below(3)) {
        case 0:
            c.gates.push_back({GateKind::H, static_cast<int>(rng.next_below(n))});
            break;
        case 1:
            c.gates.push_back({GateKind::T, static_cast<int>(rng.next_below(n))});
            break;
        default: {
            // ordered (control, target) pair uniform over n(n-1) choices
            std::uint64_t k = rng.next_below(n * (n - 1));
            int control = static_cast<int>(k / (n - 1));
            int target = static_cast<int>(k % (n - 1));
            if (target >= control)
                ++target;
            c.gates.push_back({GateKind::Cnot, control, target});
            break;
        }
        }
    }
    return c;
}

namespace {

std::size_t qubit_mask(int n_qubits, int qubit) {
    return std::size_t(1) << (n_qubits - 1 - qubit);
}

// r0 for the i-th index pair over `mask`, i.e. i with a zero bit inserted.
std::size_t expand_index(std::size_t i, std::size_t mask) {
    const std::size_t low = mask - 1;
    return ((i & ~low) << 1) | (i & low);
}

void apply_h_statevector(StateVector &psi, int qubit) {
    const std::size_t d = psi.dim();
    const std::size_t mask = qubit_mask(psi.n_qubits(), qubit);
    cplx *a = psi.amplitudes().data();
    for (std::size_t i = 0; i < d / 2; ++i) {
        const std::size_t i0 = expand_index(i, mask);
        const std::size_t i1 = i0 | mask;
        const cplx v0 = a[i0], v1 = a[i1];
        a[i0] = kInvSqrt2 * (v0 + v1);
        a[i1] = kInvSqrt2 * (v0 - v1);
    }
}

void apply_t_statevector(StateVector &psi, int qubit) {
    const std::size_t d = psi.dim();
    const std::size_t mask = qubit_mask(psi.n_qubits(), qubit);
    const cplx tau = t_phase();
    cplx *a = psi.amplitudes().data();
    for (std::size_t i = 0; i < d; ++i)
        if (i & mask)
            a[i] *= tau;
}

void apply_cnot_statevector(StateVector &psi, int control, int target) {
    const std::size_t d = psi.dim();
    const std::size_t cm = qubit_mask(psi.n_qubits(), control);
    const std::size_t tm = qubit_mask(psi.n_qubits(), target);
    cplx *a = psi.amplitudes().data();
    for (std::size_t i = 0; i < d; ++i) {
        if ((i & cm) && !(i & tm))
            std::swap(a[i], a[i | tm]);
    }
}

// rho -> H rho H: real butterfly on row pairs, then on column pairs.
void apply_h_density(DensityMatrix &rho, int qubit) {
    const std::size_t d = rho.dim();
    const std::size_t mask = qubit_mask(rho.n_qubits(), qubit);
    cplx *data = rho.elements().data();

    for (std::size_t i = 0; i < d / 2; ++i) {
        const std::size_t r0 = expand_index(i, mask);
        cplx *rowa = data + r0 * d;
        cplx *rowb = data + (r0 | mask) * d;
        for (std::size_t c = 0; c < d; ++c) {
            const cplx v0 = rowa[c], v1 = rowb[c];
            rowa[c] = kInvSqrt2 * (v0 + v1);
            rowb[c] = kInvSqrt2 * (v0 - v1);
        }
    }
    for (std::size_t r = 0; r < d; ++r) {
        cplx *row = data + r * d;
        for (std::size_t i = 0; i < d / 2; ++i) {
            const std::size_t c0 = expand_index(i, mask);
            const std::size_t c1 = c0 | mask;
            const cplx v0 = row[c0], v1 = row[c1];
            row[c0] = kInvSqrt2 * (v0 + v1);
            row[c1] = kInvSqrt2 * (v0 - v1);
        }
    }
}

// rho -> T rho T^dagger: entries pick up tau^(bit r) * conj(tau)^(bit c),
// which is 1 on the two diagonal blocks.
void apply_t_density(DensityMatrix &rho, int qubit) {
    const std::size_t d = rho.dim();
    const std::size_t mask = qubit_mask(rho.n_qubits(), qubit);
    const cplx tau = t_phase();
    const cplx tau_conj = std::conj(tau);
    cplx *data = rho.elements().data();

    for (std::size_t r = 0; r < d; ++r) {
        cplx *row = data + r * d;
        const cplx factor = (r & mask) ? tau : tau_conj;
        for (std::size_t i = 0; i < d / 2; ++i) {
            const std::size_t c = (r & mask) ? expand_index(i, mask)          // bit(c) = 0
                                             : (expand_index(i, mask) | mask); // bit(c) = 1
            row[c] *= factor;
        }
    }
}

// CNOT conjugation is a basis permutation: swap rows, then columns.
void apply_cnot_density(DensityMatrix &rho, int control, int target) {
    const std::size_t d = rho.dim();
    const std::size_t cm = qubit_mask(rho.n_qubits(), control);
    const std::size_t tm = qubit_mask(rho.n_qubits(), target);
    cplx *data = rho.elements().data();

    for (std::size_t r = 0; r < d; ++r) {
        if ((r & cm) && !(r & tm)) {
            cplx *rowa = data + r * d;
            cplx *rowb = data + (r | tm) * d;
            for (std::size_t c = 0; c < d; ++c)
                std::swap(rowa[c], rowb[c]);
        }
    }
    for (std::size_t r = 0; r < d; ++r) {
        cplx *row = data + r * d;
        for (std::size_t c = 0; c < d; ++c) {
            if ((c & cm) && !(c & tm))
                std::swap(row[c], row[c | tm]);
        }
    }
}

} // namespace

void apply_gate_inplace(StateVector &psi, const Gate &g) {
    validate_gate(g, psi.n_qubits());
    switch (g.kind) {
    case GateKind::H:
        apply_h_statevector(psi, g.q0);
        break;
    case GateKind::T:
        apply_t_statevector(psi, g.q0);
        break;
    case GateKind::Cnot:
        apply_cnot_statevector(psi, g.q0, g.q1);
        break;
    }
}

void apply_gate_inplace(DensityMatrix &rho, const Gate &g) {
    validate_gate(g, rho.n_qubits());
    switch (g.kind) {
    case GateKind::H:
        apply_h_density(rho, g.q0);
        break;
    case GateKind::T:
        apply_t_density(rho, g.q0);
        break;
    case GateKind::Cnot:
        apply_cnot_density(rho, g.q0, g.q1);
        break;
    }
}

StateVector run_noiseless(const Circuit &c, const StateVector &psi0) {
    require(c.n_qubits == psi0.n_qubits(), ErrorCode::InvalidArgument,
            "run_noiseless: circuit and state differ in qubit count");
    StateVector psi = psi0;
    for (const Gate &g : c.gates)
        apply_gate_inplace(psi, g);
    return psi;
}

DensityMatrix run_noisy(const Circuit &c, const DensityMatrix &rho0, NoiseKind kind, double p) {
    require(c.n_qubits == rho0.n_qubits(), ErrorCode::InvalidArgument,
            "run_noisy: circuit and state differ in qubit count");

    KrausChannel ch;
    switch (kind) {
    case NoiseKind::AmplitudeDamping:
        ch = amplitude_damping(p);
        break;
    case NoiseKind::PhaseDamping:
        ch = phase_damping(p);
        break;
    case NoiseKind::Depolarizing:
        ch = depolarizing(p);
        break;
    }

    DensityMatrix rho = rho0;
    for (const Gate &g : c.gates) {
        apply_gate_inplace(rho, g);
        if (g.kind == GateKind::Cnot) {
            if (kCnotNoiseOnControl)
                apply_channel_inplace(rho, ch, g.q0);
            if (kCnotNoiseOnTarget)
                apply_channel_inplace(rho, ch, g.q1);
        } else {
            apply_channel_inplace(rho, ch, g.q0);
        }
    }
    return rho;
}

std::string circuit_to_json(const Circuit &c) {
    nlohmann::json gates = nlohmann::json::array();
    for (const Gate &g : c.gates) {
        nlohmann::json qubits = nlohmann::json::array();
        qubits.push_back(g.q0);
        if (g.kind == GateKind::Cnot)
            qubits.push_back(g.q1);
        gates.push_back({{"kind", gate_kind_name(g.kind)}, {"qubits", qubits}});
    }
    nlohmann::json j{{"n_qubits", c.n_qubits}, {"seed", c.seed}, {"gates", gates}};
    return j.dump(2);
}

Circuit circuit_from_json(const std::string &text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception &e) {
        throw Error(ErrorCode::Format, std::string("circuit JSON parse error: ") + e.what());
    }
    try {
        Circuit c;
        c.n_qubits = j.at("n_qubits").get<int>();
        c.seed = j.at("seed").get<std::uint64_t>();
        for (const auto &jg : j.at("gates")) {
            const std::string kind = jg.at("kind").get<std::string>();
            const auto &qubits = jg.at("qubits");
            Gate g{};
            if (kind == "H")
                g.kind = GateKind::H;
            else if (kind == "T")
                g.kind = GateKind::T;
            else if (kind == "CNOT")
                g.kind = GateKind::Cnot;
            else
                throw Error(ErrorCode::Format, "unknown gate kind '" + kind + "'");
            g.q0 = qubits.at(0).get<int>();
            g.q1 = g.kind == GateKind::Cnot ? qubits.at(1).get<int>() : -1;
            validate_gate(g, c.n_qubits);
            c.gates.push_back(g);
        }
        return c;
    } catch (const nlohmann::json::exception &e) {
        throw Error(ErrorCode::Format, std::string("circuit JSON field error: ") + e.what());
    }
}

} // namespace qrc
