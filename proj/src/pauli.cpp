#include "qrc/pauli.hpp"

#include <bit>
#include <cmath>
#include <cstdio>

namespace qrc {

char pauli_letter_char(PauliLetter l) {
    switch (l) {
    case PauliLetter::I:
        return 'I';
    case PauliLetter::X:
        return 'X';
    case PauliLetter::Y:
        return 'Y';
    case PauliLetter::Z:
        return 'Z';
    }
    return '?';
}

PauliLetter pauli_letter_from_char(char c) {
    switch (c) {
    case 'I':
        return PauliLetter::I;
    case 'X':
        return PauliLetter::X;
    case 'Y':
        return PauliLetter::Y;
    case 'Z':
        return PauliLetter::Z;
    default:
        throw Error(ErrorCode::InvalidArgument,
                    std::string("invalid Pauli letter '") + c + "'");
    }
}

PauliString::PauliString(std::vector<PauliLetter> letters) : letters_(std::move(letters)) {
    require(!letters_.empty(), ErrorCode::InvalidArgument, "empty Pauli string");
}

PauliString PauliString::from_label(const std::string &label) {
    std::vector<PauliLetter> letters;
    letters.reserve(label.size());
    for (char c : label)
        letters.push_back(pauli_letter_from_char(c));
    return PauliString(std::move(letters));
}

PauliString PauliString::from_index(int n_qubits, std::size_t index) {
    require(n_qubits >= 1, ErrorCode::InvalidArgument, "n_qubits must be >= 1");
    std::vector<PauliLetter> letters(static_cast<std::size_t>(n_qubits));
    for (int q = n_qubits - 1; q >= 0; --q) {
        letters[static_cast<std::size_t>(q)] = static_cast<PauliLetter>(index & 3);
        index >>= 2;
    }
    require(index == 0, ErrorCode::InvalidArgument, "Pauli index out of range");
    return PauliString(std::move(letters));
}

PauliString PauliString::single(int n_qubits, int qubit, PauliLetter l) {
    require(qubit >= 0 && qubit < n_qubits, ErrorCode::InvalidArgument,
            "qubit out of range");
    std::vector<PauliLetter> letters(static_cast<std::size_t>(n_qubits), PauliLetter::I);
    letters[static_cast<std::size_t>(qubit)] = l;
    return PauliString(std::move(letters));
}

std::size_t PauliString::index() const {
    std::size_t idx = 0;
    for (PauliLetter l : letters_)
        idx = (idx << 2) | static_cast<std::size_t>(l);
    return idx;
}

std::string PauliString::label() const {
    std::string s;
    s.reserve(letters_.size());
    for (PauliLetter l : letters_)
        s.push_back(pauli_letter_char(l));
    return s;
}

double PauliTransferRow::factor_of(PauliLetter l) const {
    for (const PauliTransferTerm &t : terms)
        if (t.output.letter(0) == l)
            return t.factor;
    return 0.0;
}

namespace {

// P acts on basis states as P|c> = phase(c) |c ^ flip_mask| with
// flip_mask collecting X/Y positions and
// phase(c) = i^{#Y} * (-1)^{popcount(c & yz_mask)}.
struct PauliAction {
    std::size_t flip_mask = 0;
    std::size_t yz_mask = 0;
    int y_count = 0;
};

PauliAction action_of(const PauliString &s, int n_qubits) {
    require(s.n_qubits() == n_qubits, ErrorCode::InvalidArgument,
            "Pauli string length does not match the system's qubit count");
    PauliAction a;
    for (int q = 0; q < n_qubits; ++q) {
        const std::size_t mask = std::size_t(1) << (n_qubits - 1 - q);
        switch (s.letter(q)) {
        case PauliLetter::I:
            break;
        case PauliLetter::X:
            a.flip_mask |= mask;
            break;
        case PauliLetter::Y:
            a.flip_mask |= mask;
            a.yz_mask |= mask;
            ++a.y_count;
            break;
        case PauliLetter::Z:
            a.yz_mask |= mask;
            break;
        }
    }
    return a;
}

cplx i_power(int k) {
    switch (k & 3) {
    case 0:
        return {1.0, 0.0};
    case 1:
        return {0.0, 1.0};
    case 2:
        return {-1.0, 0.0};
    default:
        return {0.0, -1.0};
    }
}

} // namespace

std::vector<cplx> pauli_matrix(const PauliString &s) {
    const int n = s.n_qubits();
    require(n <= 6, ErrorCode::Limit,
            "pauli_matrix is limited to n <= 6; use expectation() instead");
    const PauliAction a = action_of(s, n);
    const std::size_t d = std::size_t(1) << n;
    std::vector<cplx> m(d * d, cplx(0.0));
    const cplx base = i_power(a.y_count);
    for (std::size_t c = 0; c < d; ++c) {
        const int sign = std::popcount(c & a.yz_mask) & 1 ? -1 : 1;
        m[(c ^ a.flip_mask) * d + c] = base * static_cast<double>(sign);
    }
    return m;
}

double expectation(const DensityMatrix &rho, const PauliString &s) {
    const int n = rho.n_qubits();
    const PauliAction a = action_of(s, n);
    const std::size_t d = rho.dim();
    // P_{bc} = phase(c) delta_{b, c^flip}, so tr(P rho) = sum_c phase(c) rho[c, c^flip]
    cplx acc = 0.0;
    for (std::size_t c = 0; c < d; ++c) {
        const cplx v = rho.at(c, c ^ a.flip_mask);
        if (std::popcount(c & a.yz_mask) & 1)
            acc -= v;
        else
            acc += v;
    }
    return (i_power(a.y_count) * acc).real();
}

double expectation(const StateVector &psi, const PauliString &s) {
    const int n = psi.n_qubits();
    const PauliAction a = action_of(s, n);
    const std::size_t d = psi.dim();
    cplx acc = 0.0;
    for (std::size_t c = 0; c < d; ++c) {
        const cplx v = psi[c] * std::conj(psi[c ^ a.flip_mask]);
        if (std::popcount(c & a.yz_mask) & 1)
            acc -= v;
        else
            acc += v;
    }
    return (i_power(a.y_count) * acc).real();
}

PauliCoefficients decompose(const DensityMatrix &rho) {
    const int n = rho.n_qubits();
    require(n <= 6, ErrorCode::Limit,
            "decompose is limited to n <= 6 (4^n coefficient scan)");
    const std::size_t count = std::size_t(1) << (2 * n);
    const double scale = 1.0 / static_cast<double>(rho.dim());
    PauliCoefficients pc{n, std::vector<double>(count)};
    for (std::size_t i = 0; i < count; ++i)
        pc.coeffs[i] = scale * expectation(rho, PauliString::from_index(n, i));
    return pc;
}

PauliTransferRow channel_on_pauli(const KrausChannel &ch, PauliLetter letter) {
    const PauliString input = PauliString::from_label(std::string(1, pauli_letter_char(letter)));
    const std::vector<cplx> p = pauli_matrix(input);

    // epsilon(P) = sum_m M_m P M_m^dagger on a single qubit
    cplx out[4] = {};
    for (const Mat2 &m : ch.ops) {
        cplx mp[4];
        mp[0] = m[0] * p[0] + m[1] * p[2];
        mp[1] = m[0] * p[1] + m[1] * p[3];
        mp[2] = m[2] * p[0] + m[3] * p[2];
        mp[3] = m[2] * p[1] + m[3] * p[3];
        out[0] += mp[0] * std::conj(m[0]) + mp[1] * std::conj(m[1]);
        out[1] += mp[0] * std::conj(m[2]) + mp[1] * std::conj(m[3]);
        out[2] += mp[2] * std::conj(m[0]) + mp[3] * std::conj(m[1]);
        out[3] += mp[2] * std::conj(m[2]) + mp[3] * std::conj(m[3]);
    }

    PauliTransferRow row{input, {}};
    for (int l = 0; l < 4; ++l) {
        const PauliString q = PauliString::from_index(1, static_cast<std::size_t>(l));
        const std::vector<cplx> qm = pauli_matrix(q);
        // tr(Q epsilon(P)) / 2 with Q^dagger = Q
        cplx f = 0.5 * (qm[0] * out[0] + qm[1] * out[2] + qm[2] * out[1] + qm[3] * out[3]);
        if (std::abs(f) > 1e-14)
            row.terms.push_back({q, f.real()});
    }
    return row;
}

std::string pauli_coefficients_csv(const PauliCoefficients &pc) {
    std::string out = "string_label,coefficient\n";
    const std::size_t count = pc.coeffs.size();
    char buf[64];
    for (std::size_t i = 0; i < count; ++i) {
        std::snprintf(buf, sizeof buf, "%.17g", pc.coeffs[i]);
        out += PauliString::from_index(pc.n_qubits, i).label();
        out += ',';
        out += buf;
        out += '\n';
    }
    return out;
}

} // namespace qrc
