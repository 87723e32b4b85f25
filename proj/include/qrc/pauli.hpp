#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qrc/channels.hpp"
#include "qrc/state.hpp"

namespace qrc {

enum class PauliLetter : std::uint8_t {
    I = 0,
    X = 1,
    Y = 2,
    Z = 3,
};

char pauli_letter_char(PauliLetter l);
PauliLetter pauli_letter_from_char(char c);

// Tensor product of single-qubit Paulis, one letter per qubit. The canonical
// index of a string is its base-4 value with qubit 0 as the most significant
// digit and letter order I < X < Y < Z; PauliCoefficients arrays and CSV
// exports follow that order.
class PauliString {
  public:
    explicit PauliString(std::vector<PauliLetter> letters);
    static PauliString from_label(const std::string &label);
    static PauliString from_index(int n_qubits, std::size_t index);
    static PauliString single(int n_qubits, int qubit, PauliLetter l);

    int n_qubits() const { return static_cast<int>(letters_.size()); }
    PauliLetter letter(int qubit) const { return letters_[static_cast<std::size_t>(qubit)]; }
    const std::vector<PauliLetter> &letters() const { return letters_; }

    std::size_t index() const;
    std::string label() const;

    bool operator==(const PauliString &other) const = default;

  private:
    std::vector<PauliLetter> letters_;
};

// Real coefficients a_i of rho = sum_i a_i P_i over all 4^n strings in
// canonical order; a_i = tr(P_i rho) / 2^n.
struct PauliCoefficients {
    int n_qubits = 0;
    std::vector<double> coeffs;

    double at(const PauliString &s) const { return coeffs[s.index()]; }
};

struct PauliTransferTerm {
    PauliString output;
    double factor;
};

// Action of a channel on one basis Pauli, epsilon(P) = sum factor_Q * Q,
// keeping the terms with a nonzero factor.
struct PauliTransferRow {
    PauliString input;
    std::vector<PauliTransferTerm> terms;

    double factor_of(PauliLetter l) const;
};

// Dense 2^n x 2^n matrix of the string, row-major. Guarded to n <= 6; larger
// systems should go through expectation(), which never materializes P.
std::vector<cplx> pauli_matrix(const PauliString &s);

// All 4^n coefficients;  n <= 6 (the scan is O(8^n)).
PauliCoefficients decompose(const DensityMatrix &rho);

// tr(P rho) via index arithmetic over rho's entries; O(2^n).
double expectation(const DensityMatrix &rho, const PauliString &s);
double expectation(const StateVector &psi, const PauliString &s);

// Single-qubit transfer row computed numerically from the channel's Kraus
// operators (decompose of epsilon(P) on one qubit).
PauliTransferRow channel_on_pauli(const KrausChannel &ch, PauliLetter letter);

// CSV export, columns (string_label, coefficient), canonical order.
std::string pauli_coefficients_csv(const PauliCoefficients &pc);

} // namespace qrc
