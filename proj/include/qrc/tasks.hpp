#pragma once

#include <string>
#include <vector>

#include "qrc/state.hpp"

namespace qrc {

// One labeled sample: a parameterized ground state and the scalar target the
// model must predict from it (an energy gap, in both the ingested and the
// synthetic tasks).
struct TaskSample {
    double parameter = 0.0;
    StateVector state;
    double target = 0.0;
};

struct TaskDataset {
    int n_qubits = 0;
    std::vector<TaskSample> samples;
    std::vector<char> test_mask; // empty until a split is applied

    std::size_t size() const { return samples.size(); }
    std::size_t test_count() const;
    bool has_split() const { return !test_mask.empty(); }
};

// JSON dataset format:
//   {"n_qubits": n, "samples": [{"parameter": x, "re": [...], "im": [...],
//    "target": y}, ...]}
// with amplitudes in computational-basis order, qubit 0 most significant.
// States within 1e-6 of unit norm are renormalized, anything further off is
// rejected. Duplicate parameters are kept with a warning on stderr.
TaskDataset load_dataset(const std::string &path);
void save_dataset(const TaskDataset &dataset, const std::string &path);

// Exact ground states of the open-chain transverse-field Ising model
//   H = -sum Z_i Z_{i+1} - h sum X_i
// by dense diagonalization, one sample per field value; target = E_1 - E_0.
// The global phase is fixed by making the largest-magnitude amplitude real
// and positive. Requires 0 < h and n_qubits <= 10.
TaskDataset generate_tfim_task(int n_qubits, const std::vector<double> &h_values);

// Marks samples with parameter in [test_lo, test_hi] as the held-out test
// set; the train side must learn to extrapolate into that interval.
TaskDataset split_contiguous(TaskDataset dataset, double test_lo, double test_hi);

// Interior split covering ~`fraction` of the samples (by parameter order).
TaskDataset split_central_fraction(TaskDataset dataset, double fraction);

} // namespace qrc
