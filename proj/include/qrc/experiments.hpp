#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qrc/reservoir.hpp"
#include "qrc/tasks.hpp"

namespace qrc {

struct SyntheticSpec {
    int n_qubits = 8;
    double h_lo = 0.2;
    double h_hi = 2.0;
    int steps = 37;
};

struct ExperimentConfig {
    std::string dataset_path;              // wins over `synthetic` when set
    SyntheticSpec synthetic;

    std::vector<NoiseKind> noise_kinds = {NoiseKind::AmplitudeDamping,
                                          NoiseKind::Depolarizing,
                                          NoiseKind::PhaseDamping};
    std::vector<double> p_values = {0.0001, 0.0005, 0.001, 0.003};
    std::vector<int> gate_counts = default_gate_counts();
    int n_seeds = 100;
    double alpha = 1e-9;
    std::uint64_t base_seed = 1;
    int threads = 0; // <= 0 picks hardware concurrency

    // Test split: explicit parameter interval, or the central ~30% when unset.
    std::optional<std::pair<double, double>> test_interval;
    double test_fraction = 0.3;

    // 25..215 step 10, then the long-circuit points.
    static std::vector<int> default_gate_counts();

    // CI profile: 20 seeds, gate counts capped at 215.
    void apply_fast_profile();

    void validate() const;
};

// Loads `dataset_path` or generates the synthetic task, then applies the split.
TaskDataset resolve_dataset(const ExperimentConfig &cfg);

struct GridRow {
    std::string kind; // "noiseless", "amp", "depol", "phase"
    double p = 0.0;
    int gates = 0;
    double mean_mse = 0.0;
    double std_mse = 0.0;
    double mean_fidelity = 0.0;
};

struct GridReport {
    std::vector<GridRow> rows;

    const GridRow *find(const std::string &kind, double p, int gates) const;
};

// One row per (kind, p, gates) plus a noiseless baseline row per gate count;
// each cell averages n_seeds independent trials. Deterministic in base_seed:
// the trial seed is a hash of (base_seed, kind id, p index, gates, trial
// index), with the kind id canonicalized to "noiseless" whenever p = 0, so
// p = 0 cells coincide across channels and added grid cells never perturb
// existing ones.
GridReport run_mse_grid(const ExperimentConfig &cfg, const TaskDataset &dataset);

struct FidelityRow {
    std::string kind;
    double p = 0.0;
    double mean_fidelity = 0.0;
};

struct OptimalRow {
    std::string kind;
    double p = 0.0;
    int optimal_gates = 0;       // 0 when no count beats the baseline
    double mean_fidelity = 0.0;  // at the optimal count; NaN when none
};

struct FidelityTables {
    std::vector<FidelityRow> mean_rows;    // fidelity averaged over gates < 200
    std::vector<OptimalRow> optimal_rows;  // largest count with noisy mse <= baseline
    GridReport grid;
};

FidelityTables run_fidelity_table(const ExperimentConfig &cfg, const TaskDataset &dataset);

struct ToyConfig {
    int n_qubits = 2; // must be 2
    int n_gates = 10;
    double p = 0.2;
    std::uint64_t base_seed = 1;
    int ensemble = 0; // ensemble member count; 0 = single-circuit mode only
    int threads = 0;
};

struct ToyPauliReport {
    std::vector<std::string> labels;             // 16 canonical string labels
    std::vector<double> noiseless;               // coefficients of the pure output
    std::array<std::vector<double>, 3> noisy;    // amp, depol, phase
};

// Pauli coefficients of the 2-qubit toy reservoir started from |00>.
// Ensemble member k runs the circuit seeded from (base_seed, k); the
// single-circuit report is member 0.
ToyPauliReport run_toy_pauli(const ToyConfig &cfg, int member = 0);

std::string grid_csv(const GridReport &report);
std::string fidelity_csv(const FidelityTables &tables);
std::string optimal_csv(const FidelityTables &tables);
std::string toy_csv(const ToyPauliReport &report);
std::string toy_ensemble_csv(const ToyConfig &cfg);

// File-producing entry points (used by the C API and the CLI):
// each writes its CSVs plus a run_meta.json config echo into out_dir.
void write_mse_grid_outputs(const ExperimentConfig &cfg, const TaskDataset &dataset,
                            const std::string &out_dir);
void write_fidelity_outputs(const ExperimentConfig &cfg, const TaskDataset &dataset,
                            const std::string &out_dir);
void write_toy_outputs(const ToyConfig &cfg, const std::string &out_dir);

} // namespace qrc
