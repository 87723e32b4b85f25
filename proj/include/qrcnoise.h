/* C interface to the qrcnoise library: noisy quantum-reservoir simulation
 * and the benchmark experiment runners behind it.
 *
 * All functions returning qrcn_status report QRCN_OK on success. On failure
 * the return value classifies the error and qrcn_last_error() returns a
 * human-readable message (thread-local, valid until the next failing call on
 * the same thread). Objects returned through out-parameters are owned by the
 * caller and released with the matching *_free function.
 */
#ifndef QRCNOISE_H
#define QRCNOISE_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum qrcn_status {
    QRCN_OK = 0,
    QRCN_ERR_INVALID_ARGUMENT = 1,
    QRCN_ERR_IO = 2,
    QRCN_ERR_FORMAT = 3,
    QRCN_ERR_LIMIT = 4,
    QRCN_ERR_INTERNAL = 5,
} qrcn_status;

typedef struct qrcn_dataset qrcn_dataset;
typedef struct qrcn_circuit qrcn_circuit;

const char *qrcn_version(void);
const char *qrcn_status_name(qrcn_status status);
const char *qrcn_last_error(void);

/* -- datasets ------------------------------------------------------------ */

/* Loads the JSON dataset format:
 *   {"n_qubits": n, "samples": [{"parameter": x, "re": [...], "im": [...],
 *    "target": y}, ...]}
 * Amplitudes are in computational-basis order with qubit 0 most significant. */
qrcn_status qrcn_dataset_load(const char *path, qrcn_dataset **out);

/* Exact transverse-field Ising ground states (open chain, n <= 10 qubits),
 * one sample per field value; the target is the spectral gap. */
qrcn_status qrcn_dataset_generate_tfim(int n_qubits, const double *h_values,
                                       size_t n_values, qrcn_dataset **out);

qrcn_status qrcn_dataset_save(const qrcn_dataset *dataset, const char *path);

int qrcn_dataset_n_qubits(const qrcn_dataset *dataset);
size_t qrcn_dataset_n_samples(const qrcn_dataset *dataset);

void qrcn_dataset_free(qrcn_dataset *dataset);

/* -- circuits ------------------------------------------------------------ */

/* Seeded random circuit over the G3 = {CNOT, H, T} gate set. */
qrcn_status qrcn_circuit_sample(int n_qubits, int n_gates, uint64_t seed,
                                qrcn_circuit **out);

/* JSON record {n_qubits, seed, gates:[{kind, qubits}]}. */
qrcn_status qrcn_circuit_save_json(const qrcn_circuit *circuit, const char *path);
qrcn_status qrcn_circuit_load_json(const char *path, qrcn_circuit **out);

int qrcn_circuit_n_qubits(const qrcn_circuit *circuit);
size_t qrcn_circuit_n_gates(const qrcn_circuit *circuit);

void qrcn_circuit_free(qrcn_circuit *circuit);

/* -- experiments ----------------------------------------------------------*/

#define QRCN_NOISE_AMP 0x1u
#define QRCN_NOISE_DEPOL 0x2u
#define QRCN_NOISE_PHASE 0x4u
#define QRCN_NOISE_ALL 0x7u

/* Grid configuration. Null p_values / gate_counts select the reference grid
 * (p in {1e-4, 5e-4, 1e-3, 3e-3}; gates 25..215 step 10 plus 300/500/700/900;
 * 100 seeds). Set test_lo > test_hi to fall back to the central ~30% split. */
typedef struct qrcn_grid_config {
    uint32_t noise_mask;      /* OR of QRCN_NOISE_*; 0 means all        */
    const double *p_values;   /* may be NULL                            */
    size_t n_p;
    const int *gate_counts;   /* may be NULL                            */
    size_t n_gate_counts;
    int n_seeds;              /* <= 0 selects the default (100)         */
    double alpha;             /* < 0 selects the default (1e-9)         */
    uint64_t base_seed;
    int threads;              /* <= 0 picks hardware concurrency        */
    int fast_profile;         /* nonzero: 20 seeds, gate counts <= 215  */
    double test_lo, test_hi;  /* test-split parameter interval          */
} qrcn_grid_config;

/* Writes mse_grid.csv and run_meta.json into out_dir. */
qrcn_status qrcn_run_mse_grid(const qrcn_dataset *dataset, const qrcn_grid_config *config,
                              const char *out_dir);

/* Writes fidelity_table.csv, optimal_gates.csv, mse_grid.csv, run_meta.json. */
qrcn_status qrcn_run_fidelity_table(const qrcn_dataset *dataset,
                                    const qrcn_grid_config *config, const char *out_dir);

typedef struct qrcn_toy_config {
    int n_qubits;  /* must be 2 */
    int n_gates;   /* <= 0 selects the default (10)  */
    double p;      /* < 0 selects the default (0.2)  */
    uint64_t base_seed;
    int ensemble;  /* member count; 0 disables the ensemble output */
    int threads;
} qrcn_toy_config;

/* Writes toy_pauli.csv (and toy_ensemble.csv when enabled) plus run_meta.json. */
qrcn_status qrcn_run_toy_pauli(const qrcn_toy_config *config, const char *out_dir);

#ifdef __cplusplus
}
#endif

#endif /* QRCNOISE_H */
