#include "qrcnoise.h"

#include <cmath>
#include <cstdio>
#include <string>

#include "qrc/circuits.hpp"
#include "qrc/error.hpp"
#include "qrc/experiments.hpp"
#include "qrc/tasks.hpp"
#include "qrc/version.hpp"

struct qrcn_dataset {
    qrc::TaskDataset value;
};

struct qrcn_circuit {
    qrc::Circuit value;
};

namespace {

thread_local std::string g_last_error;

qrcn_status status_of(qrc::ErrorCode code) {
    switch (code) {
    case qrc::ErrorCode::InvalidArgument:
        return QRCN_ERR_INVALID_ARGUMENT;
    case qrc::ErrorCode::Io:
        return QRCN_ERR_IO;
    case qrc::ErrorCode::Format:
        return QRCN_ERR_FORMAT;
    case qrc::ErrorCode::Limit:
        return QRCN_ERR_LIMIT;
    case qrc::ErrorCode::Internal:
        return QRCN_ERR_INTERNAL;
    }
    return QRCN_ERR_INTERNAL;
}

qrcn_status fail(qrcn_status status, std::string msg) {
    g_last_error = std::move(msg);
    return status;
}

template <typename Fn> qrcn_status guarded(Fn &&fn) {
    try {
        fn();
        return QRCN_OK;
    } catch (const qrc::Error &e) {
        return fail(status_of(e.code()), e.what());
    } catch (const std::exception &e) {
        return fail(QRCN_ERR_INTERNAL, e.what());
    } catch (...) {
        return fail(QRCN_ERR_INTERNAL, "unknown error");
    }
}

qrcn_status require_arg(bool ok, const char *msg) {
    return ok ? QRCN_OK : fail(QRCN_ERR_INVALID_ARGUMENT, msg);
}

qrc::ExperimentConfig to_config(const qrcn_grid_config &c) {
    qrc::ExperimentConfig cfg;
    cfg.noise_kinds.clear();
    const std::uint32_t mask = c.noise_mask == 0 ? QRCN_NOISE_ALL : c.noise_mask;
    if (mask & QRCN_NOISE_AMP)
        cfg.noise_kinds.push_back(qrc::NoiseKind::AmplitudeDamping);
    if (mask & QRCN_NOISE_DEPOL)
        cfg.noise_kinds.push_back(qrc::NoiseKind::Depolarizing);
    if (mask & QRCN_NOISE_PHASE)
        cfg.noise_kinds.push_back(qrc::NoiseKind::PhaseDamping);
    if (c.p_values && c.n_p > 0)
        cfg.p_values.assign(c.p_values, c.p_values + c.n_p);
    if (c.gate_counts && c.n_gate_counts > 0)
        cfg.gate_counts.assign(c.gate_counts, c.gate_counts + c.n_gate_counts);
    if (c.n_seeds > 0)
        cfg.n_seeds = c.n_seeds;
    if (c.alpha >= 0.0)
        cfg.alpha = c.alpha;
    cfg.base_seed = c.base_seed;
    cfg.threads = c.threads;
    if (c.fast_profile)
        cfg.apply_fast_profile();
    if (!std::isnan(c.test_lo) && !std::isnan(c.test_hi) && c.test_lo <= c.test_hi)
        cfg.test_interval = {c.test_lo, c.test_hi};
    return cfg;
}

} // namespace

extern "C" {

const char *qrcn_version(void) { return qrc::kVersion; }

const char *qrcn_status_name(qrcn_status status) {
    switch (status) {
    case QRCN_OK:
        return "ok";
    case QRCN_ERR_INVALID_ARGUMENT:
        return "invalid_argument";
    case QRCN_ERR_IO:
        return "io_error";
    case QRCN_ERR_FORMAT:
        return "format_error";
    case QRCN_ERR_LIMIT:
        return "limit_exceeded";
    case QRCN_ERR_INTERNAL:
        return "internal_error";
    }
    return "unknown";
}

const char *qrcn_last_error(void) { return g_last_error.c_str(); }

qrcn_status qrcn_dataset_load(const char *path, qrcn_dataset **out) {
    if (qrcn_status s = require_arg(path && out, "qrcn_dataset_load: null argument"))
        return s;
    return guarded([&] { *out = new qrcn_dataset{qrc::load_dataset(path)}; });
}

qrcn_status qrcn_dataset_generate_tfim(int n_qubits, const double *h_values, size_t n_values,
                                       qrcn_dataset **out) {
    if (qrcn_status s = require_arg(h_values && out && n_values > 0,
                                    "qrcn_dataset_generate_tfim: null or empty argument"))
        return s;
    return guarded([&] {
        std::vector<double> h(h_values, h_values + n_values);
        *out = new qrcn_dataset{qrc::generate_tfim_task(n_qubits, h)};
    });
}

qrcn_status qrcn_dataset_save(const qrcn_dataset *dataset, const char *path) {
    if (qrcn_status s = require_arg(dataset && path, "qrcn_dataset_save: null argument"))
        return s;
    return guarded([&] { qrc::save_dataset(dataset->value, path); });
}

int qrcn_dataset_n_qubits(const qrcn_dataset *dataset) {
    return dataset ? dataset->value.n_qubits : 0;
}

size_t qrcn_dataset_n_samples(const qrcn_dataset *dataset) {
    return dataset ? dataset->value.size() : 0;
}

void qrcn_dataset_free(qrcn_dataset *dataset) { delete dataset; }

qrcn_status qrcn_circuit_sample(int n_qubits, int n_gates, uint64_t seed, qrcn_circuit **out) {
    if (qrcn_status s = require_arg(out != nullptr, "qrcn_circuit_sample: null output"))
        return s;
    return guarded([&] { *out = new qrcn_circuit{qrc::sample_circuit(n_qubits, n_gates, seed)}; });
}

qrcn_status qrcn_circuit_save_json(const qrcn_circuit *circuit, const char *path) {
    if (qrcn_status s = require_arg(circuit && path, "qrcn_circuit_save_json: null argument"))
        return s;
    return guarded([&] {
        std::string text = qrc::circuit_to_json(circuit->value) + "\n";
        std::FILE *f = std::fopen(path, "wb");
        qrc::require(f != nullptr, qrc::ErrorCode::Io,
                     std::string("cannot write circuit file '") + path + "'");
        const std::size_t written = std::fwrite(text.data(), 1, text.size(), f);
        std::fclose(f);
        qrc::require(written == text.size(), qrc::ErrorCode::Io,
                     std::string("write to '") + path + "' failed");
    });
}

qrcn_status qrcn_circuit_load_json(const char *path, qrcn_circuit **out) {
    if (qrcn_status s = require_arg(path && out, "qrcn_circuit_load_json: null argument"))
        return s;
    return guarded([&] {
        std::FILE *f = std::fopen(path, "rb");
        qrc::require(f != nullptr, qrc::ErrorCode::Io,
                     std::string("cannot open circuit file '") + path + "'");
        std::string text;
        char buf[4096];
        std::size_t got;
        while ((got = std::fread(buf, 1, sizeof buf, f)) > 0)
            text.append(buf, got);
        std::fclose(f);
        *out = new qrcn_circuit{qrc::circuit_from_json(text)};
    });
}

int qrcn_circuit_n_qubits(const qrcn_circuit *circuit) {
    return circuit ? circuit->value.n_qubits : 0;
}

size_t qrcn_circuit_n_gates(const qrcn_circuit *circuit) {
    return circuit ? circuit->value.gates.size() : 0;
}

void qrcn_circuit_free(qrcn_circuit *circuit) { delete circuit; }

qrcn_status qrcn_run_mse_grid(const qrcn_dataset *dataset, const qrcn_grid_config *config,
                              const char *out_dir) {
    if (qrcn_status s = require_arg(dataset && config && out_dir,
                                    "qrcn_run_mse_grid: null argument"))
        return s;
    return guarded([&] {
        const qrc::ExperimentConfig cfg = to_config(*config);
        qrc::TaskDataset ds = cfg.test_interval
                                  ? qrc::split_contiguous(dataset->value,
                                                          cfg.test_interval->first,
                                                          cfg.test_interval->second)
                                  : qrc::split_central_fraction(dataset->value,
                                                                cfg.test_fraction);
        qrc::write_mse_grid_outputs(cfg, ds, out_dir);
    });
}

qrcn_status qrcn_run_fidelity_table(const qrcn_dataset *dataset, const qrcn_grid_config *config,
                                    const char *out_dir) {
    if (qrcn_status s = require_arg(dataset && config && out_dir,
                                    "qrcn_run_fidelity_table: null argument"))
        return s;
    return guarded([&] {
        const qrc::ExperimentConfig cfg = to_config(*config);
        qrc::TaskDataset ds = cfg.test_interval
                                  ? qrc::split_contiguous(dataset->value,
                                                          cfg.test_interval->first,
                                                          cfg.test_interval->second)
                                  : qrc::split_central_fraction(dataset->value,
                                                                cfg.test_fraction);
        qrc::write_fidelity_outputs(cfg, ds, out_dir);
    });
}

qrcn_status qrcn_run_toy_pauli(const qrcn_toy_config *config, const char *out_dir) {
    if (qrcn_status s = require_arg(config && out_dir, "qrcn_run_toy_pauli: null argument"))
        return s;
    return guarded([&] {
        qrc::ToyConfig cfg;
        cfg.n_qubits = config->n_qubits;
        if (config->n_gates > 0)
            cfg.n_gates = config->n_gates;
        if (config->p >= 0.0)
            cfg.p = config->p;
        cfg.base_seed = config->base_seed;
        cfg.ensemble = config->ensemble;
        cfg.threads = config->threads;
        qrc::write_toy_outputs(cfg, out_dir);
    });
}

} // extern "C"
