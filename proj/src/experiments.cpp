#include "qrc/experiments.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <limits>
#include <thread>

#include "json.hpp"

#include "qrc/pauli.hpp"
#include "qrc/rng.hpp"
#include "qrc/version.hpp"

namespace qrc {

namespace {

// Stable ids for the seed hash; independent of config order and selection.
constexpr std::uint64_t kKindIdNoiseless = 0;

std::uint64_t kind_id(NoiseKind kind) {
    switch (kind) {
    case NoiseKind::AmplitudeDamping:
        return 1;
    case NoiseKind::Depolarizing:
        return 2;
    case NoiseKind::PhaseDamping:
        return 3;
    }
    return 0;
}

constexpr std::uint64_t kSeedDomainToy = 0x746f79; // "toy"

std::uint64_t trial_seed(std::uint64_t base_seed, std::uint64_t kind, std::size_t p_index,
                         int gates, int trial) {
    return mix_seed({base_seed, kind, static_cast<std::uint64_t>(p_index),
                     static_cast<std::uint64_t>(gates), static_cast<std::uint64_t>(trial)});
}

void format_double(std::string &out, double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    out += buf;
}

void parallel_for(std::size_t count, int threads, const std::function<void(std::size_t)> &fn) {
    unsigned n_threads = threads > 0 ? static_cast<unsigned>(threads)
                                     : std::max(1u, std::thread::hardware_concurrency());
    n_threads = std::min<unsigned>(n_threads, count == 0 ? 1 : static_cast<unsigned>(count));
    if (n_threads <= 1) {
        for (std::size_t i = 0; i < count; ++i)
            fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(n_threads);
    for (unsigned t = 0; t < n_threads; ++t) {
        pool.emplace_back([&] {
            for (;;) {
                const std::size_t i = next.fetch_add(1);
                if (i >= count)
                    return;
                fn(i);
            }
        });
    }
    for (std::thread &t : pool)
        t.join();
}

void write_file(const std::string &path, const std::string &content) {
    std::ofstream out(path, std::ios::binary);
    require(out.good(), ErrorCode::Io, "cannot write '" + path + "'");
    out << content;
    require(out.good(), ErrorCode::Io, "write to '" + path + "' failed");
}

void ensure_out_dir(const std::string &out_dir) {
    std::error_code ec;
    std::filesystem::create_directories(out_dir, ec);
    require(!ec, ErrorCode::Io, "cannot create output directory '" + out_dir + "'");
}

nlohmann::json config_echo(const ExperimentConfig &cfg) {
    nlohmann::json kinds = nlohmann::json::array();
    for (NoiseKind k : cfg.noise_kinds)
        kinds.push_back(noise_kind_name(k));
    nlohmann::json j{{"dataset_path", cfg.dataset_path},
                     {"synthetic",
                      {{"n_qubits", cfg.synthetic.n_qubits},
                       {"h_lo", cfg.synthetic.h_lo},
                       {"h_hi", cfg.synthetic.h_hi},
                       {"steps", cfg.synthetic.steps}}},
                     {"noise_kinds", kinds},
                     {"p_values", cfg.p_values},
                     {"gate_counts", cfg.gate_counts},
                     {"n_seeds", cfg.n_seeds},
                     {"alpha", cfg.alpha},
                     {"base_seed", cfg.base_seed},
                     {"threads", cfg.threads},
                     {"test_fraction", cfg.test_fraction}};
    if (cfg.test_interval)
        j["test_interval"] = {cfg.test_interval->first, cfg.test_interval->second};
    return j;
}

void write_meta(const std::string &out_dir, const char *command, nlohmann::json cfg_json) {
    nlohmann::json meta{{"command", command},
                        {"version", kVersion},
                        {"config", std::move(cfg_json)}};
    write_file(out_dir + "/run_meta.json", meta.dump(2) + "\n");
}

} // namespace

std::vector<int> ExperimentConfig::default_gate_counts() {
    std::vector<int> counts;
    for (int g = 25; g <= 215; g += 10)
        counts.push_back(g);
    for (int g : {300, 500, 700, 900})
        counts.push_back(g);
    return counts;
}

void ExperimentConfig::apply_fast_profile() {
    n_seeds = 20;
    std::erase_if(gate_counts, [](int g) { return g > 215; });
}

void ExperimentConfig::validate() const {
    require(!p_values.empty(), ErrorCode::InvalidArgument, "p_values must be non-empty");
    require(!gate_counts.empty(), ErrorCode::InvalidArgument, "gate_counts must be non-empty");
    require(!noise_kinds.empty(), ErrorCode::InvalidArgument, "noise_kinds must be non-empty");
    require(n_seeds >= 1, ErrorCode::InvalidArgument, "n_seeds must be >= 1");
    require(alpha >= 0.0, ErrorCode::InvalidArgument, "alpha must be >= 0");
    for (int g : gate_counts)
        require(g > 0, ErrorCode::InvalidArgument, "gate counts must be positive");
    for (double p : p_values) {
        for (NoiseKind kind : noise_kinds) {
            const double hi = kind == NoiseKind::Depolarizing ? 0.75 : 1.0;
            require(p >= 0.0 && p <= hi, ErrorCode::InvalidArgument,
                    "p = " + std::to_string(p) + " invalid for channel " +
                        noise_kind_name(kind));
        }
    }
}

TaskDataset resolve_dataset(const ExperimentConfig &cfg) {
    TaskDataset ds;
    if (!cfg.dataset_path.empty()) {
        ds = load_dataset(cfg.dataset_path);
    } else {
        const SyntheticSpec &spec = cfg.synthetic;
        require(spec.steps >= 3, ErrorCode::InvalidArgument,
                "synthetic task needs at least 3 field values");
        std::vector<double> h(static_cast<std::size_t>(spec.steps));
        for (int i = 0; i < spec.steps; ++i)
            h[static_cast<std::size_t>(i)] =
                spec.steps == 1 ? spec.h_lo
                                : spec.h_lo + (spec.h_hi - spec.h_lo) * i / (spec.steps - 1);
        ds = generate_tfim_task(spec.n_qubits, h);
    }
    if (cfg.test_interval)
        return split_contiguous(std::move(ds), cfg.test_interval->first,
                                cfg.test_interval->second);
    return split_central_fraction(std::move(ds), cfg.test_fraction);
}

const GridRow *GridReport::find(const std::string &kind, double p, int gates) const {
    for (const GridRow &row : rows)
        if (row.kind == kind && row.p == p && row.gates == gates)
            return &row;
    return nullptr;
}

GridReport run_mse_grid(const ExperimentConfig &cfg, const TaskDataset &dataset) {
    cfg.validate();
    require(dataset.has_split(), ErrorCode::InvalidArgument,
            "run_mse_grid: dataset has no train/test split");

    struct Cell {
        std::string kind_token;
        NoiseKind kind = NoiseKind::AmplitudeDamping;
        std::uint64_t seed_kind_id = kKindIdNoiseless;
        double p = 0.0;
        std::size_t p_index = 0;
        int gates = 0;
    };

    std::vector<Cell> cells;
    for (int g : cfg.gate_counts)
        cells.push_back({"noiseless", NoiseKind::AmplitudeDamping, kKindIdNoiseless, 0.0, 0, g});
    for (NoiseKind kind : cfg.noise_kinds) {
        for (std::size_t pi = 0; pi < cfg.p_values.size(); ++pi) {
            const double p = cfg.p_values[pi];
            for (int g : cfg.gate_counts) {
                // p = 0 cells coincide with the baseline stream by construction
                const std::uint64_t id = p == 0.0 ? kKindIdNoiseless : kind_id(kind);
                cells.push_back({noise_kind_name(kind), kind, id, p, pi, g});
            }
        }
    }

    const std::size_t n_trials = static_cast<std::size_t>(cfg.n_seeds);
    std::vector<TrialResult> results(cells.size() * n_trials);
    parallel_for(cells.size() * n_trials, cfg.threads, [&](std::size_t item) {
        const Cell &cell = cells[item / n_trials];
        const int trial = static_cast<int>(item % n_trials);
        const std::uint64_t seed =
            trial_seed(cfg.base_seed, cell.seed_kind_id, cell.p_index, cell.gates, trial);
        const Circuit circuit = sample_circuit(dataset.n_qubits, cell.gates, seed);
        results[item] = run_qrc_trial(dataset, circuit, cell.kind, cell.p, cfg.alpha);
    });

    GridReport report;
    report.rows.reserve(cells.size());
    for (std::size_t ci = 0; ci < cells.size(); ++ci) {
        double mse_sum = 0.0, fid_sum = 0.0;
        for (std::size_t t = 0; t < n_trials; ++t) {
            mse_sum += results[ci * n_trials + t].mse_test;
            fid_sum += results[ci * n_trials + t].mean_fidelity;
        }
        const double mean_mse = mse_sum / static_cast<double>(n_trials);
        double var = 0.0;
        for (std::size_t t = 0; t < n_trials; ++t) {
            const double d = results[ci * n_trials + t].mse_test - mean_mse;
            var += d * d;
        }
        const double std_mse =
            n_trials > 1 ? std::sqrt(var / static_cast<double>(n_trials - 1)) : 0.0;
        report.rows.push_back({cells[ci].kind_token, cells[ci].p, cells[ci].gates, mean_mse,
                               std_mse, fid_sum / static_cast<double>(n_trials)});
    }
    return report;
}

FidelityTables run_fidelity_table(const ExperimentConfig &cfg, const TaskDataset &dataset) {
    bool has_short = false;
    for (int g : cfg.gate_counts)
        has_short |= g < 200;
    require(has_short, ErrorCode::InvalidArgument,
            "fidelity table needs gate counts below 200");

    FidelityTables tables;
    tables.grid = run_mse_grid(cfg, dataset);

    for (NoiseKind kind : cfg.noise_kinds) {
        const std::string token = noise_kind_name(kind);
        for (double p : cfg.p_values) {
            double fid_sum = 0.0;
            int fid_count = 0;
            for (int g : cfg.gate_counts) {
                if (g >= 200)
                    continue;
                fid_sum += tables.grid.find(token, p, g)->mean_fidelity;
                ++fid_count;
            }
            tables.mean_rows.push_back({token, p, fid_sum / fid_count});

            OptimalRow opt{token, p, 0, std::numeric_limits<double>::quiet_NaN()};
            for (int g : cfg.gate_counts) {
                const GridRow *noisy = tables.grid.find(token, p, g);
                const GridRow *base = tables.grid.find("noiseless", 0.0, g);
                if (noisy->mean_mse <= base->mean_mse && g > opt.optimal_gates) {
                    opt.optimal_gates = g;
                    opt.mean_fidelity = noisy->mean_fidelity;
                }
            }
            tables.optimal_rows.push_back(opt);
        }
    }
    return tables;
}

ToyPauliReport run_toy_pauli(const ToyConfig &cfg, int member) {
    require(cfg.n_qubits == 2, ErrorCode::InvalidArgument,
            "the toy Pauli experiment is defined for exactly 2 qubits");
    require(cfg.n_gates >= 0, ErrorCode::InvalidArgument, "n_gates must be >= 0");
    require(cfg.p >= 0.0 && cfg.p <= 0.75, ErrorCode::InvalidArgument,
            "toy p must lie in [0, 0.75] (depolarizing bound)");

    const std::uint64_t seed =
        mix_seed({cfg.base_seed, kSeedDomainToy, static_cast<std::uint64_t>(member)});
    const Circuit circuit = sample_circuit(2, cfg.n_gates, seed);
    const StateVector psi0(2);

    ToyPauliReport report;
    for (std::size_t i = 0; i < 16; ++i)
        report.labels.push_back(PauliString::from_index(2, i).label());
    report.noiseless = decompose(pure_to_density(run_noiseless(circuit, psi0))).coeffs;

    const NoiseKind kinds[3] = {NoiseKind::AmplitudeDamping, NoiseKind::Depolarizing,
                                NoiseKind::PhaseDamping};
    const DensityMatrix rho0 = pure_to_density(psi0);
    for (int k = 0; k < 3; ++k)
        report.noisy[static_cast<std::size_t>(k)] =
            decompose(run_noisy(circuit, rho0, kinds[k], cfg.p)).coeffs;
    return report;
}

std::string grid_csv(const GridReport &report) {
    std::string out = "noise_kind,p,gates,mean_mse,std_mse,mean_fidelity\n";
    for (const GridRow &row : report.rows) {
        out += row.kind;
        out += ',';
        format_double(out, row.p);
        out += ',';
        out += std::to_string(row.gates);
        out += ',';
        format_double(out, row.mean_mse);
        out += ',';
        format_double(out, row.std_mse);
        out += ',';
        format_double(out, row.mean_fidelity);
        out += '\n';
    }
    return out;
}

std::string fidelity_csv(const FidelityTables &tables) {
    std::string out =
        "# mean_fidelity averages the per-cell mean fidelity over all gate counts < 200\n"
        "kind,p,mean_fidelity\n";
    for (const FidelityRow &row : tables.mean_rows) {
        out += row.kind;
        out += ',';
        format_double(out, row.p);
        out += ',';
        format_double(out, row.mean_fidelity);
        out += '\n';
    }
    return out;
}

std::string optimal_csv(const FidelityTables &tables) {
    std::string out =
        "# optimal_gates: largest gate count whose noisy mean MSE <= the noiseless mean MSE\n"
        "# mean_fidelity: averaged over seeds and dataset samples at that gate count\n"
        "kind,p,optimal_gates,mean_fidelity\n";
    for (const OptimalRow &row : tables.optimal_rows) {
        out += row.kind;
        out += ',';
        format_double(out, row.p);
        out += ',';
        out += std::to_string(row.optimal_gates);
        out += ',';
        if (row.optimal_gates > 0)
            format_double(out, row.mean_fidelity);
        out += '\n';
    }
    return out;
}

std::string toy_csv(const ToyPauliReport &report) {
    std::string out = "string_label,noiseless,amp_damp,depol,phase_damp\n";
    for (std::size_t i = 0; i < report.labels.size(); ++i) {
        out += report.labels[i];
        out += ',';
        format_double(out, report.noiseless[i]);
        for (const std::vector<double> &column : report.noisy) {
            out += ',';
            format_double(out, column[i]);
        }
        out += '\n';
    }
    return out;
}

std::string toy_ensemble_csv(const ToyConfig &cfg) {
    require(cfg.ensemble >= 1, ErrorCode::InvalidArgument,
            "ensemble mode needs at least one member");

    std::vector<ToyPauliReport> reports(static_cast<std::size_t>(cfg.ensemble));
    parallel_for(reports.size(), cfg.threads,
                 [&](std::size_t k) { reports[k] = run_toy_pauli(cfg, static_cast<int>(k)); });

    std::string out = "seed_index,channel";
    for (std::size_t i = 0; i < 16; ++i) {
        out += ',';
        out += PauliString::from_index(2, i).label();
    }
    out += '\n';

    const auto emit = [&out](int k, const char *channel, const std::vector<double> &coeffs) {
        out += std::to_string(k);
        out += ',';
        out += channel;
        for (double c : coeffs) {
            out += ',';
            format_double(out, c);
        }
        out += '\n';
    };
    for (int k = 0; k < cfg.ensemble; ++k) {
        const ToyPauliReport &r = reports[static_cast<std::size_t>(k)];
        emit(k, "noiseless", r.noiseless);
        emit(k, "amp_damp", r.noisy[0]);
        emit(k, "depol", r.noisy[1]);
        emit(k, "phase_damp", r.noisy[2]);
    }
    return out;
}

void write_mse_grid_outputs(const ExperimentConfig &cfg, const TaskDataset &dataset,
                            const std::string &out_dir) {
    ensure_out_dir(out_dir);
    const GridReport report = run_mse_grid(cfg, dataset);
    write_file(out_dir + "/mse_grid.csv", grid_csv(report));
    write_meta(out_dir, "mse-grid", config_echo(cfg));
}

void write_fidelity_outputs(const ExperimentConfig &cfg, const TaskDataset &dataset,
                            const std::string &out_dir) {
    ensure_out_dir(out_dir);
    const FidelityTables tables = run_fidelity_table(cfg, dataset);
    write_file(out_dir + "/fidelity_table.csv", fidelity_csv(tables));
    write_file(out_dir + "/optimal_gates.csv", optimal_csv(tables));
    write_file(out_dir + "/mse_grid.csv", grid_csv(tables.grid));
    write_meta(out_dir, "fidelity-table", config_echo(cfg));
}

void write_toy_outputs(const ToyConfig &cfg, const std::string &out_dir) {
    ensure_out_dir(out_dir);
    write_file(out_dir + "/toy_pauli.csv", toy_csv(run_toy_pauli(cfg)));
    if (cfg.ensemble > 0)
        write_file(out_dir + "/toy_ensemble.csv", toy_ensemble_csv(cfg));
    nlohmann::json cfg_json{{"n_qubits", cfg.n_qubits}, {"n_gates", cfg.n_gates},
                            {"p", cfg.p},               {"base_seed", cfg.base_seed},
                            {"ensemble", cfg.ensemble}, {"threads", cfg.threads}};
    write_meta(out_dir, "toy-pauli", std::move(cfg_json));
}

} // namespace qrc
