#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <unistd.h>

#include "qrc/experiments.hpp"

using namespace qrc;

namespace {

ExperimentConfig tiny_config() {
    ExperimentConfig cfg;
    cfg.synthetic = {3, 0.4, 1.6, 7};
    cfg.p_values = {0.01, 0.05};
    cfg.gate_counts = {10, 25};
    cfg.n_seeds = 4;
    cfg.base_seed = 77;
    cfg.threads = 1;
    return cfg;
}

std::string slurp(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

struct TempDir {
    std::filesystem::path path;
    TempDir() {
        static int counter = 0;
        path = std::filesystem::temp_directory_path() /
               ("qrc_exp_" + std::to_string(::getpid()) + "_" + std::to_string(counter++));
    }
    ~TempDir() { std::filesystem::remove_all(path); }
    std::string str() const { return path.string(); }
};

} // namespace

TEST_CASE("default grid mirrors the reference protocol") {
    ExperimentConfig cfg;
    CHECK(cfg.p_values == std::vector<double>{0.0001, 0.0005, 0.001, 0.003});
    REQUIRE(cfg.gate_counts.size() == 24);
    CHECK(cfg.gate_counts.front() == 25);
    CHECK(cfg.gate_counts[19] == 215);
    CHECK(cfg.gate_counts.back() == 900);
    CHECK(cfg.n_seeds == 100);
    CHECK(cfg.alpha == 1e-9);

    cfg.apply_fast_profile();
    CHECK(cfg.n_seeds == 20);
    CHECK(cfg.gate_counts.back() == 215);
    CHECK(cfg.gate_counts.size() == 20);
}

TEST_CASE("config validation rejects bad grids") {
    ExperimentConfig cfg = tiny_config();
    cfg.p_values = {0.9}; // too large for depolarizing
    CHECK_THROWS_AS(cfg.validate(), Error);
    cfg = tiny_config();
    cfg.gate_counts = {0};
    CHECK_THROWS_AS(cfg.validate(), Error);
    cfg = tiny_config();
    cfg.n_seeds = 0;
    CHECK_THROWS_AS(cfg.validate(), Error);
    cfg = tiny_config();
    cfg.noise_kinds.clear();
    CHECK_THROWS_AS(cfg.validate(), Error);
}

TEST_CASE("grid report has one row per cell plus the baseline") {
    ExperimentConfig cfg = tiny_config();
    TaskDataset ds = resolve_dataset(cfg);
    GridReport report = run_mse_grid(cfg, ds);

    // |gates| baseline rows + kinds * |p| * |gates|
    CHECK(report.rows.size() == 2 + 3 * 2 * 2);
    for (int g : cfg.gate_counts) {
        const GridRow *row = report.find("noiseless", 0.0, g);
        REQUIRE(row != nullptr);
        CHECK(row->mean_fidelity == doctest::Approx(1.0).epsilon(1e-10));
        CHECK(row->mean_mse >= 0.0);
    }
    for (const GridRow &row : report.rows) {
        CHECK(std::isfinite(row.mean_mse));
        CHECK(row.mean_mse >= 0.0);
        CHECK(row.std_mse >= 0.0);
    }
}

TEST_CASE("explicit p = 0 rows coincide across noise kinds") {
    ExperimentConfig cfg = tiny_config();
    cfg.p_values = {0.0, 0.02};
    TaskDataset ds = resolve_dataset(cfg);
    GridReport report = run_mse_grid(cfg, ds);

    for (int g : cfg.gate_counts) {
        const GridRow *amp = report.find("amp", 0.0, g);
        const GridRow *depol = report.find("depol", 0.0, g);
        const GridRow *phase = report.find("phase", 0.0, g);
        REQUIRE(amp != nullptr);
        REQUIRE(depol != nullptr);
        REQUIRE(phase != nullptr);
        CHECK(amp->mean_mse == doctest::Approx(depol->mean_mse).epsilon(1e-12));
        CHECK(amp->mean_mse == doctest::Approx(phase->mean_mse).epsilon(1e-12));
        CHECK(amp->mean_fidelity == 1.0);
    }
}

TEST_CASE("grid runs are deterministic and thread-count independent") {
    ExperimentConfig cfg = tiny_config();
    TaskDataset ds = resolve_dataset(cfg);
    GridReport a = run_mse_grid(cfg, ds);
    cfg.threads = 4;
    GridReport b = run_mse_grid(cfg, ds);
    REQUIRE(a.rows.size() == b.rows.size());
    for (std::size_t i = 0; i < a.rows.size(); ++i) {
        CHECK(a.rows[i].mean_mse == b.rows[i].mean_mse);
        CHECK(a.rows[i].std_mse == b.rows[i].std_mse);
        CHECK(a.rows[i].mean_fidelity == b.rows[i].mean_fidelity);
    }
}

TEST_CASE("mean fidelity decreases as p grows") {
    ExperimentConfig cfg = tiny_config();
    cfg.p_values = {0.005, 0.05, 0.2};
    cfg.gate_counts = {15, 30};
    cfg.n_seeds = 30;
    TaskDataset ds = resolve_dataset(cfg);
    FidelityTables tables = run_fidelity_table(cfg, ds);

    REQUIRE(tables.mean_rows.size() == 9);
    for (NoiseKind kind : cfg.noise_kinds) {
        const std::string token = noise_kind_name(kind);
        double last = 1.0;
        for (double p : cfg.p_values) {
            const auto it = std::find_if(
                tables.mean_rows.begin(), tables.mean_rows.end(),
                [&](const FidelityRow &r) { return r.kind == token && r.p == p; });
            REQUIRE(it != tables.mean_rows.end());
            CHECK(it->mean_fidelity < last);
            last = it->mean_fidelity;
        }
    }
}

TEST_CASE("fidelity table requires short circuits and reports optima") {
    ExperimentConfig cfg = tiny_config();
    cfg.gate_counts = {250, 300};
    TaskDataset ds = resolve_dataset(cfg);
    CHECK_THROWS_AS((void)run_fidelity_table(cfg, ds), Error);

    cfg = tiny_config();
    ds = resolve_dataset(cfg);
    FidelityTables tables = run_fidelity_table(cfg, ds);
    REQUIRE(tables.optimal_rows.size() == 6);
    for (const OptimalRow &row : tables.optimal_rows) {
        if (row.optimal_gates > 0) {
            const GridRow *noisy = tables.grid.find(row.kind, row.p, row.optimal_gates);
            const GridRow *base = tables.grid.find("noiseless", 0.0, row.optimal_gates);
            CHECK(noisy->mean_mse <= base->mean_mse);
            CHECK(row.mean_fidelity == noisy->mean_fidelity);
        }
    }
}

TEST_CASE("toy report shows injection for amplitude damping only") {
    ToyConfig cfg;
    cfg.base_seed = 5;
    ToyPauliReport report = run_toy_pauli(cfg);
    REQUIRE(report.labels.size() == 16);
    CHECK(report.labels[0] == "II");

    // unit trace in every column
    CHECK(report.noiseless[0] == doctest::Approx(0.25).epsilon(1e-10));
    for (const auto &column : report.noisy)
        CHECK(column[0] == doctest::Approx(0.25).epsilon(1e-10));

    // depol and phase damping only mitigate
    for (std::size_t i = 0; i < 16; ++i) {
        CHECK(std::abs(report.noisy[1][i]) <= std::abs(report.noiseless[i]) + 1e-10);
        CHECK(std::abs(report.noisy[2][i]) <= std::abs(report.noiseless[i]) + 1e-10);
    }

    CHECK_THROWS_AS((void)run_toy_pauli([] {
        ToyConfig bad;
        bad.n_qubits = 3;
        return bad;
    }()), Error);
}

TEST_CASE("csv outputs are written with the documented headers") {
    TempDir tmp;
    ExperimentConfig cfg = tiny_config();
    TaskDataset ds = resolve_dataset(cfg);

    write_mse_grid_outputs(cfg, ds, tmp.str());
    const std::string grid = slurp(tmp.str() + "/mse_grid.csv");
    CHECK(grid.rfind("noise_kind,p,gates,mean_mse,std_mse,mean_fidelity\n", 0) == 0);
    CHECK(grid.find("\nnoiseless,0,10,") != std::string::npos);
    CHECK(grid.find("\namp,0.01") != std::string::npos);

    const std::string meta = slurp(tmp.str() + "/run_meta.json");
    CHECK(meta.find("\"command\": \"mse-grid\"") != std::string::npos);
    CHECK(meta.find("\"base_seed\": 77") != std::string::npos);

    write_fidelity_outputs(cfg, ds, tmp.str());
    const std::string fid = slurp(tmp.str() + "/fidelity_table.csv");
    CHECK(fid.find("kind,p,mean_fidelity\n") != std::string::npos);
    const std::string opt = slurp(tmp.str() + "/optimal_gates.csv");
    CHECK(opt.find("kind,p,optimal_gates,mean_fidelity\n") != std::string::npos);

    ToyConfig toy;
    toy.ensemble = 3;
    write_toy_outputs(toy, tmp.str());
    const std::string toy_out = slurp(tmp.str() + "/toy_pauli.csv");
    CHECK(toy_out.rfind("string_label,noiseless,amp_damp,depol,phase_damp\n", 0) == 0);
    const std::string ens = slurp(tmp.str() + "/toy_ensemble.csv");
    CHECK(ens.rfind("seed_index,channel,II,IX,IY,IZ,XI,XX,XY,XZ,YI,YX,YY,YZ,ZI,ZX,ZY,ZZ\n", 0) ==
          0);
    // 3 members x 4 channels + header
    CHECK(std::count(ens.begin(), ens.end(), '\n') == 13);

    // ensemble member 0 equals the single-circuit report
    ToyPauliReport member0 = run_toy_pauli(toy, 0);
    const std::string first_line = ens.substr(ens.find('\n') + 1);
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", member0.noiseless[0]);
    CHECK(first_line.rfind(std::string("0,noiseless,") + buf, 0) == 0);
}

TEST_CASE("byte-identical reruns") {
    TempDir tmp_a, tmp_b;
    ExperimentConfig cfg = tiny_config();
    TaskDataset ds = resolve_dataset(cfg);
    write_mse_grid_outputs(cfg, ds, tmp_a.str());
    write_mse_grid_outputs(cfg, ds, tmp_b.str());
    CHECK(slurp(tmp_a.str() + "/mse_grid.csv") == slurp(tmp_b.str() + "/mse_grid.csv"));

    // a different base seed changes the numbers
    ExperimentConfig other = cfg;
    other.base_seed = 78;
    TempDir tmp_c;
    write_mse_grid_outputs(other, resolve_dataset(other), tmp_c.str());
    CHECK(slurp(tmp_a.str() + "/mse_grid.csv") != slurp(tmp_c.str() + "/mse_grid.csv"));
}

TEST_CASE("resolve_dataset honors explicit intervals") {
    ExperimentConfig cfg = tiny_config();
    cfg.test_interval = {{0.7, 1.1}};
    TaskDataset ds = resolve_dataset(cfg);
    REQUIRE(ds.has_split());
    for (std::size_t i = 0; i < ds.samples.size(); ++i) {
        const bool inside = ds.samples[i].parameter >= 0.7 && ds.samples[i].parameter <= 1.1;
        CHECK(static_cast<bool>(ds.test_mask[i]) == inside);
    }
}
