#include "qrc/tasks.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <numeric>

#include <Eigen/Dense>

#include "json.hpp"

namespace qrc {

std::size_t TaskDataset::test_count() const {
    return static_cast<std::size_t>(std::count(test_mask.begin(), test_mask.end(), 1));
}

TaskDataset load_dataset(const std::string &path) {
    std::ifstream in(path);
    require(in.good(), ErrorCode::Io, "cannot open dataset file '" + path + "'");

    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception &e) {
        throw Error(ErrorCode::Format,
                    "dataset '" + path + "' is not valid JSON: " + e.what());
    }

    TaskDataset ds;
    try {
        ds.n_qubits = j.at("n_qubits").get<int>();
        const std::size_t d = dim_for_qubits(ds.n_qubits);
        std::size_t index = 0;
        for (const auto &js : j.at("samples")) {
            TaskSample s{js.at("parameter").get<double>(), StateVector(ds.n_qubits),
                         js.at("target").get<double>()};
            const auto &re = js.at("re");
            const auto &im = js.at("im");
            if (re.size() != d || im.size() != d)
                throw Error(ErrorCode::Format,
                            "sample " + std::to_string(index) + " in '" + path + "' has " +
                                std::to_string(re.size()) + "/" + std::to_string(im.size()) +
                                " amplitudes, expected " + std::to_string(d) + " for n_qubits = " +
                                std::to_string(ds.n_qubits));
            std::vector<cplx> amps(d);
            for (std::size_t i = 0; i < d; ++i)
                amps[i] = cplx(re.at(i).get<double>(), im.at(i).get<double>());

            double norm = 0.0;
            for (const cplx &a : amps)
                norm += std::norm(a);
            norm = std::sqrt(norm);
            require(std::abs(norm - 1.0) <= 1e-6, ErrorCode::InvalidArgument,
                    "sample " + std::to_string(index) + " in '" + path +
                        "' deviates from unit norm by more than 1e-6");
            // renormalize real drift only; at machine precision the division
            // would perturb low bits and break bit-exact round trips
            if (std::abs(norm - 1.0) > 1e-12)
                for (cplx &a : amps)
                    a /= norm;

            s.state = StateVector::from_amplitudes(ds.n_qubits, std::move(amps));
            ds.samples.push_back(std::move(s));
            ++index;
        }
    } catch (const nlohmann::json::exception &e) {
        throw Error(ErrorCode::Format, "dataset '" + path + "' field error: " + e.what());
    }

    require(!ds.samples.empty(), ErrorCode::Format, "dataset '" + path + "' has no samples");

    std::vector<double> params;
    for (const TaskSample &s : ds.samples)
        params.push_back(s.parameter);
    std::sort(params.begin(), params.end());
    if (std::adjacent_find(params.begin(), params.end()) != params.end())
        std::cerr << "warning: dataset '" << path << "' contains duplicate parameters (kept)\n";

    return ds;
}

void save_dataset(const TaskDataset &dataset, const std::string &path) {
    nlohmann::json samples = nlohmann::json::array();
    for (const TaskSample &s : dataset.samples) {
        nlohmann::json re = nlohmann::json::array();
        nlohmann::json im = nlohmann::json::array();
        for (const cplx &a : s.state.amplitudes()) {
            re.push_back(a.real());
            im.push_back(a.imag());
        }
        samples.push_back({{"parameter", s.parameter},
                           {"re", std::move(re)},
                           {"im", std::move(im)},
                           {"target", s.target}});
    }
    nlohmann::json j{{"n_qubits", dataset.n_qubits}, {"samples", std::move(samples)}};

    std::ofstream out(path);
    require(out.good(), ErrorCode::Io, "cannot write dataset file '" + path + "'");
    out << j.dump(2) << '\n';
    require(out.good(), ErrorCode::Io, "write to '" + path + "' failed");
}

TaskDataset generate_tfim_task(int n_qubits, const std::vector<double> &h_values) {
    require(n_qubits >= 1 && n_qubits <= 10, ErrorCode::Limit,
            "generate_tfim_task supports 1..10 qubits");
    require(!h_values.empty(), ErrorCode::InvalidArgument, "h_values must be non-empty");
    for (double h : h_values)
        require(h > 0.0, ErrorCode::InvalidArgument,
                "field strengths must be > 0 (h = 0 has a degenerate ground space)");

    const std::size_t d = dim_for_qubits(n_qubits);
    const auto bit = [&](std::size_t state, int q) {
        return (state >> (n_qubits - 1 - q)) & 1u;
    };

    // -sum Z_i Z_{i+1} is diagonal; -h sum X_i couples bit-flipped states.
    Eigen::VectorXd zz_diag = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(d));
    for (std::size_t b = 0; b < d; ++b) {
        double e = 0.0;
        for (int q = 0; q + 1 < n_qubits; ++q)
            e -= (bit(b, q) == bit(b, q + 1)) ? 1.0 : -1.0;
        zz_diag[static_cast<Eigen::Index>(b)] = e;
    }

    TaskDataset ds;
    ds.n_qubits = n_qubits;
    Eigen::MatrixXd ham(static_cast<Eigen::Index>(d), static_cast<Eigen::Index>(d));
    for (double h : h_values) {
        ham.setZero();
        ham.diagonal() = zz_diag;
        for (std::size_t b = 0; b < d; ++b)
            for (int q = 0; q < n_qubits; ++q)
                ham(static_cast<Eigen::Index>(b ^ (std::size_t(1) << (n_qubits - 1 - q))),
                    static_cast<Eigen::Index>(b)) -= h;

        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(ham);
        require(solver.info() == Eigen::Success, ErrorCode::Internal,
                "TFIM eigensolver failed");
        const double gap = solver.eigenvalues()[1] - solver.eigenvalues()[0];

        Eigen::VectorXd ground = solver.eigenvectors().col(0);
        Eigen::Index top;
        ground.cwiseAbs().maxCoeff(&top);
        if (ground[top] < 0.0)
            ground = -ground;

        std::vector<cplx> amps(d);
        for (std::size_t i = 0; i < d; ++i)
            amps[i] = ground[static_cast<Eigen::Index>(i)];
        ds.samples.push_back(
            {h, StateVector::from_amplitudes(n_qubits, std::move(amps)), gap});
    }
    return ds;
}

TaskDataset split_contiguous(TaskDataset dataset, double test_lo, double test_hi) {
    require(test_lo <= test_hi, ErrorCode::InvalidArgument,
            "split_contiguous: empty interval");
    dataset.test_mask.assign(dataset.samples.size(), 0);
    std::size_t n_test = 0;
    for (std::size_t i = 0; i < dataset.samples.size(); ++i) {
        const double x = dataset.samples[i].parameter;
        if (x >= test_lo && x <= test_hi) {
            dataset.test_mask[i] = 1;
            ++n_test;
        }
    }
    require(n_test > 0, ErrorCode::InvalidArgument,
            "split_contiguous: no sample falls in the test interval");
    require(n_test < dataset.samples.size(), ErrorCode::InvalidArgument,
            "split_contiguous: the test interval swallows every sample");
    return dataset;
}

TaskDataset split_central_fraction(TaskDataset dataset, double fraction) {
    require(fraction > 0.0 && fraction < 1.0, ErrorCode::InvalidArgument,
            "test fraction must lie in (0, 1)");
    const std::size_t n = dataset.samples.size();
    require(n >= 3, ErrorCode::InvalidArgument,
            "need at least 3 samples for a central split");

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return dataset.samples[a].parameter < dataset.samples[b].parameter;
    });

    std::size_t k = static_cast<std::size_t>(std::lround(fraction * static_cast<double>(n)));
    k = std::clamp<std::size_t>(k, 1, n - 2);
    const std::size_t start = (n - k) / 2;

    dataset.test_mask.assign(n, 0);
    for (std::size_t i = start; i < start + k; ++i)
        dataset.test_mask[order[i]] = 1;
    return dataset;
}

} // namespace qrc
