// Copyright 2026 The holoqed Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "holoqed/analysis.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <numbers>
#include <cstdlib>
#include <iomanip>
#include <ostream>
#include <thread>

namespace holoqed {

double TimeSeries::final_fidelity() const {
    if (fidelity.empty()) throw Error("empty time series");
    return fidelity.back();
}

double TimeSeries::max_fidelity() const {
    if (fidelity.empty()) throw Error("empty time series");
    return *std::max_element(fidelity.begin(), fidelity.end());
}

Matrix trace_out_cavity(const DensityState& state) {
    if (!state.layout.has_cavity()) return state.rho;
    const int n_cav = state.layout.cavity_dim();
    const long reg = state.layout.total_dim() / n_cav;
    Matrix reduced = Matrix::Zero(reg, reg);
    for (int n = 0; n < n_cav; ++n)
        reduced += state.rho.block(n * reg, n * reg, reg, reg);
    return reduced;
}

namespace {

void check_encoding(const DensityState& state, const DFSEncoding& enc) {
    const long reg = state.layout.has_cavity()
                         ? state.layout.total_dim() / state.layout.cavity_dim()
                         : state.layout.total_dim();
    if (reg != enc.layout.total_dim())
        throw LayoutError("encoding does not match the state's qubit register");
}

}  // namespace

std::vector<double> logical_populations(const DensityState& state,
                                        const DFSEncoding& enc) {
    check_encoding(state, enc);
    const Matrix reduced = trace_out_cavity(state);
    std::vector<double> pops(enc.size());
    for (int i = 0; i < enc.size(); ++i)
        pops[i] = std::real(reduced(enc.physical_index(i),
                                    enc.physical_index(i)));
    return pops;
}

double state_fidelity(const DensityState& state, const Vector& target,
                      const DFSEncoding& enc) {
    check_encoding(state, enc);
    const double norm = target.norm();
    if (std::abs(norm - 1.0) > 1e-9)
        throw ParameterError("target state must be normalized");
    const Matrix reduced = trace_out_cavity(state);
    const Vector reg = enc.logical_to_register(target);
    return std::real(Complex(reg.adjoint() * reduced * reg));
}

double dfs_vacuum_weight(const DensityState& state, const DFSEncoding& enc) {
    check_encoding(state, enc);
    if (!state.layout.has_cavity())
        throw LayoutError("vacuum weight needs a cavity slot");
    double weight = 0.0;
    for (int i = 0; i < enc.size(); ++i) {
        const long idx = enc.physical_index(i);  // photon 0 block
        weight += std::real(state.rho(idx, idx));
    }
    return weight;
}

GateDriveSet single_qubit_drives(const PhysicalParams& params, double theta,
                                 double phi) {
    const double g23 = params.g;
    const double g12 = couplings_for(theta, g23);
    const auto gp = gate_params(g12, g23, params.delta);
    GateDriveSet set;
    set.pairs = {{1, 2, g12, +1, phi, 0.0}, {2, 3, g23, -1, 0.0, 0.0}};
    for (const auto& p : set.pairs)
        for (const auto& tone : pair_tones(p, params.delta))
            set.tones.push_back(tone);
    set.lambda = gp.lambda;
    set.tau = pulse_time(gp.lambda);
    return set;
}

GateDriveSet two_qubit_drives(const PhysicalParams& params, double vartheta,
                              double phi) {
    const double g36 = params.g;
    const double g34 = couplings_for(vartheta, g36);
    const auto gp = gate_params(g34, g36, params.delta);
    GateDriveSet set;
    set.pairs = {{3, 4, g34, +1, phi, 0.0}, {3, 6, g36, -1, 0.0, 0.0}};
    for (const auto& p : set.pairs)
        for (const auto& tone : pair_tones(p, params.delta))
            set.tones.push_back(tone);
    set.lambda = gp.lambda;
    set.tau = pulse_time(gp.lambda);
    return set;
}

namespace {

// Shared machinery for both gate runs: assemble the Hamiltonian, restrict
// if requested, integrate, and record populations + fidelity per sample.
TimeSeries run_gate(const DFSEncoding& enc, const GateDriveSet& drives,
                    const Vector& initial_logical, const Vector& target_logical,
                    const PhysicalParams& params, DecoherenceMode mode,
                    const IntegrationConfig& cfg, int auto_max_excitation) {
    params.validate();
    cfg.validate(params.delta);

    const SpaceLayout layout =
        SpaceLayout::cavity_qubits(cfg.n_max, enc.layout.qubit_count());
    TimeDependentHamiltonian h =
        build_hamiltonian(layout, drives.tones, drives.pairs, params.delta);
    std::vector<CollapseChannel> channels =
        build_channels(layout, params, mode);
    Vector psi0 = encoding_to_full(enc, layout, initial_logical);

    IntegrationConfig run_cfg = cfg;
    if (run_cfg.t_end <= 0.0) run_cfg.t_end = drives.tau;
    int max_exc = cfg.max_excitation;
    if (max_exc < 0) max_exc = auto_max_excitation;

    TimeSeries ts;
    for (const auto& [label, bits] : enc.basis) ts.labels.push_back(label);

    DensityState rho0{layout, Matrix()};
    ExcitationRestriction restriction{layout, 0, {}};
    const bool restricted = max_exc >= 0;
    if (restricted) {
        restriction = excitation_restrict(layout, max_exc);
        h = h.transformed(
            [&](const Matrix& m) { return restriction.restrict_op(m); });
        for (auto& ch : channels)
            ch.op = Operator{SpaceLayout({restriction.restricted_dim()}),
                             restriction.restrict_op(ch.op.entries)};
        const Vector psi_r = restriction.restrict_vec(psi0);
        rho0 = DensityState::pure(SpaceLayout({restriction.restricted_dim()}),
                                  psi_r);
    } else {
        rho0 = DensityState::pure(layout, psi0);
    }

    integrate_master(h, rho0, channels, run_cfg,
                     [&](double t, const Matrix& rho) {
                         DensityState full{
                             layout,
                             restricted ? restriction.expand_op(rho) : rho};
                         ts.times.push_back(t);
                         ts.populations.push_back(
                             logical_populations(full, enc));
                         ts.fidelity.push_back(
                             state_fidelity(full, target_logical, enc));
                     });
    return ts;
}

int scan_thread_count(int n_tasks) {
    if (const char* env = std::getenv("HOLOQED_THREADS")) {
        const int n = std::atoi(env);
        if (n >= 1) return std::min(n, n_tasks);
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return std::max(1, std::min<int>(hw == 0 ? 1 : hw, n_tasks));
}

}  // namespace

TimeSeries run_single_qubit_gate(double theta, double phi,
                                 const Eigen::Vector2cd& initial,
                                 const PhysicalParams& params,
                                 DecoherenceMode mode,
                                 const IntegrationConfig& cfg) {
    const DFSEncoding enc = s1_encoding();
    const GateDriveSet drives = single_qubit_drives(params, theta, phi);

    Vector init = Vector::Zero(3);
    init.head<2>() = initial.normalized();
    const Eigen::Vector2cd target2 =
        u1_matrix(theta, phi) * initial.normalized();
    Vector target = Vector::Zero(3);
    target.head<2>() = target2;

    return run_gate(enc, drives, init, target, params, mode, cfg,
                    /*auto_max_excitation=*/-1);
}

TimeSeries run_two_qubit_gate(double vartheta, double phi,
                              const Eigen::Vector4cd& initial,
                              const PhysicalParams& params,
                              DecoherenceMode mode,
                              const IntegrationConfig& cfg) {
    const DFSEncoding enc = s2_encoding();
    const GateDriveSet drives = two_qubit_drives(params, vartheta, phi);

    Vector init = Vector::Zero(6);
    init.head<4>() = initial.normalized();
    const Eigen::Vector4cd target4 =
        u2_matrix(vartheta, phi) * initial.normalized();
    Vector target = Vector::Zero(6);
    target.head<4>() = target4;

    // S2 states carry two excitations; margin of one on top.
    return run_gate(enc, drives, init, target, params, mode, cfg,
                    /*auto_max_excitation=*/3);
}

ScanResult theta_scan(const GateSpec& gate, int n_points,
                      const PhysicalParams& params,
                      const IntegrationConfig& cfg) {
    if (n_points < 2) throw ParameterError("theta scan needs >= 2 points");
    if (gate.kind != GateKind::U1)
        throw ParameterError("theta scan is defined for single-qubit gates");

    const double pi = std::numbers::pi;
    ScanResult result;
    result.theta_grid.resize(n_points);
    result.max_fidelity_identical.resize(n_points);
    result.max_fidelity_individual.resize(n_points);

    IntegrationConfig run_cfg = cfg;
    if (run_cfg.t_end <= 0.0) {
        const GateDriveSet drives =
            single_qubit_drives(params, gate.angle, gate.phase);
        run_cfg.t_end = 1.2 * drives.tau;
    }

    struct Task {
        int point;
        DecoherenceMode mode;
    };
    std::vector<Task> tasks;
    for (int i = 0; i < n_points; ++i) {
        tasks.push_back({i, DecoherenceMode::Collective});
        tasks.push_back({i, DecoherenceMode::Individual});
    }

    auto run_task = [&](const Task& task) {
        const double big_theta = pi * task.point / (n_points - 1);
        result.theta_grid[task.point] = big_theta;
        Eigen::Vector2cd initial;
        initial << std::cos(big_theta), std::sin(big_theta);
        const TimeSeries ts = run_single_qubit_gate(
            gate.angle, gate.phase, initial, params, task.mode, run_cfg);
        const double best = ts.max_fidelity();
        if (task.mode == DecoherenceMode::Collective)
            result.max_fidelity_identical[task.point] = best;
        else
            result.max_fidelity_individual[task.point] = best;
    };

    const int n_threads = scan_thread_count(static_cast<int>(tasks.size()));
    if (n_threads <= 1) {
        for (const auto& task : tasks) run_task(task);
    } else {
        std::vector<std::thread> pool;
        std::atomic<std::size_t> next{0};
        for (int w = 0; w < n_threads; ++w)
            pool.emplace_back([&] {
                for (std::size_t k = next++; k < tasks.size(); k = next++)
                    run_task(tasks[k]);
            });
        for (auto& th : pool) th.join();
    }
    return result;
}

namespace {

std::ostream& csv_stream(std::ostream& os) {
    os << std::setprecision(9) << std::defaultfloat;
    return os;
}

}  // namespace

void write_timeseries_csv(std::ostream& os, const TimeSeries& ts) {
    csv_stream(os) << "time_ns";
    for (const auto& label : ts.labels) os << ",pop_" << label;
    os << ",fidelity\n";
    for (std::size_t r = 0; r < ts.times.size(); ++r) {
        os << ts.times[r];
        for (double p : ts.populations[r]) os << ',' << p;
        os << ',' << ts.fidelity[r] << '\n';
    }
}

void write_scan_csv(std::ostream& os, const ScanResult& sr) {
    const double pi = std::numbers::pi;
    csv_stream(os) << "theta_over_pi,maxF_identical,maxF_individual\n";
    for (std::size_t i = 0; i < sr.theta_grid.size(); ++i)
        os << sr.theta_grid[i] / pi << ',' << sr.max_fidelity_identical[i]
           << ',' << sr.max_fidelity_individual[i] << '\n';
}

void write_matrix_csv(std::ostream& os, const Matrix& m) {
    csv_stream(os);
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
        for (Eigen::Index c = 0; c < m.cols(); ++c) {
            if (c > 0) os << ',';
            os << std::real(m(r, c)) << ',' << std::imag(m(r, c));
        }
        os << '\n';
    }
}

}  // namespace holoqed
