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

#ifndef HOLOQED_ANALYSIS_HPP
#define HOLOQED_ANALYSIS_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "holoqed/dynamics.hpp"
#include "holoqed/holonomy.hpp"

namespace holoqed {

// Sampled gate trajectory: logical-state populations and the fidelity
// against the analytic target state.
struct TimeSeries {
    std::vector<std::string> labels;
    std::vector<double> times;                     // ns
    std::vector<std::vector<double>> populations;  // one row per sample
    std::vector<double> fidelity;

    double final_fidelity() const;
    double max_fidelity() const;
};

struct ScanResult {
    std::vector<double> theta_grid;  // radians
    std::vector<double> max_fidelity_identical;
    std::vector<double> max_fidelity_individual;
};

// Reduced qubit-register density matrix Tr_cavity(rho); the identity when
// the layout has no cavity slot.
Matrix trace_out_cavity(const DensityState& state);

// p_label = <label| Tr_cavity(rho) |label> for every encoding member.
std::vector<double> logical_populations(const DensityState& state,
                                        const DFSEncoding& enc);

// F = <target| Tr_cavity(rho) |target> with `target` given as logical
// coefficients over the encoding basis.
double state_fidelity(const DensityState& state, const Vector& target,
                      const DFSEncoding& enc);

// Population that remains inside span(encoding) (x) |vacuum>; one minus
// this is the instantaneous leakage.
double dfs_vacuum_weight(const DensityState& state, const DFSEncoding& enc);

// Tones, compensation pairs and pulse timing for one holonomic gate.
struct GateDriveSet {
    std::vector<DriveSpec> tones;
    std::vector<PairDrive> pairs;
    double lambda;  // rad/ns
    double tau;     // ns
};

// Drive assignment for the single-qubit gate: pair (1,2) at +delta with
// phase difference phi, pair (2,3) at -delta with equal phases. g23 is held
// at params.g and g12 solves the mixing angle.
GateDriveSet single_qubit_drives(const PhysicalParams& params, double theta,
                                 double phi);

// Two-qubit analogue: pair (3,4) at +delta with phase difference phi,
// pair (3,6) at -delta; g36 = params.g.
GateDriveSet two_qubit_drives(const PhysicalParams& params, double vartheta,
                              double phi);

// Full-model Lindblad run of U1(theta, phi) from a logical initial state
// (coefficients over |0>_L, |1>_L), cavity in vacuum. The fidelity column
// tracks the analytic target u1_matrix(theta, phi) * initial.
// cfg.t_end <= 0 runs for exactly the pulse time tau.
// cfg.max_excitation < 0 simulates the full space.
TimeSeries run_single_qubit_gate(double theta, double phi,
                                 const Eigen::Vector2cd& initial,
                                 const PhysicalParams& params,
                                 DecoherenceMode mode,
                                 const IntegrationConfig& cfg);

// Same for U2 on six qubits. cfg.max_excitation < 0 defaults to the
// excitation-restricted space with a margin of one above the initial
// excitation (the restriction is exact; see ExcitationRestriction).
TimeSeries run_two_qubit_gate(double vartheta, double phi,
                              const Eigen::Vector4cd& initial,
                              const PhysicalParams& params,
                              DecoherenceMode mode,
                              const IntegrationConfig& cfg);

// Maximum fidelity over [0, 1.2*tau] as a function of Theta in the initial
// state cos(Theta)|0>_L + sin(Theta)|1>_L, for identical (collective) and
// individual (0.8/1.0/1.2) decoherence rates. Points run concurrently;
// results are ordered by grid index and independent of the thread count.
ScanResult theta_scan(const GateSpec& gate, int n_points,
                      const PhysicalParams& params,
                      const IntegrationConfig& cfg);

// CSV output, 9 significant digits, deterministic byte-for-byte.
void write_timeseries_csv(std::ostream& os, const TimeSeries& ts);
void write_scan_csv(std::ostream& os, const ScanResult& sr);
// Complex entries flattened as re,im pairs.
void write_matrix_csv(std::ostream& os, const Matrix& m);

}  // namespace holoqed

#endif  // HOLOQED_ANALYSIS_HPP
