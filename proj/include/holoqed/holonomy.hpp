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

#ifndef HOLOQED_HOLONOMY_HPP
#define HOLOQED_HOLONOMY_HPP

#include <string>
#include <utility>
#include <vector>

#include "holoqed/hilbert.hpp"

namespace holoqed {

// Maps logical labels to physical computational-basis bitstrings inside a
// qubit register. Every member of one encoding shares the same collective
// S^z eigenvalue, which is what makes the subspace decoherence-free under
// collective dephasing.
struct DFSEncoding {
    std::string name;
    std::vector<std::pair<std::string, std::vector<int>>> basis;
    SpaceLayout layout;  // qubit register the bitstrings live in

    int size() const { return static_cast<int>(basis.size()); }
    int label_index(const std::string& label) const;
    // Basis index of the labeled bitstring within the qubit register.
    long physical_index(int member) const;
    // Register state for a vector of logical coefficients.
    Vector logical_to_register(const Vector& coeffs) const;
    // Common S^z eigenvalue of all members (throws if not shared).
    int collective_z_eigenvalue() const;
};

// S1: |0>_L = |100>, |1>_L = |001>, ancilla |a1> = |010| on three qubits.
DFSEncoding s1_encoding();
// S2: |00>_L = |100100>, |01>_L = |100001>, |10>_L = |001100>,
// |11>_L = |001001>, |a2> = |101000>, |a3> = |000101> on six qubits.
DFSEncoding s2_encoding();

// Register state embedded into a cavity + qubits layout with the cavity in
// Fock state `photon`.
Vector encoding_to_full(const DFSEncoding& enc, const SpaceLayout& full,
                        const Vector& logical_coeffs, int photon = 0);

// Logical-basis operator lifted to the full layout (identity on the cavity).
Operator embed_logical(const DFSEncoding& enc, const SpaceLayout& full,
                       const Matrix& logical_op);

enum class GateKind { U1, U2 };

struct GateSpec {
    GateKind kind;
    double angle;  // theta (U1) or vartheta (U2), radians
    double phase;  // phi, radians
};

// U1(theta, phi) = [[cos t, sin t e^{-i p}], [sin t e^{i p}, -cos t]].
Eigen::Matrix2cd u1_matrix(double theta, double phi);

// Block gate on (|00>, |01>, |10>, |11>): upper block U1-like, lower block
// with the cosines negated.
Eigen::Matrix4cd u2_matrix(double vartheta, double phi);

// Dressed logical states:
//   |d> = cos(theta/2)|0>_L + sin(theta/2) e^{i phi} |1>_L
//   |b> = sin(theta/2) e^{-i phi} |0>_L - cos(theta/2)|1>_L.
std::pair<Eigen::Vector2cd, Eigen::Vector2cd> dark_bright(double theta,
                                                          double phi);

struct GateParams {
    double lambda;  // effective Rabi frequency, rad/ns
    double theta;   // mixing angle, radians
};

// lambda = sqrt(g_a^4 + g_b^4)/delta, theta = 2 atan(g_a^2/g_b^2).
GateParams gate_params(double g_a, double g_b, double delta);

// Inverse helper: the g_a that realizes `theta` with g_b held fixed,
// g_a = g_b * sqrt(tan(theta/2)).
double couplings_for(double theta, double g_b);

// Cyclic-evolution duration tau = pi / lambda.
double pulse_time(double lambda);

// exp(-i h1 tau) restricted to the logical span (|0>_L, |1>_L). Requires
// the cyclic condition lambda*tau = pi, checked from the spectrum of h1.
Eigen::Matrix2cd holonomic_u1_from_h1(const Operator& h1, double tau);

// max over sampled t in [0, tau] and i,j of |<psi_i(t)| H |psi_j(t)>| with
// |psi_i(t)> = exp(-i H t)|i>; zero means the evolution is purely geometric.
double parallel_transport_check(const Matrix& h,
                                const std::vector<Vector>& subspace,
                                double tau, int n_samples);

// Ordinary matrix product of a gate sequence; later gates act on the left.
Matrix compose(const std::vector<Matrix>& gates);

// (I (x) U1(pi/4, pi/2)) * U2(pi/4, pi/2); evaluates to
// block-diag(I2, -i X), i.e. a CNOT up to a controlled phase.
Eigen::Matrix4cd cnot_construction();

// Divides by the phase of the largest-magnitude entry.
Matrix strip_global_phase(const Matrix& m);

}  // namespace holoqed

#endif  // HOLOQED_HOLONOMY_HPP
