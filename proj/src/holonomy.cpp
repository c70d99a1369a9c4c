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

#include "holoqed/holonomy.hpp"

#include <cmath>
#include <numbers>

#include <Eigen/Eigenvalues>

namespace holoqed {

int DFSEncoding::label_index(const std::string& label) const {
    for (int i = 0; i < size(); ++i)
        if (basis[i].first == label) return i;
    throw ParameterError("unknown logical label: " + label);
}

long DFSEncoding::physical_index(int member) const {
    if (member < 0 || member >= size())
        throw ParameterError("encoding member index out of range");
    const auto& bits = basis[member].second;
    return layout.index_of(bits);
}

Vector DFSEncoding::logical_to_register(const Vector& coeffs) const {
    if (coeffs.size() != size())
        throw LayoutError("coefficient count does not match encoding size");
    Vector v = Vector::Zero(layout.total_dim());
    for (int i = 0; i < size(); ++i) v(physical_index(i)) = coeffs(i);
    return v;
}

int DFSEncoding::collective_z_eigenvalue() const {
    int shared = 0;
    for (int i = 0; i < size(); ++i) {
        int z = 0;
        for (int bit : basis[i].second) z += bit ? 1 : -1;
        if (i == 0)
            shared = z;
        else if (z != shared)
            throw Error("encoding members do not share an S^z eigenvalue");
    }
    return shared;
}

DFSEncoding s1_encoding() {
    return {"S1",
            {{"0L", {1, 0, 0}}, {"1L", {0, 0, 1}}, {"a1", {0, 1, 0}}},
            SpaceLayout::qubits(3)};
}

DFSEncoding s2_encoding() {
    return {"S2",
            {{"00L", {1, 0, 0, 1, 0, 0}},
             {"01L", {1, 0, 0, 0, 0, 1}},
             {"10L", {0, 0, 1, 1, 0, 0}},
             {"11L", {0, 0, 1, 0, 0, 1}},
             {"a2", {1, 0, 1, 0, 0, 0}},
             {"a3", {0, 0, 0, 1, 0, 1}}},
            SpaceLayout::qubits(6)};
}

namespace {

// Number of register basis states, and offset arithmetic for a
// cavity (x) qubits layout: full index = photon * reg_dim + reg_index.
long register_dim(const SpaceLayout& full) {
    if (!full.has_cavity())
        throw LayoutError("expected a cavity + qubits layout");
    return full.total_dim() / full.cavity_dim();
}

void check_register(const DFSEncoding& enc, const SpaceLayout& full) {
    if (register_dim(full) != enc.layout.total_dim() ||
        full.qubit_count() != enc.layout.qubit_count())
        throw LayoutError("layout qubit register does not match encoding");
}

}  // namespace

Vector encoding_to_full(const DFSEncoding& enc, const SpaceLayout& full,
                        const Vector& logical_coeffs, int photon) {
    check_register(enc, full);
    if (photon < 0 || photon >= full.cavity_dim())
        throw LayoutError("photon number exceeds the cavity cutoff");
    const long reg = register_dim(full);
    Vector v = Vector::Zero(full.total_dim());
    for (int i = 0; i < enc.size(); ++i)
        v(photon * reg + enc.physical_index(i)) = logical_coeffs(i);
    return v;
}

Operator embed_logical(const DFSEncoding& enc, const SpaceLayout& full,
                       const Matrix& logical_op) {
    check_register(enc, full);
    if (logical_op.rows() != enc.size() || logical_op.cols() != enc.size())
        throw LayoutError("logical operator does not match encoding size");
    const long reg = register_dim(full);
    Matrix out = Matrix::Zero(full.total_dim(), full.total_dim());
    for (int n = 0; n < full.cavity_dim(); ++n)
        for (int i = 0; i < enc.size(); ++i)
            for (int j = 0; j < enc.size(); ++j)
                out(n * reg + enc.physical_index(i),
                    n * reg + enc.physical_index(j)) = logical_op(i, j);
    return {full, std::move(out)};
}

Eigen::Matrix2cd u1_matrix(double theta, double phi) {
    const double c = std::cos(theta), s = std::sin(theta);
    const Complex e = std::exp(Complex(0.0, phi));
    Eigen::Matrix2cd u;
    u << c, s * std::conj(e), s * e, -c;
    return u;
}

Eigen::Matrix4cd u2_matrix(double vartheta, double phi) {
    const double c = std::cos(vartheta), s = std::sin(vartheta);
    const Complex e = std::exp(Complex(0.0, phi));
    Eigen::Matrix4cd u = Eigen::Matrix4cd::Zero();
    u(0, 0) = c;
    u(0, 1) = s * std::conj(e);
    u(1, 0) = s * e;
    u(1, 1) = -c;
    u(2, 2) = -c;
    u(2, 3) = s * std::conj(e);
    u(3, 2) = s * e;
    u(3, 3) = c;
    return u;
}

std::pair<Eigen::Vector2cd, Eigen::Vector2cd> dark_bright(double theta,
                                                          double phi) {
    const double c = std::cos(theta / 2.0), s = std::sin(theta / 2.0);
    const Complex e = std::exp(Complex(0.0, phi));
    Eigen::Vector2cd d, b;
    d << c, s * e;
    b << s * std::conj(e), -c;
    return {d, b};
}

GateParams gate_params(double g_a, double g_b, double delta) {
    if (delta <= 0.0) throw ParameterError("gate parameters need delta > 0");
    const double a2 = g_a * g_a, b2 = g_b * g_b;
    if (a2 == 0.0 && b2 == 0.0)
        throw ParameterError("both couplings vanish");
    return {std::sqrt(a2 * a2 + b2 * b2) / delta, 2.0 * std::atan2(a2, b2)};
}

double couplings_for(double theta, double g_b) {
    if (g_b == 0.0)
        throw ParameterError("cannot solve for g_a with g_b = 0");
    const double t = std::tan(theta / 2.0);
    if (t < 0.0)
        throw ParameterError("theta/2 must lie in [0, pi/2] for real couplings");
    return g_b * std::sqrt(t);
}

double pulse_time(double lambda) {
    if (lambda <= 0.0) throw ParameterError("pulse time needs lambda > 0");
    const double pi = std::numbers::pi;
    return pi / lambda;
}

Eigen::Matrix2cd holonomic_u1_from_h1(const Operator& h1, double tau) {
    if (h1.dim() != 3)
        throw LayoutError("expected a 3-dim DFS Hamiltonian");
    Eigen::SelfAdjointEigenSolver<Matrix> es(h1.entries);
    const double lambda = es.eigenvalues().cwiseAbs().maxCoeff();
    const double pi = std::numbers::pi;
    if (std::abs(lambda * tau - pi) > 1e-9)
        throw CyclicityError("lambda*tau differs from pi: evolution not cyclic");
    const Matrix u = hermitian_propagator(h1.entries, tau);
    return u.topLeftCorner<2, 2>();
}

double parallel_transport_check(const Matrix& h,
                                const std::vector<Vector>& subspace,
                                double tau, int n_samples) {
    if (n_samples < 2)
        throw ParameterError("parallel transport check needs >= 2 samples");
    double worst = 0.0;
    for (int k = 0; k < n_samples; ++k) {
        const double t = tau * k / (n_samples - 1);
        const Matrix u = hermitian_propagator(h, t);
        for (const auto& vi : subspace)
            for (const auto& vj : subspace) {
                const Complex elem = (u * vi).adjoint() * h * (u * vj);
                worst = std::max(worst, std::abs(elem));
            }
    }
    return worst;
}

Matrix compose(const std::vector<Matrix>& gates) {
    if (gates.empty()) throw ParameterError("cannot compose an empty sequence");
    Matrix product = gates.front();
    for (std::size_t k = 1; k < gates.size(); ++k) {
        if (gates[k].cols() != product.rows())
            throw LayoutError("gate dimensions are not conformable");
        product = gates[k] * product;
    }
    return product;
}

Eigen::Matrix4cd cnot_construction() {
    const double pi = std::numbers::pi;
    const Eigen::Matrix2cd u1 = u1_matrix(pi / 4.0, pi / 2.0);
    Eigen::Matrix4cd lifted = Eigen::Matrix4cd::Zero();
    lifted.topLeftCorner<2, 2>() = u1;      // logical qubit 1 in |0>
    lifted.bottomRightCorner<2, 2>() = u1;  // logical qubit 1 in |1>
    return lifted * u2_matrix(pi / 4.0, pi / 2.0);
}

Matrix strip_global_phase(const Matrix& m) {
    Eigen::Index row = 0, col = 0;
    m.cwiseAbs().maxCoeff(&row, &col);
    const Complex top = m(row, col);
    if (std::abs(top) == 0.0) return m;
    return m * (std::abs(top) / top);
}

}  // namespace holoqed
