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

#include "holoqed/model.hpp"

#include <cmath>

namespace holoqed {

void PhysicalParams::validate() const {
    auto nonneg = [](double v, const char* name) {
        if (v < 0.0 || !std::isfinite(v))
            throw ParameterError(std::string(name) +
                                 " must be a finite non-negative frequency");
    };
    nonneg(G, "G");
    nonneg(Omega_L, "Omega_L");
    nonneg(Delta, "Delta");
    nonneg(delta, "delta");
    nonneg(g, "g");
    nonneg(kappa, "kappa");
    nonneg(gamma, "gamma");
    nonneg(gamma_phi, "gamma_phi");
    for (double m : rate_multipliers)
        if (m < 0.0 || !std::isfinite(m))
            throw ParameterError("rate multipliers must be non-negative");
}

std::vector<std::string> PhysicalParams::hierarchy_warnings() const {
    std::vector<std::string> warnings;
    if (delta <= 10.0 * g)
        warnings.push_back(
            "delta <= 10*g: outside the dispersive regime delta >> g, the "
            "effective pair Hamiltonian becomes unreliable");
    if (Delta <= 4.0 * delta)
        warnings.push_back(
            "Delta <= 4*delta: outside the Raman regime delta << Delta, "
            "adiabatic elimination of |e> becomes unreliable");
    return warnings;
}

double PhysicalParams::multiplier(int qubit) const {
    if (rate_multipliers.empty()) return 1.0;
    return rate_multipliers[(qubit - 1) % rate_multipliers.size()];
}

double effective_coupling(const PhysicalParams& params, int detuning_sign) {
    if (detuning_sign != 1 && detuning_sign != -1)
        throw ParameterError("detuning sign must be +1 or -1");
    if (params.Delta <= 0.0)
        throw ParameterError("effective coupling needs Delta > 0");
    const double shifted = params.Delta + detuning_sign * params.delta;
    if (shifted <= 0.0)
        throw ParameterError("effective coupling needs Delta + delta_pm > 0");
    return params.G * params.Omega_L * (1.0 / shifted + 1.0 / params.Delta);
}

namespace {

// g * a sigma_q^+ embedded in the full layout; the e^{-i(omega t - phi)}
// side of one tone.
Matrix tone_matrix(const SpaceLayout& layout, const DriveSpec& drive) {
    if (!layout.has_cavity())
        throw LayoutError("interaction Hamiltonian needs a cavity slot");
    const Matrix a =
        embed(annihilation(layout.cavity_dim() - 1), 0, layout).entries;
    const Matrix sp =
        embed(qubit_op(QubitOp::SigmaPlus), layout.qubit_site(drive.qubit),
              layout)
            .entries;
    return drive.g * (a * sp);
}

}  // namespace

Operator interaction_hamiltonian(const SpaceLayout& layout,
                                 const std::vector<DriveSpec>& drives,
                                 double t) {
    Matrix h = Matrix::Zero(layout.total_dim(), layout.total_dim());
    for (const auto& d : drives) {
        const Matrix m = tone_matrix(layout, d);
        const Complex z = std::exp(Complex(0.0, -(d.detuning * t - d.phase)));
        h += z * m + std::conj(z) * m.adjoint();
    }
    return {layout, std::move(h)};
}

Operator stark_compensation(const SpaceLayout& layout, const PairDrive& pair,
                            double delta) {
    if (delta <= 0.0)
        throw ParameterError("stark compensation needs delta > 0");
    if (pair.qubit_m == pair.qubit_n)
        throw ParameterError("pair drive needs two distinct qubits");
    const double strength =
        pair.g * pair.g / (pair.detuning_sign * delta);

    const int n_max = layout.cavity_dim() - 1;
    const Matrix a = annihilation(n_max).entries;
    const Operator num{SpaceLayout({n_max + 1}), a.adjoint() * a};
    const Operator num1{SpaceLayout({n_max + 1}), a * a.adjoint()};
    const Matrix n_full = embed(num, 0, layout).entries;
    const Matrix n1_full = embed(num1, 0, layout).entries;

    Matrix k = Matrix::Zero(layout.total_dim(), layout.total_dim());
    for (int q : {pair.qubit_m, pair.qubit_n}) {
        const Matrix p0 =
            embed(qubit_op(QubitOp::Proj0), layout.qubit_site(q), layout)
                .entries;
        const Matrix p1 =
            embed(qubit_op(QubitOp::Proj1), layout.qubit_site(q), layout)
                .entries;
        k += strength * (-(n_full * p0) + n1_full * p1);
    }
    return {layout, std::move(k)};
}

Operator effective_pair_hamiltonian(const SpaceLayout& layout,
                                    const PairDrive& pair, double delta) {
    if (delta <= 0.0)
        throw ParameterError("effective pair Hamiltonian needs delta > 0");
    if (pair.qubit_m == pair.qubit_n)
        throw ParameterError("pair drive needs two distinct qubits");
    const double strength = pair.g * pair.g / (pair.detuning_sign * delta);
    const double phi_mn = pair.phase_m - pair.phase_n;

    const Matrix sm =
        embed(qubit_op(QubitOp::SigmaMinus), layout.qubit_site(pair.qubit_m),
              layout)
            .entries;
    const Matrix sp =
        embed(qubit_op(QubitOp::SigmaPlus), layout.qubit_site(pair.qubit_n),
              layout)
            .entries;

    const Matrix flip = std::exp(Complex(0.0, phi_mn)) * (sm * sp);
    Matrix h = strength * (flip + flip.adjoint());
    return {layout, std::move(h)};
}

namespace {

struct GateAngles {
    double lambda;
    double half_angle;  // theta/2
};

GateAngles dfs_angles(double g_a, double g_b, double delta) {
    if (delta <= 0.0) throw ParameterError("DFS Hamiltonian needs delta > 0");
    const double a2 = g_a * g_a, b2 = g_b * g_b;
    if (a2 == 0.0 && b2 == 0.0)
        throw ParameterError("both couplings vanish: Hamiltonian degenerate");
    return {std::sqrt(a2 * a2 + b2 * b2) / delta, std::atan2(a2, b2)};
}

}  // namespace

Operator h1_dfs(double g12, double g23, double delta, double phi) {
    const auto [lambda, half] = dfs_angles(g12, g23, delta);
    Matrix h = Matrix::Zero(3, 3);
    // basis order (|0>_L, |1>_L, |a1>)
    h(2, 0) = lambda * std::sin(half) * std::exp(Complex(0.0, phi));
    h(2, 1) = -lambda * std::cos(half);
    h(0, 2) = std::conj(h(2, 0));
    h(1, 2) = std::conj(h(2, 1));
    return {SpaceLayout({3}), std::move(h)};
}

std::pair<Operator, Operator> h2_dfs_parts(double g34, double g36,
                                           double delta, double phi) {
    const auto [lambda, half] = dfs_angles(g34, g36, delta);
    (void)lambda;
    const Complex s = std::sin(half) * std::exp(Complex(0.0, phi));
    const double c = std::cos(half);
    // basis order (|00>, |01>, |10>, |11>, |a2>, |a3>)
    Matrix ha = Matrix::Zero(6, 6);
    ha(4, 0) = s;
    ha(4, 1) = -c;
    ha(0, 4) = std::conj(ha(4, 0));
    ha(1, 4) = std::conj(ha(4, 1));
    Matrix hb = Matrix::Zero(6, 6);
    hb(5, 3) = s;
    hb(5, 2) = -c;
    hb(3, 5) = std::conj(hb(5, 3));
    hb(2, 5) = std::conj(hb(5, 2));
    const SpaceLayout dfs({6});
    return {Operator{dfs, std::move(ha)}, Operator{dfs, std::move(hb)}};
}

Operator h2_dfs(double g34, double g36, double delta, double phi) {
    const auto [lambda, half] = dfs_angles(g34, g36, delta);
    (void)half;
    auto [ha, hb] = h2_dfs_parts(g34, g36, delta, phi);
    return {ha.layout, lambda * (ha.entries + hb.entries)};
}

std::vector<DriveSpec> pair_tones(const PairDrive& pair, double delta) {
    if (pair.qubit_m == pair.qubit_n)
        throw ParameterError("pair drive needs two distinct qubits");
    const double signed_delta = pair.detuning_sign * delta;
    return {{pair.qubit_m, pair.g, signed_delta, pair.phase_m},
            {pair.qubit_n, pair.g, signed_delta, pair.phase_n}};
}

TimeDependentHamiltonian::TimeDependentHamiltonian(long dim)
    : dim_(dim), static_(Matrix::Zero(dim, dim)) {}

void TimeDependentHamiltonian::add_tone(const Matrix& m, double omega,
                                        double phase) {
    if (m.rows() != dim_ || m.cols() != dim_)
        throw LayoutError("tone matrix dimension mismatch");
    tones_.push_back({m, m.adjoint(), omega, phase});
}

void TimeDependentHamiltonian::add_static(const Matrix& k) {
    if (k.rows() != dim_ || k.cols() != dim_)
        throw LayoutError("static term dimension mismatch");
    static_ += k;
}

void TimeDependentHamiltonian::evaluate(double t, Matrix& out) const {
    out = static_;
    for (const auto& tone : tones_) {
        const Complex z =
            std::exp(Complex(0.0, -(tone.omega * t - tone.phase)));
        out += z * tone.m + std::conj(z) * tone.m_dag;
    }
}

Matrix TimeDependentHamiltonian::at(double t) const {
    Matrix out(dim_, dim_);
    evaluate(t, out);
    return out;
}

TimeDependentHamiltonian TimeDependentHamiltonian::transformed(
    const std::function<Matrix(const Matrix&)>& f) const {
    Matrix k = f(static_);
    TimeDependentHamiltonian mapped(k.rows());
    mapped.add_static(k);
    for (const auto& tone : tones_)
        mapped.add_tone(f(tone.m), tone.omega, tone.phase);
    return mapped;
}

TimeDependentHamiltonian build_hamiltonian(const SpaceLayout& layout,
                                           const std::vector<DriveSpec>& drives,
                                           const std::vector<PairDrive>& pairs,
                                           double delta) {
    TimeDependentHamiltonian h(layout.total_dim());
    for (const auto& d : drives)
        h.add_tone(tone_matrix(layout, d), d.detuning, d.phase);
    for (const auto& p : pairs)
        h.add_static(stark_compensation(layout, p, delta).entries);
    return h;
}

}  // namespace holoqed
