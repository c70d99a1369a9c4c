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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include <Eigen/Eigenvalues>

#include "holoqed/dynamics.hpp"
#include "holoqed/model.hpp"

using namespace holoqed;

namespace {

constexpr double kPi = std::numbers::pi;

Vector basis_state(const SpaceLayout& layout, std::vector<int> multi) {
    Vector v = Vector::Zero(layout.total_dim());
    v(layout.index_of(multi)) = 1.0;
    return v;
}

}  // namespace

TEST_CASE("effective coupling formula") {
    PhysicalParams p;  // G = 1 GHz, Omega_L = 500 MHz, Delta = 8 GHz, 1 GHz

    // independent arithmetic: 1000 * 500 * (1/9000 + 1/8000) MHz
    const double expected_mhz = 1000.0 * 500.0 * (1.0 / 9000.0 + 1.0 / 8000.0);
    CHECK(expected_mhz == doctest::Approx(118.0555555555556).epsilon(1e-12));
    CHECK(effective_coupling(p, +1) ==
          doctest::Approx(mhz(expected_mhz)).epsilon(1e-12));

    // delta -> 0 limit reduces to 2 G Omega_L / Delta = 2pi x 125 MHz
    PhysicalParams small = p;
    small.delta = 0.0;
    CHECK(effective_coupling(small, +1) ==
          doctest::Approx(mhz(125.0)).epsilon(1e-12));

    PhysicalParams off = p;
    off.Omega_L = 0.0;
    CHECK(effective_coupling(off, +1) == 0.0);

    PhysicalParams bad = p;
    bad.Delta = 0.0;
    CHECK_THROWS_AS(effective_coupling(bad, +1), ParameterError);
    bad = p;
    bad.delta = mhz(9000.0);  // Delta + delta_- < 0
    CHECK_THROWS_AS(effective_coupling(bad, -1), ParameterError);
}

TEST_CASE("parameter validation and hierarchy warnings") {
    PhysicalParams p;
    CHECK_NOTHROW(p.validate());
    CHECK(p.hierarchy_warnings().empty());

    PhysicalParams narrow = p;
    narrow.delta = 5.0 * narrow.g;
    CHECK(narrow.hierarchy_warnings().size() == 1);
    narrow.Delta = 2.0 * narrow.delta;
    CHECK(narrow.hierarchy_warnings().size() == 2);

    PhysicalParams bad = p;
    bad.kappa = -1.0;
    CHECK_THROWS_AS(bad.validate(), ParameterError);
}

TEST_CASE("interaction Hamiltonian matrix elements") {
    const SpaceLayout layout = SpaceLayout::cavity_qubits(2, 1);
    const double g = mhz(50.0), delta = mhz(1000.0), phi = kPi / 3.0;
    const std::vector<DriveSpec> drives{{1, g, delta, phi}};

    const Operator h = interaction_hamiltonian(layout, drives, 0.0);
    for (int n = 0; n <= 1; ++n) {
        // <1_j, n| H |0_j, n+1> = g sqrt(n+1) e^{i phi} at t = 0
        const long row = layout.index_of(std::vector<int>{n, 1});
        const long col = layout.index_of(std::vector<int>{n + 1, 0});
        const Complex expected =
            g * std::sqrt(double(n + 1)) * std::exp(Complex(0.0, phi));
        CHECK(std::abs(h.entries(row, col) - expected) < 1e-15);
    }

    CHECK_THROWS_AS(
        interaction_hamiltonian(layout, {{2, g, delta, 0.0}}, 0.0),
        LayoutError);
}

TEST_CASE("interaction Hamiltonian is Hermitian and periodic") {
    std::mt19937 rng(20260310);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    const SpaceLayout layout = SpaceLayout::cavity_qubits(2, 3);
    const double delta = mhz(1000.0);
    const std::vector<DriveSpec> drives{{1, mhz(50.0), delta, 0.3},
                                        {2, mhz(50.0), delta, 1.1},
                                        {2, mhz(30.0), -delta, 0.0},
                                        {3, mhz(30.0), -delta, 0.0}};
    for (int trial = 0; trial < 5; ++trial) {
        const double t = 300.0 * u(rng);
        const Operator h = interaction_hamiltonian(layout, drives, t);
        CHECK(hermiticity_error(h.entries) < 1e-14);
        // all tones share |detuning| = delta, so H has period 2 pi/delta
        const Operator h2 =
            interaction_hamiltonian(layout, drives, t + 2.0 * kPi / delta);
        CHECK((h.entries - h2.entries).cwiseAbs().maxCoeff() < 1e-12);
    }
}

TEST_CASE("stark compensation diagonal") {
    const SpaceLayout layout = SpaceLayout::cavity_qubits(2, 2);
    const double g = mhz(50.0), delta = mhz(1000.0);
    const double shift = g * g / delta;
    const PairDrive pair{1, 2, g, +1, 0.0, 0.0};
    const Operator k = stark_compensation(layout, pair, delta);

    CHECK((k.entries - Matrix(k.entries.diagonal().asDiagonal()))
              .cwiseAbs()
              .maxCoeff() == 0.0);

    // vacuum, one qubit excited: +g^2/delta per excited qubit
    const long i10 = layout.index_of(std::vector<int>{0, 1, 0});
    CHECK(std::real(k.entries(i10, i10)) ==
          doctest::Approx(shift).epsilon(1e-12));
    // one photon, both qubits down: -g^2/delta per qubit
    const long i00 = layout.index_of(std::vector<int>{1, 0, 0});
    CHECK(std::real(k.entries(i00, i00)) ==
          doctest::Approx(-2.0 * shift).epsilon(1e-12));

    // the delta_- pair counter-term has the opposite sign
    const PairDrive minus{1, 2, g, -1, 0.0, 0.0};
    const Operator km = stark_compensation(layout, minus, delta);
    CHECK((k.entries + km.entries).cwiseAbs().maxCoeff() < 1e-18);

    CHECK_THROWS_AS(stark_compensation(layout, pair, 0.0), ParameterError);
}

// Measures the second-order level shift directly from the full dynamics.
// |11> with the cavity in vacuum only couples off-resonantly (the pair
// flip-flop annihilates it), so the accumulated phase of its amplitude is
// the ac Stark shift; the compensation term must cancel it.
TEST_CASE("stark compensation cancels the dynamical shift") {
    const SpaceLayout layout = SpaceLayout::cavity_qubits(2, 2);
    const double g = mhz(50.0), delta = mhz(1000.0);
    const PairDrive pair{1, 2, g, +1, 0.0, 0.0};
    const auto tones = pair_tones(pair, delta);
    const double t_end = 10.0, dt = 2.5e-3;
    const Vector psi0 = basis_state(layout, {0, 1, 1});
    const long idx = layout.index_of(std::vector<int>{0, 1, 1});

    const TimeDependentHamiltonian h_bare =
        build_hamiltonian(layout, tones, {}, delta);
    const TimeDependentHamiltonian h_comp =
        build_hamiltonian(layout, tones, {pair}, delta);

    const Vector psi_bare = propagate_state(h_bare, psi0, t_end, dt);
    const Vector psi_comp = propagate_state(h_comp, psi0, t_end, dt);

    // both qubits excited in a delta_+ pair shift down by 2 g^2/delta,
    // so the amplitude phase advances by +2 g^2 t/delta
    const double expected_phase = 2.0 * g * g * t_end / delta;
    const double phase_bare = std::arg(psi_bare(idx));
    const double phase_comp = std::arg(psi_comp(idx));

    CHECK(std::abs(psi_bare(idx)) > 0.99);
    CHECK(phase_bare == doctest::Approx(expected_phase).epsilon(0.02));
    CHECK(std::abs(phase_comp) < 0.05 * expected_phase);
}

TEST_CASE("effective pair Hamiltonian") {
    const SpaceLayout layout = SpaceLayout::cavity_qubits(1, 2);
    const double g = mhz(50.0), delta = mhz(1000.0);
    const double strength = g * g / delta;

    const Operator h =
        effective_pair_hamiltonian(layout, {1, 2, g, +1, 0.0, 0.0}, delta);
    const Vector v10 = basis_state(layout, {0, 1, 0});
    const Vector v01 = basis_state(layout, {0, 0, 1});
    const Vector v00 = basis_state(layout, {0, 0, 0});
    const Vector v11 = basis_state(layout, {0, 1, 1});

    CHECK(std::abs(Complex(v01.adjoint() * h.entries * v10) - strength) <
          1e-15);
    CHECK((h.entries * v00).norm() == 0.0);
    CHECK((h.entries * v11).norm() == 0.0);

    // eigenvalues +-g^2/delta on the single-excitation pair subspace
    const Vector plus = (v10 + v01) / std::sqrt(2.0);
    const Vector minus = (v10 - v01) / std::sqrt(2.0);
    CHECK((h.entries * plus - strength * plus).norm() < 1e-15);
    CHECK((h.entries * minus + strength * minus).norm() < 1e-15);

    // the delta_- pair flips the sign of the whole term
    const Operator hm =
        effective_pair_hamiltonian(layout, {1, 2, g, -1, 0.0, 0.0}, delta);
    CHECK((h.entries + hm.entries).cwiseAbs().maxCoeff() < 1e-18);

    // phase convention: <01|H|10> = (g^2/delta) e^{i (phase_m - phase_n)}
    const Operator hp = effective_pair_hamiltonian(
        layout, {1, 2, g, +1, 0.7, 0.2}, delta);
    const Complex elem(v01.adjoint() * hp.entries * v10);
    CHECK(std::abs(elem - strength * std::exp(Complex(0.0, 0.5))) < 1e-15);
}

TEST_CASE("single-qubit DFS Hamiltonian") {
    const double g = mhz(50.0), delta = mhz(1000.0);

    // equal couplings: theta = pi/2, lambda = sqrt(2) g^2/delta
    const Operator h = h1_dfs(g, g, delta, 0.0);
    const double lambda = std::sqrt(2.0) * g * g / delta;
    CHECK(lambda == doctest::Approx(mhz(3.5355339059327378)).epsilon(1e-12));
    CHECK(std::abs(h.entries(2, 0) - g * g / delta) < 1e-15);
    CHECK(std::abs(h.entries(2, 1) + g * g / delta) < 1e-15);
    CHECK(is_hermitian(h));

    // spectrum is {0, +-lambda}
    Eigen::SelfAdjointEigenSolver<Matrix> es(h.entries);
    CHECK(es.eigenvalues()(0) == doctest::Approx(-lambda).epsilon(1e-12));
    CHECK(std::abs(es.eigenvalues()(1)) < 1e-15 * lambda + 1e-18);
    CHECK(es.eigenvalues()(2) == doctest::Approx(lambda).epsilon(1e-12));

    // g23 = 0: theta = pi, the sin leg carries everything
    const Operator hp = h1_dfs(g, 0.0, delta, 0.4);
    const double lam = g * g / delta;
    CHECK(std::abs(hp.entries(2, 0) - lam * std::exp(Complex(0.0, 0.4))) <
          1e-15);
    CHECK(std::abs(hp.entries(2, 1)) < 1e-15);

    CHECK_THROWS_AS(h1_dfs(0.0, 0.0, delta, 0.0), ParameterError);
    CHECK_THROWS_AS(h1_dfs(g, g, 0.0, 0.0), ParameterError);
}

TEST_CASE("two-qubit DFS Hamiltonian") {
    const double g = mhz(50.0), delta = mhz(1000.0);

    auto [ha, hb] = h2_dfs_parts(g, g, delta, 0.3);
    CHECK(commutator(ha, hb).entries.cwiseAbs().maxCoeff() == 0.0);
    CHECK(is_hermitian(ha));
    CHECK(is_hermitian(hb));

    // equal couplings: vartheta = pi/2, entries g^2/delta
    const Operator h = h2_dfs(g, g, delta, 0.0);
    CHECK(std::abs(h.entries(4, 0) - g * g / delta) < 1e-15);
    CHECK(std::abs(h.entries(4, 1) + g * g / delta) < 1e-15);
    CHECK(std::abs(h.entries(5, 3) - g * g / delta) < 1e-15);
    CHECK(std::abs(h.entries(5, 2) + g * g / delta) < 1e-15);

    // kernel is exactly two-dimensional (one dark state per Lambda block)
    // and no bare logical basis state is annihilated when sin != 0
    const Operator hg = h2_dfs(g, 0.7 * g, delta, 0.2);
    Eigen::SelfAdjointEigenSolver<Matrix> es(hg.entries);
    int zeros = 0;
    for (int i = 0; i < 6; ++i)
        if (std::abs(es.eigenvalues()(i)) < 1e-15) ++zeros;
    CHECK(zeros == 2);
    for (int i = 0; i < 4; ++i) {
        Vector e = Vector::Zero(6);
        e(i) = 1.0;
        CHECK((hg.entries * e).norm() > 1e-6);
    }
}

TEST_CASE("cached Hamiltonian matches the direct construction") {
    const SpaceLayout layout = SpaceLayout::cavity_qubits(2, 3);
    const double g = mhz(50.0), delta = mhz(1000.0);
    const std::vector<PairDrive> pairs{{1, 2, g, +1, 0.4, 0.0},
                                       {2, 3, g, -1, 0.0, 0.0}};
    std::vector<DriveSpec> tones;
    for (const auto& p : pairs)
        for (const auto& tone : pair_tones(p, delta)) tones.push_back(tone);

    const TimeDependentHamiltonian h =
        build_hamiltonian(layout, tones, pairs, delta);
    for (double t : {0.0, 0.123, 7.7}) {
        Matrix direct = interaction_hamiltonian(layout, tones, t).entries;
        for (const auto& p : pairs)
            direct += stark_compensation(layout, p, delta).entries;
        CHECK((h.at(t) - direct).cwiseAbs().maxCoeff() < 1e-16);
    }
}
