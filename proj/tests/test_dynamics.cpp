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

#include "holoqed/analysis.hpp"
#include "holoqed/dynamics.hpp"
#include "holoqed/holonomy.hpp"

using namespace holoqed;

namespace {

constexpr double kPi = std::numbers::pi;

Vector basis_state(const SpaceLayout& layout, std::vector<int> multi) {
    Vector v = Vector::Zero(layout.total_dim());
    v(layout.index_of(multi)) = 1.0;
    return v;
}

Matrix random_density(long dim, std::mt19937& rng) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    Matrix m(dim, dim);
    for (long r = 0; r < dim; ++r)
        for (long c = 0; c < dim; ++c) m(r, c) = Complex(u(rng), u(rng));
    Matrix rho = m * m.adjoint();
    return rho / rho.trace();
}

}  // namespace

TEST_CASE("lindblad rhs: pure cavity decay") {
    const SpaceLayout layout = SpaceLayout::cavity_qubits(2, 1);
    const double kappa = mhz(0.5);
    const std::vector<CollapseChannel> channels{
        {embed(annihilation(2), 0, layout), kappa}};

    const Vector fock1 = basis_state(layout, {1, 0});
    const Matrix rho = fock1 * fock1.adjoint();
    const Matrix h = Matrix::Zero(6, 6);
    const Matrix out = lindblad_rhs(rho, h, channels);

    const long idx = layout.index_of(std::vector<int>{1, 0});
    CHECK(std::real(out(idx, idx)) == doctest::Approx(-kappa).epsilon(1e-12));
    CHECK(std::abs(out.trace()) < 1e-18);
}

TEST_CASE("lindblad rhs: unitary part and trace preservation") {
    std::mt19937 rng(20260330);
    const SpaceLayout layout = SpaceLayout::cavity_qubits(1, 2);
    const long dim = layout.total_dim();

    Matrix h = random_density(dim, rng);  // hermitian enough
    h = Matrix(0.5 * (h + h.adjoint()));
    const Matrix rho = random_density(dim, rng);

    // all rates zero: rhs = -i[H, rho]
    const Matrix no_noise = lindblad_rhs(rho, h, {});
    const Matrix comm = Complex(0.0, -1.0) * (h * rho - rho * h);
    CHECK((no_noise - comm).cwiseAbs().maxCoeff() < 1e-15);
    CHECK(std::abs(no_noise.trace()) < 1e-12);

    // random channels keep the trace exactly
    std::vector<CollapseChannel> channels;
    channels.push_back({collective_op(CollectiveOp::SMinus, layout), 0.37});
    channels.push_back({embed(annihilation(1), 0, layout), 1.21});
    const Matrix out = lindblad_rhs(rho, h, channels);
    CHECK(std::abs(out.trace()) < 1e-12);
}

TEST_CASE("integrator fast path matches the plain dissipator") {
    // a short stiff-free run cross-checked against manual RK4 steps built
    // from the public lindblad_rhs
    const SpaceLayout layout = SpaceLayout::cavity_qubits(1, 2);
    const double delta = mhz(1000.0);
    const std::vector<DriveSpec> tones{{1, mhz(50.0), delta, 0.2},
                                       {2, mhz(50.0), delta, 0.0}};
    const TimeDependentHamiltonian h = build_hamiltonian(layout, tones, {},
                                                         delta);
    std::vector<CollapseChannel> channels =
        build_channels(layout, PhysicalParams{}, DecoherenceMode::Collective);
    // exaggerated rates so the dissipator actually matters
    for (auto& ch : channels) ch.rate = 0.05;

    const Vector psi0 = basis_state(layout, {0, 1, 0});
    const DensityState rho0 = DensityState::pure(layout, psi0);

    IntegrationConfig cfg;
    cfg.dt = 1e-3;
    cfg.t_end = 0.1;
    cfg.sample_stride = 1000000;  // only endpoints
    const auto samples = integrate_master(h, rho0, channels, cfg);

    Matrix rho = rho0.rho;
    const long steps = static_cast<long>(std::round(cfg.t_end / cfg.dt));
    for (long s = 0; s < steps; ++s) {
        const double t = s * cfg.dt;
        const Matrix k1 = lindblad_rhs(rho, h.at(t), channels);
        const Matrix k2 = lindblad_rhs(Matrix(rho + 0.5 * cfg.dt * k1),
                                       h.at(t + 0.5 * cfg.dt), channels);
        const Matrix k3 = lindblad_rhs(Matrix(rho + 0.5 * cfg.dt * k2),
                                       h.at(t + 0.5 * cfg.dt), channels);
        const Matrix k4 = lindblad_rhs(Matrix(rho + cfg.dt * k3),
                                       h.at(t + cfg.dt), channels);
        rho += (cfg.dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    }
    CHECK((samples.back().state.rho - rho).cwiseAbs().maxCoeff() < 1e-13);
}

TEST_CASE("free evolution is exactly stationary") {
    const SpaceLayout layout = SpaceLayout::cavity_qubits(1, 1);
    TimeDependentHamiltonian h(layout.total_dim());
    std::mt19937 rng(20260331);
    const Matrix rho0_m = random_density(layout.total_dim(), rng);
    const DensityState rho0{layout, rho0_m};

    IntegrationConfig cfg;
    cfg.dt = 0.01;
    cfg.t_end = 1.0;
    const auto samples = integrate_master(h, rho0, {}, cfg);
    CHECK((samples.back().state.rho - rho0_m).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("embedded DFS Hamiltonian drives the logical flip") {
    const double g = mhz(50.0), delta = mhz(1000.0);
    const SpaceLayout layout = SpaceLayout::cavity_qubits(2, 3);
    const DFSEncoding enc = s1_encoding();

    const Operator h1 = h1_dfs(g, g, delta, 0.0);
    const auto gp = gate_params(g, g, delta);
    const double tau = pulse_time(gp.lambda);

    TimeDependentHamiltonian h(layout.total_dim());
    h.add_static(embed_logical(enc, layout, h1.entries).entries);

    Vector coeffs = Vector::Zero(3);
    coeffs(0) = 1.0;
    const DensityState rho0 =
        DensityState::pure(layout, encoding_to_full(enc, layout, coeffs));

    IntegrationConfig cfg;
    cfg.dt = 0.05;
    cfg.t_end = tau;
    const auto samples = integrate_master(h, rho0, {}, cfg);

    const auto pops = logical_populations(samples.back().state, enc);
    CHECK(pops[enc.label_index("1L")] >= 0.9999);
}

TEST_CASE("channel construction") {
    const SpaceLayout layout = SpaceLayout::cavity_qubits(2, 3);
    PhysicalParams p;

    const auto collective =
        build_channels(layout, p, DecoherenceMode::Collective);
    REQUIRE(collective.size() == 3);
    CHECK(collective[0].rate == p.kappa);
    CHECK(collective[1].rate == p.gamma);
    CHECK(collective[2].rate == p.gamma_phi);

    const auto individual =
        build_channels(layout, p, DecoherenceMode::Individual);
    REQUIRE(individual.size() == 7);  // cavity + 3 relaxation + 3 dephasing
    CHECK(individual[1].rate == doctest::Approx(0.8 * p.gamma));
    CHECK(individual[2].rate == doctest::Approx(1.0 * p.gamma));
    CHECK(individual[3].rate == doctest::Approx(1.2 * p.gamma));
    CHECK(individual[4].rate == doctest::Approx(0.8 * p.gamma_phi));
    CHECK(individual[6].rate == doctest::Approx(1.2 * p.gamma_phi));

    p.rate_multipliers = {2.0};
    const auto overridden =
        build_channels(layout, p, DecoherenceMode::Individual);
    CHECK(overridden[1].rate == doctest::Approx(2.0 * p.gamma));
    CHECK(overridden[3].rate == doctest::Approx(2.0 * p.gamma));
}

TEST_CASE("excitation restriction bookkeeping") {
    const SpaceLayout layout = SpaceLayout::cavity_qubits(2, 3);

    // oracle: enumerate states with photon + excited-qubit count <= E
    auto enumerate = [&](int e_max) {
        long count = 0;
        for (long i = 0; i < layout.total_dim(); ++i) {
            const auto multi = layout.multi_index(i);
            int exc = multi[0];
            for (int q = 1; q <= 3; ++q) exc += multi[q];
            if (exc <= e_max) ++count;
        }
        return count;
    };
    CHECK(layout.total_dim() == 24);
    CHECK(enumerate(1) == 5);
    CHECK(enumerate(2) == 12);

    const auto r1 = excitation_restrict(layout, 1);
    const auto r2 = excitation_restrict(layout, 2);
    CHECK(r1.restricted_dim() == enumerate(1));
    CHECK(r2.restricted_dim() == enumerate(2));

    const SpaceLayout big = SpaceLayout::cavity_qubits(2, 6);
    CHECK(big.total_dim() == 192);
    CHECK(excitation_restrict(big, 2).restricted_dim() == 30);
    CHECK(excitation_restrict(big, 3).restricted_dim() == 71);

    const Matrix p = r1.projector();
    CHECK((p * p - p).cwiseAbs().maxCoeff() == 0.0);

    // round trips
    std::mt19937 rng(20260332);
    const Matrix m = random_density(r2.restricted_dim(), rng);
    CHECK((r2.restrict_op(r2.expand_op(m)) - m).cwiseAbs().maxCoeff() == 0.0);

    // a two-photon state lies outside the single-excitation subspace
    const Vector outside = basis_state(layout, {2, 0, 0, 0});
    CHECK_THROWS_AS(r1.restrict_vec(outside), RestrictionError);

    // S1 and S2 states carry one and two excitations
    const DFSEncoding s1 = s1_encoding();
    for (int i = 0; i < s1.size(); ++i) {
        Vector c = Vector::Zero(3);
        c(i) = 1.0;
        const Vector full = encoding_to_full(s1, layout, c);
        for (long k = 0; k < full.size(); ++k)
            if (std::abs(full(k)) > 0.0)
                CHECK(basis_excitation(layout, k) == 1);
    }
    const DFSEncoding s2 = s2_encoding();
    for (int i = 0; i < s2.size(); ++i) {
        Vector c = Vector::Zero(6);
        c(i) = 1.0;
        const Vector full = encoding_to_full(s2, big, c);
        for (long k = 0; k < full.size(); ++k)
            if (std::abs(full(k)) > 0.0)
                CHECK(basis_excitation(big, k) == 2);
    }
}

TEST_CASE("restricted and full trajectories agree") {
    const PhysicalParams params;
    const SpaceLayout layout = SpaceLayout::cavity_qubits(2, 3);
    const DFSEncoding enc = s1_encoding();
    const GateDriveSet drives = single_qubit_drives(params, kPi / 2.0, 0.0);

    const TimeDependentHamiltonian h_full =
        build_hamiltonian(layout, drives.tones, drives.pairs, params.delta);
    const auto channels_full =
        build_channels(layout, params, DecoherenceMode::Collective);

    Vector coeffs = Vector::Zero(3);
    coeffs(0) = 1.0;
    const Vector psi0 = encoding_to_full(enc, layout, coeffs);

    IntegrationConfig cfg;
    cfg.t_end = 5.0;
    cfg.sample_stride = 400;

    const auto full_samples = integrate_master(
        h_full, DensityState::pure(layout, psi0), channels_full, cfg);

    const auto restriction = excitation_restrict(layout, 2);
    const SpaceLayout rlayout({restriction.restricted_dim()});
    const TimeDependentHamiltonian h_r = h_full.transformed(
        [&](const Matrix& m) { return restriction.restrict_op(m); });
    std::vector<CollapseChannel> channels_r;
    for (const auto& ch : channels_full)
        channels_r.push_back(
            {{rlayout, restriction.restrict_op(ch.op.entries)}, ch.rate});
    const auto r_samples = integrate_master(
        h_r,
        DensityState::pure(rlayout, restriction.restrict_vec(psi0)),
        channels_r, cfg);

    REQUIRE(full_samples.size() == r_samples.size());
    for (std::size_t s = 0; s < full_samples.size(); ++s) {
        const DensityState expanded{
            layout, restriction.expand_op(r_samples[s].state.rho)};
        const auto pops_full =
            logical_populations(full_samples[s].state, enc);
        const auto pops_r = logical_populations(expanded, enc);
        for (int i = 0; i < enc.size(); ++i)
            CHECK(std::abs(pops_full[i] - pops_r[i]) < 1e-10);
    }
}

TEST_CASE("RK4 order") {
    // constant sigma_x rotation with a known solution
    TimeDependentHamiltonian h(2);
    Matrix x = Matrix::Zero(2, 2);
    x(0, 1) = x(1, 0) = 1.0;
    h.add_static(x);

    Vector psi0(2);
    psi0 << 1.0, 0.0;
    const double t_end = 1.0;

    auto error_at = [&](double dt) {
        const Vector psi = propagate_state(h, psi0, t_end, dt);
        Vector exact(2);
        exact << std::cos(t_end), Complex(0.0, -std::sin(t_end));
        return (psi - exact).norm();
    };
    const double e1 = error_at(0.05);
    const double e2 = error_at(0.025);
    CHECK(e1 / e2 > 12.0);
    CHECK(e1 / e2 < 20.0);
}

TEST_CASE("invariant violations are reported with the offending time") {
    const SpaceLayout layout = SpaceLayout::cavity_qubits(1, 1);
    TimeDependentHamiltonian h(layout.total_dim());
    std::vector<CollapseChannel> channels{
        {embed(annihilation(1), 0, layout), 2000.0}};  // grossly stiff

    const Vector fock1 = basis_state(layout, {1, 0});
    IntegrationConfig cfg;
    cfg.dt = 0.01;
    cfg.t_end = 1.0;
    cfg.sample_stride = 1;
    CHECK_THROWS_AS(integrate_master(h, DensityState::pure(layout, fock1),
                                     channels, cfg, nullptr),
                    IntegrationError);
}

TEST_CASE("density state invariants") {
    const SpaceLayout layout = SpaceLayout::cavity_qubits(1, 1);
    const Vector v = basis_state(layout, {0, 1});
    const DensityState s = DensityState::pure(layout, v);
    CHECK(s.trace_error() < 1e-15);
    CHECK(s.hermiticity_drift() < 1e-15);
    CHECK(s.min_eigenvalue() > -1e-15);

    CHECK_THROWS_AS(
        DensityState::pure(layout, Vector::Zero(layout.total_dim())),
        ParameterError);
}

TEST_CASE("integration config validation") {
    IntegrationConfig cfg;
    CHECK_NOTHROW(cfg.validate(mhz(1000.0)));

    IntegrationConfig coarse;
    coarse.dt = 0.1;  // far above 2*pi/(100 * 2*delta) ~ 5e-3 ns
    CHECK_THROWS_WITH_AS(coarse.validate(mhz(1000.0)),
                         doctest::Contains("resolution bound"),
                         ParameterError);

    IntegrationConfig bad;
    bad.dt = -1.0;
    CHECK_THROWS_AS(bad.validate(mhz(1000.0)), ParameterError);
}
