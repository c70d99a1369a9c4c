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

#ifndef HOLOQED_DYNAMICS_HPP
#define HOLOQED_DYNAMICS_HPP

#include <functional>
#include <vector>

#include "holoqed/model.hpp"

namespace holoqed {

// Density-matrix invariants enforced at every recorded sample.
inline constexpr double kTraceTol = 1e-6;
inline constexpr double kHermDriftTol = 1e-8;
inline constexpr double kNegEigTol = -1e-8;

struct DensityState {
    SpaceLayout layout;
    Matrix rho;

    static DensityState pure(const SpaceLayout& layout, const Vector& psi);

    double trace_error() const;
    double hermiticity_drift() const;
    double min_eigenvalue() const;
};

struct CollapseChannel {
    Operator op;
    double rate;  // rad/ns, >= 0
};

enum class DecoherenceMode { Collective, Individual };

// Fixed-step integration controls. The step must resolve the fastest
// oscillation in the frame, omega_fast = 2*delta, with at least 100 steps
// per period: dt <= 2*pi / (100 * omega_fast).
struct IntegrationConfig {
    double dt = std::numbers::pi / (200.0 * mhz(1000.0));  // 200 steps per 2*delta period
    double t_end = 0.0;                          // <= 0: callers derive it
    int sample_stride = 100;
    int n_max = 2;
    // Total-excitation cap for restricted runs; < 0 simulates the full space.
    int max_excitation = -1;

    void validate(double delta) const;
};

// d rho/dt = -i[H, rho]
//            + (1/2) sum_k rate_k (2 A_k rho A_k^dag
//                                  - A_k^dag A_k rho - rho A_k^dag A_k).
Matrix lindblad_rhs(const Matrix& rho, const Matrix& h,
                    const std::vector<CollapseChannel>& channels);

struct TimeSample {
    double t;
    DensityState state;
};

using SampleObserver = std::function<void(double t, const Matrix& rho)>;

// Classic RK4 with midpoint Hamiltonian evaluations. The observer fires at
// t = 0, every sample_stride-th step, and at t_end; invariants are checked
// at each of those points and violations raise IntegrationError.
void integrate_master(const TimeDependentHamiltonian& h,
                      const DensityState& rho0,
                      const std::vector<CollapseChannel>& channels,
                      const IntegrationConfig& cfg,
                      const SampleObserver& observer);

std::vector<TimeSample> integrate_master(
    const TimeDependentHamiltonian& h, const DensityState& rho0,
    const std::vector<CollapseChannel>& channels, const IntegrationConfig& cfg);

// RK4 on d psi/dt = -i H(t) psi; for the decoherence-free oracles.
Vector propagate_state(const TimeDependentHamiltonian& h, const Vector& psi0,
                       double t_end, double dt);

// Collective mode: (a, kappa), (S^-, gamma), (S^z, gamma_phi).
// Individual mode: (a, kappa) plus per-qubit (sigma_i^-, gamma_i) and
// (sigma_i^z, gamma_phi_i); unset multipliers default to the 0.8/1.0/1.2
// pattern cycled over the register.
std::vector<CollapseChannel> build_channels(const SpaceLayout& layout,
                                            const PhysicalParams& params,
                                            DecoherenceMode mode);

// Invariant subspace of total excitation a^dag a + sum_j |1>_j<1| bounded
// by max_excitation. The interaction conserves the excitation number and
// every collapse channel lowers or preserves it, so simulating in the
// restricted space reproduces the full dynamics exactly.
struct ExcitationRestriction {
    SpaceLayout full_layout;
    int max_excitation;
    std::vector<long> kept;  // full-space basis indices, ascending

    long restricted_dim() const { return static_cast<long>(kept.size()); }

    Matrix projector() const;
    Matrix restrict_op(const Matrix& full) const;
    // Throws RestrictionError when the state has weight > tol outside.
    Vector restrict_vec(const Vector& full, double tol = 1e-12) const;
    Matrix restrict_density(const Matrix& full, double tol = 1e-12) const;
    Matrix expand_op(const Matrix& restricted) const;
    Vector expand_vec(const Vector& restricted) const;
};

ExcitationRestriction excitation_restrict(const SpaceLayout& layout,
                                          int max_excitation);

// Total excitation of one basis state of the layout.
int basis_excitation(const SpaceLayout& layout, long basis_index);

}  // namespace holoqed

#endif  // HOLOQED_DYNAMICS_HPP
