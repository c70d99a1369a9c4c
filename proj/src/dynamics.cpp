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

#include "holoqed/dynamics.hpp"

#include <cmath>
#include <numbers>

#include <Eigen/Eigenvalues>
#include <Eigen/Sparse>

namespace holoqed {

DensityState DensityState::pure(const SpaceLayout& layout, const Vector& psi) {
    if (psi.size() != layout.total_dim())
        throw LayoutError("state vector does not match layout dimension");
    const double n = psi.norm();
    if (n == 0.0) throw ParameterError("cannot normalize the zero state");
    Vector u = psi / n;
    return {layout, u * u.adjoint()};
}

double DensityState::trace_error() const {
    return std::abs(rho.trace() - Complex(1.0));
}

double DensityState::hermiticity_drift() const {
    return hermiticity_error(rho);
}

double DensityState::min_eigenvalue() const {
    Eigen::SelfAdjointEigenSolver<Matrix> es(
        Matrix(0.5 * (rho + rho.adjoint())), Eigen::EigenvaluesOnly);
    return es.eigenvalues().minCoeff();
}

void IntegrationConfig::validate(double delta) const {
    if (dt <= 0.0) throw ParameterError("dt must be positive");
    if (sample_stride < 1) throw ParameterError("sample_stride must be >= 1");
    if (n_max < 1) throw ParameterError("n_max must be >= 1");
    const double omega_fast = 2.0 * delta;
    if (omega_fast > 0.0) {
        const double bound = 2.0 * std::numbers::pi / (100.0 * omega_fast);
        if (dt > bound)
            throw ParameterError(
                "dt = " + std::to_string(dt) +
                " ns violates the resolution bound dt <= 2*pi/(100*omega_fast)"
                " = " +
                std::to_string(bound) + " ns with omega_fast = 2*delta");
    }
}

Matrix lindblad_rhs(const Matrix& rho, const Matrix& h,
                    const std::vector<CollapseChannel>& channels) {
    if (rho.rows() != rho.cols() || h.rows() != rho.rows() ||
        h.cols() != rho.cols())
        throw LayoutError("lindblad_rhs shape mismatch");
    Matrix out = Complex(0.0, -1.0) * (h * rho - rho * h);
    for (const auto& ch : channels) {
        if (ch.op.entries.rows() != rho.rows())
            throw LayoutError("collapse operator shape mismatch");
        const Matrix& a = ch.op.entries;
        const Matrix adag_a = a.adjoint() * a;
        out += 0.5 * ch.rate *
               (2.0 * (a * rho * a.adjoint()) - adag_a * rho - rho * adag_a);
    }
    return out;
}

namespace {

using SparseM = Eigen::SparseMatrix<Complex>;

SparseM sparsify(const Matrix& m) {
    return m.sparseView(1.0, 1e-300);  // keep everything nonzero
}

// Collapse channels enter the RHS through sparse products; every channel in
// this model (a, sigma^-, sigma^z and their collective sums) has O(dim)
// nonzeros, which turns the dissipator into an O(dim^2) update.
struct ChannelWork {
    SparseM a;
    SparseM a_dag;
    SparseM adag_a;
    double rate;
};

class MasterRhs {
  public:
    MasterRhs(const TimeDependentHamiltonian& h,
              const std::vector<CollapseChannel>& channels)
        : h_(&h), dim_(h.dim()), h_buf_(dim_, dim_), t1_(dim_, dim_) {
        for (const auto& ch : channels) {
            if (ch.rate < 0.0)
                throw ParameterError("collapse rates must be non-negative");
            if (ch.op.entries.rows() != dim_)
                throw LayoutError("collapse operator dimension mismatch");
            if (ch.rate == 0.0) continue;
            ChannelWork w;
            w.a = sparsify(ch.op.entries);
            w.a_dag = SparseM(w.a.adjoint());
            w.adag_a = SparseM(w.a_dag * w.a);
            w.rate = ch.rate;
            work_.push_back(std::move(w));
        }
    }

    long dim() const { return dim_; }

    void operator()(double t, const Matrix& rho, Matrix& out) {
        h_->evaluate(t, h_buf_);
        out.noalias() = h_buf_ * rho;
        out.noalias() -= rho * h_buf_;
        out *= Complex(0.0, -1.0);
        for (const auto& w : work_) {
            t1_.noalias() = w.a * rho;
            out.noalias() += w.rate * (t1_ * w.a_dag);
            t1_.noalias() = w.adag_a * rho;
            out.noalias() -= 0.5 * w.rate * t1_;
            t1_.noalias() = rho * w.adag_a;
            out.noalias() -= 0.5 * w.rate * t1_;
        }
    }

  private:
    const TimeDependentHamiltonian* h_;
    long dim_;
    Matrix h_buf_;
    Matrix t1_;
    std::vector<ChannelWork> work_;
};

void check_invariants(const DensityState& s, double t) {
    const double tr = s.trace_error();
    if (!(tr < kTraceTol))
        throw IntegrationError("trace drift " + std::to_string(tr) +
                                   " exceeds tolerance at t = " +
                                   std::to_string(t) + " ns",
                               t);
    const double he = s.hermiticity_drift();
    if (!(he < kHermDriftTol))
        throw IntegrationError("hermiticity drift " + std::to_string(he) +
                                   " exceeds tolerance at t = " +
                                   std::to_string(t) + " ns",
                               t);
    const double me = s.min_eigenvalue();
    if (!(me > kNegEigTol))
        throw IntegrationError("negative eigenvalue " + std::to_string(me) +
                                   " at t = " + std::to_string(t) + " ns",
                               t);
}

}  // namespace

void integrate_master(const TimeDependentHamiltonian& h,
                      const DensityState& rho0,
                      const std::vector<CollapseChannel>& channels,
                      const IntegrationConfig& cfg,
                      const SampleObserver& observer) {
    if (rho0.layout.total_dim() != h.dim())
        throw LayoutError("initial state does not match Hamiltonian dimension");
    if (cfg.t_end <= 0.0) throw ParameterError("t_end must be positive");
    if (cfg.dt <= 0.0) throw ParameterError("dt must be positive");

    MasterRhs rhs(h, channels);
    const long dim = rhs.dim();
    Matrix rho = rho0.rho;
    Matrix k1(dim, dim), k2(dim, dim), k3(dim, dim), k4(dim, dim);
    Matrix stage(dim, dim);

    const long n_steps =
        std::max<long>(1, static_cast<long>(std::ceil(cfg.t_end / cfg.dt -
                                                      1e-12)));

    auto sample = [&](double t) {
        DensityState snap{rho0.layout, rho};
        check_invariants(snap, t);
        if (observer) observer(t, rho);
    };

    sample(0.0);
    double t = 0.0;
    for (long step = 0; step < n_steps; ++step) {
        const double dt =
            (step + 1 == n_steps) ? (cfg.t_end - t) : cfg.dt;
        rhs(t, rho, k1);
        stage = rho + (0.5 * dt) * k1;
        rhs(t + 0.5 * dt, stage, k2);
        stage = rho + (0.5 * dt) * k2;
        rhs(t + 0.5 * dt, stage, k3);
        stage = rho + dt * k3;
        rhs(t + dt, stage, k4);
        rho += (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
        t = (step + 1 == n_steps) ? cfg.t_end : (step + 1) * cfg.dt;

        const bool last = step + 1 == n_steps;
        if (last || (step + 1) % cfg.sample_stride == 0) sample(t);
    }
}

std::vector<TimeSample> integrate_master(
    const TimeDependentHamiltonian& h, const DensityState& rho0,
    const std::vector<CollapseChannel>& channels,
    const IntegrationConfig& cfg) {
    std::vector<TimeSample> samples;
    integrate_master(h, rho0, channels, cfg,
                     [&](double t, const Matrix& rho) {
                         samples.push_back({t, {rho0.layout, rho}});
                     });
    return samples;
}

Vector propagate_state(const TimeDependentHamiltonian& h, const Vector& psi0,
                       double t_end, double dt) {
    if (psi0.size() != h.dim())
        throw LayoutError("state vector does not match Hamiltonian dimension");
    if (t_end <= 0.0 || dt <= 0.0)
        throw ParameterError("propagation needs positive t_end and dt");

    const long dim = h.dim();
    Matrix h_buf(dim, dim);
    Vector psi = psi0;
    Vector k1(dim), k2(dim), k3(dim), k4(dim), stage(dim);
    const Complex mi(0.0, -1.0);

    auto deriv = [&](double t, const Vector& v, Vector& out) {
        h.evaluate(t, h_buf);
        out.noalias() = h_buf * v;
        out *= mi;
    };

    const long n_steps =
        std::max<long>(1, static_cast<long>(std::ceil(t_end / dt - 1e-12)));
    double t = 0.0;
    for (long step = 0; step < n_steps; ++step) {
        const double step_dt = (step + 1 == n_steps) ? (t_end - t) : dt;
        deriv(t, psi, k1);
        stage = psi + (0.5 * step_dt) * k1;
        deriv(t + 0.5 * step_dt, stage, k2);
        stage = psi + (0.5 * step_dt) * k2;
        deriv(t + 0.5 * step_dt, stage, k3);
        stage = psi + step_dt * k3;
        deriv(t + step_dt, stage, k4);
        psi += (step_dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
        t = (step + 1 == n_steps) ? t_end : (step + 1) * dt;
    }
    return psi;
}

std::vector<CollapseChannel> build_channels(const SpaceLayout& layout,
                                            const PhysicalParams& params,
                                            DecoherenceMode mode) {
    std::vector<CollapseChannel> channels;
    channels.push_back(
        {embed(annihilation(layout.cavity_dim() - 1), 0, layout),
         params.kappa});

    if (mode == DecoherenceMode::Collective) {
        channels.push_back(
            {collective_op(CollectiveOp::SMinus, layout), params.gamma});
        channels.push_back(
            {collective_op(CollectiveOp::SZ, layout), params.gamma_phi});
        return channels;
    }

    static const std::vector<double> kPaperPattern{0.8, 1.0, 1.2};
    const auto& mult = params.rate_multipliers.empty() ? kPaperPattern
                                                       : params.rate_multipliers;
    auto factor = [&](int q) { return mult[(q - 1) % mult.size()]; };
    for (int q = 1; q <= layout.qubit_count(); ++q)
        channels.push_back({embed(qubit_op(QubitOp::SigmaMinus),
                                  layout.qubit_site(q), layout),
                            params.gamma * factor(q)});
    for (int q = 1; q <= layout.qubit_count(); ++q)
        channels.push_back(
            {embed(qubit_op(QubitOp::SigmaZ), layout.qubit_site(q), layout),
             params.gamma_phi * factor(q)});
    return channels;
}

int basis_excitation(const SpaceLayout& layout, long basis_index) {
    const auto multi = layout.multi_index(basis_index);
    int excitation = 0;
    if (layout.has_cavity()) excitation += multi[0];
    for (int q = 1; q <= layout.qubit_count(); ++q)
        excitation += multi[layout.qubit_site(q)];
    return excitation;
}

ExcitationRestriction excitation_restrict(const SpaceLayout& layout,
                                          int max_excitation) {
    if (max_excitation < 0)
        throw ParameterError("max_excitation must be non-negative");
    ExcitationRestriction r{layout, max_excitation, {}};
    for (long i = 0; i < layout.total_dim(); ++i)
        if (basis_excitation(layout, i) <= max_excitation) r.kept.push_back(i);
    return r;
}

Matrix ExcitationRestriction::projector() const {
    Matrix p = Matrix::Zero(full_layout.total_dim(), full_layout.total_dim());
    for (long i : kept) p(i, i) = 1.0;
    return p;
}

Matrix ExcitationRestriction::restrict_op(const Matrix& full) const {
    if (full.rows() != full_layout.total_dim())
        throw LayoutError("operator does not match the full layout");
    const long d = restricted_dim();
    Matrix out(d, d);
    for (long r = 0; r < d; ++r)
        for (long c = 0; c < d; ++c) out(r, c) = full(kept[r], kept[c]);
    return out;
}

Vector ExcitationRestriction::restrict_vec(const Vector& full,
                                           double tol) const {
    if (full.size() != full_layout.total_dim())
        throw LayoutError("vector does not match the full layout");
    Vector out(restricted_dim());
    double kept_norm2 = 0.0;
    for (long r = 0; r < restricted_dim(); ++r) {
        out(r) = full(kept[r]);
        kept_norm2 += std::norm(out(r));
    }
    const double outside = full.squaredNorm() - kept_norm2;
    if (outside > tol)
        throw RestrictionError(
            "state has weight " + std::to_string(outside) +
            " outside the excitation-restricted subspace");
    return out;
}

Matrix ExcitationRestriction::restrict_density(const Matrix& full,
                                               double tol) const {
    Matrix out = restrict_op(full);
    const double outside = std::abs(full.trace() - out.trace());
    if (outside > tol)
        throw RestrictionError(
            "density matrix has weight " + std::to_string(outside) +
            " outside the excitation-restricted subspace");
    return out;
}

Matrix ExcitationRestriction::expand_op(const Matrix& restricted) const {
    if (restricted.rows() != restricted_dim())
        throw LayoutError("operator does not match the restricted dimension");
    Matrix out =
        Matrix::Zero(full_layout.total_dim(), full_layout.total_dim());
    for (long r = 0; r < restricted_dim(); ++r)
        for (long c = 0; c < restricted_dim(); ++c)
            out(kept[r], kept[c]) = restricted(r, c);
    return out;
}

Vector ExcitationRestriction::expand_vec(const Vector& restricted) const {
    if (restricted.size() != restricted_dim())
        throw LayoutError("vector does not match the restricted dimension");
    Vector out = Vector::Zero(full_layout.total_dim());
    for (long r = 0; r < restricted_dim(); ++r) out(kept[r]) = restricted(r);
    return out;
}

}  // namespace holoqed
