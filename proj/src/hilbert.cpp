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

#include "holoqed/hilbert.hpp"

#include <cmath>
#include <numeric>

#include <Eigen/Eigenvalues>

namespace holoqed {

SpaceLayout::SpaceLayout(std::vector<int> dims, bool has_cavity)
    : dims_(std::move(dims)), has_cavity_(has_cavity) {
    if (dims_.empty()) throw LayoutError("layout needs at least one subsystem");
    total_ = 1;
    for (int d : dims_) {
        if (d < 2) throw LayoutError("subsystem dimension must be >= 2");
        total_ *= d;
    }
    if (has_cavity_) {
        for (std::size_t i = 1; i < dims_.size(); ++i)
            if (dims_[i] != 2)
                throw LayoutError("qubit slots must have dimension 2");
    }
}

SpaceLayout SpaceLayout::qubits(int n_qubits) {
    if (n_qubits < 1) throw LayoutError("need at least one qubit");
    return SpaceLayout(std::vector<int>(n_qubits, 2), /*has_cavity=*/false);
}

SpaceLayout SpaceLayout::cavity_qubits(int n_max, int n_qubits) {
    if (n_max < 1) throw ParameterError("photon cutoff n_max must be >= 1");
    if (n_qubits < 1) throw LayoutError("need at least one qubit");
    std::vector<int> dims(1 + n_qubits, 2);
    dims[0] = n_max + 1;
    return SpaceLayout(std::move(dims), /*has_cavity=*/true);
}

int SpaceLayout::dim(int site) const {
    if (site < 0 || site >= subsystem_count())
        throw LayoutError("subsystem index out of range");
    return dims_[site];
}

int SpaceLayout::cavity_dim() const {
    if (!has_cavity_) throw LayoutError("layout has no cavity slot");
    return dims_[0];
}

int SpaceLayout::qubit_count() const {
    return subsystem_count() - (has_cavity_ ? 1 : 0);
}

int SpaceLayout::qubit_site(int q) const {
    if (q < 1 || q > qubit_count())
        throw LayoutError("qubit label out of range");
    return q - 1 + (has_cavity_ ? 1 : 0);
}

long SpaceLayout::index_of(std::span<const int> multi) const {
    if (static_cast<int>(multi.size()) != subsystem_count())
        throw LayoutError("multi-index size does not match layout");
    long idx = 0;
    for (int s = 0; s < subsystem_count(); ++s) {
        if (multi[s] < 0 || multi[s] >= dims_[s])
            throw LayoutError("multi-index component out of range");
        idx = idx * dims_[s] + multi[s];
    }
    return idx;
}

std::vector<int> SpaceLayout::multi_index(long basis_index) const {
    if (basis_index < 0 || basis_index >= total_)
        throw LayoutError("basis index out of range");
    std::vector<int> multi(subsystem_count());
    for (int s = subsystem_count() - 1; s >= 0; --s) {
        multi[s] = static_cast<int>(basis_index % dims_[s]);
        basis_index /= dims_[s];
    }
    return multi;
}

Operator annihilation(int n_max) {
    if (n_max < 1) throw ParameterError("photon cutoff n_max must be >= 1");
    Matrix a = Matrix::Zero(n_max + 1, n_max + 1);
    for (int n = 1; n <= n_max; ++n) a(n - 1, n) = std::sqrt(double(n));
    return {SpaceLayout({n_max + 1}), std::move(a)};
}

Operator qubit_op(QubitOp kind) {
    Matrix m = Matrix::Zero(2, 2);
    switch (kind) {
        case QubitOp::SigmaPlus: m(1, 0) = 1.0; break;
        case QubitOp::SigmaMinus: m(0, 1) = 1.0; break;
        case QubitOp::SigmaZ:
            m(0, 0) = -1.0;
            m(1, 1) = 1.0;
            break;
        case QubitOp::Proj0: m(0, 0) = 1.0; break;
        case QubitOp::Proj1: m(1, 1) = 1.0; break;
    }
    return {SpaceLayout({2}), std::move(m)};
}

Operator identity(const SpaceLayout& layout) {
    return {layout, Matrix::Identity(layout.total_dim(), layout.total_dim())};
}

Operator embed(const Operator& op, int site, const SpaceLayout& layout) {
    const int d = layout.dim(site);
    if (op.dim() != d)
        throw LayoutError("operator dimension does not match target subsystem");

    long before = 1, after = 1;
    for (int s = 0; s < site; ++s) before *= layout.dim(s);
    for (int s = site + 1; s < layout.subsystem_count(); ++s)
        after *= layout.dim(s);

    Matrix full = Matrix::Zero(layout.total_dim(), layout.total_dim());
    for (long b = 0; b < before; ++b)
        for (int r = 0; r < d; ++r)
            for (int c = 0; c < d; ++c) {
                const Complex v = op.entries(r, c);
                if (v == Complex(0.0)) continue;
                const long row0 = (b * d + r) * after;
                const long col0 = (b * d + c) * after;
                for (long a = 0; a < after; ++a) full(row0 + a, col0 + a) = v;
            }
    return {layout, std::move(full)};
}

Operator collective_op(CollectiveOp kind, const SpaceLayout& layout) {
    if (layout.qubit_count() < 1) throw LayoutError("layout has no qubits");
    const Operator single =
        qubit_op(kind == CollectiveOp::SMinus ? QubitOp::SigmaMinus
                                              : QubitOp::SigmaZ);
    Matrix sum = Matrix::Zero(layout.total_dim(), layout.total_dim());
    for (int q = 1; q <= layout.qubit_count(); ++q)
        sum += embed(single, layout.qubit_site(q), layout).entries;
    return {layout, std::move(sum)};
}

Operator adjoint(const Operator& op) {
    return {op.layout, op.entries.adjoint()};
}

void require_same_layout(const Operator& a, const Operator& b) {
    if (!(a.layout == b.layout))
        throw LayoutError("operators live on different layouts");
}

Operator commutator(const Operator& a, const Operator& b) {
    require_same_layout(a, b);
    return {a.layout, a.entries * b.entries - b.entries * a.entries};
}

double hermiticity_error(const Matrix& m) {
    return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

bool is_hermitian(const Operator& op, double tol) {
    return hermiticity_error(op.entries) < tol;
}

Matrix hermitian_propagator(const Matrix& h, double t) {
    Eigen::SelfAdjointEigenSolver<Matrix> es(h);
    if (es.info() != Eigen::Success)
        throw Error("eigendecomposition failed in hermitian_propagator");
    const auto& vals = es.eigenvalues();
    const Matrix& vecs = es.eigenvectors();
    Vector phases(vals.size());
    for (Eigen::Index k = 0; k < vals.size(); ++k)
        phases(k) = std::exp(Complex(0.0, -vals(k) * t));
    return vecs * phases.asDiagonal() * vecs.adjoint();
}

Operator operator*(const Operator& a, const Operator& b) {
    require_same_layout(a, b);
    return {a.layout, a.entries * b.entries};
}

Operator operator+(const Operator& a, const Operator& b) {
    require_same_layout(a, b);
    return {a.layout, a.entries + b.entries};
}

Operator operator-(const Operator& a, const Operator& b) {
    require_same_layout(a, b);
    return {a.layout, a.entries - b.entries};
}

Operator operator*(Complex scale, const Operator& a) {
    return {a.layout, scale * a.entries};
}

}  // namespace holoqed
