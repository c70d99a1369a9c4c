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

#ifndef HOLOQED_HILBERT_HPP
#define HOLOQED_HILBERT_HPP

#include <complex>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "holoqed/errors.hpp"

namespace holoqed {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

inline constexpr double kHermitianTol = 1e-12;

// Composite Hilbert space as an ordered list of subsystem dimensions.
// Basis ordering is row-major over the dimensions: subsystem 0 is the
// slowest index. When built with cavity_qubits() the cavity occupies
// slot 0 and the qubits slots 1..N; qubit labels are 1-based throughout.
class SpaceLayout {
  public:
    explicit SpaceLayout(std::vector<int> dims, bool has_cavity = false);

    static SpaceLayout qubits(int n_qubits);
    static SpaceLayout cavity_qubits(int n_max, int n_qubits);

    int subsystem_count() const { return static_cast<int>(dims_.size()); }
    int dim(int site) const;
    long total_dim() const { return total_; }

    bool has_cavity() const { return has_cavity_; }
    int cavity_dim() const;
    int qubit_count() const;
    // Subsystem slot of 1-based qubit label q.
    int qubit_site(int q) const;

    long index_of(std::span<const int> multi) const;
    std::vector<int> multi_index(long basis_index) const;

    const std::vector<int>& dims() const { return dims_; }

    friend bool operator==(const SpaceLayout& a, const SpaceLayout& b) {
        return a.dims_ == b.dims_ && a.has_cavity_ == b.has_cavity_;
    }

  private:
    std::vector<int> dims_;
    bool has_cavity_;
    long total_;
};

// Dense operator tagged with the layout it acts on.
struct Operator {
    SpaceLayout layout;
    Matrix entries;

    long dim() const { return entries.rows(); }
};

enum class QubitOp { SigmaPlus, SigmaMinus, SigmaZ, Proj0, Proj1 };
enum class CollectiveOp { SMinus, SZ };

// Truncated bosonic annihilation operator: a[n-1, n] = sqrt(n),
// on Fock states |0..n_max>.
Operator annihilation(int n_max);

// Single-qubit operators in basis order (|0>, |1>), with
// sigma_z = |1><1| - |0><0| and sigma_plus = |1><0|.
Operator qubit_op(QubitOp kind);

Operator identity(const SpaceLayout& layout);

// Places a single-subsystem operator at `site`, identity elsewhere.
Operator embed(const Operator& op, int site, const SpaceLayout& layout);

// S^- = sum_i sigma_i^- or S^z = sum_i sigma_i^z over all qubit slots
// (the cavity, when present, is excluded).
Operator collective_op(CollectiveOp kind, const SpaceLayout& layout);

Operator adjoint(const Operator& op);
Operator commutator(const Operator& a, const Operator& b);

double hermiticity_error(const Matrix& m);
bool is_hermitian(const Operator& op, double tol = kHermitianTol);

// exp(-i H t) for Hermitian H, via the spectral decomposition.
Matrix hermitian_propagator(const Matrix& h, double t);

void require_same_layout(const Operator& a, const Operator& b);

// Layout-checked operator algebra.
Operator operator*(const Operator& a, const Operator& b);
Operator operator+(const Operator& a, const Operator& b);
Operator operator-(const Operator& a, const Operator& b);
Operator operator*(Complex scale, const Operator& a);

}  // namespace holoqed

#endif  // HOLOQED_HILBERT_HPP
