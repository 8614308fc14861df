// Copyright 2026 The fermisim developers
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

#pragma once

#include <cstdint>
#include <vector>

#include "fermisim/fermion.hpp"
#include "fermisim/gates.hpp"
#include "fermisim/pauli.hpp"
#include "fermisim/phase_estimation.hpp"

namespace fermisim {

/// Dense row-major complex matrix of dimension 2^n.
struct DenseMatrix {
  std::size_t dim = 0;
  std::vector<cdouble> data;

  static DenseMatrix zero(std::size_t dim);
  static DenseMatrix identity(std::size_t dim);

  cdouble& at(std::size_t r, std::size_t c) { return data[r * dim + c]; }
  const cdouble& at(std::size_t r, std::size_t c) const {
    return data[r * dim + c];
  }

  DenseMatrix dagger() const;
  DenseMatrix multiply(const DenseMatrix& rhs) const;
  std::vector<cdouble> apply(const std::vector<cdouble>& v) const;
  double max_abs_diff(const DenseMatrix& other) const;
  double max_abs_imag() const;
  bool is_hermitian(double tol) const;
};

/// Occupation-number matrix of the Hamiltonian, built by acting with each
/// ladder term on occupation bitstrings.  Basis: occupied = bit 0, qubit 1
/// is the most significant bit, matching the statevector layout.  Ladder
/// phases follow the Jordan-Wigner convention: the sign of a_i / a+_i on a
/// state is the product of Z eigenvalues of the qubits below level i.
DenseMatrix fock_matrix(const FermionHamiltonian& h);

/// Same construction for an explicit list of ladder terms (not
/// necessarily Hermitian).
DenseMatrix fock_matrix(const std::vector<LadderTerm>& terms, int n_levels,
                        double e0 = 0.0);

DenseMatrix pauli_matrix(const PauliString& s);
DenseMatrix pauli_matrix(const PauliHamiltonian& h);

/// Kronecker-expansion product of the sequence's gates in application
/// order (first op rightmost).  Capped at 8 qubits.
DenseMatrix gate_matrix(const GateSequence& seq);

struct EigenSolution {
  std::vector<double> eigenvalues;  // all, ascending

  struct Cluster {
    double value = 0.0;
    int count = 0;
  };
  std::vector<Cluster> clusters;  // degeneracies after clustering

  bool has_vectors = false;
  DenseMatrix vectors;  // columns, aligned with eigenvalues
};

/// All eigenvalues of a Hermitian matrix.  Real symmetric input runs the
/// cyclic Jacobi method up to dimension 512 and a Householder
/// tridiagonalization with implicit QL above it (the two agree to
/// tolerance and are cross-checked in the tests); complex Hermitian input
/// uses a complex Jacobi.  Eigenvector requests always take a Jacobi
/// path, so keep them to moderate dimensions.  Degeneracies cluster with
/// cluster_tol.
EigenSolution eigensolve(const DenseMatrix& m, double cluster_tol = 1e-6,
                         bool want_vectors = false);

/// exp(-i scale H) for Hermitian H via eigendecomposition.
DenseMatrix matrix_exponential_hermitian(const DenseMatrix& h, double scale);

struct UnitaryEigensystem {
  std::vector<double> angles;  // U v_k = e^{i angle_k} v_k
  DenseMatrix vectors;
};

/// Eigendecomposition of a unitary via its commuting Hermitian and
/// anti-Hermitian parts.
UnitaryEigensystem unitary_eigensystem(const DenseMatrix& u,
                                       double cluster_tol = 1e-9);

/// Squared Dirichlet kernel |(1/D) sum_t e^{2 pi i t delta}|^2 for
/// D = 2^w; periodic in delta with period 1.
double pe_kernel(double delta, int work_qubits);

/// Analytic phase-estimation outcome distribution for one input state:
/// eigendecompose the (by default Trotterized) single-step operator and
/// sum |c_k|^2 times the squared Dirichlet kernel.  Setting
/// use_exact_evolution replaces the step by the exact exponential.
std::vector<double> pe_exact_distribution(const FermionHamiltonian& h,
                                          const PEConfig& cfg,
                                          const StateVector& input,
                                          bool use_exact_evolution = false);

}  // namespace fermisim
