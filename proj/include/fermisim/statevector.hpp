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
#include <string>
#include <vector>

#include "fermisim/gates.hpp"
#include "fermisim/pauli.hpp"
#include "fermisim/rng.hpp"

namespace fermisim {

/// Dense complex statevector over n qubits.  Qubit 1 is the leftmost
/// tensor factor: the basis index of |b1 b2 ... bn> is sum b_q 2^(n-q),
/// so qubit q lives on bit (n-q).
struct StateVector {
  int n_qubits = 0;
  std::vector<cdouble> amps;

  static StateVector basis_state(int n, const std::string& bits);
  static StateVector random_state(int n, RngStream& rng);

  std::size_t dim() const { return amps.size(); }
  double norm() const;
};

void apply_gate(StateVector& state, const GateOp& op);
void apply_sequence(StateVector& state, const GateSequence& seq);

/// Exact application of exp(-i angle P) for one Pauli string: a single
/// pass of paired amplitude updates (or a diagonal pass for pure-Z
/// strings).  Agrees with applying the compiled gate ladder.
void apply_pauli_exponential(StateVector& state, const PauliTerm& term,
                             double dt);

/// One Trotter step applied string-exactly in the canonical term order
/// (order 2 = symmetric splitting).  Matches apply_sequence of
/// compile_trotter_step up to rounding.
void apply_trotter_step_exact(StateVector& state, const PauliHamiltonian& h,
                              double dt, int order);

/// Inverse discrete Fourier transform on a contiguous work register
/// occupying qubits [first, first + w - 1].  The register's value m reads
/// qubit first as its most significant bit.  The fast path transforms
/// index space directly; the gate path applies the H/controlled-phase
/// network.  Both agree to 1e-10.
void inverse_qft(StateVector& state, int first, int w,
                 bool use_gate_path = false);

/// The inverse-QFT gate network (H, CRotZ, CPhase; swaps expanded into
/// that alphabet) for the same register.
GateSequence inverse_qft_sequence(int n_qubits, int first, int w);

/// Marginal probability distribution over the work register's 2^w basis
/// values, summed over the rest of the register.
std::vector<double> work_register_marginal(const StateVector& state,
                                           int first, int w);

/// Draw i.i.d. outcomes from the work-register marginal.  No collapse:
/// each shot restarts the circuit, so sampling the final distribution is
/// exact.
std::vector<std::uint64_t> sample_work_register(const StateVector& state,
                                                int first, int w,
                                                RngStream& rng,
                                                std::uint64_t shots);

/// Draw one outcome index from an explicit probability vector.
std::uint64_t sample_from_distribution(const std::vector<double>& probs,
                                       RngStream& rng);

}  // namespace fermisim
