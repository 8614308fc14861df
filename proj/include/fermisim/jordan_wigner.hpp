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

#include "fermisim/fermion.hpp"
#include "fermisim/pauli.hpp"

namespace fermisim {

/// Jordan-Wigner image of a single ladder operator on level i of an
/// n-level register: (prod_{k<i} Z_k) sigma_+/- expanded into two strings,
/// (1/2) Z...Z X_i and (+-i/2) Z...Z Y_i (+ for create, - for annihilate).
///
/// Qubit basis convention: |0> is the occupied level, so Z_i has
/// eigenvalue +1 on an occupied level and sigma_+ creates.
PauliSum jw_ladder(LadderKind kind, int level, int n_qubits);

/// Symbolic product of the jw_ladder expansions of each factor, with the
/// term coefficient applied and like strings merged.  Coefficients may be
/// complex for a lone non-Hermitian term.
PauliSum jw_term(const LadderTerm& term, int n_qubits);

/// Full transformation: e0 plus all one-body and canonical two-body terms
/// (with Hermitian-conjugate partners).  Every surviving coefficient must
/// be real to 1e-12 or internal_error is thrown.  String order is the
/// lexicographic letter-map order.
PauliHamiltonian jw_hamiltonian(const FermionHamiltonian& h);

enum class TwoBodyGroup { I, II, III };

struct GroupClassification {
  TwoBodyGroup group;
  int sign;  // -epsilon^{alpha beta gamma delta}
};

/// Classify the index pattern of a+_i a+_j a_l a_k with all-distinct
/// indices into the three interleaving groups, and report the permutation
/// sign -epsilon of the ordering (i,j,l,k) -> ascending.
GroupClassification classify_two_body_group(int i, int j, int l, int k);

}  // namespace fermisim
