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

#include <array>
#include <map>
#include <utility>
#include <vector>

#include "fermisim/errors.hpp"

namespace fermisim {

enum class LadderKind : int { Create, Annihilate };

struct LadderOp {
  LadderKind kind;
  int level;  // 1-based
};

/// Ordered product of creation/annihilation operators times a real
/// coefficient.  In-scope Hamiltonians use lengths 2 and 4.
struct LadderTerm {
  std::vector<LadderOp> ops;
  double coeff = 0.0;
};

/// Real two-body fermionic Hamiltonian over n single-particle levels.
///
/// one_body holds E_ij for i <= j; E_ji = E_ij is implicit.  Off-diagonal
/// entries stand for E_ij (a+_i a_j + a+_j a_i).
///
/// two_body holds one canonical representative (i,j,k,l) per equivalence
/// class under the anticommutation sign relations and V_ijkl = V_klij,
/// with i < j, k < l and (i,j) <= (k,l).  The stored value V multiplies
///   a+_i a+_j a_l a_k + a+_k a+_l a_j a_i     when (i,j) != (k,l), and
///   a+_i a+_j a_l a_k                         when (i,j) == (k,l).
struct FermionHamiltonian {
  int n_levels = 0;
  double e0 = 0.0;
  std::map<std::pair<int, int>, double> one_body;
  std::map<std::array<int, 4>, double> two_body;

  /// Expand into the explicit ladder-operator terms this Hamiltonian
  /// stands for (Hermitian-conjugate partners included).  e0 is not part
  /// of the expansion.
  std::vector<LadderTerm> ladder_terms() const;

  void add_one_body(int i, int j, double value);
};

/// Reduce raw two-body ladder terms (each a+ a+ a a) to the canonical
/// two_body map.  Coefficients of terms equal up to sign relations merge;
/// a raw term and its Hermitian conjugate accumulate onto the same
/// representative, so the result stores the Hermitian part of the input.
/// Throws config_error on a repeated creation (or annihilation) index.
std::map<std::array<int, 4>, double> canonicalize_two_body(
    const std::vector<LadderTerm>& raw);

/// Pairing Hamiltonian with N doubly degenerate levels: level p's spin-up
/// state is qubit 2p-1 and its time-reversed partner is qubit 2p.  Single
/// particle energies are p*d; every ordered level pair (p,q) contributes
/// -(g/2) a+_{p up} a+_{p dn} a_{q dn} a_{q up}.
FermionHamiltonian build_pairing(int n_levels, double level_spacing,
                                 double pairing_strength);

/// Spin-1/2 Hubbard chain with N sites (same qubit layout), on-site energy
/// eps, hopping -t between like-spin states of adjacent sites (with an
/// optional wrap bond), and on-site repulsion U.
FermionHamiltonian build_hubbard(int n_sites, double eps, double t, double u,
                                 bool periodic);

}  // namespace fermisim
