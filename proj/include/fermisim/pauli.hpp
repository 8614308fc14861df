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

#include <complex>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "fermisim/errors.hpp"

namespace fermisim {

using cdouble = std::complex<double>;

enum class Pauli : std::uint8_t { X = 0, Y = 1, Z = 2 };

char pauli_char(Pauli p);

/// Letters of a Pauli string, sorted by qubit index (1-based).  Qubits not
/// listed carry the identity.
using LetterMap = std::vector<std::pair<int, Pauli>>;

/// A scalar multiple of a tensor product of sigma matrices.  An empty
/// letter map is a pure constant (multiple of the identity).
struct PauliString {
  cdouble coeff{1.0, 0.0};
  LetterMap letters;
  int n_qubits = 0;

  PauliString() = default;
  PauliString(cdouble c, LetterMap l, int n);

  bool is_identity() const { return letters.empty(); }
  std::string to_string() const;
};

/// Per-qubit product of the letters with the accumulated complex phase
/// (sigma_x sigma_z = -i sigma_y and friends).  Letters that square to the
/// identity vanish.  Throws config_error on mismatched register sizes.
PauliString pauli_multiply(const PauliString& a, const PauliString& b);

/// Sum of Pauli strings with complex coefficients.  Intermediate form used
/// while Jordan-Wigner products are still complex.
struct PauliSum {
  std::vector<PauliString> strings;
  int n_qubits = 0;

  /// Combine strings with identical letter maps and drop coefficients with
  /// magnitude below `tol`.  Leaves strings sorted lexicographically.
  void merge(double tol = 1e-14);

  PauliSum& operator+=(const PauliSum& other);
  PauliSum& operator*=(cdouble scale);
};

/// One real-coefficient term of a finalized Hamiltonian.
struct PauliTerm {
  double coeff = 0.0;
  LetterMap letters;
};

/// Real Pauli-string Hamiltonian: identity constant plus a merged,
/// deterministically ordered list of non-identity strings.
struct PauliHamiltonian {
  double constant = 0.0;
  std::vector<PauliTerm> terms;
  int n_qubits = 0;

  /// Sum of |coefficients| over the non-identity strings.
  double coefficient_l1() const;
};

/// Collapse a complex Pauli sum into a real Hamiltonian.  Imaginary parts
/// below `imag_tol` are truncated; anything larger throws internal_error
/// (it signals a sign bug upstream).
PauliHamiltonian finalize_real(const PauliSum& sum, double merge_tol = 1e-14,
                               double imag_tol = 1e-12);

/// Strict weak order on letter maps: lexicographic over (qubit, letter).
bool letters_less(const LetterMap& a, const LetterMap& b);

}  // namespace fermisim
