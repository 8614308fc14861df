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

#include "fermisim/jordan_wigner.hpp"

#include <algorithm>
#include <array>
#include <string>

namespace fermisim {

PauliSum jw_ladder(LadderKind kind, int level, int n_qubits) {
  if (level < 1 || level > n_qubits)
    throw config_error("jw_ladder: level " + std::to_string(level) +
                       " outside [1, " + std::to_string(n_qubits) + "]");
  LetterMap z_prefix;
  for (int k = 1; k < level; ++k) z_prefix.emplace_back(k, Pauli::Z);

  LetterMap with_x = z_prefix;
  with_x.emplace_back(level, Pauli::X);
  LetterMap with_y = z_prefix;
  with_y.emplace_back(level, Pauli::Y);

  const double y_sign = (kind == LadderKind::Create) ? 0.5 : -0.5;
  PauliSum sum;
  sum.n_qubits = n_qubits;
  sum.strings.push_back(PauliString(cdouble(0.5, 0.0), with_x, n_qubits));
  sum.strings.push_back(PauliString(cdouble(0.0, y_sign), with_y, n_qubits));
  return sum;
}

PauliSum jw_term(const LadderTerm& term, int n_qubits) {
  PauliSum acc;
  acc.n_qubits = n_qubits;
  PauliString identity;
  identity.coeff = cdouble(term.coeff, 0.0);
  identity.n_qubits = n_qubits;
  acc.strings.push_back(identity);

  for (const auto& op : term.ops) {
    const PauliSum factor = jw_ladder(op.kind, op.level, n_qubits);
    PauliSum next;
    next.n_qubits = n_qubits;
    next.strings.reserve(acc.strings.size() * factor.strings.size());
    for (const auto& lhs : acc.strings)
      for (const auto& rhs : factor.strings)
        next.strings.push_back(pauli_multiply(lhs, rhs));
    acc = std::move(next);
  }
  acc.merge();
  return acc;
}

PauliHamiltonian jw_hamiltonian(const FermionHamiltonian& h) {
  PauliSum sum;
  sum.n_qubits = h.n_levels;
  for (const auto& term : h.ladder_terms()) sum += jw_term(term, h.n_levels);
  PauliHamiltonian out = finalize_real(sum);
  out.constant += h.e0;
  out.n_qubits = h.n_levels;
  return out;
}

GroupClassification classify_two_body_group(int i, int j, int l, int k) {
  const std::array<int, 4> vals{i, j, l, k};
  for (int a = 0; a < 4; ++a)
    for (int b = a + 1; b < 4; ++b)
      if (vals[a] == vals[b])
        throw config_error("classify_two_body_group: repeated index");

  // Permutation parity of the map (i,j,l,k) -> ascending order.
  std::array<int, 4> order{0, 1, 2, 3};
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return vals[a] < vals[b]; });
  int inversions = 0;
  for (int a = 0; a < 4; ++a)
    for (int b = a + 1; b < 4; ++b)
      if (order[a] > order[b]) ++inversions;
  const int epsilon = (inversions % 2 == 0) ? 1 : -1;

  // Group by how the creation pair {i,j} interleaves with the
  // annihilation pair {l,k}: disjoint (I), interleaved (II), nested (III).
  const int c_lo = std::min(i, j);
  const int c_hi = std::max(i, j);
  const int a_lo = std::min(l, k);
  const int a_hi = std::max(l, k);
  TwoBodyGroup group;
  if (c_hi < a_lo || a_hi < c_lo) {
    group = TwoBodyGroup::I;
  } else {
    const bool nested = (c_lo < a_lo && a_hi < c_hi) ||
                        (a_lo < c_lo && c_hi < a_hi);
    group = nested ? TwoBodyGroup::III : TwoBodyGroup::II;
  }
  return {group, -epsilon};
}

}  // namespace fermisim
