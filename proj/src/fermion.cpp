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

#include "fermisim/fermion.hpp"

#include <cmath>
#include <string>

namespace fermisim {

namespace {

void require_finite(double v, const char* what) {
  if (!std::isfinite(v))
    throw config_error(std::string("invalid model: non-finite ") + what);
}

LadderTerm two_body_term(int c1, int c2, int a1, int a2, double coeff) {
  return LadderTerm{{{LadderKind::Create, c1},
                     {LadderKind::Create, c2},
                     {LadderKind::Annihilate, a1},
                     {LadderKind::Annihilate, a2}},
                    coeff};
}

}  // namespace

void FermionHamiltonian::add_one_body(int i, int j, double value) {
  require_finite(value, "one-body coefficient");
  if (i < 1 || j < 1 || i > n_levels || j > n_levels)
    throw config_error("one-body index out of range");
  if (i > j) std::swap(i, j);
  one_body[{i, j}] += value;
}

std::vector<LadderTerm> FermionHamiltonian::ladder_terms() const {
  std::vector<LadderTerm> terms;
  for (const auto& [ij, value] : one_body) {
    const auto [i, j] = ij;
    terms.push_back({{{LadderKind::Create, i}, {LadderKind::Annihilate, j}},
                     value});
    if (i != j)
      terms.push_back({{{LadderKind::Create, j}, {LadderKind::Annihilate, i}},
                       value});
  }
  for (const auto& [ijkl, value] : two_body) {
    const auto [i, j, k, l] = ijkl;
    // Stored tuple (i,j,k,l) stands for V a+_i a+_j a_l a_k; the operator
    // lists annihilators as (a_l, a_k).
    terms.push_back(two_body_term(i, j, l, k, value));
    if (!(i == k && j == l)) terms.push_back(two_body_term(k, l, j, i, value));
  }
  return terms;
}

std::map<std::array<int, 4>, double> canonicalize_two_body(
    const std::vector<LadderTerm>& raw) {
  std::map<std::array<int, 4>, double> acc;
  std::map<std::array<int, 4>, bool> self_conjugate;
  for (const auto& term : raw) {
    if (term.ops.size() != 4 || term.ops[0].kind != LadderKind::Create ||
        term.ops[1].kind != LadderKind::Create ||
        term.ops[2].kind != LadderKind::Annihilate ||
        term.ops[3].kind != LadderKind::Annihilate)
      throw config_error(
          "two-body term must be two creations followed by two annihilations");
    int i = term.ops[0].level;
    int j = term.ops[1].level;
    int l = term.ops[2].level;
    int k = term.ops[3].level;
    if (i == j || k == l)
      throw config_error("Pauli principle violation: repeated index in "
                         "two-body term (" + std::to_string(i) + "," +
                         std::to_string(j) + "," + std::to_string(l) + "," +
                         std::to_string(k) + ")");
    double v = term.coeff;
    require_finite(v, "two-body coefficient");
    if (i > j) {
      std::swap(i, j);
      v = -v;
    }
    if (k > l) {
      std::swap(k, l);
      v = -v;
    }
    if (std::make_pair(k, l) < std::make_pair(i, j)) {
      std::swap(i, k);
      std::swap(j, l);
    }
    const std::array<int, 4> key{i, j, k, l};
    acc[key] += v;
    self_conjugate[key] = (i == k && j == l);
  }
  std::map<std::array<int, 4>, double> out;
  for (const auto& [key, sum] : acc) {
    // A non-self-conjugate class receives contributions from both sides of
    // the Hermitian pair its representative stands for.
    const double value = self_conjugate[key] ? sum : 0.5 * sum;
    if (value != 0.0) out[key] = value;
  }
  return out;
}

FermionHamiltonian build_pairing(int n_levels, double level_spacing,
                                 double pairing_strength) {
  if (n_levels < 1) throw config_error("invalid model: pairing needs N >= 1");
  require_finite(level_spacing, "level spacing");
  require_finite(pairing_strength, "pairing strength");

  FermionHamiltonian h;
  h.n_levels = 2 * n_levels;
  for (int p = 1; p <= n_levels; ++p) {
    const double eps = p * level_spacing;
    if (eps != 0.0) {
      h.add_one_body(2 * p - 1, 2 * p - 1, eps);
      h.add_one_body(2 * p, 2 * p, eps);
    }
  }
  if (pairing_strength != 0.0) {
    std::vector<LadderTerm> raw;
    raw.reserve(static_cast<std::size_t>(n_levels) * n_levels);
    for (int p = 1; p <= n_levels; ++p)
      for (int q = 1; q <= n_levels; ++q)
        raw.push_back(two_body_term(2 * p - 1, 2 * p, 2 * q, 2 * q - 1,
                                    -0.5 * pairing_strength));
    h.two_body = canonicalize_two_body(raw);
  }
  return h;
}

FermionHamiltonian build_hubbard(int n_sites, double eps, double t, double u,
                                 bool periodic) {
  if (n_sites < 1) throw config_error("invalid model: hubbard needs N >= 1");
  require_finite(eps, "on-site energy");
  require_finite(t, "hopping strength");
  require_finite(u, "on-site repulsion");

  FermionHamiltonian h;
  h.n_levels = 2 * n_sites;
  if (eps != 0.0)
    for (int q = 1; q <= h.n_levels; ++q) h.add_one_body(q, q, eps);

  if (t != 0.0) {
    const int n_bonds = periodic && n_sites > 1 ? n_sites : n_sites - 1;
    for (int b = 1; b <= n_bonds; ++b) {
      const int site_a = b;
      const int site_b = b % n_sites + 1;
      for (int spin = 0; spin <= 1; ++spin)
        h.add_one_body(2 * site_a - 1 + spin, 2 * site_b - 1 + spin, -t);
    }
  }

  if (u != 0.0) {
    std::vector<LadderTerm> raw;
    for (int site = 1; site <= n_sites; ++site)
      raw.push_back(
          two_body_term(2 * site - 1, 2 * site, 2 * site, 2 * site - 1, u));
    h.two_body = canonicalize_two_body(raw);
  }
  return h;
}

}  // namespace fermisim
