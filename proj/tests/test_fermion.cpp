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

#include <catch2/catch_amalgamated.hpp>

#include "fermisim/fermion.hpp"
#include "fermisim/oracle.hpp"
#include "test_util.hpp"

using namespace fermisim;

namespace {

LadderTerm raw_two_body(int c1, int c2, int a1, int a2, double v) {
  return LadderTerm{{{LadderKind::Create, c1},
                     {LadderKind::Create, c2},
                     {LadderKind::Annihilate, a1},
                     {LadderKind::Annihilate, a2}},
                    v};
}

}  // namespace

TEST_CASE("pairing_single_level_reduces_to_one_canonical_term") {
  const auto h = build_pairing(1, 0.0, 1.0);
  CHECK(h.n_levels == 2);
  CHECK(h.e0 == 0.0);
  CHECK(h.one_body.empty());
  REQUIRE(h.two_body.size() == 1);
  const auto& [key, value] = *h.two_body.begin();
  CHECK(key == std::array<int, 4>{1, 2, 1, 2});
  CHECK(value == -0.5);
}

TEST_CASE("pairing_six_levels_merges_36_raw_summands") {
  const auto h = build_pairing(6, 0.0, 1.0);
  CHECK(h.n_levels == 12);
  // 6 diagonal classes plus C(6,2) off-diagonal pair classes.
  CHECK(h.two_body.size() == 6 + 15);
}

TEST_CASE("pairing_level_spacing_sets_diagonal_energies") {
  const auto h = build_pairing(4, 0.5, 1.0);
  CHECK(h.n_levels == 8);
  REQUIRE(h.one_body.size() == 8);
  const std::vector<double> expect{0.5, 0.5, 1.0, 1.0, 1.5, 1.5, 2.0, 2.0};
  for (int q = 1; q <= 8; ++q)
    CHECK(h.one_body.at({q, q}) == expect[q - 1]);
}

TEST_CASE("hubbard_atomic_limit_has_no_hopping") {
  const auto h = build_hubbard(4, 1.0, 0.0, 1.0, false);
  CHECK(h.n_levels == 8);
  CHECK(h.one_body.size() == 8);
  for (const auto& [ij, v] : h.one_body) {
    CHECK(ij.first == ij.second);
    CHECK(v == 1.0);
  }
  CHECK(h.two_body.size() == 4);
}

TEST_CASE("hubbard_hopping_pair_count") {
  const auto open = build_hubbard(2, 0.0, 1.0, 0.0, false);
  int hops = 0;
  for (const auto& [ij, v] : open.one_body) {
    CHECK(v == -1.0);
    if (ij.first != ij.second) ++hops;
  }
  CHECK(hops == 2);
  CHECK(open.two_body.empty());

  const auto ring = build_hubbard(3, 1.0, 0.5, 2.0, true);
  int ring_hops = 0;
  for (const auto& [ij, v] : ring.one_body)
    if (ij.first != ij.second) ++ring_hops;
  CHECK(ring_hops == 6);
}

TEST_CASE("canonicalize_merges_diagonal_sign_relations") {
  // V_1221 = +0.5 (a+1 a+2 a1 a2) and V_1212 = -0.5 (a+1 a+2 a2 a1)
  // combine, via V_ijji = -V_ijij, into a single representative.
  const std::vector<LadderTerm> raw{raw_two_body(1, 2, 1, 2, 0.5),
                                    raw_two_body(1, 2, 2, 1, -0.5)};
  const auto canonical = canonicalize_two_body(raw);
  REQUIRE(canonical.size() == 1);
  CHECK(canonical.begin()->first == std::array<int, 4>{1, 2, 1, 2});
  CHECK(canonical.begin()->second == -1.0);

  // The combined operator is -n_1 n_2: check its matrix outright.
  FermionHamiltonian h;
  h.n_levels = 2;
  h.two_body = canonical;
  const auto m = fock_matrix(h);
  CHECK(std::abs(m.at(0, 0) - cdouble(-1, 0)) < 1e-15);
  for (std::size_t d = 1; d < 4; ++d)
    CHECK(std::abs(m.at(d, d)) < 1e-15);
}

TEST_CASE("canonicalize_keeps_distinct_term_as_is") {
  const auto canonical =
      canonicalize_two_body({raw_two_body(1, 2, 4, 3, 1.0)});
  REQUIRE(canonical.size() == 1);
  CHECK(canonical.begin()->first == std::array<int, 4>{1, 2, 3, 4});
}

TEST_CASE("canonicalize_rejects_pauli_principle_violations") {
  CHECK_THROWS_AS(canonicalize_two_body({raw_two_body(1, 1, 2, 3, 1.0)}),
                  config_error);
  CHECK_THROWS_AS(canonicalize_two_body({raw_two_body(1, 2, 3, 3, 1.0)}),
                  config_error);
}

TEST_CASE("permuted_duplicates_leave_the_operator_unchanged") {
  RngStream rng(5, 0);
  for (int trial = 0; trial < 10; ++trial) {
    // One physical term plus its conjugate, written in canonical order.
    FermionHamiltonian direct;
    direct.n_levels = 6;
    direct.two_body =
        canonicalize_two_body({raw_two_body(1, 3, 6, 4, 0.8),
                               raw_two_body(4, 6, 3, 1, 0.8)});

    // The same operator scattered into sign-permuted fragments: each
    // creation or annihilation swap flips the written coefficient.
    std::vector<LadderTerm> scattered;
    auto emit = [&](int c1, int c2, int a1, int a2, double v) {
      scattered.push_back(raw_two_body(c1, c2, a1, a2, v));
    };
    const double u = rng.next_uniform();
    const double v = rng.next_uniform();
    emit(3, 1, 6, 4, -0.8 * u);
    emit(1, 3, 4, 6, -0.8 * (1.0 - u));
    emit(6, 4, 3, 1, -0.8 * v);
    emit(4, 6, 1, 3, -0.8 * (1.0 - v));
    FermionHamiltonian permuted;
    permuted.n_levels = 6;
    permuted.two_body = canonicalize_two_body(scattered);

    const auto md = fock_matrix(direct);
    const auto mp = fock_matrix(permuted);
    CHECK(md.max_abs_diff(mp) < 1e-12);
  }
}

TEST_CASE("model_builders_reject_bad_input") {
  CHECK_THROWS_AS(build_pairing(0, 0.0, 1.0), config_error);
  CHECK_THROWS_AS(build_pairing(2, 0.0, 1.0 / 0.0), config_error);
  CHECK_THROWS_AS(build_hubbard(0, 1.0, 1.0, 1.0, false), config_error);
}

TEST_CASE("constructed_models_have_real_symmetric_fock_matrices") {
  RngStream rng(11, 0);
  const auto models = {build_pairing(3, 0.7, 1.3),
                       build_hubbard(3, 1.0, 0.5, 2.0, true),
                       fermisim::testing::random_hamiltonian(5, rng)};
  for (const auto& h : models) {
    const auto m = fock_matrix(h);
    CHECK(m.max_abs_imag() < 1e-12);
    double asym = 0.0;
    for (std::size_t r = 0; r < m.dim; ++r)
      for (std::size_t c = 0; c < m.dim; ++c)
        asym = std::max(asym, std::abs(m.at(r, c) - m.at(c, r)));
    CHECK(asym < 1e-12);
  }
}

TEST_CASE("hubbard_without_hopping_is_diagonal") {
  const auto h = build_hubbard(3, 1.0, 0.0, 2.0, false);
  const auto m = fock_matrix(h);
  for (std::size_t r = 0; r < m.dim; ++r)
    for (std::size_t c = 0; c < m.dim; ++c)
      if (r != c) CHECK(std::abs(m.at(r, c)) < 1e-15);
}
