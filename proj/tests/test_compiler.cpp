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
#include <cmath>

#include "fermisim/compiler.hpp"
#include "fermisim/jordan_wigner.hpp"
#include "fermisim/oracle.hpp"
#include "test_util.hpp"

using namespace fermisim;

namespace {

PauliTerm make_term(double coeff, LetterMap letters) {
  return PauliTerm{coeff, std::move(letters)};
}

DenseMatrix exact_evolution(const PauliTerm& term, int n, double dt) {
  const PauliString p(cdouble(1.0, 0.0), term.letters, n);
  return matrix_exponential_hermitian(pauli_matrix(p), term.coeff * dt);
}

PauliTerm random_in_scope_term(RngStream& rng, int n) {
  const double coeff = 2.0 * rng.next_uniform() - 1.0;
  const double shape = rng.next_uniform();
  auto draw_distinct = [&](int count) {
    std::vector<int> qubits;
    while (static_cast<int>(qubits.size()) < count) {
      const int q = 1 + static_cast<int>(rng.next_uniform() * n);
      if (std::find(qubits.begin(), qubits.end(), q) == qubits.end())
        qubits.push_back(q);
    }
    std::sort(qubits.begin(), qubits.end());
    return qubits;
  };
  auto xy = [&]() { return rng.next_uniform() < 0.5 ? Pauli::X : Pauli::Y; };

  LetterMap letters;
  if (shape < 0.25) {
    // Pure-Z of weight 1 or 2.
    for (int q : draw_distinct(1 + (rng.next_uniform() < 0.5 ? 1 : 0)))
      letters.emplace_back(q, Pauli::Z);
  } else if (shape < 0.65 && n >= 2) {
    const auto ends = draw_distinct(2);
    letters.emplace_back(ends[0], xy());
    letters.emplace_back(ends[1], xy());
    for (int q = ends[0] + 1; q < ends[1]; ++q)
      if (rng.next_uniform() < 0.7) letters.emplace_back(q, Pauli::Z);
  } else if (n >= 4) {
    const auto ends = draw_distinct(4);
    for (int e = 0; e < 4; ++e) letters.emplace_back(ends[e], xy());
    for (int q = ends[0] + 1; q < ends[1]; ++q)
      if (rng.next_uniform() < 0.7) letters.emplace_back(q, Pauli::Z);
    for (int q = ends[2] + 1; q < ends[3]; ++q)
      if (rng.next_uniform() < 0.7) letters.emplace_back(q, Pauli::Z);
  } else {
    letters.emplace_back(1, Pauli::Z);
  }
  std::sort(letters.begin(), letters.end());
  return make_term(coeff, std::move(letters));
}

}  // namespace

TEST_CASE("single_z_compiles_to_one_rotation") {
  const auto seq = compile_string_evolution(
      make_term(0.8, {{1, Pauli::Z}}), 2, 0.5);
  REQUIRE(seq.ops.size() == 1);
  CHECK(seq.ops[0].kind == GateOp::Kind::Rot);
  CHECK(seq.ops[0].axis == Axis::Z);
  CHECK(seq.ops[0].angle == 0.8 * 0.5);
}

TEST_CASE("identity_string_compiles_to_global_phase") {
  const auto seq = compile_string_evolution(make_term(1.5, {}), 2, 2.0);
  REQUIRE(seq.ops.size() == 1);
  CHECK(seq.ops[0].kind == GateOp::Kind::GlobalPhase);
  CHECK(seq.ops[0].angle == 3.0);
}

TEST_CASE("yy_evolution_matches_exact_exponential") {
  const auto term = make_term(1.0, {{1, Pauli::Y}, {2, Pauli::Y}});
  const double theta = 0.47;
  const auto seq = compile_string_evolution(term, 2, theta);
  const auto compiled = gate_matrix(seq);
  const auto exact = exact_evolution(term, 2, theta);
  CHECK(compiled.max_abs_diff(exact) < 1e-10);
}

TEST_CASE("xzx_ladder_has_the_worked_example_structure") {
  const auto term =
      make_term(1.0, {{1, Pauli::X}, {2, Pauli::Z}, {3, Pauli::X}});
  const auto parts = compile_string_parts(term, 3, 0.3);
  // Two single-qubit rotations around two couplers on each side of an Rz
  // core on the first endpoint.
  REQUIRE(parts.exit.size() == 4);
  CHECK(parts.exit[0].kind == GateOp::Kind::Rot);
  CHECK(parts.exit[1].kind == GateOp::Kind::ZZ);
  CHECK(parts.exit[1].q1 == 1);
  CHECK(parts.exit[1].q2 == 2);
  CHECK(parts.exit[2].kind == GateOp::Kind::ZZ);
  CHECK(parts.exit[2].q2 == 3);
  CHECK(parts.exit[3].kind == GateOp::Kind::Rot);
  CHECK(parts.exit[3].q1 == 3);
  CHECK(parts.core.kind == GateOp::Kind::Rot);
  CHECK(parts.core.q1 == 1);

  const auto compiled = gate_matrix(parts.sequence(3));
  CHECK(compiled.max_abs_diff(exact_evolution(term, 3, 0.3)) < 1e-10);
}

TEST_CASE("random_in_scope_strings_compile_correctly") {
  RngStream rng(101, 0);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 2 + static_cast<int>(rng.next_uniform() * 5);
    const auto term = random_in_scope_term(rng, n);
    const double dt = 4.0 * rng.next_uniform() - 2.0;
    const auto seq = compile_string_evolution(term, n, dt);
    const auto compiled = gate_matrix(seq);
    const auto exact = exact_evolution(term, n, dt);
    INFO("term " << PauliString(cdouble(term.coeff, 0), term.letters, n)
                     .to_string());
    CHECK(compiled.max_abs_diff(exact) < 1e-10);
  }
}

TEST_CASE("out_of_scope_shapes_are_rejected") {
  CHECK_THROWS_AS(compile_string_evolution(
                      make_term(1.0, {{1, Pauli::X}}), 2, 0.1),
                  config_error);
  CHECK_THROWS_AS(
      compile_string_evolution(
          make_term(1.0, {{1, Pauli::Z}, {2, Pauli::Z}, {3, Pauli::Z}}), 3,
          0.1),
      config_error);
  CHECK_THROWS_AS(
      compile_string_evolution(
          make_term(1.0, {{1, Pauli::X}, {2, Pauli::X}, {3, Pauli::Y},
                          {4, Pauli::X}, {5, Pauli::Y}, {6, Pauli::X}}),
          6, 0.1),
      config_error);
}

TEST_CASE("single_term_trotter_step_is_exact_for_both_orders") {
  PauliHamiltonian h;
  h.n_qubits = 3;
  h.constant = 0.4;
  h.terms.push_back(make_term(0.9, {{1, Pauli::X}, {3, Pauli::X}}));
  const double dt = 0.8;
  for (int order : {1, 2}) {
    const auto u = gate_matrix(compile_trotter_step(h, dt, order));
    auto exact = exact_evolution(h.terms[0], 3, dt);
    const cdouble phase(std::cos(h.constant * dt), -std::sin(h.constant * dt));
    for (auto& v : exact.data) v *= phase;
    CHECK(u.max_abs_diff(exact) < 1e-10);
  }
}

TEST_CASE("order_two_step_is_symmetric") {
  PauliHamiltonian h;
  h.n_qubits = 2;
  h.terms.push_back(make_term(0.9, {{1, Pauli::X}, {2, Pauli::X}}));
  h.terms.push_back(make_term(0.5, {{1, Pauli::Z}}));
  const double dt = 0.3;
  const auto u = gate_matrix(compile_trotter_step(h, dt, 2));
  const auto u_back = gate_matrix(compile_trotter_step(h, -dt, 2));
  const auto prod = u.multiply(u_back);
  CHECK(prod.max_abs_diff(DenseMatrix::identity(4)) < 1e-12);
}

TEST_CASE("controlled_evolution_is_identity_when_control_is_off") {
  RngStream rng(55, 0);
  PauliHamiltonian h;
  h.n_qubits = 3;
  h.constant = -0.7;
  h.terms.push_back(make_term(0.8, {{1, Pauli::X}, {2, Pauli::Z},
                                    {3, Pauli::X}}));
  h.terms.push_back(make_term(-0.3, {{2, Pauli::Z}}));
  h.terms.push_back(make_term(0.45, {{1, Pauli::Z}, {2, Pauli::Z}}));

  const auto seq = compile_controlled_evolution(h, 0.6, 2, 4, 3);
  const auto u = gate_matrix(seq);

  const auto uncontrolled = [&] {
    GateSequence step;
    step.n_qubits = 3;
    for (int r = 0; r < 2 * 3; ++r)
      step.append(compile_trotter_step(h, 0.6 / 2.0, 1));
    return gate_matrix(step);
  }();

  // Control = qubit 4 = lowest index bit.
  for (std::size_t r = 0; r < 8; ++r) {
    for (std::size_t c = 0; c < 8; ++c) {
      const cdouble off = u.at(2 * r, 2 * c);
      const cdouble on = u.at(2 * r + 1, 2 * c + 1);
      const cdouble want_off = (r == c) ? cdouble(1, 0) : cdouble(0, 0);
      CHECK(std::abs(off - want_off) < 1e-10);
      CHECK(std::abs(on - uncontrolled.at(r, c)) < 1e-10);
      CHECK(std::abs(u.at(2 * r + 1, 2 * c)) < 1e-12);
      CHECK(std::abs(u.at(2 * r, 2 * c + 1)) < 1e-12);
    }
  }
  (void)rng;
}

TEST_CASE("pure_constant_hamiltonian_controls_to_a_single_cphase") {
  PauliHamiltonian h;
  h.n_qubits = 2;
  h.constant = 1.3;
  const auto seq = compile_controlled_evolution(h, 0.5, 1, 3, 4);
  REQUIRE(seq.ops.size() == 4);
  for (const auto& op : seq.ops) {
    CHECK(op.kind == GateOp::Kind::CPhase);
    CHECK(op.q1 == 3);
    CHECK(op.angle == 1.3 * 0.5);
  }
}

TEST_CASE("controlled_evolution_rejects_colliding_control") {
  PauliHamiltonian h;
  h.n_qubits = 3;
  CHECK_THROWS_AS(compile_controlled_evolution(h, 0.5, 1, 2, 1),
                  config_error);
}

TEST_CASE("two_qubit_count_is_affine_in_the_endpoint_distance") {
  std::vector<int> counts;
  for (int j = 2; j <= 6; ++j) {
    const auto term = make_term(1.0, [&] {
      LetterMap l{{1, Pauli::X}, {j, Pauli::X}};
      for (int q = 2; q < j; ++q) l.emplace_back(q, Pauli::Z);
      std::sort(l.begin(), l.end());
      return l;
    }());
    counts.push_back(
        count_two_qubit_gates(compile_string_evolution(term, 6, 0.1)));
  }
  for (std::size_t i = 1; i < counts.size(); ++i)
    CHECK(counts[i] - counts[i - 1] == counts[1] - counts[0]);
}

TEST_CASE("gate_count_report_matches_published_table_for_small_sizes") {
  const auto hub = count_report(build_hubbard(2, 1.0, 1.0, 1.0, false), 0.1);
  CHECK(hub.table_count == 51);
  const auto pair = count_report(build_pairing(2, 1.0, 1.0), 0.1);
  CHECK(pair.table_count == 119);
  const auto tiny_h = count_report(build_hubbard(1, 1.0, 1.0, 1.0, false), 0.1);
  CHECK(tiny_h.table_count == 9);
  const auto tiny_p = count_report(build_pairing(1, 1.0, 1.0), 0.1);
  CHECK(tiny_p.table_count == 9);
}

TEST_CASE("empty_hamiltonian_counts_zero_two_qubit_gates") {
  GateSequence empty;
  empty.n_qubits = 2;
  CHECK(count_two_qubit_gates(empty) == 0);
}
