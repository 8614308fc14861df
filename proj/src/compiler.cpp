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

#include "fermisim/compiler.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "fermisim/jordan_wigner.hpp"

namespace fermisim {

namespace {

constexpr double kQuarterTurn = M_PI / 4.0;

PauliString gate_generator(const GateOp& g, int n_qubits) {
  LetterMap letters;
  if (g.kind == GateOp::Kind::Rot) {
    const Pauli p = g.axis == Axis::X   ? Pauli::X
                    : g.axis == Axis::Y ? Pauli::Y
                                        : Pauli::Z;
    letters.emplace_back(g.q1, p);
  } else {
    letters.emplace_back(g.q1, Pauli::Z);
    letters.emplace_back(g.q2, Pauli::Z);
  }
  return PauliString(cdouble(1.0, 0.0), letters, n_qubits);
}

bool commutes(const PauliString& a, const PauliString& b) {
  // Two Pauli strings commute iff they disagree on an even number of
  // shared qubits.
  int clashes = 0;
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.letters.size() && j < b.letters.size()) {
    if (a.letters[i].first < b.letters[j].first) {
      ++i;
    } else if (b.letters[j].first < a.letters[i].first) {
      ++j;
    } else {
      if (a.letters[i].second != b.letters[j].second) ++clashes;
      ++i;
      ++j;
    }
  }
  return clashes % 2 == 0;
}

/// Conjugate C by the pi/4 gate g: returns g C g^-1.
PauliString conjugate_by(const PauliString& c, const GateOp& g, int n_qubits) {
  const PauliString gen = gate_generator(g, n_qubits);
  if (commutes(c, gen)) return c;
  PauliString out = pauli_multiply(c, gen);
  out.coeff *= (g.angle > 0) ? cdouble(0.0, 1.0) : cdouble(0.0, -1.0);
  return out;
}

Pauli other_endpoint(Pauli p) { return p == Pauli::X ? Pauli::Y : Pauli::X; }

GateOp z_to_endpoint_rotation(int qubit, Pauli target) {
  // Conjugation by exp(-i pi/4 Y) maps Z to X; by exp(+i pi/4 X) maps Z
  // to Y.  Both keep the phase at +1.
  return target == Pauli::X ? GateOp::rot(Axis::Y, qubit, kQuarterTurn)
                            : GateOp::rot(Axis::X, qubit, -kQuarterTurn);
}

/// Gate chain turning a Z core on `a` into the string
/// letter_a^a (Z on zs) letter_b^b, conjugating bottom-up as in the
/// worked single-particle factorization.  Phase stays +1 throughout: the
/// coupler sign tracks whether the working letter on `a` is X or Y.
std::vector<GateOp> build_ladder(int a, Pauli letter_a, int b, Pauli letter_b,
                                 const std::vector<int>& zs) {
  std::vector<int> couplers = zs;
  couplers.push_back(b);
  std::sort(couplers.begin(), couplers.end());

  std::vector<GateOp> chain;
  chain.reserve(couplers.size() + 2);
  Pauli working = (couplers.size() % 2 == 0) ? letter_a
                                             : other_endpoint(letter_a);
  chain.push_back(z_to_endpoint_rotation(a, working));
  for (int target : couplers) {
    chain.push_back(GateOp::zz(
        a, target, working == Pauli::X ? kQuarterTurn : -kQuarterTurn));
    working = other_endpoint(working);
  }
  chain.push_back(z_to_endpoint_rotation(b, letter_b));
  return chain;
}

struct Shape {
  std::vector<std::pair<int, Pauli>> endpoints;  // X/Y letters, sorted
  std::vector<int> zs;                           // Z positions, sorted
};

Shape classify_shape(const PauliTerm& term) {
  Shape s;
  for (const auto& [q, p] : term.letters) {
    if (p == Pauli::Z)
      s.zs.push_back(q);
    else
      s.endpoints.emplace_back(q, p);
  }
  return s;
}

std::string shape_error(const PauliTerm& term) {
  std::string msg = "unsupported string shape:";
  for (const auto& [q, p] : term.letters)
    msg += std::string(" ") + pauli_char(p) + std::to_string(q);
  return msg;
}

}  // namespace

GateSequence CompiledString::sequence(int n_qubits) const {
  GateSequence seq;
  seq.n_qubits = n_qubits;
  seq.ops = enter;
  seq.ops.push_back(core);
  seq.ops.insert(seq.ops.end(), exit.begin(), exit.end());
  return seq;
}

CompiledString compile_string_parts(const PauliTerm& term, int n_qubits,
                                    double dt) {
  const Shape shape = classify_shape(term);
  const double angle = term.coeff * dt;
  CompiledString out;

  std::vector<GateOp> chain;
  PauliString start;
  start.n_qubits = n_qubits;

  if (shape.endpoints.empty()) {
    switch (shape.zs.size()) {
      case 0:
        out.core = GateOp::global_phase(angle);
        return out;
      case 1:
        out.core = GateOp::rot(Axis::Z, shape.zs[0], angle);
        return out;
      case 2:
        out.core = GateOp::zz(shape.zs[0], shape.zs[1], angle);
        return out;
      default:
        throw config_error(shape_error(term));
    }
  } else if (shape.endpoints.size() == 2) {
    const auto [a, la] = shape.endpoints[0];
    const auto [b, lb] = shape.endpoints[1];
    chain = build_ladder(a, la, b, lb, shape.zs);
    out.core = GateOp::rot(Axis::Z, a, angle);
    start.letters = {{a, Pauli::Z}};
  } else if (shape.endpoints.size() == 4) {
    const auto [p1, l1] = shape.endpoints[0];
    const auto [p2, l2] = shape.endpoints[1];
    const auto [p3, l3] = shape.endpoints[2];
    const auto [p4, l4] = shape.endpoints[3];
    std::vector<int> zs_first;
    std::vector<int> zs_second;
    for (int z : shape.zs) {
      if (z > p3 && z < p4)
        zs_second.push_back(z);
      else
        zs_first.push_back(z);
    }
    chain = build_ladder(p1, l1, p2, l2, zs_first);
    const auto second = build_ladder(p3, l3, p4, l4, zs_second);
    chain.insert(chain.end(), second.begin(), second.end());
    out.core = GateOp::zz(p1, p3, angle);
    start.letters = {{p1, Pauli::Z}, {p3, Pauli::Z}};
  } else {
    throw config_error(shape_error(term));
  }

  // Self-check: conjugating the core's Pauli through the chain must land
  // exactly on the target string with phase +1.
  PauliString achieved = start;
  for (const auto& g : chain) achieved = conjugate_by(achieved, g, n_qubits);
  if (achieved.letters != term.letters ||
      std::abs(achieved.coeff - cdouble(1.0, 0.0)) > 1e-12)
    throw internal_error("conjugation ladder self-check failed for " +
                         achieved.to_string());

  out.exit = chain;
  out.enter.reserve(chain.size());
  for (auto it = chain.rbegin(); it != chain.rend(); ++it)
    out.enter.push_back(it->inverse());
  return out;
}

GateSequence compile_string_evolution(const PauliTerm& term, int n_qubits,
                                      double dt) {
  return compile_string_parts(term, n_qubits, dt).sequence(n_qubits);
}

GateSequence compile_trotter_step(const PauliHamiltonian& h, double dt,
                                  int order) {
  if (order != 1 && order != 2)
    throw config_error("trotter order must be 1 or 2");
  GateSequence seq;
  seq.n_qubits = h.n_qubits;
  if (h.constant != 0.0)
    seq.append(GateOp::global_phase(h.constant * dt));
  if (order == 1) {
    for (const auto& term : h.terms)
      seq.append(compile_string_evolution(term, h.n_qubits, dt));
  } else {
    for (const auto& term : h.terms)
      seq.append(compile_string_evolution(term, h.n_qubits, 0.5 * dt));
    for (auto it = h.terms.rbegin(); it != h.terms.rend(); ++it)
      seq.append(compile_string_evolution(*it, h.n_qubits, 0.5 * dt));
  }
  return seq;
}

namespace {

void append_controlled_core(GateSequence& seq, const GateOp& core,
                            int control) {
  switch (core.kind) {
    case GateOp::Kind::Rot:
      seq.append(GateOp::crotz(control, core.q1, core.angle));
      break;
    case GateOp::Kind::ZZ: {
      // Reduce the ZZ core to a single-Z core on q1: the three-gate chain
      // maps Z_q1 -> Z_q1 Z_q2 with phase +1.
      const GateOp g1 = GateOp::rot(Axis::Y, core.q1, kQuarterTurn);
      const GateOp g2 = GateOp::zz(core.q1, core.q2, kQuarterTurn);
      const GateOp g3 = GateOp::rot(Axis::X, core.q1, kQuarterTurn);
      seq.append(g3.inverse());
      seq.append(g2.inverse());
      seq.append(g1.inverse());
      seq.append(GateOp::crotz(control, core.q1, core.angle));
      seq.append(g1);
      seq.append(g2);
      seq.append(g3);
      break;
    }
    case GateOp::Kind::GlobalPhase:
      seq.append(GateOp::cphase(control, core.angle));
      break;
    default:
      throw internal_error("unexpected core gate kind");
  }
}

}  // namespace

GateSequence compile_controlled_evolution(const PauliHamiltonian& h,
                                          double dt, int intervals,
                                          int control,
                                          std::uint64_t repetitions,
                                          int order) {
  if (intervals < 1) throw config_error("intervals must be positive");
  if (control >= 1 && control <= h.n_qubits)
    throw config_error("wiring error: control qubit " +
                       std::to_string(control) +
                       " collides with the simulation register");
  if (control < 1) throw config_error("control qubit index must be >= 1");

  const double step_dt = dt / intervals;

  GateSequence step;
  step.n_qubits = std::max(h.n_qubits, control);
  if (h.constant != 0.0)
    append_controlled_core(step, GateOp::global_phase(h.constant * step_dt),
                           control);
  auto emit_term = [&](const PauliTerm& term, double d) {
    const CompiledString parts = compile_string_parts(term, h.n_qubits, d);
    for (const auto& g : parts.enter) step.append(g);
    append_controlled_core(step, parts.core, control);
    for (const auto& g : parts.exit) step.append(g);
  };
  if (order == 1) {
    for (const auto& term : h.terms) emit_term(term, step_dt);
  } else if (order == 2) {
    for (const auto& term : h.terms) emit_term(term, 0.5 * step_dt);
    for (auto it = h.terms.rbegin(); it != h.terms.rend(); ++it)
      emit_term(*it, 0.5 * step_dt);
  } else {
    throw config_error("trotter order must be 1 or 2");
  }

  GateSequence seq;
  seq.n_qubits = step.n_qubits;
  const std::uint64_t total = repetitions * static_cast<std::uint64_t>(intervals);
  seq.ops.reserve(step.ops.size() * total);
  for (std::uint64_t r = 0; r < total; ++r) seq.append(step);
  return seq;
}

int count_two_qubit_gates(const GateSequence& seq) {
  int count = 0;
  for (const auto& op : seq.ops)
    if (op.is_two_qubit()) ++count;
  return count;
}

GateCountReport count_report(const FermionHamiltonian& h, double dt) {
  GateCountReport report;
  const PauliHamiltonian ph = jw_hamiltonian(h);
  const GateSequence step = compile_trotter_step(ph, dt, 1);
  for (const auto& op : step.ops) {
    ++report.total_ops;
    if (op.is_two_qubit())
      ++report.two_qubit;
    else if (op.kind == GateOp::Kind::Rot || op.kind == GateOp::Kind::H)
      ++report.single_qubit;
  }

  // Publication-convention tally, term by term.
  report.table_count = 3;
  for (const auto& [ij, value] : h.one_body) {
    (void)value;
    const auto [i, j] = ij;
    if (i == j)
      report.table_count += 1;
    else
      report.table_count += 2 * (2 * (j - i) + 5);
  }
  for (const auto& [ijkl, value] : h.two_body) {
    const auto [i, j, k, l] = ijkl;
    if (i == k && j == l) {
      report.table_count += 4;
      continue;
    }
    std::array<int, 4> pos{i, j, k, l};
    std::sort(pos.begin(), pos.end());
    if (pos[0] == pos[1] || pos[1] == pos[2] || pos[2] == pos[3]) {
      // Overlapping three-index term: count the compiled gates directly.
      LadderTerm t1{{{LadderKind::Create, i},
                     {LadderKind::Create, j},
                     {LadderKind::Annihilate, l},
                     {LadderKind::Annihilate, k}},
                    value};
      PauliSum sum = jw_term(t1, h.n_levels);
      LadderTerm t2{{{LadderKind::Create, k},
                     {LadderKind::Create, l},
                     {LadderKind::Annihilate, j},
                     {LadderKind::Annihilate, i}},
                    value};
      sum += jw_term(t2, h.n_levels);
      const PauliHamiltonian real = finalize_real(sum);
      for (const auto& term : real.terms)
        report.table_count += static_cast<long long>(
            compile_string_evolution(term, h.n_levels, dt).ops.size());
      if (real.constant != 0.0) report.table_count += 1;
      continue;
    }
    const int span = (pos[1] - pos[0]) + (pos[3] - pos[2]);
    report.table_count += 8 * (2 * span + 9);
  }
  return report;
}

}  // namespace fermisim
