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

#include <string>
#include <vector>

namespace fermisim {

enum class Axis : int { X = 0, Y = 1, Z = 2 };

/// Native gate alphabet.  Rotations and couplers are full-angle
/// exponentials: Rot(axis,q,a) = exp(-i a sigma_axis^q) and
/// ZZ(p,q,a) = exp(-i a Z_p Z_q).  CRotZ applies exp(-i a Z_target) when
/// the control is |1>; CPhase is diag(1, e^{-i a}) on the control alone.
/// GlobalPhase(a) multiplies the state by e^{-i a} (bookkeeping).
struct GateOp {
  enum class Kind : int { Rot, ZZ, H, CRotZ, CPhase, GlobalPhase };

  Kind kind;
  Axis axis = Axis::Z;  // Rot only
  int q1 = 0;           // Rot/H/CPhase: the qubit; ZZ: first; CRotZ: control
  int q2 = 0;           // ZZ: second qubit; CRotZ: target
  double angle = 0.0;

  static GateOp rot(Axis a, int q, double angle);
  static GateOp zz(int qa, int qb, double angle);
  static GateOp h(int q);
  static GateOp crotz(int control, int target, double angle);
  static GateOp cphase(int control, double angle);
  static GateOp global_phase(double angle);

  GateOp inverse() const;
  bool is_two_qubit() const { return kind == Kind::ZZ || kind == Kind::CRotZ; }

  /// One line of the gate-list text format.
  std::string to_line() const;
};

/// Ordered native-gate program; the first element is applied to the state
/// first.
struct GateSequence {
  std::vector<GateOp> ops;
  int n_qubits = 0;

  void append(const GateOp& op) { ops.push_back(op); }
  void append(const GateSequence& other);
};

}  // namespace fermisim
