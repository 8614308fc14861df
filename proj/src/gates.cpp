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

#include "fermisim/gates.hpp"

#include <cmath>
#include <cstdio>

#include "fermisim/errors.hpp"

namespace fermisim {

namespace {
void require_finite_angle(double a) {
  if (!std::isfinite(a)) throw config_error("gate angle must be finite");
}
}  // namespace

GateOp GateOp::rot(Axis a, int q, double angle) {
  require_finite_angle(angle);
  return {Kind::Rot, a, q, 0, angle};
}

GateOp GateOp::zz(int qa, int qb, double angle) {
  require_finite_angle(angle);
  if (qa == qb) throw config_error("ZZ coupler needs two distinct qubits");
  return {Kind::ZZ, Axis::Z, qa, qb, angle};
}

GateOp GateOp::h(int q) { return {Kind::H, Axis::Z, q, 0, 0.0}; }

GateOp GateOp::crotz(int control, int target, double angle) {
  require_finite_angle(angle);
  if (control == target)
    throw config_error("controlled rotation needs distinct control/target");
  return {Kind::CRotZ, Axis::Z, control, target, angle};
}

GateOp GateOp::cphase(int control, double angle) {
  require_finite_angle(angle);
  return {Kind::CPhase, Axis::Z, control, 0, angle};
}

GateOp GateOp::global_phase(double angle) {
  require_finite_angle(angle);
  return {Kind::GlobalPhase, Axis::Z, 0, 0, angle};
}

GateOp GateOp::inverse() const {
  GateOp inv = *this;
  switch (kind) {
    case Kind::H:
      break;
    default:
      inv.angle = -angle;
      break;
  }
  return inv;
}

std::string GateOp::to_line() const {
  char buf[96];
  switch (kind) {
    case Kind::Rot: {
      const char ax = axis == Axis::X ? 'x' : (axis == Axis::Y ? 'y' : 'z');
      std::snprintf(buf, sizeof buf, "R %c %d %.17g", ax, q1, angle);
      break;
    }
    case Kind::ZZ:
      std::snprintf(buf, sizeof buf, "ZZ %d %d %.17g", q1, q2, angle);
      break;
    case Kind::H:
      std::snprintf(buf, sizeof buf, "H %d", q1);
      break;
    case Kind::CRotZ:
      std::snprintf(buf, sizeof buf, "CRZ %d %d %.17g", q1, q2, angle);
      break;
    case Kind::CPhase:
      std::snprintf(buf, sizeof buf, "CPHASE %d %.17g", q1, angle);
      break;
    case Kind::GlobalPhase:
      std::snprintf(buf, sizeof buf, "GPHASE %.17g", angle);
      break;
  }
  return buf;
}

void GateSequence::append(const GateSequence& other) {
  ops.insert(ops.end(), other.ops.begin(), other.ops.end());
}

}  // namespace fermisim
