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

#include "fermisim/statevector.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

namespace fermisim {

namespace {

std::uint64_t qubit_mask(int n, int q) {
  return 1ULL << (n - q);
}

void apply_single_qubit(StateVector& state, int q, cdouble m00, cdouble m01,
                        cdouble m10, cdouble m11) {
  if (q < 1 || q > state.n_qubits)
    throw config_error("gate qubit index out of range");
  const std::uint64_t mask = qubit_mask(state.n_qubits, q);
  const std::uint64_t dim = state.dim();
  for (std::uint64_t x = 0; x < dim; ++x) {
    if (x & mask) continue;
    const cdouble a = state.amps[x];
    const cdouble b = state.amps[x | mask];
    state.amps[x] = m00 * a + m01 * b;
    state.amps[x | mask] = m10 * a + m11 * b;
  }
}

}  // namespace

StateVector StateVector::basis_state(int n, const std::string& bits) {
  if (static_cast<int>(bits.size()) != n)
    throw config_error("basis bitstring length must equal qubit count");
  StateVector s;
  s.n_qubits = n;
  s.amps.assign(1ULL << n, cdouble(0.0, 0.0));
  std::uint64_t index = 0;
  for (char c : bits) {
    if (c != '0' && c != '1')
      throw config_error("basis bitstring must contain only 0 and 1");
    index = (index << 1) | static_cast<std::uint64_t>(c - '0');
  }
  s.amps[index] = cdouble(1.0, 0.0);
  return s;
}

StateVector StateVector::random_state(int n, RngStream& rng) {
  StateVector s;
  s.n_qubits = n;
  s.amps.resize(1ULL << n);
  double norm2 = 0.0;
  for (auto& a : s.amps) {
    a = cdouble(rng.next_normal(), rng.next_normal());
    norm2 += std::norm(a);
  }
  const double scale = 1.0 / std::sqrt(norm2);
  for (auto& a : s.amps) a *= scale;
  return s;
}

double StateVector::norm() const {
  double norm2 = 0.0;
  for (const auto& a : amps) norm2 += std::norm(a);
  return std::sqrt(norm2);
}

void apply_gate(StateVector& state, const GateOp& op) {
  const int n = state.n_qubits;
  switch (op.kind) {
    case GateOp::Kind::Rot: {
      const double c = std::cos(op.angle);
      const double s = std::sin(op.angle);
      switch (op.axis) {
        case Axis::X:
          apply_single_qubit(state, op.q1, {c, 0}, {0, -s}, {0, -s}, {c, 0});
          break;
        case Axis::Y:
          apply_single_qubit(state, op.q1, {c, 0}, {-s, 0}, {s, 0}, {c, 0});
          break;
        case Axis::Z: {
          const cdouble lo(c, -s);
          const cdouble hi(c, s);
          const std::uint64_t mask = qubit_mask(n, op.q1);
          for (std::uint64_t x = 0; x < state.dim(); ++x)
            state.amps[x] *= (x & mask) ? hi : lo;
          break;
        }
      }
      break;
    }
    case GateOp::Kind::H: {
      const double r = 1.0 / std::sqrt(2.0);
      apply_single_qubit(state, op.q1, {r, 0}, {r, 0}, {r, 0}, {-r, 0});
      break;
    }
    case GateOp::Kind::ZZ: {
      if (op.q1 < 1 || op.q1 > n || op.q2 < 1 || op.q2 > n)
        throw config_error("gate qubit index out of range");
      const std::uint64_t ma = qubit_mask(n, op.q1);
      const std::uint64_t mb = qubit_mask(n, op.q2);
      const double c = std::cos(op.angle);
      const double s = std::sin(op.angle);
      const cdouble same(c, -s);
      const cdouble diff(c, s);
      for (std::uint64_t x = 0; x < state.dim(); ++x) {
        const bool equal_bits = ((x & ma) != 0) == ((x & mb) != 0);
        state.amps[x] *= equal_bits ? same : diff;
      }
      break;
    }
    case GateOp::Kind::CRotZ: {
      if (op.q1 < 1 || op.q1 > n || op.q2 < 1 || op.q2 > n)
        throw config_error("gate qubit index out of range");
      const std::uint64_t mc = qubit_mask(n, op.q1);
      const std::uint64_t mt = qubit_mask(n, op.q2);
      const double c = std::cos(op.angle);
      const double s = std::sin(op.angle);
      const cdouble lo(c, -s);
      const cdouble hi(c, s);
      for (std::uint64_t x = 0; x < state.dim(); ++x) {
        if (!(x & mc)) continue;
        state.amps[x] *= (x & mt) ? hi : lo;
      }
      break;
    }
    case GateOp::Kind::CPhase: {
      if (op.q1 < 1 || op.q1 > n)
        throw config_error("gate qubit index out of range");
      const std::uint64_t mc = qubit_mask(n, op.q1);
      const cdouble phase(std::cos(op.angle), -std::sin(op.angle));
      for (std::uint64_t x = 0; x < state.dim(); ++x)
        if (x & mc) state.amps[x] *= phase;
      break;
    }
    case GateOp::Kind::GlobalPhase: {
      const cdouble phase(std::cos(op.angle), -std::sin(op.angle));
      for (auto& a : state.amps) a *= phase;
      break;
    }
  }
}

void apply_sequence(StateVector& state, const GateSequence& seq) {
  for (const auto& op : seq.ops) apply_gate(state, op);
}

void apply_pauli_exponential(StateVector& state, const PauliTerm& term,
                             double dt) {
  const int n = state.n_qubits;
  std::uint64_t flip = 0;
  std::uint64_t ymask = 0;
  std::uint64_t zmask = 0;
  int ny = 0;
  for (const auto& [q, p] : term.letters) {
    const std::uint64_t m = qubit_mask(n, q);
    switch (p) {
      case Pauli::X:
        flip |= m;
        break;
      case Pauli::Y:
        flip |= m;
        ymask |= m;
        ++ny;
        break;
      case Pauli::Z:
        zmask |= m;
        break;
    }
  }
  const double theta = term.coeff * dt;
  const double c = std::cos(theta);
  const double s = std::sin(theta);

  if (flip == 0) {
    const cdouble plus(c, -s);
    const cdouble minus(c, s);
    for (std::uint64_t x = 0; x < state.dim(); ++x)
      state.amps[x] *= (std::popcount(x & zmask) & 1) ? minus : plus;
    return;
  }

  // i^ny times a sign from the bits under the Y and Z letters gives the
  // matrix element <x^flip|P|x>.
  static const cdouble kIPow[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  const cdouble w = kIPow[ny & 3];
  const cdouble wc = std::conj(w);
  const std::uint64_t yz = ymask | zmask;
  const std::uint64_t hi =
      1ULL << (63 - std::countl_zero(flip));
  const cdouble mis(0.0, -s);
  for (std::uint64_t x = 0; x < state.dim(); ++x) {
    if (x & hi) continue;
    const std::uint64_t y = x ^ flip;
    const double sx = (std::popcount(x & yz) & 1) ? -1.0 : 1.0;
    const cdouble px = w * sx;
    const cdouble py = wc * sx;
    const cdouble a = state.amps[x];
    const cdouble b = state.amps[y];
    state.amps[x] = c * a + mis * (py * b);
    state.amps[y] = c * b + mis * (px * a);
  }
}

void apply_trotter_step_exact(StateVector& state, const PauliHamiltonian& h,
                              double dt, int order) {
  if (h.constant != 0.0)
    apply_gate(state, GateOp::global_phase(h.constant * dt));
  if (order == 1) {
    for (const auto& term : h.terms) apply_pauli_exponential(state, term, dt);
  } else if (order == 2) {
    for (const auto& term : h.terms)
      apply_pauli_exponential(state, term, 0.5 * dt);
    for (auto it = h.terms.rbegin(); it != h.terms.rend(); ++it)
      apply_pauli_exponential(state, *it, 0.5 * dt);
  } else {
    throw config_error("trotter order must be 1 or 2");
  }
}

namespace {

void check_work_range(const StateVector& state, int first, int w) {
  if (w < 1 || first < 1 || first + w - 1 > state.n_qubits)
    throw config_error("work register out of range");
}

// In-place radix-2 FFT with kernel e^{-2 pi i j k / len} over a strided
// view of the amplitude array.
void dft_forward(std::vector<cdouble>& data) {
  const std::size_t len = data.size();
  for (std::size_t i = 1, j = 0; i < len; ++i) {
    std::size_t bit = len >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(data[i], data[j]);
  }
  for (std::size_t half = 1; half < len; half <<= 1) {
    const double ang = -M_PI / static_cast<double>(half);
    const cdouble wstep(std::cos(ang), std::sin(ang));
    for (std::size_t start = 0; start < len; start += 2 * half) {
      cdouble wk(1.0, 0.0);
      for (std::size_t k = 0; k < half; ++k) {
        const cdouble u = data[start + k];
        const cdouble v = data[start + k + half] * wk;
        data[start + k] = u + v;
        data[start + k + half] = u - v;
        wk *= wstep;
      }
    }
  }
}

}  // namespace

void inverse_qft(StateVector& state, int first, int w, bool use_gate_path) {
  check_work_range(state, first, w);
  if (use_gate_path) {
    apply_sequence(state, inverse_qft_sequence(state.n_qubits, first, w));
    return;
  }
  const int n = state.n_qubits;
  const int shift = n - (first + w - 1);
  const std::uint64_t wdim = 1ULL << w;
  const std::uint64_t lo_dim = 1ULL << shift;
  const std::uint64_t hi_dim = state.dim() >> (shift + w);
  const double scale = 1.0 / std::sqrt(static_cast<double>(wdim));

  std::vector<cdouble> column(wdim);
  for (std::uint64_t hi = 0; hi < hi_dim; ++hi) {
    for (std::uint64_t lo = 0; lo < lo_dim; ++lo) {
      const std::uint64_t base = (hi << (shift + w)) | lo;
      for (std::uint64_t f = 0; f < wdim; ++f)
        column[f] = state.amps[base | (f << shift)];
      dft_forward(column);
      for (std::uint64_t m = 0; m < wdim; ++m)
        state.amps[base | (m << shift)] = column[m] * scale;
    }
  }
}

GateSequence inverse_qft_sequence(int n_qubits, int first, int w) {
  GateSequence seq;
  seq.n_qubits = n_qubits;
  // Work-register value bit r (r = 0 is least significant) sits on qubit
  // first + w - 1 - r.
  const auto qubit_of_bit = [&](int r) { return first + w - 1 - r; };
  const auto controlled_phase = [&](int qc, int qt, double angle) {
    // diag(1,1,1,e^{i angle}) from the native alphabet.
    seq.append(GateOp::crotz(qc, qt, 0.5 * angle));
    seq.append(GateOp::cphase(qc, -0.5 * angle));
  };
  const auto swap_qubits = [&](int qa, int qb) {
    for (int rep = 0; rep < 3; ++rep) {
      const int qt = (rep % 2 == 0) ? qb : qa;
      const int qc = (rep % 2 == 0) ? qa : qb;
      seq.append(GateOp::h(qt));
      controlled_phase(qc, qt, M_PI);
      seq.append(GateOp::h(qt));
    }
  };

  // Inverse of the standard QFT circuit: undo the bit reversal, then the
  // conjugated H / controlled-phase cascade in reverse order.
  for (int r = 0; r < w / 2; ++r)
    swap_qubits(qubit_of_bit(r), qubit_of_bit(w - 1 - r));
  for (int j = 0; j < w; ++j) {
    seq.append(GateOp::h(qubit_of_bit(j)));
    for (int k = j + 1; k < w; ++k)
      controlled_phase(qubit_of_bit(k), qubit_of_bit(j),
                       -M_PI / static_cast<double>(1ULL << (k - j)));
  }
  return seq;
}

std::vector<double> work_register_marginal(const StateVector& state,
                                           int first, int w) {
  check_work_range(state, first, w);
  const int n = state.n_qubits;
  const int shift = n - (first + w - 1);
  const std::uint64_t wmask = (1ULL << w) - 1;
  std::vector<double> probs(1ULL << w, 0.0);
  for (std::uint64_t x = 0; x < state.dim(); ++x)
    probs[(x >> shift) & wmask] += std::norm(state.amps[x]);
  return probs;
}

std::uint64_t sample_from_distribution(const std::vector<double>& probs,
                                       RngStream& rng) {
  const double u = rng.next_uniform();
  double acc = 0.0;
  for (std::size_t i = 0; i < probs.size(); ++i) {
    acc += probs[i];
    if (u < acc) return i;
  }
  return probs.size() - 1;
}

std::vector<std::uint64_t> sample_work_register(const StateVector& state,
                                                int first, int w,
                                                RngStream& rng,
                                                std::uint64_t shots) {
  const std::vector<double> probs = work_register_marginal(state, first, w);
  std::vector<std::uint64_t> outcomes(shots);
  for (auto& m : outcomes) m = sample_from_distribution(probs, rng);
  return outcomes;
}

}  // namespace fermisim
