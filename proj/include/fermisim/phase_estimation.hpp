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

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fermisim/fermion.hpp"
#include "fermisim/pauli.hpp"
#include "fermisim/statevector.hpp"

namespace fermisim {

/// Phase-estimation run parameters.  dt and e_max default to values
/// derived from a rigorous operator-norm bound on the spectrum: dt is the
/// largest step resolving the bound window, e_max the upper bound plus
/// one bin width of slack so every shifted eigenvalue is strictly
/// negative.
struct PEConfig {
  int work_qubits = 6;
  std::optional<double> dt;
  std::optional<double> e_max;
  int intervals = 1;
  int trotter_order = 1;
  std::uint64_t shots = 1024;
  std::uint64_t seed = 1;

  enum class InputKind { Random, Basis };
  InputKind input_kind = InputKind::Random;
  std::string basis_bits;
  /// Draw a new random simulation state for every shot (the default) or
  /// reuse one state for the whole run.
  bool fresh_per_shot = true;

  /// "circuit" walks the full (s+w)-qubit register gate by gate;
  /// "fast" evolves one simulation-register branch per work-register
  /// basis value and Fourier-transforms the branch index.  The two agree
  /// to numerical tolerance and are cross-checked in the tests.
  enum class Engine { Fast, Circuit };
  Engine engine = Engine::Fast;
};

/// PEConfig with the data-dependent defaults filled in.
struct ResolvedPEConfig {
  int simulation_qubits = 0;
  int work_qubits = 0;
  double dt = 0.0;
  double e_max = 0.0;
  int intervals = 1;
  int trotter_order = 1;
  std::uint64_t shots = 0;
  std::uint64_t seed = 0;
  PEConfig::InputKind input_kind = PEConfig::InputKind::Random;
  std::string basis_bits;
  bool fresh_per_shot = true;
  PEConfig::Engine engine = PEConfig::Engine::Fast;

  double bin_width() const;
  std::uint64_t n_bins() const { return 1ULL << work_qubits; }
};

struct SpectrumHistogram {
  ResolvedPEConfig config;
  std::vector<std::uint64_t> counts;
  std::uint64_t shots = 0;

  double phi_of_bin(std::uint64_t m) const;
};

/// phi = m / 2^w and E = e_max - 2 pi phi / dt.
double energy_from_bin(std::uint64_t m, const ResolvedPEConfig& cfg);
std::uint64_t bin_from_energy(double energy, const ResolvedPEConfig& cfg);

/// Largest time step that fits the spectrum window without wrap-around.
double max_dt(double e_min_bound, double e_max_bound);

/// Rigorous spectral bounds +-(|constant| + sum |string coefficients|) of
/// the Jordan-Wigner form, widened to at least (-1, 1).
std::pair<double, double> default_energy_bounds(const FermionHamiltonian& h);

ResolvedPEConfig resolve_pe_config(const FermionHamiltonian& h,
                                   const PEConfig& cfg);

/// The full pipeline: for each shot, prepare the work register with
/// Hadamards, prepare the simulation register, run the controlled
/// Trotterized evolutions of H' = H - e_max (work qubit j controls 2^(j-1)
/// repetitions), inverse-QFT the work register and sample it.
/// Deterministic for a fixed seed.
SpectrumHistogram run_phase_estimation(const FermionHamiltonian& h,
                                       const PEConfig& cfg);

/// Final work-register distribution for one prepared input state (the
/// sampling-free core of run_phase_estimation).
std::vector<double> pe_outcome_distribution(const PauliHamiltonian& shifted,
                                            const ResolvedPEConfig& cfg,
                                            const StateVector& input);

struct PeakClassification {
  std::uint64_t bin = 0;
  double energy = 0.0;
  double mass_fraction = 0.0;
  bool aliased = false;
};

struct ScanResult {
  SpectrumHistogram base;
  std::vector<SpectrumHistogram> shifted;
  std::vector<PeakClassification> peaks;
};

/// Re-run phase estimation at dt + delta for each shift and flag peaks
/// whose energy estimate moves by more than one bin: those wrapped around
/// the phase window.  e_max is pinned across runs.  Shifts default to two
/// irrational-approximant fractions of dt.
ScanResult spectrum_scan(const FermionHamiltonian& h, const PEConfig& cfg,
                         std::vector<double> dt_shifts = {});

/// Histogram bins with at least max(5, 1% of shots) counts.
std::vector<std::uint64_t> dominant_bins(const SpectrumHistogram& hist);

/// Spearman rank correlation between per-eigenvalue peak masses (counts
/// within one bin width of each eigenvalue) and the supplied
/// degeneracies.  Meaningful only for random-input runs; a histogram from
/// a fixed basis-state input reflects a single eigencomponent, so the
/// profile reports not-applicable as NaN.
double multiplicity_profile(const SpectrumHistogram& hist,
                            const std::vector<double>& eigenvalues,
                            const std::vector<int>& degeneracies);

}  // namespace fermisim
