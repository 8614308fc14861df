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

#include "fermisim/phase_estimation.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <thread>

#include "fermisim/compiler.hpp"
#include "fermisim/jordan_wigner.hpp"

namespace fermisim {

namespace {
constexpr int kMaxTotalQubits = 26;  // 2^26 amplitudes = 1 GiB
}

double ResolvedPEConfig::bin_width() const {
  return 2.0 * M_PI / (dt * static_cast<double>(n_bins()));
}

double SpectrumHistogram::phi_of_bin(std::uint64_t m) const {
  return static_cast<double>(m) / static_cast<double>(config.n_bins());
}

double energy_from_bin(std::uint64_t m, const ResolvedPEConfig& cfg) {
  if (m >= cfg.n_bins()) throw config_error("bin index out of range");
  const double phi =
      static_cast<double>(m) / static_cast<double>(cfg.n_bins());
  return cfg.e_max - 2.0 * M_PI * phi / cfg.dt;
}

std::uint64_t bin_from_energy(double energy, const ResolvedPEConfig& cfg) {
  const double phi = (cfg.e_max - energy) * cfg.dt / (2.0 * M_PI);
  const long long m =
      std::llround(phi * static_cast<double>(cfg.n_bins()));
  const long long dim = static_cast<long long>(cfg.n_bins());
  return static_cast<std::uint64_t>(((m % dim) + dim) % dim);
}

double max_dt(double e_min_bound, double e_max_bound) {
  if (!(e_max_bound > e_min_bound))
    throw config_error("max_dt: degenerate energy interval");
  return 2.0 * M_PI / (e_max_bound - e_min_bound);
}

std::pair<double, double> default_energy_bounds(const FermionHamiltonian& h) {
  const PauliHamiltonian ph = jw_hamiltonian(h);
  double bound = std::abs(ph.constant) + ph.coefficient_l1();
  if (bound < 1.0) bound = 1.0;
  return {-bound, bound};
}

ResolvedPEConfig resolve_pe_config(const FermionHamiltonian& h,
                                   const PEConfig& cfg) {
  if (cfg.work_qubits < 1) throw config_error("need at least one work qubit");
  if (cfg.shots < 1) throw config_error("need at least one shot");
  if (cfg.intervals < 1) throw config_error("intervals must be positive");
  if (cfg.trotter_order != 1 && cfg.trotter_order != 2)
    throw config_error("trotter order must be 1 or 2");

  ResolvedPEConfig r;
  r.simulation_qubits = h.n_levels;
  r.work_qubits = cfg.work_qubits;
  r.intervals = cfg.intervals;
  r.trotter_order = cfg.trotter_order;
  r.shots = cfg.shots;
  r.seed = cfg.seed;
  r.input_kind = cfg.input_kind;
  r.basis_bits = cfg.basis_bits;
  r.fresh_per_shot = cfg.fresh_per_shot;
  r.engine = cfg.engine;

  const auto bounds = default_energy_bounds(h);
  r.dt = cfg.dt.value_or(max_dt(bounds.first, bounds.second));
  if (!(r.dt > 0.0)) throw config_error("dt must be positive");
  r.e_max = cfg.e_max.value_or(bounds.second + r.bin_width());

  if (r.simulation_qubits + r.work_qubits > kMaxTotalQubits)
    throw resource_error("register of " +
                         std::to_string(r.simulation_qubits + r.work_qubits) +
                         " qubits exceeds the memory budget");
  if (r.input_kind == PEConfig::InputKind::Basis &&
      static_cast<int>(r.basis_bits.size()) != r.simulation_qubits)
    throw config_error("basis input bitstring must have one bit per "
                       "simulation qubit");
  return r;
}

namespace {

StateVector prepare_input(const ResolvedPEConfig& cfg, RngStream& rng) {
  if (cfg.input_kind == PEConfig::InputKind::Basis)
    return StateVector::basis_state(cfg.simulation_qubits, cfg.basis_bits);
  return StateVector::random_state(cfg.simulation_qubits, rng);
}

/// Virtual-work-register path: branch f of the work register holds
/// U^(I f)|psi>/sqrt(2^w); the inverse QFT is a DFT over f.
std::vector<double> fast_marginal(const PauliHamiltonian& shifted,
                                  const ResolvedPEConfig& cfg,
                                  const StateVector& input) {
  const int s = cfg.simulation_qubits;
  const std::uint64_t sdim = 1ULL << s;
  const std::uint64_t wdim = cfg.n_bins();
  const double step_dt = cfg.dt / cfg.intervals;

  // A Hamiltonian of pure-Z strings has a diagonal step: fold the whole
  // step into one phase vector once and reuse it for every branch.
  bool diagonal = true;
  for (const auto& term : shifted.terms)
    for (const auto& [q, p] : term.letters) {
      (void)q;
      if (p != Pauli::Z) diagonal = false;
    }
  std::vector<cdouble> step_phase;
  if (diagonal) {
    StateVector ones;
    ones.n_qubits = s;
    ones.amps.assign(sdim, cdouble(1.0, 0.0));
    for (int i = 0; i < cfg.intervals; ++i)
      apply_trotter_step_exact(ones, shifted, step_dt, cfg.trotter_order);
    step_phase = std::move(ones.amps);
  }

  std::vector<cdouble> branches(sdim * wdim);
  StateVector work;
  work.n_qubits = s;
  work.amps = input.amps;
  std::copy(work.amps.begin(), work.amps.end(), branches.begin());
  for (std::uint64_t f = 1; f < wdim; ++f) {
    if (diagonal) {
      for (std::uint64_t x = 0; x < sdim; ++x) work.amps[x] *= step_phase[x];
    } else {
      for (int i = 0; i < cfg.intervals; ++i)
        apply_trotter_step_exact(work, shifted, step_dt, cfg.trotter_order);
    }
    std::copy(work.amps.begin(), work.amps.end(),
              branches.begin() + f * sdim);
  }

  StateVector joint;
  joint.n_qubits = s + cfg.work_qubits;
  joint.amps = std::move(branches);
  // branches are laid out f-major, i.e. the work field occupies the HIGH
  // bits here; transform that register directly.
  const double scale = 1.0 / std::sqrt(static_cast<double>(wdim));
  for (auto& a : joint.amps) a *= scale;
  inverse_qft(joint, 1, cfg.work_qubits);

  std::vector<double> probs(wdim, 0.0);
  for (std::uint64_t m = 0; m < wdim; ++m) {
    double p = 0.0;
    const cdouble* row = joint.amps.data() + m * sdim;
    for (std::uint64_t x = 0; x < sdim; ++x) p += std::norm(row[x]);
    probs[m] = p;
  }
  return probs;
}

/// Literal gate-level path over the full register.
std::vector<double> circuit_marginal(const PauliHamiltonian& shifted,
                                     const ResolvedPEConfig& cfg,
                                     const StateVector& input) {
  const int s = cfg.simulation_qubits;
  const int w = cfg.work_qubits;
  const std::uint64_t sdim = 1ULL << s;

  StateVector joint;
  joint.n_qubits = s + w;
  joint.amps.assign(sdim << w, cdouble(0.0, 0.0));
  for (std::uint64_t x = 0; x < sdim; ++x)
    joint.amps[x << w] = input.amps[x];
  for (int q = s + 1; q <= s + w; ++q) apply_gate(joint, GateOp::h(q));

  // Work qubit j (controlling 2^(j-1) repetitions) is physical qubit
  // s + w + 1 - j, so the register's low bits count repetitions.
  for (int j = 1; j <= w; ++j) {
    const int control = s + w + 1 - j;
    const GateSequence seq = compile_controlled_evolution(
        shifted, cfg.dt, cfg.intervals, control, 1ULL << (j - 1),
        cfg.trotter_order);
    apply_sequence(joint, seq);
  }
  inverse_qft(joint, s + 1, w);
  return work_register_marginal(joint, s + 1, w);
}

std::vector<double> outcome_distribution(const PauliHamiltonian& shifted,
                                         const ResolvedPEConfig& cfg,
                                         const StateVector& input) {
  return cfg.engine == PEConfig::Engine::Fast
             ? fast_marginal(shifted, cfg, input)
             : circuit_marginal(shifted, cfg, input);
}

}  // namespace

std::vector<double> pe_outcome_distribution(const PauliHamiltonian& shifted,
                                            const ResolvedPEConfig& cfg,
                                            const StateVector& input) {
  return outcome_distribution(shifted, cfg, input);
}

SpectrumHistogram run_phase_estimation(const FermionHamiltonian& h,
                                       const PEConfig& cfg) {
  const ResolvedPEConfig r = resolve_pe_config(h, cfg);
  PauliHamiltonian shifted = jw_hamiltonian(h);
  shifted.constant -= r.e_max;

  SpectrumHistogram hist;
  hist.config = r;
  hist.counts.assign(r.n_bins(), 0);
  hist.shots = r.shots;

  const bool fresh =
      r.fresh_per_shot && r.input_kind == PEConfig::InputKind::Random;
  if (!fresh) {
    RngStream state_rng(r.seed, 0);
    const StateVector input = prepare_input(r, state_rng);
    const std::vector<double> probs = outcome_distribution(shifted, r, input);
    for (std::uint64_t shot = 0; shot < r.shots; ++shot) {
      RngStream rng(r.seed, 1 + shot);
      ++hist.counts[sample_from_distribution(probs, rng)];
    }
    return hist;
  }

  const unsigned hw = std::thread::hardware_concurrency();
  const std::uint64_t n_workers =
      std::min<std::uint64_t>(std::max(1u, hw), r.shots);
  std::vector<std::vector<std::uint64_t>> partial(
      n_workers, std::vector<std::uint64_t>(r.n_bins(), 0));
  auto worker = [&](std::uint64_t id) {
    for (std::uint64_t shot = id; shot < r.shots; shot += n_workers) {
      RngStream rng(r.seed, 1 + shot);
      const StateVector input = prepare_input(r, rng);
      const std::vector<double> probs =
          outcome_distribution(shifted, r, input);
      ++partial[id][sample_from_distribution(probs, rng)];
    }
  };
  std::vector<std::thread> threads;
  for (std::uint64_t id = 1; id < n_workers; ++id)
    threads.emplace_back(worker, id);
  worker(0);
  for (auto& t : threads) t.join();
  for (const auto& p : partial)
    for (std::uint64_t m = 0; m < r.n_bins(); ++m) hist.counts[m] += p[m];
  return hist;
}

std::vector<std::uint64_t> dominant_bins(const SpectrumHistogram& hist) {
  const double threshold =
      std::max(5.0, 0.01 * static_cast<double>(hist.shots));
  std::vector<std::uint64_t> bins;
  for (std::uint64_t m = 0; m < hist.counts.size(); ++m)
    if (static_cast<double>(hist.counts[m]) >= threshold) bins.push_back(m);
  return bins;
}

ScanResult spectrum_scan(const FermionHamiltonian& h, const PEConfig& cfg,
                         std::vector<double> dt_shifts) {
  ScanResult result;
  result.base = run_phase_estimation(h, cfg);
  const ResolvedPEConfig& base_cfg = result.base.config;
  if (dt_shifts.empty()) {
    // Ratios (dt + delta)/dt near sqrt(2)-flavoured irrationals: an
    // aliased phase cannot land on the same bin by accident.
    dt_shifts = {base_cfg.dt * (std::sqrt(2.0) - 1.0) / 4.0,
                 base_cfg.dt * (std::sqrt(3.0) - 1.0) / 8.0};
  }
  if (dt_shifts.empty())
    throw config_error("spectrum_scan needs at least one dt shift");

  for (double delta : dt_shifts) {
    PEConfig shifted_cfg = cfg;
    shifted_cfg.dt = base_cfg.dt + delta;
    shifted_cfg.e_max = base_cfg.e_max;  // pin the window shift to dt only
    result.shifted.push_back(run_phase_estimation(h, shifted_cfg));
  }

  const double width = base_cfg.bin_width();
  for (std::uint64_t m : dominant_bins(result.base)) {
    PeakClassification peak;
    peak.bin = m;
    peak.energy = energy_from_bin(m, base_cfg);
    peak.mass_fraction = static_cast<double>(result.base.counts[m]) /
                         static_cast<double>(result.base.shots);
    peak.aliased = false;
    for (const auto& run : result.shifted) {
      bool found = false;
      for (std::uint64_t sm : dominant_bins(run)) {
        if (std::abs(energy_from_bin(sm, run.config) - peak.energy) <= width) {
          found = true;
          break;
        }
      }
      if (!found) {
        peak.aliased = true;
        break;
      }
    }
    result.peaks.push_back(peak);
  }
  return result;
}

namespace {

std::vector<double> average_ranks(const std::vector<double>& values) {
  const std::size_t n = values.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
  std::vector<double> ranks(n, 0.0);
  std::size_t i = 0;
  while (i < n) {
    std::size_t j = i;
    while (j + 1 < n && values[order[j + 1]] == values[order[i]]) ++j;
    const double rank = 0.5 * static_cast<double>(i + j) + 1.0;
    for (std::size_t k = i; k <= j; ++k) ranks[order[k]] = rank;
    i = j + 1;
  }
  return ranks;
}

}  // namespace

double multiplicity_profile(const SpectrumHistogram& hist,
                            const std::vector<double>& eigenvalues,
                            const std::vector<int>& degeneracies) {
  if (eigenvalues.size() != degeneracies.size())
    throw config_error("eigenvalue and degeneracy lists differ in length");
  if (hist.config.input_kind == PEConfig::InputKind::Basis)
    return std::numeric_limits<double>::quiet_NaN();
  if (eigenvalues.size() < 2) return 1.0;

  const double width = hist.config.bin_width();
  std::vector<double> masses(eigenvalues.size(), 0.0);
  for (std::uint64_t m = 0; m < hist.counts.size(); ++m) {
    if (hist.counts[m] == 0) continue;
    const double e = energy_from_bin(m, hist.config);
    for (std::size_t k = 0; k < eigenvalues.size(); ++k)
      if (std::abs(e - eigenvalues[k]) <= width)
        masses[k] += static_cast<double>(hist.counts[m]);
  }

  std::vector<double> degs(degeneracies.begin(), degeneracies.end());
  const std::vector<double> ra = average_ranks(masses);
  const std::vector<double> rb = average_ranks(degs);
  const std::size_t n = ra.size();
  double mean = 0.5 * static_cast<double>(n + 1);
  double num = 0.0;
  double va = 0.0;
  double vb = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    num += (ra[k] - mean) * (rb[k] - mean);
    va += (ra[k] - mean) * (ra[k] - mean);
    vb += (rb[k] - mean) * (rb[k] - mean);
  }
  if (va == 0.0 || vb == 0.0) return 1.0;
  return num / std::sqrt(va * vb);
}

}  // namespace fermisim
