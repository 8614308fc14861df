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

#include "fermisim/io.hpp"

#include <cstdio>
#include <fstream>

#include <json.hpp>

namespace fermisim {

namespace {

std::ofstream open_out(const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw resource_error("cannot open output file: " + path);
  return out;
}

std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

void write_gate_list(const std::string& path, const GateSequence& seq,
                     const std::string& hash) {
  auto out = open_out(path);
  out << "# config-hash: " << hash << "\n";
  out << "# qubits: " << seq.n_qubits << "\n";
  out << "# ops: " << seq.ops.size() << "\n";
  for (const auto& op : seq.ops) out << op.to_line() << "\n";
}

void write_histogram_csv(const std::string& path,
                         const SpectrumHistogram& hist,
                         const std::string& hash, bool dense) {
  auto out = open_out(path);
  out << "# config-hash: " << hash << "\n";
  out << "bin,phi,energy,count,probability\n";
  for (std::uint64_t m = 0; m < hist.counts.size(); ++m) {
    if (!dense && hist.counts[m] == 0) continue;
    const double p = static_cast<double>(hist.counts[m]) /
                     static_cast<double>(hist.shots);
    out << m << "," << fmt17(hist.phi_of_bin(m)) << ","
        << fmt17(energy_from_bin(m, hist.config)) << "," << hist.counts[m]
        << "," << fmt17(p) << "\n";
  }
}

void write_metadata_json(const std::string& path,
                         const SpectrumHistogram& hist,
                         const std::string& hash) {
  nlohmann::json j;
  j["version"] = kVersion;
  j["config_hash"] = hash;
  j["simulation_qubits"] = hist.config.simulation_qubits;
  j["work_qubits"] = hist.config.work_qubits;
  j["dt"] = hist.config.dt;
  j["e_max"] = hist.config.e_max;
  j["intervals"] = hist.config.intervals;
  j["trotter_order"] = hist.config.trotter_order;
  j["shots"] = hist.config.shots;
  j["seed"] = hist.config.seed;
  j["fresh_per_shot"] = hist.config.fresh_per_shot;
  j["engine"] =
      hist.config.engine == PEConfig::Engine::Fast ? "fast" : "circuit";
  j["input_state"] = hist.config.input_kind == PEConfig::InputKind::Random
                         ? "random"
                         : "basis:" + hist.config.basis_bits;
  auto out = open_out(path);
  out << j.dump(2) << "\n";
}

void write_eigenvalue_csv(const std::string& path, const EigenSolution& sol,
                          const std::string& hash) {
  auto out = open_out(path);
  out << "# config-hash: " << hash << "\n";
  out << "eigenvalue,degeneracy\n";
  for (const auto& c : sol.clusters)
    out << fmt17(c.value) << "," << c.count << "\n";
}

void write_scan_csv(const std::string& path, const ScanResult& result,
                    const std::string& hash) {
  auto out = open_out(path);
  out << "# config-hash: " << hash << "\n";
  out << "bin,energy,mass_fraction,classification\n";
  for (const auto& peak : result.peaks)
    out << peak.bin << "," << fmt17(peak.energy) << ","
        << fmt17(peak.mass_fraction) << ","
        << (peak.aliased ? "aliased" : "true") << "\n";
}

}  // namespace fermisim
