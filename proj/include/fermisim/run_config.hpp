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

#include <json.hpp>

#include "fermisim/fermion.hpp"
#include "fermisim/phase_estimation.hpp"

namespace fermisim {

/// Parsed experiment configuration: one model section plus per-command
/// sections.  The JSON schema is strict; unknown keys are rejected before
/// any computation runs.
struct RunConfig {
  enum class ModelType { Pairing, Hubbard, Custom };
  ModelType model_type = ModelType::Pairing;

  // pairing
  int pairing_levels = 2;
  double level_spacing = 1.0;
  double pairing_strength = 1.0;
  // hubbard
  int hubbard_sites = 2;
  double hubbard_eps = 1.0;
  double hubbard_t = 1.0;
  double hubbard_u = 1.0;
  bool hubbard_periodic = false;
  // custom
  int custom_levels = 0;
  double custom_e0 = 0.0;
  std::vector<std::pair<int, int>> custom_one_body_keys;
  std::vector<double> custom_one_body_vals;
  std::vector<LadderTerm> custom_two_body;

  PEConfig pe;

  double compile_dt = 0.1;
  int compile_order = 1;

  std::vector<double> dt_shifts;

  std::string out_dir = ".";
  bool dense_output = false;

  std::vector<int> gatecount_sizes{2, 4, 6, 8, 10, 12};

  FermionHamiltonian build_model() const;
  /// Model with the qubit count overridden (gate-count tables).
  FermionHamiltonian build_model_sized(int n_qubits) const;
};

/// Strict-schema parse.  Throws config_error on unknown keys, wrong
/// types, or out-of-range values.
RunConfig parse_run_config(const nlohmann::json& j);

/// Apply one `--set section.key=value` override onto the raw JSON.
void apply_override(nlohmann::json& j, const std::string& assignment);

/// FNV-1a hash of the canonical dump, as 16 hex digits.  Binds every
/// output file to the exact configuration that produced it.
std::string config_hash(const nlohmann::json& j);

}  // namespace fermisim
