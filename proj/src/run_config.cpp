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

#include "fermisim/run_config.hpp"

#include <cstdint>
#include <cstdio>

namespace fermisim {

namespace {

using nlohmann::json;

void require_keys(const json& j, const std::string& where,
                  std::initializer_list<const char*> allowed) {
  if (!j.is_object())
    throw config_error("config section '" + where + "' must be an object");
  for (const auto& [key, value] : j.items()) {
    (void)value;
    bool ok = false;
    for (const char* k : allowed)
      if (key == k) {
        ok = true;
        break;
      }
    if (!ok)
      throw config_error("unknown config key '" + where + "." + key + "'");
  }
}

template <typename T>
T get_or(const json& j, const char* key, T fallback) {
  if (!j.contains(key)) return fallback;
  try {
    return j.at(key).get<T>();
  } catch (const json::exception&) {
    throw config_error(std::string("config key '") + key +
                       "' has the wrong type");
  }
}

void parse_model(const json& m, RunConfig& cfg) {
  const std::string type = get_or<std::string>(m, "type", "pairing");
  if (type == "pairing") {
    cfg.model_type = RunConfig::ModelType::Pairing;
    require_keys(m, "model", {"type", "levels", "spacing", "strength"});
    cfg.pairing_levels = get_or<int>(m, "levels", cfg.pairing_levels);
    cfg.level_spacing = get_or<double>(m, "spacing", cfg.level_spacing);
    cfg.pairing_strength = get_or<double>(m, "strength", cfg.pairing_strength);
  } else if (type == "hubbard") {
    cfg.model_type = RunConfig::ModelType::Hubbard;
    require_keys(m, "model", {"type", "sites", "eps", "t", "u", "periodic"});
    cfg.hubbard_sites = get_or<int>(m, "sites", cfg.hubbard_sites);
    cfg.hubbard_eps = get_or<double>(m, "eps", cfg.hubbard_eps);
    cfg.hubbard_t = get_or<double>(m, "t", cfg.hubbard_t);
    cfg.hubbard_u = get_or<double>(m, "u", cfg.hubbard_u);
    cfg.hubbard_periodic = get_or<bool>(m, "periodic", cfg.hubbard_periodic);
  } else if (type == "custom") {
    cfg.model_type = RunConfig::ModelType::Custom;
    require_keys(m, "model", {"type", "n_levels", "e0", "terms"});
    cfg.custom_levels = get_or<int>(m, "n_levels", 0);
    if (cfg.custom_levels < 1)
      throw config_error("custom model needs n_levels >= 1");
    cfg.custom_e0 = get_or<double>(m, "e0", 0.0);
    if (m.contains("terms")) {
      if (!m.at("terms").is_array())
        throw config_error("model.terms must be an array");
      for (const auto& t : m.at("terms")) {
        require_keys(t, "model.terms[]", {"op", "indices", "coeff"});
        const std::string op = get_or<std::string>(t, "op", "");
        const double coeff = get_or<double>(t, "coeff", 0.0);
        std::vector<int> idx;
        try {
          idx = t.at("indices").get<std::vector<int>>();
        } catch (const json::exception&) {
          throw config_error("model.terms[].indices must be an int array");
        }
        if (op == "one_body") {
          if (idx.size() != 2)
            throw config_error("one_body term needs indices [i, j]");
          cfg.custom_one_body_keys.emplace_back(idx[0], idx[1]);
          cfg.custom_one_body_vals.push_back(coeff);
        } else if (op == "two_body") {
          if (idx.size() != 4)
            throw config_error(
                "two_body term needs indices [i, j, p, q] meaning "
                "a+_i a+_j a_p a_q");
          cfg.custom_two_body.push_back(
              LadderTerm{{{LadderKind::Create, idx[0]},
                          {LadderKind::Create, idx[1]},
                          {LadderKind::Annihilate, idx[2]},
                          {LadderKind::Annihilate, idx[3]}},
                         coeff});
        } else {
          throw config_error("model term op must be one_body or two_body");
        }
      }
    }
  } else {
    throw config_error("model.type must be pairing, hubbard or custom");
  }
}

void parse_pe(const json& p, PEConfig& pe) {
  require_keys(p, "pe",
               {"work_qubits", "dt", "e_max", "intervals", "order", "shots",
                "seed", "input_state", "fresh_per_shot", "engine"});
  pe.work_qubits = get_or<int>(p, "work_qubits", pe.work_qubits);
  if (p.contains("dt")) pe.dt = p.at("dt").get<double>();
  if (p.contains("e_max")) pe.e_max = p.at("e_max").get<double>();
  pe.intervals = get_or<int>(p, "intervals", pe.intervals);
  pe.trotter_order = get_or<int>(p, "order", pe.trotter_order);
  pe.shots = get_or<std::uint64_t>(p, "shots", pe.shots);
  pe.seed = get_or<std::uint64_t>(p, "seed", pe.seed);
  pe.fresh_per_shot = get_or<bool>(p, "fresh_per_shot", pe.fresh_per_shot);
  if (p.contains("input_state")) {
    const std::string in = p.at("input_state").get<std::string>();
    if (in == "random") {
      pe.input_kind = PEConfig::InputKind::Random;
    } else if (in.rfind("basis:", 0) == 0) {
      pe.input_kind = PEConfig::InputKind::Basis;
      pe.basis_bits = in.substr(6);
    } else {
      throw config_error("pe.input_state must be 'random' or 'basis:<bits>'");
    }
  }
  if (p.contains("engine")) {
    const std::string engine = p.at("engine").get<std::string>();
    if (engine == "fast")
      pe.engine = PEConfig::Engine::Fast;
    else if (engine == "circuit")
      pe.engine = PEConfig::Engine::Circuit;
    else
      throw config_error("pe.engine must be 'fast' or 'circuit'");
  }
}

}  // namespace

FermionHamiltonian RunConfig::build_model() const {
  switch (model_type) {
    case ModelType::Pairing:
      return build_pairing(pairing_levels, level_spacing, pairing_strength);
    case ModelType::Hubbard:
      return build_hubbard(hubbard_sites, hubbard_eps, hubbard_t, hubbard_u,
                           hubbard_periodic);
    case ModelType::Custom: {
      FermionHamiltonian h;
      h.n_levels = custom_levels;
      h.e0 = custom_e0;
      for (std::size_t k = 0; k < custom_one_body_keys.size(); ++k)
        h.add_one_body(custom_one_body_keys[k].first,
                       custom_one_body_keys[k].second,
                       custom_one_body_vals[k]);
      for (const auto& t : custom_two_body)
        for (const auto& op : t.ops)
          if (op.level < 1 || op.level > h.n_levels)
            throw config_error("custom two-body index out of range");
      h.two_body = canonicalize_two_body(custom_two_body);
      return h;
    }
  }
  throw config_error("unreachable model type");
}

FermionHamiltonian RunConfig::build_model_sized(int n_qubits) const {
  if (n_qubits < 2 || n_qubits % 2 != 0)
    throw config_error("gate-count sizes are qubit counts: even, >= 2");
  switch (model_type) {
    case ModelType::Pairing:
      return build_pairing(n_qubits / 2, level_spacing, pairing_strength);
    case ModelType::Hubbard:
      return build_hubbard(n_qubits / 2, hubbard_eps, hubbard_t, hubbard_u,
                           hubbard_periodic);
    case ModelType::Custom:
      throw config_error("gate-count size sweeps need a pairing or hubbard "
                         "model");
  }
  throw config_error("unreachable model type");
}

RunConfig parse_run_config(const nlohmann::json& j) {
  require_keys(j, "<root>",
               {"model", "pe", "compile", "scan", "output", "gate_count",
                "mode"});
  RunConfig cfg;
  if (j.contains("model")) parse_model(j.at("model"), cfg);
  if (j.contains("pe")) parse_pe(j.at("pe"), cfg.pe);
  if (j.contains("compile")) {
    const auto& c = j.at("compile");
    require_keys(c, "compile", {"dt", "order"});
    cfg.compile_dt = get_or<double>(c, "dt", cfg.compile_dt);
    cfg.compile_order = get_or<int>(c, "order", cfg.compile_order);
  }
  if (j.contains("scan")) {
    const auto& s = j.at("scan");
    require_keys(s, "scan", {"dt_shifts"});
    cfg.dt_shifts = get_or<std::vector<double>>(s, "dt_shifts", {});
  }
  if (j.contains("output")) {
    const auto& o = j.at("output");
    require_keys(o, "output", {"dir", "dense"});
    cfg.out_dir = get_or<std::string>(o, "dir", cfg.out_dir);
    cfg.dense_output = get_or<bool>(o, "dense", cfg.dense_output);
  }
  if (j.contains("gate_count")) {
    const auto& g = j.at("gate_count");
    require_keys(g, "gate_count", {"sizes"});
    cfg.gatecount_sizes =
        get_or<std::vector<int>>(g, "sizes", cfg.gatecount_sizes);
  }
  if (j.contains("mode") && !j.at("mode").is_string())
    throw config_error("mode must be a string");
  return cfg;
}

void apply_override(nlohmann::json& j, const std::string& assignment) {
  const auto eq = assignment.find('=');
  if (eq == std::string::npos)
    throw config_error("--set expects section.key=value, got '" + assignment +
                       "'");
  const std::string path = assignment.substr(0, eq);
  const std::string value = assignment.substr(eq + 1);

  nlohmann::json* node = &j;
  std::size_t start = 0;
  while (true) {
    const auto dot = path.find('.', start);
    const std::string key = path.substr(
        start, dot == std::string::npos ? std::string::npos : dot - start);
    if (key.empty()) throw config_error("--set has an empty key segment");
    if (dot == std::string::npos) {
      nlohmann::json parsed;
      try {
        parsed = nlohmann::json::parse(value);
      } catch (const nlohmann::json::exception&) {
        parsed = value;  // bare strings come through unquoted
      }
      (*node)[key] = parsed;
      return;
    }
    node = &(*node)[key];
    start = dot + 1;
  }
}

std::string config_hash(const nlohmann::json& j) {
  const std::string dump = j.dump();
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : dump) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx",
                static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace fermisim
