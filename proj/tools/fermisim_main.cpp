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

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>

#include <CLI11.hpp>
#include <json.hpp>

#include "fermisim/compiler.hpp"
#include "fermisim/io.hpp"
#include "fermisim/jordan_wigner.hpp"
#include "fermisim/oracle.hpp"
#include "fermisim/run_config.hpp"

namespace {

using namespace fermisim;

struct CliState {
  std::string config_path;
  std::vector<std::string> overrides;
  std::optional<std::uint64_t> seed;
  std::optional<std::string> out_dir;
  bool dense = false;
};

struct Loaded {
  RunConfig cfg;
  std::string hash;
};

Loaded load(const CliState& cli) {
  nlohmann::json j;
  if (!cli.config_path.empty()) {
    std::ifstream in(cli.config_path);
    if (!in) throw config_error("cannot read config file " + cli.config_path);
    try {
      in >> j;
    } catch (const nlohmann::json::exception& e) {
      throw config_error(std::string("config is not valid JSON: ") + e.what());
    }
  } else {
    j = nlohmann::json::object();
  }
  for (const auto& o : cli.overrides) apply_override(j, o);
  if (cli.seed) j["pe"]["seed"] = *cli.seed;
  if (cli.out_dir) j["output"]["dir"] = *cli.out_dir;

  Loaded loaded{parse_run_config(j), config_hash(j)};
  std::filesystem::create_directories(loaded.cfg.out_dir);
  return loaded;
}

std::string out_path(const RunConfig& cfg, const std::string& name) {
  return (std::filesystem::path(cfg.out_dir) / name).string();
}

int cmd_compile(const CliState& cli) {
  const auto [cfg, hash] = load(cli);
  const auto h = cfg.build_model();
  const auto ph = jw_hamiltonian(h);
  const auto seq = compile_trotter_step(ph, cfg.compile_dt, cfg.compile_order);
  const auto path = out_path(cfg, "gates.txt");
  write_gate_list(path, seq, hash);
  const auto report = count_report(h, cfg.compile_dt);
  std::cout << "wrote " << path << "\n"
            << "strings: " << ph.terms.size() << "\n"
            << "two-qubit gates: " << report.two_qubit << "\n"
            << "single-qubit gates: " << report.single_qubit << "\n"
            << "total ops: " << report.total_ops << "\n"
            << "table-convention count: " << report.table_count << "\n";
  return 0;
}

int cmd_phase_est(const CliState& cli) {
  const auto [cfg, hash] = load(cli);
  const auto h = cfg.build_model();
  const auto hist = run_phase_estimation(h, cfg.pe);
  const auto csv = out_path(cfg, "histogram.csv");
  write_histogram_csv(csv, hist, hash, cfg.dense_output || cli.dense);
  write_metadata_json(out_path(cfg, "histogram.meta.json"), hist, hash);
  std::cout << "wrote " << csv << "\n"
            << "dt: " << hist.config.dt << "\n"
            << "e_max: " << hist.config.e_max << "\n"
            << "bins with counts: "
            << [&] {
                 std::size_t n = 0;
                 for (auto c : hist.counts) n += (c != 0);
                 return n;
               }()
            << "\n";
  return 0;
}

int cmd_exact(const CliState& cli) {
  const auto [cfg, hash] = load(cli);
  const auto h = cfg.build_model();
  if (h.n_levels > 12)
    throw resource_error("exact diagonalization capped at 12 levels");
  const auto sol = eigensolve(fock_matrix(h));
  const auto path = out_path(cfg, "eigenvalues.csv");
  write_eigenvalue_csv(path, sol, hash);
  std::cout << "wrote " << path << "\n"
            << "distinct eigenvalues: " << sol.clusters.size() << "\n";
  return 0;
}

int cmd_scan(const CliState& cli) {
  const auto [cfg, hash] = load(cli);
  const auto h = cfg.build_model();
  const auto result = spectrum_scan(h, cfg.pe, cfg.dt_shifts);
  const auto path = out_path(cfg, "scan.csv");
  write_scan_csv(path, result, hash);
  std::size_t aliased = 0;
  for (const auto& p : result.peaks) aliased += p.aliased;
  std::cout << "wrote " << path << "\n"
            << "peaks: " << result.peaks.size() << " (aliased: " << aliased
            << ")\n";
  return 0;
}

int cmd_gatecount(const CliState& cli) {
  const auto [cfg, hash] = load(cli);
  std::cout << "# config-hash: " << hash << "\n";
  std::cout << "s,two_qubit,single_qubit,total_ops,table_count\n";
  for (int s : cfg.gatecount_sizes) {
    const auto h = cfg.build_model_sized(s);
    const auto report = count_report(h, cfg.compile_dt);
    std::cout << s << "," << report.two_qubit << "," << report.single_qubit
              << "," << report.total_ops << "," << report.table_count << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"fermionic Hamiltonian compiler and phase-estimation "
               "simulator"};
  app.require_subcommand(1);

  CliState cli;
  app.add_option("--config", cli.config_path, "JSON configuration file");
  app.add_option("--set", cli.overrides,
                 "override a scalar config field, e.g. pe.shots=10000");
  app.add_option("--seed", cli.seed, "override pe.seed");
  app.add_option("--out", cli.out_dir, "override output.dir");
  app.add_flag("--dense", cli.dense, "dump all histogram bins, zeros too");

  auto* compile = app.add_subcommand("compile", "emit the gate list for one "
                                                "Trotter step");
  auto* phase_est =
      app.add_subcommand("phase-est", "run the phase-estimation pipeline");
  auto* exact = app.add_subcommand("exact", "exact eigenvalues by dense "
                                            "diagonalization");
  auto* scan = app.add_subcommand("scan", "classify peaks as true or aliased "
                                          "by shifting dt");
  auto* gatecount =
      app.add_subcommand("gate-count", "two-qubit gate tallies per size");

  CLI11_PARSE(app, argc, argv);

  try {
    if (compile->parsed()) return cmd_compile(cli);
    if (phase_est->parsed()) return cmd_phase_est(cli);
    if (exact->parsed()) return cmd_exact(cli);
    if (scan->parsed()) return cmd_scan(cli);
    if (gatecount->parsed()) return cmd_gatecount(cli);
  } catch (const config_error& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const resource_error& e) {
    std::cerr << "resource error: " << e.what() << "\n";
    return 3;
  } catch (const internal_error& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 4;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
