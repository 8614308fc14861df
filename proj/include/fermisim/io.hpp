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

#include "fermisim/gates.hpp"
#include "fermisim/oracle.hpp"
#include "fermisim/phase_estimation.hpp"

namespace fermisim {

inline constexpr const char* kVersion = "0.1.0";

/// Gate-list text format, one op per line, angles with 17 significant
/// digits; '#' lines carry metadata.
void write_gate_list(const std::string& path, const GateSequence& seq,
                     const std::string& hash);

/// Histogram CSV: `bin,phi,energy,count,probability`, nonzero rows unless
/// dense is requested.
void write_histogram_csv(const std::string& path,
                         const SpectrumHistogram& hist,
                         const std::string& hash, bool dense);

/// Metadata sidecar echoing the resolved configuration.
void write_metadata_json(const std::string& path,
                         const SpectrumHistogram& hist,
                         const std::string& hash);

/// Eigenvalue report CSV: `eigenvalue,degeneracy` per cluster.
void write_eigenvalue_csv(const std::string& path, const EigenSolution& sol,
                          const std::string& hash);

/// Scan report CSV: `bin,energy,mass_fraction,classification`.
void write_scan_csv(const std::string& path, const ScanResult& result,
                    const std::string& hash);

}  // namespace fermisim
