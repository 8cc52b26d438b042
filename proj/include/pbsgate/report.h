// Copyright 2026 The pbsgate Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef PBSGATE_REPORT_H
#define PBSGATE_REPORT_H

#include <string>
#include <vector>

#include "json.hpp"
#include "pbsgate/gates.h"

namespace pbsgate {

inline constexpr int kReportSchema = 1;
inline constexpr const char *kEngineVersion = "0.1.0";

/// How a run was requested; echoed into the report.
struct RunSource {
    std::string kind;  // "gate" or "circuit"
    std::string name;  // catalog name or file path
};

/// Raw amplitudes supplied on the command line.
struct InputRecord {
    std::string kind;  // "none", "qubit", "qubit+control", "two_qubit"
    std::vector<double> values;
};

nlohmann::ordered_json state_to_json(const PhotonState &state);

/// Schema-1 run report. Key order and number formatting are stable, so equal
/// runs produce byte-identical text.
nlohmann::ordered_json report_to_json(const gates::GateReport &report, const RunSource &source,
                                      const InputRecord &input, bool passive);

std::string render_report(const gates::GateReport &report, const RunSource &source, const InputRecord &input,
                          bool passive);

}  // namespace pbsgate

#endif
