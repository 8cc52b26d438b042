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

#include "pbsgate/report.h"

namespace pbsgate {

using nlohmann::ordered_json;

ordered_json state_to_json(const PhotonState &state) {
    ordered_json terms = ordered_json::array();
    for (const auto &[basis, amp] : state.terms()) {
        terms.push_back(ordered_json::array({basis.describe(), amp.real(), amp.imag()}));
    }
    return terms;
}

ordered_json report_to_json(const gates::GateReport &report, const RunSource &source, const InputRecord &input,
                            bool passive) {
    const auto &spec = report.circuit;
    ordered_json j;
    j["schema"] = kReportSchema;
    j["engine_version"] = kEngineVersion;
    j["source"] = {{"kind", source.kind}, {"name", source.name}};
    j["gate"] = report.gate;
    j["mode_map"] = ordered_json::object();
    for (const auto &[role, mode] : report.mode_map) {
        j["mode_map"][role] = mode;
    }
    j["passive"] = passive;
    j["input"] = {{"kind", input.kind}, {"values", input.values}};

    ordered_json detectors = ordered_json::array();
    for (const auto &det : spec.detectors) {
        detectors.push_back({{"label", det.label}, {"mode", det.mode}, {"basis", det.basis == PolBasis::HV ? "hv" : "fs"}});
    }
    j["detectors"] = detectors;
    j["outputs"] = spec.outputs;

    ordered_json outcomes = ordered_json::array();
    for (std::size_t k = 0; k < report.result.outcomes.size(); k++) {
        const auto &o = report.result.outcomes[k];
        ordered_json counts = ordered_json::array();
        for (const auto &c : o.pattern.counts) {
            counts.push_back({c.transmitted, c.reflected});
        }
        ordered_json entry;
        entry["pattern"] = describe_pattern(spec, o.pattern);
        entry["counts"] = counts;
        entry["accepted"] = o.accepted;
        entry["probability"] = o.probability;
        entry["output_state"] = state_to_json(o.state);
        if (k < report.fidelities.size() && report.fidelities[k]) {
            entry["fidelity_to_target"] = *report.fidelities[k];
        } else {
            entry["fidelity_to_target"] = nullptr;
        }
        outcomes.push_back(std::move(entry));
    }
    j["outcomes"] = outcomes;
    j["success_probability"] = report.result.success_probability;
    j["failure_probability"] = report.result.failure_probability;
    return j;
}

std::string render_report(const gates::GateReport &report, const RunSource &source, const InputRecord &input,
                          bool passive) {
    return report_to_json(report, source, input, passive).dump(2) + "\n";
}

}  // namespace pbsgate
