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

#include "pbsgate/gates.h"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "pbsgate/ancilla.h"
#include "pbsgate/errors.h"

namespace pbsgate::gates {

namespace {

// π phase on H: the Pockels-cell sign flip H → −H.
PolPhaseDecl sign_flip_h(const ModeLabel &mode) {
    return {mode, Pol::H, 180};
}

FeedForwardRule flip_on(const std::string &detector, Port port, const ModeLabel &mode) {
    // 90° rotation followed by the π phase on H swaps H and V.
    return {detector, port, {RotateDecl{mode, 90}, sign_flip_h(mode)}};
}

void add_cnot_core(CircuitSpec &s) {
    s.inputs.emplace_back(BellInput{"a", "b"});
    s.elements.emplace_back(PbsElement{"2'", "a", "2", "c", PolBasis::HV});
    s.elements.emplace_back(PbsElement{"3'", "b", "3", "d", PolBasis::FS});
    s.detectors.push_back({"c", PolBasis::FS, "c"});
    s.detectors.push_back({"d", PolBasis::HV, "d"});
    s.rules.push_back({"c", Port::Reflected, {sign_flip_h("2")}});
    s.rules.push_back(flip_on("d", Port::Reflected, "3"));
}

}  // namespace

void QubitState::check() const {
    double n2 = std::norm(alpha) + std::norm(beta);
    if (std::abs(n2 - 1) > 1e-9) {
        throw NonPhysicalInput("qubit amplitudes have squared norm " + std::to_string(n2));
    }
}

TwoQubitState TwoQubitState::basis(int control, int target) {
    TwoQubitState s{{0, 0, 0, 0}};
    s.a.at(2 * control + target) = 1;
    return s;
}

void TwoQubitState::check() const {
    double n2 = 0;
    for (auto x : a) {
        n2 += std::norm(x);
    }
    if (std::abs(n2 - 1) > 1e-9) {
        throw NonPhysicalInput("two-qubit amplitudes have squared norm " + std::to_string(n2));
    }
}

CircuitSpec parity_check_circuit(const QubitState &in) {
    const double r = (1 / std::numbers::sqrt2);
    CircuitSpec s;
    s.modes = {"2'", "a", "2", "c"};
    s.inputs.emplace_back(QubitInput{"2'", in.alpha, in.beta});
    s.inputs.emplace_back(QubitInput{"a", r, r});
    s.elements.emplace_back(PbsElement{"2'", "a", "2", "c", PolBasis::HV});
    s.detectors.push_back({"c", PolBasis::FS, "c"});
    s.rules.push_back({"c", Port::Reflected, {sign_flip_h("2")}});
    s.outputs = {"2"};
    return s;
}

CircuitSpec destructive_cnot_circuit(const QubitState &target, const QubitState &control) {
    CircuitSpec s;
    s.modes = {"3'", "b", "3", "d"};
    s.inputs.emplace_back(QubitInput{"3'", target.alpha, target.beta});
    s.inputs.emplace_back(QubitInput{"b", control.alpha, control.beta});
    s.elements.emplace_back(PbsElement{"3'", "b", "3", "d", PolBasis::FS});
    s.detectors.push_back({"d", PolBasis::HV, "d"});
    s.rules.push_back(flip_on("d", Port::Reflected, "3"));
    s.outputs = {"3"};
    return s;
}

CircuitSpec encoder_circuit(const QubitState &in) {
    CircuitSpec s;
    s.modes = {"2'", "a", "b", "2", "c"};
    s.inputs.emplace_back(QubitInput{"2'", in.alpha, in.beta});
    s.inputs.emplace_back(BellInput{"a", "b"});
    s.elements.emplace_back(PbsElement{"2'", "a", "2", "c", PolBasis::HV});
    s.detectors.push_back({"c", PolBasis::FS, "c"});
    s.rules.push_back({"c", Port::Reflected, {sign_flip_h("2")}});
    s.outputs = {"2", "b"};
    return s;
}

CircuitSpec cnot_circuit(const TwoQubitState &in) {
    CircuitSpec s;
    s.modes = {"2'", "3'", "a", "b", "2", "c", "3", "d"};
    s.inputs.emplace_back(TwoQubitInput{"2'", "3'", in.a});
    add_cnot_core(s);
    s.outputs = {"2", "3"};
    return s;
}

CircuitSpec gc_cnot_circuit(const TwoQubitState &in) {
    CircuitSpec s;
    s.modes = {"A", "B", "1", "2", "3", "4", "p", "q", "m", "n"};
    s.inputs.emplace_back(TwoQubitInput{"A", "B", in.a});
    s.inputs.emplace_back(ChiInput{{"1", "2", "3", "4"}});
    s.elements.emplace_back(PbsElement{"A", "1", "p", "q", PolBasis::HV});
    s.elements.emplace_back(PbsElement{"B", "4", "m", "n", PolBasis::HV});
    for (const char *d : {"p", "q", "m", "n"}) {
        s.detectors.push_back({d, PolBasis::FS, d});
    }
    for (const char *d : {"p", "q"}) {
        s.rules.push_back({d, Port::Reflected, {sign_flip_h("2")}});
    }
    for (const char *d : {"m", "n"}) {
        s.rules.push_back({d, Port::Reflected, {sign_flip_h("2"), PolPhaseDecl{"3", Pol::V, 180}}});
    }
    s.outputs = {"2", "3"};
    return s;
}

CircuitSpec chi_via_cnot_circuit() {
    CircuitSpec s;
    s.modes = {"1", "2'", "3'", "4", "a", "b", "2", "c", "3", "d"};
    s.inputs.emplace_back(BellInput{"1", "2'"});
    s.inputs.emplace_back(BellInput{"4", "3'"});
    add_cnot_core(s);
    s.outputs = {"1", "2", "3", "4"};
    return s;
}

TwoQubitState ideal_cnot(const TwoQubitState &in) {
    return {{in.a[0], in.a[1], in.a[3], in.a[2]}};
}

double fidelity(const PhotonState &a, const PhotonState &b) {
    for (const auto *s : {&a, &b}) {
        if (std::abs(s->norm2() - 1) > 1e-9) {
            throw NonNormalized("fidelity needs normalized states (squared norm " + std::to_string(s->norm2()) + ")");
        }
    }
    return std::norm(inner_product(a, b));
}

GateReport make_report(std::string gate, std::map<std::string, ModeLabel> mode_map, CircuitSpec circuit,
                       std::optional<PhotonState> target, bool passive, double tolerance) {
    GateReport r;
    r.gate = std::move(gate);
    r.mode_map = std::move(mode_map);
    r.circuit = std::move(circuit);
    r.result = execute(r.circuit, {passive, tolerance});
    r.target = std::move(target);
    for (const auto &o : r.result.outcomes) {
        if (o.accepted && r.target) {
            r.fidelities.emplace_back(fidelity(o.state, *r.target));
        } else {
            r.fidelities.emplace_back();
        }
    }
    r.success_probability = r.result.success_probability;
    return r;
}

GateReport parity_check(const QubitState &in, bool passive, double tolerance) {
    in.check();
    return make_report("parity_check", {{"input", "2'"}, {"ancilla", "a"}, {"output", "2"}, {"detector", "c"}},
                       parity_check_circuit(in), single_photon("2", in.alpha, in.beta), passive, tolerance);
}

GateReport destructive_cnot(const QubitState &target, const QubitState &control, bool passive, double tolerance) {
    target.check();
    control.check();
    // Linear in the destroyed control: c_H·T + c_V·flip(T).
    PhotonState ideal = superpose(single_photon("3", target.alpha, target.beta), control.alpha,
                                  single_photon("3", target.beta, target.alpha), control.beta);
    std::optional<PhotonState> goal;
    if (ideal.norm2() > 1e-12) {
        goal = ideal.normalized();
    }
    return make_report("destructive_cnot", {{"target_in", "3'"}, {"control_in", "b"}, {"output", "3"}, {"detector", "d"}},
                       destructive_cnot_circuit(target, control), goal, passive, tolerance);
}

GateReport encoder(const QubitState &in, bool passive, double tolerance) {
    in.check();
    return make_report("encoder",
                       {{"input", "2'"}, {"ancilla_a", "a"}, {"output_2", "2"}, {"output_b", "b"}, {"detector", "c"}},
                       encoder_circuit(in), two_photon("2", "b", {in.alpha, 0, 0, in.beta}), passive, tolerance);
}

GateReport cnot(const TwoQubitState &in, bool passive, double tolerance) {
    in.check();
    return make_report("cnot",
                       {{"control_in", "2'"},
                        {"target_in", "3'"},
                        {"ancilla_a", "a"},
                        {"ancilla_b", "b"},
                        {"control_out", "2"},
                        {"target_out", "3"},
                        {"detector_c", "c"},
                        {"detector_d", "d"}},
                       cnot_circuit(in), two_photon("2", "3", ideal_cnot(in).a), passive, tolerance);
}

GateReport gc_cnot(const TwoQubitState &in, bool passive, double tolerance) {
    in.check();
    return make_report("gc_cnot",
                       {{"control_in", "A"},
                        {"target_in", "B"},
                        {"chi_1", "1"},
                        {"chi_2", "2"},
                        {"chi_3", "3"},
                        {"chi_4", "4"},
                        {"control_out", "2"},
                        {"target_out", "3"}},
                       gc_cnot_circuit(in), two_photon("2", "3", ideal_cnot(in).a), passive, tolerance);
}

GateReport chi_via_cnot(bool passive, double tolerance) {
    return make_report("chi_via_cnot",
                       {{"bell_1", "1"}, {"bell_2'", "2'"}, {"bell_3'", "3'"}, {"bell_4", "4"}, {"cnot_control_out", "2"},
                        {"cnot_target_out", "3"}},
                       chi_via_cnot_circuit(), chi_state("1", "2", "3", "4"), passive, tolerance);
}

const std::vector<std::string> &gate_names() {
    static const std::vector<std::string> names{"parity_check", "destructive_cnot", "encoder",
                                                "cnot",         "gc_cnot",          "chi_via_cnot"};
    return names;
}

CircuitSpec gate_circuit(std::string_view name, const GateInputs &inputs) {
    if (name == "parity_check") {
        return parity_check_circuit(inputs.qubit);
    }
    if (name == "destructive_cnot") {
        return destructive_cnot_circuit(inputs.qubit, inputs.control);
    }
    if (name == "encoder") {
        return encoder_circuit(inputs.qubit);
    }
    if (name == "cnot") {
        return cnot_circuit(inputs.two_qubit);
    }
    if (name == "gc_cnot") {
        return gc_cnot_circuit(inputs.two_qubit);
    }
    if (name == "chi_via_cnot") {
        return chi_via_cnot_circuit();
    }
    throw std::invalid_argument("unknown gate '" + std::string(name) + "'");
}

GateReport run_gate(std::string_view name, const GateInputs &inputs, bool passive, double tolerance) {
    if (name == "parity_check") {
        return parity_check(inputs.qubit, passive, tolerance);
    }
    if (name == "destructive_cnot") {
        return destructive_cnot(inputs.qubit, inputs.control, passive, tolerance);
    }
    if (name == "encoder") {
        return encoder(inputs.qubit, passive, tolerance);
    }
    if (name == "cnot") {
        return cnot(inputs.two_qubit, passive, tolerance);
    }
    if (name == "gc_cnot") {
        return gc_cnot(inputs.two_qubit, passive, tolerance);
    }
    if (name == "chi_via_cnot") {
        return chi_via_cnot(passive, tolerance);
    }
    throw std::invalid_argument("unknown gate '" + std::string(name) + "'");
}

}  // namespace pbsgate::gates
