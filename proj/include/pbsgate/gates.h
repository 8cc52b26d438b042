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

#ifndef PBSGATE_GATES_H
#define PBSGATE_GATES_H

#include <array>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pbsgate/circuit.h"
#include "pbsgate/engine.h"

namespace pbsgate::gates {

/// alpha·H + beta·V.
struct QubitState {
    Amplitude alpha{1};
    Amplitude beta{0};

    static QubitState h() { return {1, 0}; }
    static QubitState v() { return {0, 1}; }
    /// Throws NonPhysicalInput unless |alpha|² + |beta|² = 1 within 1e-9.
    void check() const;
};

/// Coefficients of HH, HV, VH, VV (control first).
struct TwoQubitState {
    std::array<Amplitude, 4> a{1, 0, 0, 0};

    static TwoQubitState basis(int control, int target);
    void check() const;
};

struct GateReport {
    std::string gate;
    /// Role → mode label, e.g. "control_in" → "2'".
    std::map<std::string, ModeLabel> mode_map;
    CircuitSpec circuit;
    GateResult result;
    /// Ideal output over the circuit's output modes, when one exists.
    std::optional<PhotonState> target;
    /// Parallel to result.outcomes; set for accepted outcomes with a target.
    std::vector<std::optional<double>> fidelities;
    double success_probability = 0;
};

// Circuit builders. Mode labels follow the figures they come from; every
// builder documents its map in GateReport::mode_map.

/// Modes 2' (input), a (ancilla), 2 (output), c (FS detector).
CircuitSpec parity_check_circuit(const QubitState &in);
/// Modes 3' (target), b (control), 3 (output), d (HV detector).
CircuitSpec destructive_cnot_circuit(const QubitState &target, const QubitState &control);
/// Parity check fed by half of φ⁺ on (a, b); outputs 2 and b.
CircuitSpec encoder_circuit(const QubitState &in);
/// Encoder on control 2' followed by destructive CNOT on target 3'; outputs 2, 3.
CircuitSpec cnot_circuit(const TwoQubitState &in);
/// Teleported CNOT: inputs A, B, χ on 1..4, HV splitters (A,1)→(p,q) and
/// (B,4)→(m,n), FS detectors p, q, m, n; outputs 2, 3.
CircuitSpec gc_cnot_circuit(const TwoQubitState &in);
/// cnot_circuit applied to halves of φ⁺(1, 2') and φ⁺(4, 3'); outputs 1, 2, 3, 4.
CircuitSpec chi_via_cnot_circuit();

GateReport parity_check(const QubitState &in, bool passive = false,
                  double tolerance = kDefaultPruneTolerance);
GateReport destructive_cnot(const QubitState &target, const QubitState &control, bool passive = false,
                  double tolerance = kDefaultPruneTolerance);
GateReport encoder(const QubitState &in, bool passive = false,
                  double tolerance = kDefaultPruneTolerance);
GateReport cnot(const TwoQubitState &in, bool passive = false,
                  double tolerance = kDefaultPruneTolerance);
GateReport gc_cnot(const TwoQubitState &in, bool passive = false,
                  double tolerance = kDefaultPruneTolerance);
GateReport chi_via_cnot(bool passive = false,
                  double tolerance = kDefaultPruneTolerance);

/// (a1, a2, a3, a4) → (a1, a2, a4, a3).
TwoQubitState ideal_cnot(const TwoQubitState &in);

/// |⟨a|b⟩|². Throws NonNormalized if either squared norm is off by > 1e-9.
double fidelity(const PhotonState &a, const PhotonState &b);

/// Stable catalog identifiers.
const std::vector<std::string> &gate_names();

/// Inputs for run_gate; each gate reads the fields it needs.
struct GateInputs {
    QubitState qubit;
    QubitState control;
    TwoQubitState two_qubit;
};

/// Dispatch by catalog name. Throws std::invalid_argument for unknown names.
CircuitSpec gate_circuit(std::string_view name, const GateInputs &inputs);
GateReport run_gate(std::string_view name, const GateInputs &inputs, bool passive = false,
                  double tolerance = kDefaultPruneTolerance);

/// Executes `circuit` and scores accepted outcomes against `target`.
GateReport make_report(std::string gate, std::map<std::string, ModeLabel> mode_map, CircuitSpec circuit,
                       std::optional<PhotonState> target, bool passive, double tolerance = kDefaultPruneTolerance);

}  // namespace pbsgate::gates

#endif
