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

#ifndef PBSGATE_CIRCUIT_H
#define PBSGATE_CIRCUIT_H

#include <array>
#include <compare>
#include <cstddef>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "pbsgate/errors.h"
#include "pbsgate/fock.h"
#include "pbsgate/optics.h"

namespace pbsgate {

// ---------------------------------------------------------------------------
// Input preparations

struct QubitInput {
    ModeLabel mode;
    Amplitude h{1}, v{0};
    bool operator==(const QubitInput &) const = default;
};

/// Amplitudes of HH, HV, VH, VV over (first, second).
struct TwoQubitInput {
    ModeLabel first, second;
    std::array<Amplitude, 4> amps{1, 0, 0, 0};
    bool operator==(const TwoQubitInput &) const = default;
};

/// (H₁H₂ + V₁V₂)/√2.
struct BellInput {
    ModeLabel m1, m2;
    bool operator==(const BellInput &) const = default;
};

/// The four-photon resource over modes (1, 2, 3, 4).
struct ChiInput {
    std::array<ModeLabel, 4> modes;
    bool operator==(const ChiInput &) const = default;
};

struct TermListInput {
    std::vector<std::pair<FockBasisState, Amplitude>> terms;
    bool operator==(const TermListInput &) const = default;
};

using InputPrep = std::variant<QubitInput, TwoQubitInput, BellInput, ChiInput, TermListInput>;

std::vector<ModeLabel> input_modes(const InputPrep &prep);

// ---------------------------------------------------------------------------
// Elements. Angles are kept in degrees, as written in circuit files.

struct RotateDecl {
    ModeLabel mode;
    double degrees = 0;
    bool operator==(const RotateDecl &) const = default;
};

struct PolPhaseDecl {
    ModeLabel mode;
    Pol pol = Pol::H;
    double degrees = 0;
    bool operator==(const PolPhaseDecl &) const = default;
};

using ElementDecl = std::variant<PbsElement, RotateDecl, PolPhaseDecl>;
using CorrectionDecl = std::variant<RotateDecl, PolPhaseDecl>;

OpticalElement to_optical(const ElementDecl &decl);
OpticalElement to_optical(const CorrectionDecl &decl);
std::vector<ModeLabel> element_modes(const ElementDecl &decl);

// ---------------------------------------------------------------------------
// Detection

/// Which output of a detector's splitting beam splitter fired: transmitted is
/// H (HV basis) or F (FS basis); reflected is V or S.
enum class Port { Transmitted, Reflected };

/// "H"/"V" or "F"/"S" depending on basis.
char port_char(PolBasis basis, Port port);

struct DetectorSpec {
    ModeLabel mode;
    PolBasis basis = PolBasis::FS;
    std::string label;
    bool operator==(const DetectorSpec &) const = default;
};

struct DetectorCounts {
    unsigned transmitted = 0;
    unsigned reflected = 0;

    bool one_and_only_one() const { return transmitted + reflected == 1; }
    auto operator<=>(const DetectorCounts &) const = default;
    bool operator==(const DetectorCounts &) const = default;
};

/// Joint photon counts, indexed like CircuitSpec::detectors.
struct OutcomePattern {
    std::vector<DetectorCounts> counts;

    bool all_one_and_only_one() const;
    auto operator<=>(const OutcomePattern &) const = default;
    bool operator==(const OutcomePattern &) const = default;
};

/// Restricts an accepted detector to fire on the given port only. Several
/// constraints on one detector form a union.
struct AcceptConstraint {
    std::string detector;
    Port port = Port::Transmitted;
    bool operator==(const AcceptConstraint &) const = default;
};

struct FeedForwardRule {
    std::string detector;
    Port port = Port::Reflected;
    std::vector<CorrectionDecl> corrections;
    bool operator==(const FeedForwardRule &) const = default;
};

struct CircuitSpec {
    std::vector<ModeLabel> modes;
    std::vector<InputPrep> inputs;
    std::vector<ElementDecl> elements;
    std::vector<DetectorSpec> detectors;
    std::vector<AcceptConstraint> accepts;
    std::vector<FeedForwardRule> rules;
    std::vector<ModeLabel> outputs;

    bool operator==(const CircuitSpec &) const = default;

    /// Index into detectors, or npos.
    std::size_t detector_index(std::string_view label) const;
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);
};

/// Human-readable form of a pattern, e.g. "F_c V_d" or "c(2,0) H_d".
std::string describe_pattern(const CircuitSpec &spec, const OutcomePattern &pattern);

// ---------------------------------------------------------------------------
// Validation

enum class CircuitErrorKind { SyntaxError, UndeclaredMode, DetectedModeReuse, MissingOutput, InvalidCircuit };

std::string_view to_string(CircuitErrorKind kind);

/// Diagnostic for malformed circuit text or structure. Line and column are
/// 1-based; both are 0 when the circuit was built in code.
class CircuitError : public Error {
   public:
    CircuitError(CircuitErrorKind kind, std::string message, std::size_t line = 0, std::size_t column = 0);

    CircuitErrorKind kind() const { return kind_; }
    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }
    const std::string &message() const { return message_; }

   private:
    CircuitErrorKind kind_;
    std::string message_;
    std::size_t line_, column_;
};

struct SourceLocation {
    std::size_t line = 0, column = 0;
};

/// Locations of the items of a parsed CircuitSpec, parallel to its vectors.
struct SourceMap {
    std::vector<SourceLocation> modes, inputs, elements, detectors, accepts, rules, outputs;
    SourceLocation end;
};

/// Structural checks: declared modes, acyclic relabeling, detected modes are
/// never reused, at least one output. Throws CircuitError.
void validate(const CircuitSpec &spec, const SourceMap *where = nullptr);

}  // namespace pbsgate

#endif
