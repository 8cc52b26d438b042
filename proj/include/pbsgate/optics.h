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

#ifndef PBSGATE_OPTICS_H
#define PBSGATE_OPTICS_H

#include <utility>
#include <variant>

#include "pbsgate/fock.h"

namespace pbsgate {

enum class PolBasis { HV, FS };

/// Ideal polarizing beam splitter with +1 coefficients.
///
/// The transmitted polarization (H for HV, F for FS) goes in1→out1 and
/// in2→out2; the reflected one (V or S) goes in1→out2 and in2→out1.
/// Outputs may reuse the input labels.
struct PbsElement {
    ModeLabel in1, in2, out1, out2;
    PolBasis basis = PolBasis::HV;

    bool operator==(const PbsElement &) const = default;
};

/// H → cosθ·H + sinθ·V, V → −sinθ·H + cosθ·V.
struct RotatorElement {
    ModeLabel mode;
    double angle = 0;  // radians

    bool operator==(const RotatorElement &) const = default;
};

/// Multiplies each term by e^{iφk}, k the occupation of (mode, pol).
struct PolPhaseElement {
    ModeLabel mode;
    Pol pol = Pol::H;
    double phase = 0;  // radians

    bool operator==(const PolPhaseElement &) const = default;
};

using OpticalElement = std::variant<PbsElement, RotatorElement, PolPhaseElement>;

/// Throws std::invalid_argument on repeated ports and ModeCollision if an
/// output label is occupied by a mode that is not one of the inputs.
PhotonState apply_pbs(const PhotonState &state, const PbsElement &el);
PhotonState apply_rotator(const PhotonState &state, const RotatorElement &el);
PhotonState apply_pol_phase(const PhotonState &state, const PolPhaseElement &el);
PhotonState apply_element(const PhotonState &state, const OpticalElement &el);

/// Cosine and sine of an angle, exact at integer multiples of π/2.
std::pair<double, double> quarter_exact_cos_sin(double radians);

double degrees_to_radians(double degrees);

}  // namespace pbsgate

#endif
