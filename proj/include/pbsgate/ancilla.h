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

#ifndef PBSGATE_ANCILLA_H
#define PBSGATE_ANCILLA_H

#include <array>

#include "pbsgate/fock.h"

namespace pbsgate {

/// h·H + v·V on one mode.
PhotonState single_photon(const ModeLabel &mode, Amplitude h, Amplitude v, double tolerance = kDefaultPruneTolerance);

/// Σ amps[k]·|k⟩ with k ∈ (HH, HV, VH, VV) over (first, second).
PhotonState two_photon(const ModeLabel &first, const ModeLabel &second, const std::array<Amplitude, 4> &amps,
                       double tolerance = kDefaultPruneTolerance);

/// φ⁺ = (H₁H₂ + V₁V₂)/√2. Throws std::invalid_argument if m1 == m2.
PhotonState bell_phi_plus(const ModeLabel &m1, const ModeLabel &m2, double tolerance = kDefaultPruneTolerance);

/// The four-photon resource for teleported CNOT:
///
///     χ = ½ (H₁H₄H₂H₃ + H₁V₄H₂V₃ + V₁H₄V₂V₃ + V₁V₄V₂H₃)
///
/// Modes 1 and 4 pair with control and target at the Bell analyzers; modes 2
/// and 3 carry the output. Throws std::invalid_argument on repeated modes.
PhotonState chi_state(const ModeLabel &m1, const ModeLabel &m2, const ModeLabel &m3, const ModeLabel &m4,
                      double tolerance = kDefaultPruneTolerance);

}  // namespace pbsgate

#endif
