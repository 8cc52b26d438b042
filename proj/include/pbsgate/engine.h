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

#ifndef PBSGATE_ENGINE_H
#define PBSGATE_ENGINE_H

#include <map>
#include <vector>

#include "pbsgate/circuit.h"
#include "pbsgate/fock.h"

namespace pbsgate {

struct ExecuteOptions {
    /// Accept only patterns that need no feed-forward correction.
    bool passive = false;
    double tolerance = kDefaultPruneTolerance;
};

struct Outcome {
    OutcomePattern pattern;
    double probability = 0;
    bool accepted = false;
    /// Conditional state on the undetected modes, normalized to 1. Corrected
    /// by feed-forward when the outcome is accepted.
    PhotonState state;
};

struct GateResult {
    /// Every outcome with nonzero probability, in pattern order.
    std::vector<Outcome> outcomes;
    double success_probability = 0;
    double failure_probability = 0;

    const Outcome *find(const OutcomePattern &pattern) const;
    std::vector<const Outcome *> accepted() const;
};

/// Tensor product of all input preparations. Throws NonPhysicalInput unless
/// each preparation has unit norm within 1e-9.
PhotonState prepare_input(const CircuitSpec &spec, double tolerance = kDefaultPruneTolerance);

/// Splits a state by the joint photon counts at the detectors. Branches are
/// unnormalized, their squared norms sum to the input's, and the detected
/// modes are removed from them.
std::map<OutcomePattern, PhotonState> enumerate_outcomes(const PhotonState &state,
                                                         const std::vector<DetectorSpec> &detectors);

/// True if detector `index` registered exactly one photon on `port`.
bool fired(const OutcomePattern &pattern, std::size_t index, Port port);

bool is_accepted(const CircuitSpec &spec, const OutcomePattern &pattern, bool passive = false);

/// Applies, in declaration order, the corrections of every rule whose trigger
/// fired in `pattern`.
PhotonState apply_feedforward(const PhotonState &branch, const OutcomePattern &pattern,
                              const std::vector<DetectorSpec> &detectors, const std::vector<FeedForwardRule> &rules);

/// Runs a validated circuit: prepares inputs, applies elements in order,
/// enumerates detector outcomes exhaustively and post-selects.
GateResult execute(const CircuitSpec &spec, const ExecuteOptions &options = {});

}  // namespace pbsgate

#endif
