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

#ifndef PBSGATE_ERRORS_H
#define PBSGATE_ERRORS_H

#include <stdexcept>
#include <string>

namespace pbsgate {

/// Base class for every error raised by the simulator.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// tensor() was asked to combine states that share a spatial mode.
struct OverlappingModes : Error {
    using Error::Error;
};

/// A beam splitter output label is occupied by a photon that is not one of its inputs.
struct ModeCollision : Error {
    using Error::Error;
};

/// A circuit's prepared input does not have unit norm.
struct NonPhysicalInput : Error {
    using Error::Error;
};

struct NonNormalized : Error {
    using Error::Error;
};

/// The dense oracle basis cannot hold the photons present in a state.
struct TruncationTooSmall : Error {
    using Error::Error;
};

}  // namespace pbsgate

#endif
