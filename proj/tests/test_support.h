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

#ifndef PBSGATE_TESTS_TEST_SUPPORT_H
#define PBSGATE_TESTS_TEST_SUPPORT_H

#include <cmath>
#include <random>
#include <string>
#include <vector>

#include "pbsgate/fock.h"
#include "pbsgate/gates.h"

namespace pbsgate::testing {

using Rng = std::mt19937_64;

inline Amplitude random_amplitude(Rng &rng) {
    std::normal_distribution<double> g;
    return {g(rng), g(rng)};
}

// Haar-random qubit.
inline gates::QubitState random_qubit(Rng &rng) {
    Amplitude a = random_amplitude(rng), b = random_amplitude(rng);
    double n = std::sqrt(std::norm(a) + std::norm(b));
    return {a / n, b / n};
}

inline gates::TwoQubitState random_two_qubit(Rng &rng) {
    gates::TwoQubitState s;
    double n2 = 0;
    for (auto &x : s.a) {
        x = random_amplitude(rng);
        n2 += std::norm(x);
    }
    for (auto &x : s.a) {
        x /= std::sqrt(n2);
    }
    return s;
}

// Normalized superposition of up to `terms` random Fock states over `modes`,
// each with between 1 and `max_photons` photons.
inline PhotonState random_state(Rng &rng, const std::vector<ModeLabel> &modes, unsigned max_photons,
                                unsigned terms = 4) {
    std::uniform_int_distribution<unsigned> nterms(1, terms), nphot(1, max_photons);
    std::uniform_int_distribution<std::size_t> slot(0, 2 * modes.size() - 1);
    PhotonState::Terms t;
    for (unsigned k = nterms(rng); k > 0; k--) {
        FockBasisState b;
        for (unsigned p = nphot(rng); p > 0; p--) {
            std::size_t s = slot(rng);
            b = b.with_added({modes[s / 2], s % 2 == 0 ? Pol::H : Pol::V});
        }
        t[b] += random_amplitude(rng);
    }
    return PhotonState(std::move(t), kDefaultPruneTolerance).normalized();
}

inline gates::GateInputs random_gate_inputs(Rng &rng) {
    gates::GateInputs in;
    in.qubit = random_qubit(rng);
    in.control = random_qubit(rng);
    in.two_qubit = random_two_qubit(rng);
    return in;
}

}  // namespace pbsgate::testing

#endif
