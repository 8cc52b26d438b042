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

#include "pbsgate/optics.h"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "pbsgate/errors.h"

namespace pbsgate {

std::pair<double, double> quarter_exact_cos_sin(double radians) {
    double quarters = radians / (std::numbers::pi / 2);
    double nearest = std::round(quarters);
    if (std::abs(quarters - nearest) < 1e-13) {
        switch (((static_cast<long long>(nearest) % 4) + 4) % 4) {
            case 0:
                return {1, 0};
            case 1:
                return {0, 1};
            case 2:
                return {-1, 0};
            default:
                return {0, -1};
        }
    }
    return {std::cos(radians), std::sin(radians)};
}

double degrees_to_radians(double degrees) {
    return degrees * std::numbers::pi / 180;
}

PhotonState apply_pbs(const PhotonState &state, const PbsElement &el) {
    if (el.in1 == el.in2 || el.out1 == el.out2) {
        throw std::invalid_argument("beam splitter ports must be distinct");
    }
    for (const auto &out : {el.out1, el.out2}) {
        if (out != el.in1 && out != el.in2 && state.touches_mode(out)) {
            throw ModeCollision("beam splitter output '" + out + "' is already occupied");
        }
    }

    PhotonState work = state;
    if (el.basis == PolBasis::FS) {
        work = rebase_polarization(work, el.in1, BasisChange::HVtoFS);
        work = rebase_polarization(work, el.in2, BasisChange::HVtoFS);
    }
    // Slot H is the transmitted polarization, slot V the reflected one.
    CreationMap routing;
    routing[{el.in1, Pol::H}] = {{{el.out1, Pol::H}, 1.0}};
    routing[{el.in2, Pol::H}] = {{{el.out2, Pol::H}, 1.0}};
    routing[{el.in1, Pol::V}] = {{{el.out2, Pol::V}, 1.0}};
    routing[{el.in2, Pol::V}] = {{{el.out1, Pol::V}, 1.0}};
    work = transform_creation_operators(work, routing);
    if (el.basis == PolBasis::FS) {
        work = rebase_polarization(work, el.out1, BasisChange::FStoHV);
        work = rebase_polarization(work, el.out2, BasisChange::FStoHV);
    }
    return work;
}

PhotonState apply_rotator(const PhotonState &state, const RotatorElement &el) {
    auto [c, s] = quarter_exact_cos_sin(el.angle);
    PolSlot h{el.mode, Pol::H};
    PolSlot v{el.mode, Pol::V};
    CreationMap map;
    map[h] = {{h, c}, {v, s}};
    map[v] = {{h, -s}, {v, c}};
    return transform_creation_operators(state, map);
}

PhotonState apply_pol_phase(const PhotonState &state, const PolPhaseElement &el) {
    auto [c, s] = quarter_exact_cos_sin(el.phase);
    Amplitude unit{c, s};
    PolSlot slot{el.mode, el.pol};
    PhotonState::Terms out;
    for (const auto &[basis, amp] : state.terms()) {
        Amplitude a = amp;
        for (unsigned k = basis.count(slot); k > 0; k--) {
            a *= unit;
        }
        out.emplace(basis, a);
    }
    return PhotonState(std::move(out), state.tolerance());
}

PhotonState apply_element(const PhotonState &state, const OpticalElement &el) {
    return std::visit(
        [&](const auto &e) -> PhotonState {
            using T = std::decay_t<decltype(e)>;
            if constexpr (std::is_same_v<T, PbsElement>) {
                return apply_pbs(state, e);
            } else if constexpr (std::is_same_v<T, RotatorElement>) {
                return apply_rotator(state, e);
            } else {
                return apply_pol_phase(state, e);
            }
        },
        el);
}

}  // namespace pbsgate
