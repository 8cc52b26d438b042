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

#include "pbsgate/ancilla.h"

#include <numbers>
#include <set>
#include <stdexcept>

namespace pbsgate {

namespace {

PhotonState photons(std::initializer_list<PolSlot> slots, double tolerance) {
    PhotonState s = vacuum(tolerance);
    for (const auto &slot : slots) {
        s = create(s, slot);
    }
    return s;
}

}  // namespace

PhotonState single_photon(const ModeLabel &mode, Amplitude h, Amplitude v, double tolerance) {
    return superpose(photons({{mode, Pol::H}}, tolerance), h, photons({{mode, Pol::V}}, tolerance), v);
}

PhotonState two_photon(const ModeLabel &first, const ModeLabel &second, const std::array<Amplitude, 4> &amps,
                       double tolerance) {
    if (first == second) {
        throw std::invalid_argument("two-photon state needs two distinct modes");
    }
    PhotonState out(tolerance);
    std::size_t k = 0;
    for (Pol p1 : {Pol::H, Pol::V}) {
        for (Pol p2 : {Pol::H, Pol::V}) {
            out = superpose(out, 1.0, photons({{first, p1}, {second, p2}}, tolerance), amps[k++]);
        }
    }
    return out;
}

PhotonState bell_phi_plus(const ModeLabel &m1, const ModeLabel &m2, double tolerance) {
    const double r = (1 / std::numbers::sqrt2);
    return two_photon(m1, m2, {r, 0, 0, r}, tolerance);
}

PhotonState chi_state(const ModeLabel &m1, const ModeLabel &m2, const ModeLabel &m3, const ModeLabel &m4,
                      double tolerance) {
    if (std::set<ModeLabel>{m1, m2, m3, m4}.size() != 4) {
        throw std::invalid_argument("chi state needs four distinct modes");
    }
    // (pol of 1, pol of 4, pol of 2, pol of 3) for each term.
    constexpr Pol H = Pol::H, V = Pol::V;
    const std::array<std::array<Pol, 4>, 4> terms{{
        {H, H, H, H},
        {H, V, H, V},
        {V, H, V, V},
        {V, V, V, H},
    }};
    PhotonState out(tolerance);
    for (const auto &t : terms) {
        out = superpose(out, 1.0, photons({{m1, t[0]}, {m4, t[1]}, {m2, t[2]}, {m3, t[3]}}, tolerance), 0.5);
    }
    return out;
}

}  // namespace pbsgate
