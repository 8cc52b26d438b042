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

#include "pbsgate/fock.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "pbsgate/errors.h"

namespace pbsgate {

namespace {

double sqrt_factorial_product(const FockBasisState &b) {
    double p = 1;
    for (const auto &[slot, n] : b.occupations()) {
        for (unsigned k = 2; k <= n; k++) {
            p *= k;
        }
    }
    return std::sqrt(p);
}

void accumulate(PhotonState::Terms &terms, const FockBasisState &b, Amplitude amp) {
    auto [it, inserted] = terms.try_emplace(b, amp);
    if (!inserted) {
        it->second += amp;
    }
}

}  // namespace

char pol_char(Pol p) {
    return p == Pol::H ? 'H' : 'V';
}

FockBasisState::FockBasisState(const Occupations &occupations) {
    for (const auto &[slot, n] : occupations) {
        if (n != 0) {
            occupations_.emplace(slot, n);
        }
    }
}

unsigned FockBasisState::count(const PolSlot &slot) const {
    auto it = occupations_.find(slot);
    return it == occupations_.end() ? 0 : it->second;
}

unsigned FockBasisState::total() const {
    unsigned t = 0;
    for (const auto &[slot, n] : occupations_) {
        t += n;
    }
    return t;
}

bool FockBasisState::touches_mode(const ModeLabel &mode) const {
    return occupations_.contains({mode, Pol::H}) || occupations_.contains({mode, Pol::V});
}

std::set<ModeLabel> FockBasisState::modes() const {
    std::set<ModeLabel> out;
    for (const auto &[slot, n] : occupations_) {
        out.insert(slot.mode);
    }
    return out;
}

FockBasisState FockBasisState::with_added(const PolSlot &slot, unsigned n) const {
    FockBasisState out = *this;
    if (n != 0) {
        out.occupations_[slot] += n;
    }
    return out;
}

FockBasisState FockBasisState::without_mode(const ModeLabel &mode) const {
    FockBasisState out = *this;
    out.occupations_.erase({mode, Pol::H});
    out.occupations_.erase({mode, Pol::V});
    return out;
}

std::vector<std::string> FockBasisState::describe() const {
    std::vector<std::string> out;
    out.reserve(occupations_.size());
    for (const auto &[slot, n] : occupations_) {
        out.push_back(slot.mode + ":" + pol_char(slot.pol) + ":" + std::to_string(n));
    }
    return out;
}

std::string FockBasisState::str() const {
    if (occupations_.empty()) {
        return "|vac>";
    }
    std::ostringstream ss;
    ss << '|';
    bool first = true;
    for (const auto &[slot, n] : occupations_) {
        if (!first) {
            ss << ' ';
        }
        first = false;
        ss << pol_char(slot.pol) << '_' << slot.mode;
        if (n != 1) {
            ss << '^' << n;
        }
    }
    ss << '>';
    return ss.str();
}

PhotonState::PhotonState(double tolerance) : tolerance_(tolerance) {
}

PhotonState::PhotonState(Terms terms, double tolerance) : terms_(std::move(terms)), tolerance_(tolerance) {
    std::erase_if(terms_, [&](const auto &kv) { return std::abs(kv.second) < tolerance_; });
}

PhotonState PhotonState::basis(const FockBasisState &b, Amplitude amp, double tolerance) {
    return PhotonState(Terms{{b, amp}}, tolerance);
}

Amplitude PhotonState::amplitude(const FockBasisState &b) const {
    auto it = terms_.find(b);
    return it == terms_.end() ? Amplitude{0} : it->second;
}

double PhotonState::norm2() const {
    double t = 0;
    for (const auto &[b, amp] : terms_) {
        t += std::norm(amp);
    }
    return t;
}

std::set<ModeLabel> PhotonState::modes() const {
    std::set<ModeLabel> out;
    for (const auto &[b, amp] : terms_) {
        for (const auto &[slot, n] : b.occupations()) {
            out.insert(slot.mode);
        }
    }
    return out;
}

bool PhotonState::touches_mode(const ModeLabel &mode) const {
    return std::any_of(terms_.begin(), terms_.end(), [&](const auto &kv) { return kv.first.touches_mode(mode); });
}

unsigned PhotonState::max_photons() const {
    unsigned m = 0;
    for (const auto &[b, amp] : terms_) {
        m = std::max(m, b.total());
    }
    return m;
}

PhotonState PhotonState::scaled(Amplitude factor) const {
    Terms out;
    for (const auto &[b, amp] : terms_) {
        out.emplace(b, amp * factor);
    }
    return PhotonState(std::move(out), tolerance_);
}

PhotonState PhotonState::normalized() const {
    double n2 = norm2();
    if (n2 <= 0) {
        throw NonNormalized("cannot normalize the zero state");
    }
    return scaled(1.0 / std::sqrt(n2));
}

PhotonState PhotonState::with_tolerance(double tolerance) const {
    return PhotonState(terms_, tolerance);
}

PhotonState vacuum(double tolerance) {
    return PhotonState::basis(FockBasisState{}, 1.0, tolerance);
}

PhotonState create(const PhotonState &state, const PolSlot &slot) {
    PhotonState::Terms out;
    for (const auto &[b, amp] : state.terms()) {
        double n = b.count(slot);
        accumulate(out, b.with_added(slot), amp * std::sqrt(n + 1));
    }
    return PhotonState(std::move(out), state.tolerance());
}

PhotonState superpose(const PhotonState &a, Amplitude ca, const PhotonState &b, Amplitude cb) {
    PhotonState::Terms out;
    for (const auto &[basis, amp] : a.terms()) {
        accumulate(out, basis, ca * amp);
    }
    for (const auto &[basis, amp] : b.terms()) {
        accumulate(out, basis, cb * amp);
    }
    return PhotonState(std::move(out), a.tolerance());
}

PhotonState tensor(const PhotonState &a, const PhotonState &b) {
    auto modes_a = a.modes();
    for (const auto &m : b.modes()) {
        if (modes_a.contains(m)) {
            throw OverlappingModes("tensor product factors share mode '" + m + "'");
        }
    }
    PhotonState::Terms out;
    for (const auto &[ba, xa] : a.terms()) {
        for (const auto &[bb, xb] : b.terms()) {
            auto occ = ba.occupations();
            occ.insert(bb.occupations().begin(), bb.occupations().end());
            accumulate(out, FockBasisState(occ), xa * xb);
        }
    }
    return PhotonState(std::move(out), a.tolerance());
}

Amplitude inner_product(const PhotonState &a, const PhotonState &b) {
    Amplitude t = 0;
    const auto &small = a.size() <= b.size() ? a : b;
    const auto &large = a.size() <= b.size() ? b : a;
    for (const auto &[basis, amp] : small.terms()) {
        auto it = large.terms().find(basis);
        if (it != large.terms().end()) {
            t += &small == &a ? std::conj(amp) * it->second : std::conj(it->second) * amp;
        }
    }
    return t;
}

double max_amplitude_difference(const PhotonState &a, const PhotonState &b) {
    double worst = 0;
    for (const auto &[basis, amp] : a.terms()) {
        worst = std::max(worst, std::abs(amp - b.amplitude(basis)));
    }
    for (const auto &[basis, amp] : b.terms()) {
        worst = std::max(worst, std::abs(amp - a.amplitude(basis)));
    }
    return worst;
}

PhotonState rebase_polarization(const PhotonState &state, const ModeLabel &mode, BasisChange direction) {
    if (!state.touches_mode(mode)) {
        return state;
    }
    const double r = (1 / std::numbers::sqrt2);
    PolSlot h{mode, Pol::H};
    PolSlot v{mode, Pol::V};
    CreationMap map;
    if (direction == BasisChange::HVtoFS) {
        // H = (F − S)/√2, V = (F + S)/√2.
        map[h] = {{h, r}, {v, -r}};
        map[v] = {{h, r}, {v, r}};
    } else {
        // F = (H + V)/√2, S = (V − H)/√2.
        map[h] = {{h, r}, {v, r}};
        map[v] = {{h, -r}, {v, r}};
    }
    return transform_creation_operators(state, map);
}

PhotonState transform_creation_operators(const PhotonState &state, const CreationMap &map) {
    PhotonState::Terms out;
    for (const auto &[basis, amp] : state.terms()) {
        // Work with unnormalized monomials Π (a†)^n |0⟩.
        PhotonState::Terms monomials{{FockBasisState{}, amp / sqrt_factorial_product(basis)}};
        for (const auto &[slot, n] : basis.occupations()) {
            auto it = map.find(slot);
            for (unsigned k = 0; k < n; k++) {
                PhotonState::Terms next;
                for (const auto &[mono, coef] : monomials) {
                    if (it == map.end()) {
                        accumulate(next, mono.with_added(slot), coef);
                        continue;
                    }
                    for (const auto &[target, c] : it->second) {
                        if (c != Amplitude{0}) {
                            accumulate(next, mono.with_added(target), coef * c);
                        }
                    }
                }
                monomials = std::move(next);
            }
        }
        for (const auto &[mono, coef] : monomials) {
            accumulate(out, mono, coef * sqrt_factorial_product(mono));
        }
    }
    return PhotonState(std::move(out), state.tolerance());
}

}  // namespace pbsgate
