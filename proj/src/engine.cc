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

#include "pbsgate/engine.h"

#include <cmath>
#include <set>

#include "pbsgate/ancilla.h"
#include "pbsgate/errors.h"

namespace pbsgate {

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

PhotonState prepare_one(const InputPrep &prep, double tolerance) {
    return std::visit(
        overloaded{
            [&](const QubitInput &q) { return single_photon(q.mode, q.h, q.v, tolerance); },
            [&](const TwoQubitInput &q) { return two_photon(q.first, q.second, q.amps, tolerance); },
            [&](const BellInput &b) { return bell_phi_plus(b.m1, b.m2, tolerance); },
            [&](const ChiInput &c) { return chi_state(c.modes[0], c.modes[1], c.modes[2], c.modes[3], tolerance); },
            [&](const TermListInput &t) {
                PhotonState::Terms terms;
                for (const auto &[basis, amp] : t.terms) {
                    terms[basis] += amp;
                }
                return PhotonState(std::move(terms), tolerance);
            },
        },
        prep);
}

}  // namespace

const Outcome *GateResult::find(const OutcomePattern &pattern) const {
    for (const auto &o : outcomes) {
        if (o.pattern == pattern) {
            return &o;
        }
    }
    return nullptr;
}

std::vector<const Outcome *> GateResult::accepted() const {
    std::vector<const Outcome *> out;
    for (const auto &o : outcomes) {
        if (o.accepted) {
            out.push_back(&o);
        }
    }
    return out;
}

PhotonState prepare_input(const CircuitSpec &spec, double tolerance) {
    PhotonState state = vacuum(tolerance);
    for (const auto &prep : spec.inputs) {
        PhotonState part = prepare_one(prep, tolerance);
        double n2 = part.norm2();
        if (std::abs(n2 - 1) > 1e-9) {
            throw NonPhysicalInput("input preparation on mode '" + input_modes(prep).front() +
                                   "' has squared norm " + std::to_string(n2));
        }
        state = tensor(state, part);
    }
    return state;
}

std::map<OutcomePattern, PhotonState> enumerate_outcomes(const PhotonState &state,
                                                         const std::vector<DetectorSpec> &detectors) {
    PhotonState work = state;
    for (const auto &det : detectors) {
        if (det.basis == PolBasis::FS) {
            work = rebase_polarization(work, det.mode, BasisChange::HVtoFS);
        }
    }
    std::map<OutcomePattern, PhotonState::Terms> split;
    for (const auto &[basis, amp] : work.terms()) {
        OutcomePattern pattern;
        pattern.counts.reserve(detectors.size());
        FockBasisState rest = basis;
        for (const auto &det : detectors) {
            pattern.counts.push_back({basis.count({det.mode, Pol::H}), basis.count({det.mode, Pol::V})});
            rest = rest.without_mode(det.mode);
        }
        split[pattern][rest] += amp;
    }
    std::map<OutcomePattern, PhotonState> out;
    for (auto &[pattern, terms] : split) {
        PhotonState branch(std::move(terms), state.tolerance());
        if (!branch.is_zero()) {
            out.emplace(pattern, std::move(branch));
        }
    }
    return out;
}

bool fired(const OutcomePattern &pattern, std::size_t index, Port port) {
    const auto &c = pattern.counts.at(index);
    return c.one_and_only_one() && (port == Port::Transmitted ? c.transmitted == 1 : c.reflected == 1);
}

bool is_accepted(const CircuitSpec &spec, const OutcomePattern &pattern, bool passive) {
    if (!pattern.all_one_and_only_one()) {
        return false;
    }
    for (std::size_t k = 0; k < spec.detectors.size(); k++) {
        bool restricted = false;
        bool allowed = false;
        for (const auto &acc : spec.accepts) {
            if (acc.detector == spec.detectors[k].label) {
                restricted = true;
                allowed = allowed || fired(pattern, k, acc.port);
            }
        }
        if (restricted && !allowed) {
            return false;
        }
    }
    if (passive) {
        for (const auto &rule : spec.rules) {
            if (fired(pattern, spec.detector_index(rule.detector), rule.port)) {
                return false;
            }
        }
    }
    return true;
}

PhotonState apply_feedforward(const PhotonState &branch, const OutcomePattern &pattern,
                              const std::vector<DetectorSpec> &detectors, const std::vector<FeedForwardRule> &rules) {
    PhotonState out = branch;
    for (const auto &rule : rules) {
        std::size_t idx = detectors.size();
        for (std::size_t k = 0; k < detectors.size(); k++) {
            if (detectors[k].label == rule.detector) {
                idx = k;
            }
        }
        if (idx == detectors.size() || !fired(pattern, idx, rule.port)) {
            continue;
        }
        for (const auto &corr : rule.corrections) {
            out = apply_element(out, to_optical(corr));
        }
    }
    return out;
}

GateResult execute(const CircuitSpec &spec, const ExecuteOptions &options) {
    PhotonState state = prepare_input(spec, options.tolerance);
    for (const auto &el : spec.elements) {
        state = apply_element(state, to_optical(el));
    }

    GateResult result;
    for (auto &[pattern, branch] : enumerate_outcomes(state, spec.detectors)) {
        Outcome o;
        o.pattern = pattern;
        o.probability = branch.norm2();
        o.accepted = is_accepted(spec, pattern, options.passive);
        PhotonState conditional = o.accepted ? apply_feedforward(branch, pattern, spec.detectors, spec.rules) : branch;
        o.state = conditional.normalized();
        (o.accepted ? result.success_probability : result.failure_probability) += o.probability;
        result.outcomes.push_back(std::move(o));
    }
    return result;
}

}  // namespace pbsgate
