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

#include "pbsgate/circuit.h"

#include <algorithm>
#include <map>
#include <set>

namespace pbsgate {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

std::vector<ModeLabel> input_modes(const InputPrep &prep) {
    return std::visit(
        overloaded{
            [](const QubitInput &q) { return std::vector<ModeLabel>{q.mode}; },
            [](const TwoQubitInput &q) { return std::vector<ModeLabel>{q.first, q.second}; },
            [](const BellInput &b) { return std::vector<ModeLabel>{b.m1, b.m2}; },
            [](const ChiInput &c) { return std::vector<ModeLabel>(c.modes.begin(), c.modes.end()); },
            [](const TermListInput &t) {
                std::set<ModeLabel> seen;
                for (const auto &[basis, amp] : t.terms) {
                    auto m = basis.modes();
                    seen.insert(m.begin(), m.end());
                }
                return std::vector<ModeLabel>(seen.begin(), seen.end());
            },
        },
        prep);
}

OpticalElement to_optical(const ElementDecl &decl) {
    return std::visit(
        overloaded{
            [](const PbsElement &p) -> OpticalElement { return p; },
            [](const RotateDecl &r) -> OpticalElement {
                return RotatorElement{r.mode, degrees_to_radians(r.degrees)};
            },
            [](const PolPhaseDecl &p) -> OpticalElement {
                return PolPhaseElement{p.mode, p.pol, degrees_to_radians(p.degrees)};
            },
        },
        decl);
}

OpticalElement to_optical(const CorrectionDecl &decl) {
    return std::visit([](const auto &d) { return to_optical(ElementDecl{d}); }, decl);
}

std::vector<ModeLabel> element_modes(const ElementDecl &decl) {
    return std::visit(
        overloaded{
            [](const PbsElement &p) { return std::vector<ModeLabel>{p.in1, p.in2, p.out1, p.out2}; },
            [](const RotateDecl &r) { return std::vector<ModeLabel>{r.mode}; },
            [](const PolPhaseDecl &p) { return std::vector<ModeLabel>{p.mode}; },
        },
        decl);
}

char port_char(PolBasis basis, Port port) {
    if (basis == PolBasis::HV) {
        return port == Port::Transmitted ? 'H' : 'V';
    }
    return port == Port::Transmitted ? 'F' : 'S';
}

bool OutcomePattern::all_one_and_only_one() const {
    return std::all_of(counts.begin(), counts.end(), [](const DetectorCounts &c) { return c.one_and_only_one(); });
}

std::size_t CircuitSpec::detector_index(std::string_view label) const {
    for (std::size_t k = 0; k < detectors.size(); k++) {
        if (detectors[k].label == label) {
            return k;
        }
    }
    return npos;
}

std::string describe_pattern(const CircuitSpec &spec, const OutcomePattern &pattern) {
    std::string out;
    for (std::size_t k = 0; k < pattern.counts.size(); k++) {
        const auto &det = spec.detectors.at(k);
        const auto &c = pattern.counts[k];
        if (!out.empty()) {
            out += ' ';
        }
        if (c.one_and_only_one()) {
            out += port_char(det.basis, c.transmitted == 1 ? Port::Transmitted : Port::Reflected);
            out += '_' + det.label;
        } else {
            out += det.label + "(" + std::to_string(c.transmitted) + "," + std::to_string(c.reflected) + ")";
        }
    }
    return out;
}

std::string_view to_string(CircuitErrorKind kind) {
    switch (kind) {
        case CircuitErrorKind::SyntaxError:
            return "SyntaxError";
        case CircuitErrorKind::UndeclaredMode:
            return "UndeclaredMode";
        case CircuitErrorKind::DetectedModeReuse:
            return "DetectedModeReuse";
        case CircuitErrorKind::MissingOutput:
            return "MissingOutput";
        case CircuitErrorKind::InvalidCircuit:
            return "InvalidCircuit";
    }
    return "?";
}

namespace {

std::string format_error(CircuitErrorKind kind, const std::string &message, std::size_t line, std::size_t column) {
    std::string head;
    if (line != 0) {
        head = std::to_string(line) + ":" + std::to_string(column) + ": ";
    }
    return head + std::string(to_string(kind)) + ": " + message;
}

enum class ModeStatus { Fresh, Live, Consumed, Detected };

class Validator {
   public:
    Validator(const CircuitSpec &spec, const SourceMap *where) : spec_(spec), where_(where) {
    }

    void run() {
        check_modes();
        check_inputs();
        check_elements();
        check_detectors();
        check_accepts();
        check_rules();
        check_outputs();
    }

   private:
    [[noreturn]] void fail(CircuitErrorKind kind, const std::string &msg,
                           const std::vector<SourceLocation> SourceMap::*field, std::size_t index) const {
        SourceLocation loc;
        if (where_ != nullptr) {
            const auto &v = where_->*field;
            loc = index < v.size() ? v[index] : where_->end;
        }
        throw CircuitError(kind, msg, loc.line, loc.column);
    }

    void require_declared(const ModeLabel &m, const std::vector<SourceLocation> SourceMap::*field,
                          std::size_t index) const {
        if (!status_.contains(m)) {
            fail(CircuitErrorKind::UndeclaredMode, "undeclared mode '" + m + "'", field, index);
        }
    }

    void require_usable(const ModeLabel &m, const std::vector<SourceLocation> SourceMap::*field,
                        std::size_t index) const {
        require_declared(m, field, index);
        switch (status_.at(m)) {
            case ModeStatus::Detected:
                fail(CircuitErrorKind::DetectedModeReuse, "mode '" + m + "' was consumed by a detector", field,
                     index);
            case ModeStatus::Consumed:
                fail(CircuitErrorKind::InvalidCircuit, "mode '" + m + "' was consumed by an earlier beam splitter",
                     field, index);
            default:
                break;
        }
    }

    void check_modes() {
        for (std::size_t k = 0; k < spec_.modes.size(); k++) {
            if (!status_.emplace(spec_.modes[k], ModeStatus::Fresh).second) {
                fail(CircuitErrorKind::InvalidCircuit, "mode '" + spec_.modes[k] + "' declared twice",
                     &SourceMap::modes, k);
            }
        }
    }

    void check_inputs() {
        for (std::size_t k = 0; k < spec_.inputs.size(); k++) {
            auto modes = input_modes(spec_.inputs[k]);
            if (modes.empty()) {
                fail(CircuitErrorKind::InvalidCircuit, "input preparation has no modes", &SourceMap::inputs, k);
            }
            for (const auto &m : modes) {
                require_declared(m, &SourceMap::inputs, k);
                if (status_[m] != ModeStatus::Fresh) {
                    fail(CircuitErrorKind::InvalidCircuit, "mode '" + m + "' is prepared twice", &SourceMap::inputs,
                         k);
                }
                status_[m] = ModeStatus::Live;
            }
        }
    }

    void check_elements() {
        for (std::size_t k = 0; k < spec_.elements.size(); k++) {
            const auto &decl = spec_.elements[k];
            if (const auto *pbs = std::get_if<PbsElement>(&decl)) {
                for (const auto &m : element_modes(decl)) {
                    require_declared(m, &SourceMap::elements, k);
                }
                if (pbs->in1 == pbs->in2 || pbs->out1 == pbs->out2) {
                    fail(CircuitErrorKind::InvalidCircuit, "beam splitter ports must be distinct",
                         &SourceMap::elements, k);
                }
                require_usable(pbs->in1, &SourceMap::elements, k);
                require_usable(pbs->in2, &SourceMap::elements, k);
                for (const auto &out : {pbs->out1, pbs->out2}) {
                    if (out == pbs->in1 || out == pbs->in2) {
                        continue;
                    }
                    require_usable(out, &SourceMap::elements, k);
                    if (status_[out] != ModeStatus::Fresh) {
                        fail(CircuitErrorKind::InvalidCircuit, "beam splitter output '" + out + "' is already in use",
                             &SourceMap::elements, k);
                    }
                }
                status_[pbs->in1] = ModeStatus::Consumed;
                status_[pbs->in2] = ModeStatus::Consumed;
                status_[pbs->out1] = ModeStatus::Live;
                status_[pbs->out2] = ModeStatus::Live;
            } else {
                for (const auto &m : element_modes(decl)) {
                    require_usable(m, &SourceMap::elements, k);
                }
            }
        }
    }

    void check_detectors() {
        std::set<std::string> labels;
        for (std::size_t k = 0; k < spec_.detectors.size(); k++) {
            const auto &det = spec_.detectors[k];
            if (!labels.insert(det.label).second) {
                fail(CircuitErrorKind::InvalidCircuit, "detector label '" + det.label + "' used twice",
                     &SourceMap::detectors, k);
            }
            require_usable(det.mode, &SourceMap::detectors, k);
            status_[det.mode] = ModeStatus::Detected;
        }
    }

    void check_accepts() {
        for (std::size_t k = 0; k < spec_.accepts.size(); k++) {
            if (spec_.detector_index(spec_.accepts[k].detector) == CircuitSpec::npos) {
                fail(CircuitErrorKind::InvalidCircuit, "unknown detector '" + spec_.accepts[k].detector + "'",
                     &SourceMap::accepts, k);
            }
        }
    }

    void check_rules() {
        for (std::size_t k = 0; k < spec_.rules.size(); k++) {
            const auto &rule = spec_.rules[k];
            if (spec_.detector_index(rule.detector) == CircuitSpec::npos) {
                fail(CircuitErrorKind::InvalidCircuit, "unknown detector '" + rule.detector + "'", &SourceMap::rules,
                     k);
            }
            if (rule.corrections.empty()) {
                fail(CircuitErrorKind::InvalidCircuit, "feed-forward rule without corrections", &SourceMap::rules, k);
            }
            for (const auto &corr : rule.corrections) {
                auto mode = std::visit([](const auto &c) { return c.mode; }, corr);
                require_usable(mode, &SourceMap::rules, k);
            }
        }
    }

    void check_outputs() {
        if (spec_.outputs.empty()) {
            fail(CircuitErrorKind::MissingOutput, "circuit declares no output modes", &SourceMap::outputs, 0);
        }
        std::set<ModeLabel> seen;
        for (std::size_t k = 0; k < spec_.outputs.size(); k++) {
            const auto &m = spec_.outputs[k];
            require_usable(m, &SourceMap::outputs, k);
            if (!seen.insert(m).second) {
                fail(CircuitErrorKind::InvalidCircuit, "output mode '" + m + "' listed twice", &SourceMap::outputs,
                     k);
            }
        }
    }

    const CircuitSpec &spec_;
    const SourceMap *where_;
    std::map<ModeLabel, ModeStatus> status_;
};

}  // namespace

CircuitError::CircuitError(CircuitErrorKind kind, std::string message, std::size_t line, std::size_t column)
    : Error(format_error(kind, message, line, column)),
      kind_(kind),
      message_(std::move(message)),
      line_(line),
      column_(column) {
}

void validate(const CircuitSpec &spec, const SourceMap *where) {
    Validator(spec, where).run();
}

}  // namespace pbsgate
