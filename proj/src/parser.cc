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

#include "pbsgate/parser.h"

#include <charconv>
#include <cmath>
#include <map>
#include <optional>
#include <set>
#include <sstream>

namespace pbsgate {

namespace {

struct Token {
    std::string_view text;
    std::size_t column = 0;
};

struct Line {
    std::size_t number = 0;
    std::vector<Token> tokens;
    std::size_t end_column = 1;
};

bool is_space(char c) {
    return c == ' ' || c == '\t' || c == '\v' || c == '\f';
}

std::vector<Line> split_lines(std::string_view text) {
    std::vector<Line> lines;
    std::size_t number = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t nl = text.find('\n', start);
        std::string_view raw = text.substr(start, nl == std::string_view::npos ? std::string_view::npos : nl - start);
        if (!raw.empty() && raw.back() == '\r') {
            raw.remove_suffix(1);
        }
        Line line;
        line.number = ++number;
        std::size_t hash = raw.find('#');
        std::string_view body = raw.substr(0, hash);
        line.end_column = body.size() + 1;
        std::size_t i = 0;
        while (i < body.size()) {
            while (i < body.size() && is_space(body[i])) {
                i++;
            }
            std::size_t j = i;
            while (j < body.size() && !is_space(body[j])) {
                j++;
            }
            if (j > i) {
                line.tokens.push_back({body.substr(i, j - i), i + 1});
            }
            i = j;
        }
        lines.push_back(std::move(line));
        if (nl == std::string_view::npos) {
            break;
        }
        start = nl + 1;
    }
    return lines;
}

bool is_identifier(std::string_view s) {
    if (s.empty()) {
        return false;
    }
    for (char c : s) {
        bool ok = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c == '_' || c == '\'';
        if (!ok) {
            return false;
        }
    }
    return true;
}

std::optional<double> parse_number(std::string_view s) {
    double value = 0;
    const char *first = s.data();
    const char *last = s.data() + s.size();
    if (first != last && *first == '+') {
        first++;
    }
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last || !std::isfinite(value)) {
        return std::nullopt;
    }
    return value;
}

std::string format_number(double x) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), x);
    return std::string(buf, ptr);
}

struct PendingPort {
    std::string detector;
    char pol;
    SourceLocation label_at, pol_at;
};

class Parser {
   public:
    explicit Parser(std::string_view text) : lines_(split_lines(text)) {
    }

    CircuitSpec parse(SourceMap &where) {
        collect_declared_modes();
        std::optional<std::size_t> term_index;
        for (const auto &line : lines_) {
            if (line.tokens.empty()) {
                continue;
            }
            const Token &kw = line.tokens[0];
            SourceLocation at{line.number, kw.column};
            if (kw.text == "mode") {
                parse_mode(line, where);
            } else if (kw.text == "input") {
                parse_input(line, at, where, term_index);
            } else if (kw.text == "pbs") {
                parse_pbs(line);
                where.elements.push_back(at);
            } else if (kw.text == "rotate" || kw.text == "polphase") {
                std::size_t next = 0;
                auto corr = parse_correction(line, next);
                expect_end(line, next);
                spec_.elements.push_back(std::visit([](const auto &c) { return ElementDecl{c}; }, corr));
                where.elements.push_back(at);
            } else if (kw.text == "detect") {
                parse_detect(line);
                where.detectors.push_back(at);
            } else if (kw.text == "accept") {
                parse_accept(line, where);
            } else if (kw.text == "on") {
                parse_rule(line);
                where.rules.push_back(at);
            } else if (kw.text == "output") {
                if (line.tokens.size() < 2) {
                    syntax(line, nullptr, "expected at least one output mode");
                }
                for (std::size_t k = 1; k < line.tokens.size(); k++) {
                    spec_.outputs.push_back(mode_at(line, k));
                    where.outputs.push_back({line.number, line.tokens[k].column});
                }
            } else {
                syntax(line, &kw, "unknown keyword '" + std::string(kw.text) + "'");
            }
        }
        where.end = {lines_.empty() ? 1 : lines_.back().number, 1};
        resolve_ports();
        validate(spec_, &where);
        return std::move(spec_);
    }

   private:
    [[noreturn]] void syntax(const Line &line, const Token *tok, const std::string &msg) const {
        throw CircuitError(CircuitErrorKind::SyntaxError, msg, line.number,
                           tok != nullptr ? tok->column : line.end_column);
    }

    const Token &token_at(const Line &line, std::size_t k, const char *what) const {
        if (k >= line.tokens.size()) {
            syntax(line, nullptr, std::string("expected ") + what);
        }
        return line.tokens[k];
    }

    void expect_end(const Line &line, std::size_t k) const {
        if (k < line.tokens.size()) {
            syntax(line, &line.tokens[k], "unexpected token '" + std::string(line.tokens[k].text) + "'");
        }
    }

    ModeLabel identifier_at(const Line &line, std::size_t k, const char *what) const {
        const Token &tok = token_at(line, k, what);
        if (!is_identifier(tok.text)) {
            syntax(line, &tok, std::string("invalid ") + what + " '" + std::string(tok.text) + "'");
        }
        return ModeLabel(tok.text);
    }

    ModeLabel mode_at(const Line &line, std::size_t k) const {
        ModeLabel m = identifier_at(line, k, "mode");
        if (!declared_.contains(m)) {
            throw CircuitError(CircuitErrorKind::UndeclaredMode, "undeclared mode '" + m + "'", line.number,
                               line.tokens[k].column);
        }
        return m;
    }

    // Elements may not act on a mode once it has been detected.
    ModeLabel element_mode_at(const Line &line, std::size_t k) const {
        ModeLabel m = mode_at(line, k);
        if (detected_.contains(m)) {
            throw CircuitError(CircuitErrorKind::DetectedModeReuse, "mode '" + m + "' was consumed by a detector",
                               line.number, line.tokens[k].column);
        }
        return m;
    }

    double number_at(const Line &line, std::size_t k) const {
        const Token &tok = token_at(line, k, "number");
        auto v = parse_number(tok.text);
        if (!v) {
            syntax(line, &tok, "invalid number '" + std::string(tok.text) + "'");
        }
        return *v;
    }

    Pol hv_pol_at(const Line &line, std::size_t k) const {
        const Token &tok = token_at(line, k, "polarization");
        if (tok.text == "H") {
            return Pol::H;
        }
        if (tok.text == "V") {
            return Pol::V;
        }
        syntax(line, &tok, "expected H or V, got '" + std::string(tok.text) + "'");
    }

    PolBasis basis_at(const Line &line, std::size_t k) const {
        const Token &tok = token_at(line, k, "basis");
        if (tok.text == "hv") {
            return PolBasis::HV;
        }
        if (tok.text == "fs") {
            return PolBasis::FS;
        }
        syntax(line, &tok, "expected hv or fs, got '" + std::string(tok.text) + "'");
    }

    PendingPort port_at(const Line &line, std::size_t label_k, std::size_t pol_k) const {
        std::string label = identifier_at(line, label_k, "detector label");
        const Token &tok = token_at(line, pol_k, "polarization");
        if (tok.text.size() != 1 || std::string_view("HVFS").find(tok.text[0]) == std::string_view::npos) {
            syntax(line, &tok, "expected one of H, V, F, S, got '" + std::string(tok.text) + "'");
        }
        return {label, tok.text[0], {line.number, line.tokens[label_k].column}, {line.number, tok.column}};
    }

    void collect_declared_modes() {
        for (const auto &line : lines_) {
            if (!line.tokens.empty() && line.tokens[0].text == "mode") {
                for (std::size_t k = 1; k < line.tokens.size(); k++) {
                    if (is_identifier(line.tokens[k].text)) {
                        declared_.insert(std::string(line.tokens[k].text));
                    }
                }
            }
        }
    }

    void parse_mode(const Line &line, SourceMap &where) {
        if (line.tokens.size() < 2) {
            syntax(line, nullptr, "expected mode name");
        }
        for (std::size_t k = 1; k < line.tokens.size(); k++) {
            spec_.modes.push_back(identifier_at(line, k, "mode"));
            where.modes.push_back({line.number, line.tokens[k].column});
        }
    }

    void parse_input(const Line &line, SourceLocation at, SourceMap &where, std::optional<std::size_t> &term_index) {
        const Token &kind = token_at(line, 1, "input kind");
        std::size_t end = 0;
        if (kind.text == "qubit") {
            QubitInput q;
            q.mode = mode_at(line, 2);
            q.h = {number_at(line, 3), number_at(line, 4)};
            q.v = {number_at(line, 5), number_at(line, 6)};
            spec_.inputs.emplace_back(q);
            end = 7;
        } else if (kind.text == "twoqubit") {
            TwoQubitInput q;
            q.first = mode_at(line, 2);
            q.second = mode_at(line, 3);
            for (std::size_t i = 0; i < 4; i++) {
                q.amps[i] = {number_at(line, 4 + 2 * i), number_at(line, 5 + 2 * i)};
            }
            spec_.inputs.emplace_back(q);
            end = 12;
        } else if (kind.text == "bell") {
            BellInput b{mode_at(line, 2), mode_at(line, 3)};
            if (b.m1 == b.m2) {
                syntax(line, &line.tokens[3], "bell pair needs two distinct modes");
            }
            spec_.inputs.emplace_back(b);
            end = 4;
        } else if (kind.text == "chi") {
            ChiInput c;
            std::set<ModeLabel> seen;
            for (std::size_t i = 0; i < 4; i++) {
                c.modes[i] = mode_at(line, 2 + i);
                if (!seen.insert(c.modes[i]).second) {
                    syntax(line, &line.tokens[2 + i], "chi state needs four distinct modes");
                }
            }
            spec_.inputs.emplace_back(c);
            end = 6;
        } else if (kind.text == "term") {
            Amplitude amp{number_at(line, 2), number_at(line, 3)};
            FockBasisState::Occupations occ;
            if (line.tokens.size() < 5) {
                token_at(line, 4, "slot <mode>:<H|V>[:<count>]");
            }
            for (std::size_t k = 4; k < line.tokens.size(); k++) {
                auto [slot, n] = slot_at(line, k);
                if (occ.contains(slot)) {
                    syntax(line, &line.tokens[k], "slot listed twice in one term");
                }
                occ[slot] = n;
            }
            if (!term_index) {
                term_index = spec_.inputs.size();
                spec_.inputs.emplace_back(TermListInput{});
                where.inputs.push_back(at);
            }
            std::get<TermListInput>(spec_.inputs[*term_index]).terms.emplace_back(FockBasisState(occ), amp);
            return;
        } else {
            syntax(line, &kind, "unknown input kind '" + std::string(kind.text) + "'");
        }
        expect_end(line, end);
        where.inputs.push_back(at);
    }

    std::pair<PolSlot, unsigned> slot_at(const Line &line, std::size_t k) const {
        const Token &tok = line.tokens[k];
        std::string_view text = tok.text;
        auto c1 = text.find(':');
        if (c1 == std::string_view::npos) {
            syntax(line, &tok, "expected <mode>:<H|V>[:<count>]");
        }
        std::string_view mode = text.substr(0, c1);
        std::string_view rest = text.substr(c1 + 1);
        auto c2 = rest.find(':');
        std::string_view pol = rest.substr(0, c2);
        unsigned n = 1;
        if (c2 != std::string_view::npos) {
            std::string_view count = rest.substr(c2 + 1);
            auto [ptr, ec] = std::from_chars(count.data(), count.data() + count.size(), n);
            if (ec != std::errc{} || ptr != count.data() + count.size() || n == 0 || n > 64) {
                syntax(line, &tok, "invalid photon count in '" + std::string(text) + "'");
            }
        }
        if (!is_identifier(mode) || (pol != "H" && pol != "V")) {
            syntax(line, &tok, "expected <mode>:<H|V>[:<count>], got '" + std::string(text) + "'");
        }
        if (!declared_.contains(std::string(mode))) {
            throw CircuitError(CircuitErrorKind::UndeclaredMode, "undeclared mode '" + std::string(mode) + "'",
                               line.number, tok.column);
        }
        return {PolSlot{std::string(mode), pol == "H" ? Pol::H : Pol::V}, n};
    }

    void parse_pbs(const Line &line) {
        PbsElement el;
        el.basis = basis_at(line, 1);
        el.in1 = element_mode_at(line, 2);
        el.in2 = element_mode_at(line, 3);
        el.out1 = element_mode_at(line, 4);
        el.out2 = element_mode_at(line, 5);
        expect_end(line, 6);
        spec_.elements.emplace_back(el);
    }

    /// Parses `rotate <mode> <deg>` or `polphase <mode> <H|V> <deg>` starting at
    /// `next`, leaving `next` past the consumed tokens.
    CorrectionDecl parse_correction(const Line &line, std::size_t &next) const {
        const Token &kw = token_at(line, next, "correction");
        if (kw.text == "rotate") {
            RotateDecl r{element_mode_at(line, next + 1), number_at(line, next + 2)};
            next += 3;
            return r;
        }
        if (kw.text == "polphase") {
            PolPhaseDecl p{element_mode_at(line, next + 1), hv_pol_at(line, next + 2), number_at(line, next + 3)};
            next += 4;
            return p;
        }
        syntax(line, &kw, "expected rotate or polphase, got '" + std::string(kw.text) + "'");
    }

    void parse_detect(const Line &line) {
        DetectorSpec det;
        det.basis = basis_at(line, 1);
        det.mode = element_mode_at(line, 2);
        const Token &as = token_at(line, 3, "'as'");
        if (as.text != "as") {
            syntax(line, &as, "expected 'as', got '" + std::string(as.text) + "'");
        }
        det.label = identifier_at(line, 4, "detector label");
        expect_end(line, 5);
        detected_.insert(det.mode);
        spec_.detectors.push_back(det);
    }

    void parse_accept(const Line &line, SourceMap &where) {
        if (line.tokens.size() < 3) {
            token_at(line, line.tokens.size(), line.tokens.size() < 2 ? "detector label" : "polarization");
        }
        for (std::size_t k = 2; k < line.tokens.size(); k++) {
            pending_accepts_.push_back(port_at(line, 1, k));
            spec_.accepts.push_back({pending_accepts_.back().detector, Port::Transmitted});
            where.accepts.push_back({line.number, line.tokens[0].column});
        }
    }

    void parse_rule(const Line &line) {
        PendingPort trigger = port_at(line, 1, 2);
        const Token &kw = token_at(line, 3, "'do'");
        if (kw.text != "do") {
            syntax(line, &kw, "expected 'do', got '" + std::string(kw.text) + "'");
        }
        FeedForwardRule rule;
        rule.detector = trigger.detector;
        std::size_t next = 4;
        token_at(line, next, "correction");
        while (next < line.tokens.size()) {
            rule.corrections.push_back(parse_correction(line, next));
        }
        pending_rules_.push_back(trigger);
        spec_.rules.push_back(std::move(rule));
    }

    Port resolve(const PendingPort &p) const {
        std::size_t idx = spec_.detector_index(p.detector);
        if (idx == CircuitSpec::npos) {
            throw CircuitError(CircuitErrorKind::InvalidCircuit, "unknown detector '" + p.detector + "'",
                               p.label_at.line, p.label_at.column);
        }
        PolBasis basis = spec_.detectors[idx].basis;
        for (Port port : {Port::Transmitted, Port::Reflected}) {
            if (port_char(basis, port) == p.pol) {
                return port;
            }
        }
        throw CircuitError(CircuitErrorKind::InvalidCircuit,
                           "detector '" + p.detector + "' measures in the " + (basis == PolBasis::HV ? "HV" : "FS") +
                               " basis; '" + p.pol + "' is not one of its outcomes",
                           p.pol_at.line, p.pol_at.column);
    }

    void resolve_ports() {
        for (std::size_t k = 0; k < pending_accepts_.size(); k++) {
            spec_.accepts[k].port = resolve(pending_accepts_[k]);
        }
        for (std::size_t k = 0; k < pending_rules_.size(); k++) {
            spec_.rules[k].port = resolve(pending_rules_[k]);
        }
    }

    std::vector<Line> lines_;
    std::set<ModeLabel> declared_;
    std::set<ModeLabel> detected_;
    std::vector<PendingPort> pending_accepts_;
    std::vector<PendingPort> pending_rules_;
    CircuitSpec spec_;
};

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

void print_amplitude(std::ostream &out, Amplitude a) {
    out << ' ' << format_number(a.real()) << ' ' << format_number(a.imag());
}

void print_correction(std::ostream &out, const CorrectionDecl &c) {
    std::visit(overloaded{
                   [&](const RotateDecl &r) { out << "rotate " << r.mode << ' ' << format_number(r.degrees); },
                   [&](const PolPhaseDecl &p) {
                       out << "polphase " << p.mode << ' ' << pol_char(p.pol) << ' ' << format_number(p.degrees);
                   },
               },
               c);
}

const char *basis_name(PolBasis b) {
    return b == PolBasis::HV ? "hv" : "fs";
}

}  // namespace

CircuitSpec parse_circuit(std::string_view text, SourceMap &where) {
    where = SourceMap{};
    return Parser(text).parse(where);
}

CircuitSpec parse_circuit(std::string_view text) {
    SourceMap where;
    return parse_circuit(text, where);
}

std::string print_circuit(const CircuitSpec &spec) {
    std::ostringstream out;
    if (!spec.modes.empty()) {
        out << "mode";
        for (const auto &m : spec.modes) {
            out << ' ' << m;
        }
        out << '\n';
    }
    for (const auto &prep : spec.inputs) {
        std::visit(overloaded{
                       [&](const QubitInput &q) {
                           out << "input qubit " << q.mode;
                           print_amplitude(out, q.h);
                           print_amplitude(out, q.v);
                           out << '\n';
                       },
                       [&](const TwoQubitInput &q) {
                           out << "input twoqubit " << q.first << ' ' << q.second;
                           for (auto a : q.amps) {
                               print_amplitude(out, a);
                           }
                           out << '\n';
                       },
                       [&](const BellInput &b) { out << "input bell " << b.m1 << ' ' << b.m2 << '\n'; },
                       [&](const ChiInput &c) {
                           out << "input chi";
                           for (const auto &m : c.modes) {
                               out << ' ' << m;
                           }
                           out << '\n';
                       },
                       [&](const TermListInput &t) {
                           for (const auto &[basis, amp] : t.terms) {
                               out << "input term";
                               print_amplitude(out, amp);
                               for (const auto &[slot, n] : basis.occupations()) {
                                   out << ' ' << slot.mode << ':' << pol_char(slot.pol);
                                   if (n != 1) {
                                       out << ':' << n;
                                   }
                               }
                               out << '\n';
                           }
                       },
                   },
                   prep);
    }
    for (const auto &el : spec.elements) {
        std::visit(overloaded{
                       [&](const PbsElement &p) {
                           out << "pbs " << basis_name(p.basis) << ' ' << p.in1 << ' ' << p.in2 << ' ' << p.out1 << ' '
                               << p.out2;
                       },
                       [&](const RotateDecl &r) { print_correction(out, r); },
                       [&](const PolPhaseDecl &p) { print_correction(out, p); },
                   },
                   el);
        out << '\n';
    }
    for (const auto &det : spec.detectors) {
        out << "detect " << basis_name(det.basis) << ' ' << det.mode << " as " << det.label << '\n';
    }
    auto basis_of = [&](const std::string &label) {
        std::size_t idx = spec.detector_index(label);
        return idx == CircuitSpec::npos ? PolBasis::HV : spec.detectors[idx].basis;
    };
    for (const auto &acc : spec.accepts) {
        out << "accept " << acc.detector << ' ' << port_char(basis_of(acc.detector), acc.port) << '\n';
    }
    for (const auto &rule : spec.rules) {
        out << "on " << rule.detector << ' ' << port_char(basis_of(rule.detector), rule.port) << " do";
        for (const auto &c : rule.corrections) {
            out << ' ';
            print_correction(out, c);
        }
        out << '\n';
    }
    if (!spec.outputs.empty()) {
        out << "output";
        for (const auto &m : spec.outputs) {
            out << ' ' << m;
        }
        out << '\n';
    }
    return out.str();
}

}  // namespace pbsgate
