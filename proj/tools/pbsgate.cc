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

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "pbsgate/errors.h"
#include "pbsgate/gates.h"
#include "pbsgate/parser.h"
#include "pbsgate/report.h"

namespace {

using namespace pbsgate;

constexpr int kExitOk = 0;
constexpr int kExitValidation = 2;
constexpr int kExitParse = 3;

constexpr double kNormWarn = 1e-9;
constexpr double kNormReject = 1e-6;

struct Usage : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw Usage("cannot read '" + path + "'");
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// Turns re/im pairs into amplitudes, normalizing small deviations.
std::vector<Amplitude> amplitudes(const std::string &flag, const std::vector<double> &raw) {
    std::vector<Amplitude> out;
    double n2 = 0;
    for (std::size_t i = 0; i + 1 < raw.size(); i += 2) {
        out.emplace_back(raw[i], raw[i + 1]);
        n2 += std::norm(out.back());
    }
    double dev = std::abs(std::sqrt(n2) - 1);
    if (!(dev <= kNormReject)) {
        throw NonPhysicalInput(flag + " amplitudes have norm " + std::to_string(std::sqrt(n2)) +
                               ", expected 1 within 1e-6");
    }
    if (dev > kNormWarn) {
        std::cerr << "warning: " << flag << " amplitudes renormalized (norm deviated by " << dev << ")\n";
        for (auto &a : out) {
            a /= std::sqrt(n2);
        }
    }
    return out;
}

double prune_tolerance() {
    const char *env = std::getenv("PBSGATE_PRUNE_TOLERANCE");
    if (env == nullptr || *env == '\0') {
        return kDefaultPruneTolerance;
    }
    char *end = nullptr;
    double t = std::strtod(env, &end);
    if (*end != '\0' || !(t > 0) || t > 1e-3) {
        throw Usage(std::string("PBSGATE_PRUNE_TOLERANCE must be a number in (0, 1e-3], got '") + env + "'");
    }
    return t;
}

struct RunArgs {
    std::string gate;
    std::string circuit;
    std::vector<double> qubit;
    std::vector<double> control;
    std::vector<double> two_qubit;
    bool passive = false;
    std::string output;
    int schema = kReportSchema;
};

// Swaps command-line amplitudes into a parsed circuit's preparations.
void override_inputs(CircuitSpec &spec, const gates::GateInputs &in, const RunArgs &args) {
    std::vector<QubitInput *> qubits;
    std::vector<TwoQubitInput *> pairs;
    for (auto &prep : spec.inputs) {
        if (auto *q = std::get_if<QubitInput>(&prep)) {
            qubits.push_back(q);
        } else if (auto *t = std::get_if<TwoQubitInput>(&prep)) {
            pairs.push_back(t);
        }
    }
    if (!args.qubit.empty()) {
        if (qubits.empty()) {
            throw Usage("--qubit given but the circuit has no single-qubit input");
        }
        qubits[0]->h = in.qubit.alpha;
        qubits[0]->v = in.qubit.beta;
    }
    if (!args.control.empty()) {
        if (qubits.size() < 2) {
            throw Usage("--control given but the circuit has no second single-qubit input");
        }
        qubits[1]->h = in.control.alpha;
        qubits[1]->v = in.control.beta;
    }
    if (!args.two_qubit.empty()) {
        if (pairs.empty()) {
            throw Usage("--two-qubit given but the circuit has no two-qubit input");
        }
        pairs[0]->amps = in.two_qubit.a;
    }
}

// Inputs a built-in gate would need to reproduce this circuit.
gates::GateInputs inputs_of(const CircuitSpec &spec) {
    gates::GateInputs in;
    std::size_t nq = 0;
    for (const auto &prep : spec.inputs) {
        if (const auto *q = std::get_if<QubitInput>(&prep)) {
            (nq++ == 0 ? in.qubit : in.control) = {q->h, q->v};
        } else if (const auto *t = std::get_if<TwoQubitInput>(&prep)) {
            in.two_qubit.a = t->amps;
        }
    }
    return in;
}

gates::GateReport run_circuit_file(const CircuitSpec &spec, const std::string &path, bool passive, double tol) {
    gates::GateInputs in = inputs_of(spec);
    for (const auto &name : gates::gate_names()) {
        if (gates::gate_circuit(name, in) == spec) {
            return gates::run_gate(name, in, passive, tol);
        }
    }
    return gates::make_report(std::filesystem::path(path).stem().string(), {}, spec, std::nullopt, passive, tol);
}

int cmd_run(const RunArgs &args) {
    if (args.schema != kReportSchema) {
        throw Usage("unsupported report schema " + std::to_string(args.schema));
    }
    double tol = prune_tolerance();

    gates::GateInputs in;
    InputRecord record{"none", {}};
    if (!args.qubit.empty()) {
        auto a = amplitudes("--qubit", args.qubit);
        in.qubit = {a[0], a[1]};
        record = {"qubit", args.qubit};
    }
    if (!args.control.empty()) {
        auto a = amplitudes("--control", args.control);
        in.control = {a[0], a[1]};
        record.kind = record.kind == "qubit" ? "qubit+control" : "control";
        record.values.insert(record.values.end(), args.control.begin(), args.control.end());
    }
    if (!args.two_qubit.empty()) {
        auto a = amplitudes("--two-qubit", args.two_qubit);
        std::copy(a.begin(), a.end(), in.two_qubit.a.begin());
        record = {"two_qubit", args.two_qubit};
    }

    gates::GateReport report;
    RunSource source;
    if (!args.gate.empty()) {
        const auto &names = gates::gate_names();
        if (std::find(names.begin(), names.end(), args.gate) == names.end()) {
            throw Usage("unknown gate '" + args.gate + "'");
        }
        report = gates::run_gate(args.gate, in, args.passive, tol);
        source = {"gate", args.gate};
    } else {
        CircuitSpec spec = parse_circuit(read_file(args.circuit));
        override_inputs(spec, in, args);
        report = run_circuit_file(spec, args.circuit, args.passive, tol);
        source = {"circuit", args.circuit};
    }

    std::string text = render_report(report, source, record, args.passive);
    if (args.output.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(args.output, std::ios::binary);
        if (!(out << text)) {
            throw Usage("cannot write '" + args.output + "'");
        }
    }
    return kExitOk;
}

int cmd_check(const std::string &path) {
    parse_circuit(read_file(path));
    std::cout << "ok: " << path << "\n";
    return kExitOk;
}

int cmd_format(const std::string &path) {
    std::cout << print_circuit(parse_circuit(read_file(path)));
    return kExitOk;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Simulate polarization-encoded linear-optics gates."};
    app.require_subcommand(1);

    RunArgs run;
    auto *run_cmd = app.add_subcommand("run", "Run a built-in gate or a circuit file and print a JSON report");
    auto *gate_opt = run_cmd->add_option("--gate", run.gate, "Built-in gate name (see 'list')");
    auto *circ_opt = run_cmd->add_option("--circuit", run.circuit, "Circuit description file");
    gate_opt->excludes(circ_opt);
    run_cmd->add_option("--qubit", run.qubit, "Qubit amplitudes as re(H) im(H) re(V) im(V)")->expected(4);
    run_cmd->add_option("--control", run.control, "Control qubit amplitudes for destructive_cnot")->expected(4);
    run_cmd->add_option("--two-qubit", run.two_qubit, "Amplitudes of HH HV VH VV as re/im pairs")->expected(8);
    run_cmd->add_flag("--passive", run.passive, "Accept only outcomes that need no feed-forward");
    run_cmd->add_option("--output,-o", run.output, "Write the report here instead of stdout");
    run_cmd->add_option("--schema", run.schema, "Report schema version")->default_val(kReportSchema);

    std::string check_path;
    auto *check_cmd = app.add_subcommand("check", "Parse and validate a circuit file");
    check_cmd->add_option("path", check_path)->required();

    std::string format_path;
    auto *format_cmd = app.add_subcommand("format", "Print a circuit file in canonical form");
    format_cmd->add_option("path", format_path)->required();

    auto *list_cmd = app.add_subcommand("list", "List built-in gates");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return kExitValidation;
    }

    std::string where;
    try {
        if (*run_cmd) {
            if (run.gate.empty() == run.circuit.empty()) {
                throw Usage("exactly one of --gate or --circuit is required");
            }
            where = run.circuit;
            return cmd_run(run);
        }
        if (*check_cmd) {
            where = check_path;
            return cmd_check(check_path);
        }
        if (*format_cmd) {
            where = format_path;
            return cmd_format(format_path);
        }
        if (*list_cmd) {
            for (const auto &name : gates::gate_names()) {
                std::cout << name << "\n";
            }
            return kExitOk;
        }
    } catch (const CircuitError &e) {
        std::cerr << (where.empty() ? "" : where + ":") << e.what() << "\n";
        return kExitParse;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    }
    return kExitValidation;
}
