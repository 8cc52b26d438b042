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

// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "pbsgate/ancilla.h"
#include "pbsgate/gates.h"
#include "pbsgate/oracle.h"
#include "properties.h"
#include "test_support.h"

namespace {

using namespace pbsgate;
using namespace pbsgate::testing;

constexpr double kProbTol = 1e-12;
constexpr double kFidelityTol = 1e-12;
constexpr double kAmplitudeTol = 1e-10;
constexpr std::size_t kRandomInputs = 100;
constexpr std::size_t kOracleInputs = 25;

// Collects the worst deviation seen for each named quantity.
class Tally {
   public:
    void expect(const std::string &what, double got, double want, double tol) {
        double dev = std::abs(got - want);
        if (!(dev <= tol)) {
            if (failures_++ == 0) {
                std::ostringstream ss;
                ss << what << ": got " << got << ", want " << want;
                first_ = ss.str();
            }
        }
        worst_ = std::max(worst_, dev);
    }
    void require(const std::string &what, bool ok) {
        if (!ok && failures_++ == 0) {
            first_ = what;
        }
    }
    bool ok() const { return failures_ == 0; }
    std::string detail() const {
        std::ostringstream ss;
        if (ok()) {
            ss << "max deviation " << worst_;
        } else {
            ss << failures_ << " failed checks; first: " << first_;
        }
        return ss.str();
    }

   private:
    std::size_t failures_ = 0;
    double worst_ = 0;
    std::string first_;
};

double fid(const PhotonState &a, const PhotonState &b) {
    return std::norm(inner_product(a.normalized(), b.normalized()));
}

std::array<Amplitude, 4> cnot_on(const gates::TwoQubitState &in) {
    // Control H leaves the target; control V flips it.
    return {in.a[0], in.a[1], in.a[3], in.a[2]};
}

Tally criterion_parity(Rng &rng) {
    Tally t;
    for (std::size_t i = 0; i < kRandomInputs; i++) {
        auto q = random_qubit(rng);
        auto ff = gates::parity_check(q);
        auto passive = gates::parity_check(q, true);
        t.expect("feed-forward success", ff.success_probability, 0.5, kProbTol);
        t.expect("passive success", passive.success_probability, 0.25, kProbTol);
        PhotonState want = single_photon("2", q.alpha, q.beta);
        for (const auto *o : ff.result.accepted()) {
            t.expect("fidelity to input", fid(o->state, want), 1, kFidelityTol);
        }
    }
    return t;
}

Tally criterion_destructive(Rng &rng) {
    Tally t;
    for (std::size_t i = 0; i < kRandomInputs; i++) {
        auto target = random_qubit(rng);
        for (bool control_v : {false, true}) {
            auto control = control_v ? gates::QubitState::v() : gates::QubitState::h();
            auto ff = gates::destructive_cnot(target, control);
            auto passive = gates::destructive_cnot(target, control, true);
            t.expect("feed-forward success", ff.success_probability, 0.5, kProbTol);
            t.expect("passive success", passive.success_probability, 0.25, kProbTol);
            PhotonState want = control_v ? single_photon("3", target.beta, target.alpha)
                                         : single_photon("3", target.alpha, target.beta);
            auto accepted = ff.result.accepted();
            t.require("two accepted outcomes", accepted.size() == 2);
            for (const auto *o : accepted) {
                t.expect(control_v ? "flipped target" : "preserved target", fid(o->state, want), 1, kFidelityTol);
            }
        }
    }
    return t;
}

Tally criterion_encoder(Rng &rng) {
    Tally t;
    for (std::size_t i = 0; i < kRandomInputs; i++) {
        auto q = random_qubit(rng);
        auto r = gates::encoder(q);
        t.expect("success", r.success_probability, 0.5, kProbTol);
        PhotonState want = two_photon("2", "b", {q.alpha, 0, 0, q.beta});
        for (const auto *o : r.result.accepted()) {
            t.expect("fidelity to aHH+bVV", fid(o->state, want), 1, kFidelityTol);
        }
    }
    return t;
}

Tally criterion_cnot(Rng &rng) {
    Tally t;
    for (std::size_t i = 0; i < kRandomInputs; i++) {
        auto in = random_two_qubit(rng);
        auto ff = gates::cnot(in);
        auto passive = gates::cnot(in, true);
        t.expect("success", ff.success_probability, 0.25, kProbTol);
        t.expect("passive success", passive.success_probability, 1.0 / 16, kProbTol);
        t.expect("failure", ff.result.failure_probability, std::pow(std::sqrt(3.0) / 2, 2), kProbTol);
        auto accepted = ff.result.accepted();
        t.require("four accepted patterns", accepted.size() == 4);
        PhotonState want = two_photon("2", "3", cnot_on(in));
        for (const auto *o : accepted) {
            t.expect("pattern probability", o->probability, 1.0 / 16, kProbTol);
            t.expect("fidelity to CNOT output", fid(o->state, want), 1, kFidelityTol);
        }
    }
    return t;
}

Tally criterion_gc(Rng &rng) {
    Tally t;
    for (std::size_t i = 0; i < kOracleInputs; i++) {
        auto in = random_two_qubit(rng);
        auto r = gates::gc_cnot(in);
        t.expect("success", r.success_probability, 0.25, kProbTol);
        PhotonState want = two_photon("2", "3", cnot_on(in));
        std::vector<const Outcome *> single;
        for (const auto &o : r.result.outcomes) {
            if (o.pattern.all_one_and_only_one()) {
                single.push_back(&o);
            }
        }
        t.require("sixteen all-single-click patterns", single.size() == 16);
        for (const auto *o : single) {
            t.require("single-click pattern accepted", o->accepted);
            t.expect("pattern probability", o->probability, 1.0 / 64, kProbTol);
            t.expect("fidelity to CNOT output", fid(o->state, want), 1, kFidelityTol);
            t.expect("identical to first branch", max_amplitude_difference(o->state, single.front()->state), 0,
                     kAmplitudeTol);
        }
    }
    return t;
}

Tally criterion_chi() {
    Tally t;
    auto r = gates::chi_via_cnot();
    t.expect("success", r.success_probability, 0.25, kProbTol);
    PhotonState chi = chi_state("1", "2", "3", "4");
    auto accepted = r.result.accepted();
    t.require("four accepted patterns", accepted.size() == 4);
    for (const auto *o : accepted) {
        t.expect("fidelity to chi", fid(o->state, chi), 1, kFidelityTol);
    }
    return t;
}

Tally criterion_oracle(Rng &rng) {
    Tally t;
    for (const auto &name : gates::gate_names()) {
        std::size_t runs = name == "chi_via_cnot" ? 2 : kOracleInputs;
        for (std::size_t i = 0; i < runs; i++) {
            bool passive = i % 2 == 1;
            CircuitSpec spec = gates::gate_circuit(name, random_gate_inputs(rng));
            GateResult sparse = execute(spec, {passive, kDefaultPruneTolerance});
            oracle::OracleResult dense = oracle::run_circuit(spec, passive);
            t.require(name + ": same outcome count", sparse.outcomes.size() == dense.outcomes.size());
            for (const auto &o : sparse.outcomes) {
                auto it = dense.outcomes.find(o.pattern);
                if (it == dense.outcomes.end()) {
                    t.require(name + ": outcome missing from oracle", false);
                    continue;
                }
                t.expect(name + ": probability", o.probability, it->second.probability, kProbTol);
                t.require(name + ": acceptance", o.accepted == it->second.accepted);
                t.expect(name + ": amplitudes", max_amplitude_difference(o.state, it->second.state), 0, kAmplitudeTol);
            }
            t.expect(name + ": success", sparse.success_probability, dense.success_probability, kProbTol);
        }
    }
    return t;
}

Tally criterion_properties() {
    Tally t;
    const std::vector<std::function<PropertyResult()>> suites{
        [] { return check_element_unitarity(0x5eed01); },   [] { return check_outcome_completeness(0x5eed02); },
        [] { return check_rebase_round_trip(0x5eed03); },   [] { return check_phase_involution(0x5eed04); },
        [] { return check_parser_round_trip(0x5eed05); },   [] { return check_parser_fuzz(0x5eed06); },
    };
    for (const auto &suite : suites) {
        PropertyResult r = suite();
        t.require(r.name + " (" + std::to_string(r.cases) + " cases): " + r.first_failure, r.ok());
        t.require(r.name + ": fewer than 1000 cases", r.cases >= kPropertyCases);
        std::printf("    %-22s %5zu cases, %zu failures, worst %.3g\n", r.name.c_str(), r.cases, r.failures, r.worst);
    }
    return t;
}

}  // namespace

int main() {
    Rng rng(20261017);
    struct Criterion {
        int id;
        const char *name;
        std::function<Tally()> run;
    };
    const std::vector<Criterion> criteria{
        {1, "parity check success and fidelity", [&] { return criterion_parity(rng); }},
        {2, "destructive CNOT flip and preserve", [&] { return criterion_destructive(rng); }},
        {3, "encoder output and success", [&] { return criterion_encoder(rng); }},
        {4, "composed CNOT", [&] { return criterion_cnot(rng); }},
        {5, "teleported CNOT through chi", [&] { return criterion_gc(rng); }},
        {6, "chi from CNOT", [] { return criterion_chi(); }},
        {7, "sparse engine vs dense oracle", [&] { return criterion_oracle(rng); }},
        {8, "property suites", [] { return criterion_properties(); }},
    };
    int failed = 0;
    auto start = std::chrono::steady_clock::now();
    for (const auto &c : criteria) {
        auto t0 = std::chrono::steady_clock::now();
        Tally t = c.run();
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        std::printf("criterion %d: %s  %s (%s) [%.2fs]\n", c.id, t.ok() ? "PASS" : "FAIL", c.name, t.detail().c_str(),
                    secs);
        std::fflush(stdout);
        failed += t.ok() ? 0 : 1;
    }
    double total = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%d of %zu criteria passed in %.2fs\n", static_cast<int>(criteria.size()) - failed, criteria.size(),
                total);
    return failed == 0 ? 0 : 1;
}
