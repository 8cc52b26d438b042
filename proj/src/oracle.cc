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

#include "pbsgate/oracle.h"

#include <algorithm>
#include <cmath>
#include <memory>
#include <mutex>
#include <numeric>
#include <set>
#include <stdexcept>

#include "pbsgate/errors.h"

namespace pbsgate::oracle {

namespace {

using Complex = std::complex<double>;

std::string key_of(const std::vector<unsigned> &occ) {
    return std::string(occ.begin(), occ.end());
}

void enumerate(std::size_t slot, unsigned remaining, std::vector<unsigned> &cur,
               std::vector<std::vector<unsigned>> &out) {
    if (slot == cur.size()) {
        out.push_back(cur);
        return;
    }
    for (unsigned n = 0; n <= remaining; n++) {
        cur[slot] = n;
        enumerate(slot + 1, remaining - n, cur, out);
    }
    cur[slot] = 0;
}

double factorial(unsigned n) {
    double f = 1;
    for (unsigned k = 2; k <= n; k++) {
        f *= k;
    }
    return f;
}

// Permanent by summing over every permutation.
Complex permanent(const std::vector<std::vector<Complex>> &a) {
    std::size_t n = a.size();
    if (n == 0) {
        return 1;
    }
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    Complex total = 0;
    do {
        Complex p = 1;
        for (std::size_t i = 0; i < n; i++) {
            p *= a[i][perm[i]];
        }
        total += p;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total;
}

std::vector<std::size_t> expand(const std::vector<unsigned> &occ) {
    std::vector<std::size_t> idx;
    for (std::size_t s = 0; s < occ.size(); s++) {
        for (unsigned k = 0; k < occ[s]; k++) {
            idx.push_back(s);
        }
    }
    return idx;
}

// ⟨out|U|in⟩ for occupation vectors over the local slots of u.
Complex transition(const Eigen::MatrixXcd &u, const std::vector<unsigned> &out, const std::vector<unsigned> &in) {
    auto rows = expand(out);
    auto cols = expand(in);
    if (rows.size() != cols.size()) {
        return 0;
    }
    std::vector<std::vector<Complex>> sub(rows.size(), std::vector<Complex>(cols.size()));
    for (std::size_t i = 0; i < rows.size(); i++) {
        for (std::size_t j = 0; j < cols.size(); j++) {
            sub[i][j] = u(static_cast<Eigen::Index>(rows[i]), static_cast<Eigen::Index>(cols[j]));
        }
    }
    double norm = 1;
    for (unsigned n : out) {
        norm *= factorial(n);
    }
    for (unsigned n : in) {
        norm *= factorial(n);
    }
    return permanent(sub) / std::sqrt(norm);
}

std::vector<PolSlot> mode_slots(const std::vector<ModeLabel> &modes) {
    std::vector<PolSlot> out;
    for (const auto &m : modes) {
        out.push_back({m, Pol::H});
        out.push_back({m, Pol::V});
    }
    return out;
}

std::size_t position(const std::vector<PolSlot> &slots, const PolSlot &s) {
    return static_cast<std::size_t>(std::find(slots.begin(), slots.end(), s) - slots.begin());
}

LocalUnitary beam_splitter(const PbsElement &el) {
    std::vector<ModeLabel> modes{el.in1, el.in2};
    for (const auto &m : {el.out1, el.out2}) {
        if (std::find(modes.begin(), modes.end(), m) == modes.end()) {
            modes.push_back(m);
        }
    }
    LocalUnitary lu{mode_slots(modes), {}};
    auto k = static_cast<Eigen::Index>(lu.slots.size());

    // Routing permutation, completed to a bijection on the slot list.
    std::vector<std::pair<PolSlot, PolSlot>> route{
        {{el.in1, Pol::H}, {el.out1, Pol::H}},
        {{el.in2, Pol::H}, {el.out2, Pol::H}},
        {{el.in1, Pol::V}, {el.out2, Pol::V}},
        {{el.in2, Pol::V}, {el.out1, Pol::V}},
    };
    std::set<PolSlot> domain, image;
    for (const auto &[from, to] : route) {
        domain.insert(from);
        image.insert(to);
    }
    std::vector<PolSlot> spare_from, spare_to;
    for (const auto &s : lu.slots) {
        if (!domain.contains(s)) {
            spare_from.push_back(s);
        }
        if (!image.contains(s)) {
            spare_to.push_back(s);
        }
    }
    for (std::size_t i = 0; i < spare_from.size(); i++) {
        route.emplace_back(spare_from[i], spare_to[i]);
    }
    Eigen::MatrixXcd perm = Eigen::MatrixXcd::Zero(k, k);
    for (const auto &[from, to] : route) {
        perm(static_cast<Eigen::Index>(position(lu.slots, to)), static_cast<Eigen::Index>(position(lu.slots, from))) = 1;
    }
    if (el.basis == PolBasis::HV) {
        lu.u = perm;
        return lu;
    }

    auto rebase_on = [&](const std::vector<ModeLabel> &which) {
        Eigen::MatrixXcd r = Eigen::MatrixXcd::Identity(k, k);
        auto block = fs_rebase("").u;
        for (const auto &m : which) {
            auto h = static_cast<Eigen::Index>(position(lu.slots, {m, Pol::H}));
            auto v = static_cast<Eigen::Index>(position(lu.slots, {m, Pol::V}));
            r(h, h) = block(0, 0);
            r(v, h) = block(1, 0);
            r(h, v) = block(0, 1);
            r(v, v) = block(1, 1);
        }
        return r;
    };
    Eigen::MatrixXcd into_fs = rebase_on({el.in1, el.in2});
    Eigen::MatrixXcd out_of_fs = rebase_on({el.out1, el.out2}).adjoint();
    lu.u = out_of_fs * perm * into_fs;
    return lu;
}

using Occ = std::map<PolSlot, unsigned>;

std::vector<std::pair<Occ, Complex>> prep_terms(const InputPrep &prep) {
    const double r = 1 / std::sqrt(2.0);
    std::vector<std::pair<Occ, Complex>> out;
    if (const auto *q = std::get_if<QubitInput>(&prep)) {
        out.push_back({{{{q->mode, Pol::H}, 1}}, q->h});
        out.push_back({{{{q->mode, Pol::V}, 1}}, q->v});
    } else if (const auto *t = std::get_if<TwoQubitInput>(&prep)) {
        const Pol pols[2] = {Pol::H, Pol::V};
        for (int i = 0; i < 4; i++) {
            out.push_back({{{{t->first, pols[i / 2]}, 1}, {{t->second, pols[i % 2]}, 1}}, t->amps[i]});
        }
    } else if (const auto *b = std::get_if<BellInput>(&prep)) {
        out.push_back({{{{b->m1, Pol::H}, 1}, {{b->m2, Pol::H}, 1}}, r});
        out.push_back({{{{b->m1, Pol::V}, 1}, {{b->m2, Pol::V}, 1}}, r});
    } else if (const auto *c = std::get_if<ChiInput>(&prep)) {
        // Written as pol(1) pol(4) pol(2) pol(3).
        const char *rows[4] = {"HHHH", "HVHV", "VHVV", "VVVH"};
        const ModeLabel &m1 = c->modes[0], &m2 = c->modes[1], &m3 = c->modes[2], &m4 = c->modes[3];
        for (const char *row : rows) {
            auto p = [&](int i) { return row[i] == 'H' ? Pol::H : Pol::V; };
            out.push_back({{{{m1, p(0)}, 1}, {{m4, p(1)}, 1}, {{m2, p(2)}, 1}, {{m3, p(3)}, 1}}, 0.5});
        }
    } else {
        for (const auto &[basis, amp] : std::get<TermListInput>(prep).terms) {
            out.push_back({basis.occupations(), amp});
        }
    }
    return out;
}

using DetectorSlots = std::vector<std::pair<std::size_t, std::size_t>>;

DetectorSlots detector_slots(const std::vector<DetectorSpec> &detectors, const DenseBasis &basis) {
    DetectorSlots slots;
    for (const auto &d : detectors) {
        slots.emplace_back(basis.slot_index({d.mode, Pol::H}), basis.slot_index({d.mode, Pol::V}));
    }
    return slots;
}

bool matches(const std::vector<unsigned> &occ, const OutcomePattern &pattern, const DetectorSlots &slots) {
    for (std::size_t k = 0; k < slots.size(); k++) {
        if (occ[slots[k].first] != pattern.counts[k].transmitted || occ[slots[k].second] != pattern.counts[k].reflected) {
            return false;
        }
    }
    return true;
}

// Bases are large and immutable, so runs over the same slots share one.
std::shared_ptr<const DenseBasis> shared_basis(const std::vector<PolSlot> &slots, unsigned n) {
    static std::mutex lock;
    static std::map<std::pair<std::vector<PolSlot>, unsigned>, std::shared_ptr<const DenseBasis>> cache;
    std::lock_guard guard(lock);
    auto &entry = cache[{slots, n}];
    if (!entry) {
        entry = std::make_shared<const DenseBasis>(slots, n);
    }
    return entry;
}

}  // namespace

DenseBasis::DenseBasis(std::vector<PolSlot> slots, unsigned max_photons)
    : slots_(std::move(slots)), max_photons_(max_photons) {
    std::vector<unsigned> cur(slots_.size(), 0);
    enumerate(0, max_photons_, cur, states_);
    index_.reserve(states_.size());
    for (std::size_t i = 0; i < states_.size(); i++) {
        index_.emplace(key_of(states_[i]), i);
    }
}

std::size_t DenseBasis::slot_index(const PolSlot &slot) const {
    std::size_t p = position(slots_, slot);
    if (p == slots_.size()) {
        throw TruncationTooSmall("slot " + slot.mode + ":" + pol_char(slot.pol) + " is outside the dense basis");
    }
    return p;
}

bool DenseBasis::has_slot(const PolSlot &slot) const {
    return position(slots_, slot) != slots_.size();
}

std::size_t DenseBasis::index_of(const std::vector<unsigned> &occupation) const {
    auto it = index_.find(key_of(occupation));
    if (it == index_.end()) {
        throw TruncationTooSmall("occupation exceeds the dense basis truncation of " + std::to_string(max_photons_) +
                                 " photons");
    }
    return it->second;
}

std::size_t DenseBasis::index_of(const FockBasisState &b) const {
    std::vector<unsigned> occ(slots_.size(), 0);
    for (const auto &[slot, n] : b.occupations()) {
        occ[slot_index(slot)] = n;
    }
    return index_of(occ);
}

FockBasisState DenseBasis::to_fock(std::size_t index) const {
    FockBasisState::Occupations occ;
    for (std::size_t s = 0; s < slots_.size(); s++) {
        occ[slots_[s]] = states_[index][s];
    }
    return FockBasisState(occ);
}

std::size_t expected_dimension(std::size_t slots, unsigned n) {
    // C(slots + n, n)
    double c = 1;
    for (unsigned k = 1; k <= n; k++) {
        c = c * static_cast<double>(slots + k) / k;
    }
    return static_cast<std::size_t>(std::llround(c));
}

LocalUnitary fs_rebase(const ModeLabel &mode) {
    const double r = 1 / std::sqrt(2.0);
    LocalUnitary lu{{{mode, Pol::H}, {mode, Pol::V}}, Eigen::MatrixXcd(2, 2)};
    // Columns: H = (F − S)/√2, V = (F + S)/√2; rows are (F, S).
    lu.u << r, r, -r, r;
    return lu;
}

LocalUnitary single_particle(const OpticalElement &el) {
    if (const auto *pbs = std::get_if<PbsElement>(&el)) {
        if (pbs->in1 == pbs->in2 || pbs->out1 == pbs->out2) {
            throw std::invalid_argument("beam splitter ports must be distinct");
        }
        return beam_splitter(*pbs);
    }
    if (const auto *rot = std::get_if<RotatorElement>(&el)) {
        LocalUnitary lu{{{rot->mode, Pol::H}, {rot->mode, Pol::V}}, Eigen::MatrixXcd(2, 2)};
        double c = std::cos(rot->angle), s = std::sin(rot->angle);
        lu.u << c, -s, s, c;
        return lu;
    }
    const auto &ph = std::get<PolPhaseElement>(el);
    LocalUnitary lu{{{ph.mode, ph.pol}}, Eigen::MatrixXcd(1, 1)};
    lu.u(0, 0) = std::polar(1.0, ph.phase);
    return lu;
}

Eigen::MatrixXcd element_matrix(const LocalUnitary &local, const DenseBasis &basis) {
    std::vector<std::size_t> where;
    for (const auto &s : local.slots) {
        where.push_back(basis.slot_index(s));
    }
    std::vector<bool> is_local(basis.slots().size(), false);
    for (auto w : where) {
        is_local[w] = true;
    }
    auto dim = static_cast<Eigen::Index>(basis.dim());
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
    for (Eigen::Index j = 0; j < dim; j++) {
        const auto &in = basis.occupation(static_cast<std::size_t>(j));
        for (Eigen::Index i = 0; i < dim; i++) {
            const auto &out = basis.occupation(static_cast<std::size_t>(i));
            bool same_rest = true;
            for (std::size_t s = 0; s < in.size() && same_rest; s++) {
                same_rest = is_local[s] || in[s] == out[s];
            }
            if (!same_rest) {
                continue;
            }
            std::vector<unsigned> lin, lout;
            for (auto w : where) {
                lin.push_back(in[w]);
                lout.push_back(out[w]);
            }
            m(i, j) = transition(local.u, lout, lin);
        }
    }
    return m;
}

Eigen::MatrixXcd element_matrix(const OpticalElement &el, const DenseBasis &basis) {
    return element_matrix(single_particle(el), basis);
}

Eigen::VectorXcd apply(const LocalUnitary &local, const DenseBasis &basis, const Eigen::VectorXcd &psi) {
    std::vector<std::size_t> where;
    for (const auto &s : local.slots) {
        where.push_back(basis.slot_index(s));
    }
    unsigned local_max = 0;
    for (Eigen::Index i = 0; i < psi.size(); i++) {
        if (psi[i] != Complex{0}) {
            unsigned n = 0;
            for (auto w : where) {
                n += basis.occupation(static_cast<std::size_t>(i))[w];
            }
            local_max = std::max(local_max, n);
        }
    }
    DenseBasis local_basis(local.slots, local_max);
    Eigen::MatrixXcd m = element_matrix(local, local_basis);

    Eigen::VectorXcd out = Eigen::VectorXcd::Zero(psi.size());
    for (Eigen::Index i = 0; i < psi.size(); i++) {
        if (psi[i] == Complex{0}) {
            continue;
        }
        std::vector<unsigned> occ = basis.occupation(static_cast<std::size_t>(i));
        std::vector<unsigned> lin;
        for (auto w : where) {
            lin.push_back(occ[w]);
        }
        auto col = static_cast<Eigen::Index>(local_basis.index_of(lin));
        for (Eigen::Index r = 0; r < m.rows(); r++) {
            if (m(r, col) == Complex{0}) {
                continue;
            }
            const auto &lout = local_basis.occupation(static_cast<std::size_t>(r));
            for (std::size_t k = 0; k < where.size(); k++) {
                occ[where[k]] = lout[k];
            }
            out[static_cast<Eigen::Index>(basis.index_of(occ))] += m(r, col) * psi[i];
        }
    }
    return out;
}

Eigen::VectorXcd to_dense(const PhotonState &state, const DenseBasis &basis) {
    Eigen::VectorXcd psi = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(basis.dim()));
    for (const auto &[b, amp] : state.terms()) {
        psi[static_cast<Eigen::Index>(basis.index_of(b))] += amp;
    }
    return psi;
}

PhotonState from_dense(const Eigen::VectorXcd &psi, const DenseBasis &basis, double tolerance) {
    PhotonState::Terms terms;
    for (Eigen::Index i = 0; i < psi.size(); i++) {
        if (std::abs(psi[i]) >= tolerance) {
            terms[basis.to_fock(static_cast<std::size_t>(i))] += psi[i];
        }
    }
    return PhotonState(std::move(terms), tolerance);
}

Eigen::VectorXd outcome_mask(const OutcomePattern &pattern, const std::vector<DetectorSpec> &detectors,
                             const DenseBasis &basis) {
    if (pattern.counts.size() != detectors.size()) {
        throw std::invalid_argument("pattern and detector list differ in length");
    }
    auto slots = detector_slots(detectors, basis);
    Eigen::VectorXd mask = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(basis.dim()));
    for (std::size_t i = 0; i < basis.dim(); i++) {
        mask[static_cast<Eigen::Index>(i)] = matches(basis.occupation(i), pattern, slots) ? 1.0 : 0.0;
    }
    return mask;
}

Eigen::MatrixXd outcome_projector(const OutcomePattern &pattern, const std::vector<DetectorSpec> &detectors,
                                  const DenseBasis &basis) {
    return outcome_mask(pattern, detectors, basis).asDiagonal();
}

std::vector<OutcomePattern> all_patterns(const std::vector<DetectorSpec> &detectors, unsigned max_photons) {
    std::vector<OutcomePattern> out;
    OutcomePattern cur;
    cur.counts.resize(detectors.size());
    auto rec = [&](auto &self, std::size_t k, unsigned left) -> void {
        if (k == detectors.size()) {
            out.push_back(cur);
            return;
        }
        for (unsigned t = 0; t <= left; t++) {
            for (unsigned r = 0; t + r <= left; r++) {
                cur.counts[k] = {t, r};
                self(self, k + 1, left - t - r);
            }
        }
    };
    rec(rec, 0, max_photons);
    return out;
}

OracleResult run_circuit(const CircuitSpec &spec, bool passive) {
    // Product of the preparations as an explicit term list.
    std::vector<std::pair<Occ, Complex>> product{{Occ{}, 1.0}};
    for (const auto &prep : spec.inputs) {
        std::vector<std::pair<Occ, Complex>> next;
        for (const auto &[occ_a, amp_a] : product) {
            for (const auto &[occ_b, amp_b] : prep_terms(prep)) {
                Occ merged = occ_a;
                for (const auto &[slot, n] : occ_b) {
                    merged[slot] += n;
                }
                next.emplace_back(std::move(merged), amp_a * amp_b);
            }
        }
        product = std::move(next);
    }
    unsigned photons = 0;
    for (const auto &[occ, amp] : product) {
        unsigned n = 0;
        for (const auto &[slot, c] : occ) {
            n += c;
        }
        photons = std::max(photons, n);
    }

    const DenseBasis &basis = *shared_basis(mode_slots(spec.modes), photons);
    Eigen::VectorXcd psi = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(basis.dim()));
    for (const auto &[occ, amp] : product) {
        psi[static_cast<Eigen::Index>(basis.index_of(FockBasisState(occ)))] += amp;
    }

    for (const auto &el : spec.elements) {
        psi = apply(single_particle(to_optical(el)), basis, psi);
    }
    for (const auto &d : spec.detectors) {
        if (d.basis == PolBasis::FS) {
            psi = apply(fs_rebase(d.mode), basis, psi);
        }
    }

    // Projectors are diagonal, so only the support of psi matters.
    const auto slots = detector_slots(spec.detectors, basis);
    std::vector<std::size_t> support;
    std::set<OutcomePattern> present;
    for (std::size_t i = 0; i < basis.dim(); i++) {
        if (psi[static_cast<Eigen::Index>(i)] == Complex{0}) {
            continue;
        }
        support.push_back(i);
        OutcomePattern p;
        for (const auto &[h, v] : slots) {
            p.counts.push_back({basis.occupation(i)[h], basis.occupation(i)[v]});
        }
        present.insert(p);
    }

    auto detector_of = [&](const std::string &label) {
        for (std::size_t k = 0; k < spec.detectors.size(); k++) {
            if (spec.detectors[k].label == label) {
                return k;
            }
        }
        throw std::invalid_argument("unknown detector " + label);
    };
    auto fires = [](const DetectorCounts &c, Port port) {
        return port == Port::Transmitted ? (c.transmitted == 1 && c.reflected == 0)
                                         : (c.transmitted == 0 && c.reflected == 1);
    };

    OracleResult result;
    result.dimension = basis.dim();
    for (const auto &pattern : present) {
        // P psi, kept as (index, amplitude) pairs.
        std::vector<std::pair<std::size_t, Complex>> branch;
        double prob = 0;
        for (auto i : support) {
            if (matches(basis.occupation(i), pattern, slots)) {
                branch.emplace_back(i, psi[static_cast<Eigen::Index>(i)]);
                prob += std::norm(branch.back().second);
            }
        }
        if (prob < 1e-24) {
            continue;
        }

        bool accepted = true;
        for (const auto &c : pattern.counts) {
            accepted = accepted && (c.transmitted + c.reflected == 1);
        }
        for (std::size_t k = 0; k < spec.detectors.size() && accepted; k++) {
            bool restricted = false, ok = false;
            for (const auto &a : spec.accepts) {
                if (a.detector == spec.detectors[k].label) {
                    restricted = true;
                    ok = ok || fires(pattern.counts[k], a.port);
                }
            }
            accepted = !restricted || ok;
        }
        std::vector<const FeedForwardRule *> triggered;
        for (const auto &rule : spec.rules) {
            if (accepted && fires(pattern.counts[detector_of(rule.detector)], rule.port)) {
                triggered.push_back(&rule);
            }
        }
        if (passive && !triggered.empty()) {
            accepted = false;
            triggered.clear();
        }
        if (!triggered.empty()) {
            Eigen::VectorXcd full = Eigen::VectorXcd::Zero(psi.size());
            for (const auto &[i, x] : branch) {
                full[static_cast<Eigen::Index>(i)] = x;
            }
            for (const auto *rule : triggered) {
                for (const auto &corr : rule->corrections) {
                    full = apply(single_particle(to_optical(corr)), basis, full);
                }
            }
            branch.clear();
            for (Eigen::Index i = 0; i < full.size(); i++) {
                if (full[i] != Complex{0}) {
                    branch.emplace_back(static_cast<std::size_t>(i), full[i]);
                }
            }
        }

        // Drop the detected modes.
        PhotonState::Terms reduced;
        for (const auto &[i, x] : branch) {
            if (std::abs(x) < 1e-15) {
                continue;
            }
            FockBasisState b = basis.to_fock(i);
            for (const auto &d : spec.detectors) {
                b = b.without_mode(d.mode);
            }
            reduced[b] += x;
        }
        PhotonState state(std::move(reduced), 1e-14);
        state = state.scaled(1 / std::sqrt(state.norm2()));

        result.outcomes[pattern] = {prob, accepted, state};
        (accepted ? result.success_probability : result.failure_probability) += prob;
    }
    return result;
}

}  // namespace pbsgate::oracle
