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

#ifndef PBSGATE_ORACLE_H
#define PBSGATE_ORACLE_H

// Brute-force dense reference simulator.
//
// Multi-photon matrix elements come from permanents of single-particle
// unitaries, ⟨m|U|n⟩ = Per(u[m, n]) / √(Π m! Π n!), over an explicitly
// enumerated truncated Fock basis. Nothing here calls into the sparse engine;
// only the plain data types (PolSlot, FockBasisState, CircuitSpec) are shared.

#include <Eigen/Dense>
#include <map>
#include <string>
#include <unordered_map>
#include <vector>

#include "pbsgate/circuit.h"
#include "pbsgate/fock.h"
#include "pbsgate/optics.h"

namespace pbsgate::oracle {

inline constexpr unsigned kDefaultTruncation = 4;

/// All occupation vectors over `slots` with at most `max_photons` photons,
/// in lexicographic order of the occupation vector.
class DenseBasis {
   public:
    explicit DenseBasis(std::vector<PolSlot> slots, unsigned max_photons = kDefaultTruncation);

    std::size_t dim() const { return states_.size(); }
    unsigned max_photons() const { return max_photons_; }
    const std::vector<PolSlot> &slots() const { return slots_; }
    const std::vector<unsigned> &occupation(std::size_t index) const { return states_[index]; }

    /// Throws TruncationTooSmall if the slot is not part of the basis.
    std::size_t slot_index(const PolSlot &slot) const;
    bool has_slot(const PolSlot &slot) const;

    /// Throws TruncationTooSmall for too many photons.
    std::size_t index_of(const std::vector<unsigned> &occupation) const;
    std::size_t index_of(const FockBasisState &b) const;
    FockBasisState to_fock(std::size_t index) const;

   private:
    std::vector<PolSlot> slots_;
    unsigned max_photons_;
    std::vector<std::vector<unsigned>> states_;
    std::unordered_map<std::string, std::size_t> index_;
};

/// Dimension of DenseBasis(slots, n): the number of multisets of size ≤ n.
std::size_t expected_dimension(std::size_t slots, unsigned n);

/// Single-particle action on a list of slots: a†(slots[j]) → Σ_i u(i, j) a†(slots[i]).
struct LocalUnitary {
    std::vector<PolSlot> slots;
    Eigen::MatrixXcd u;
};

LocalUnitary single_particle(const OpticalElement &el);

/// Single-particle map taking a mode's HV amplitudes into the FS basis.
LocalUnitary fs_rebase(const ModeLabel &mode);

/// Dense matrix of a local unitary over the full basis. Throws
/// TruncationTooSmall if the basis lacks one of its slots.
Eigen::MatrixXcd element_matrix(const LocalUnitary &local, const DenseBasis &basis);
Eigen::MatrixXcd element_matrix(const OpticalElement &el, const DenseBasis &basis);

/// I ⊗ U applied to a state vector, with U built densely on the local slots.
Eigen::VectorXcd apply(const LocalUnitary &local, const DenseBasis &basis, const Eigen::VectorXcd &psi);

Eigen::VectorXcd to_dense(const PhotonState &state, const DenseBasis &basis);
PhotonState from_dense(const Eigen::VectorXcd &psi, const DenseBasis &basis, double tolerance = 1e-14);

/// Diagonal of the projector onto `pattern`, assuming each detector mode has
/// already been rotated into its measurement basis.
Eigen::VectorXd outcome_mask(const OutcomePattern &pattern, const std::vector<DetectorSpec> &detectors,
                             const DenseBasis &basis);
Eigen::MatrixXd outcome_projector(const OutcomePattern &pattern, const std::vector<DetectorSpec> &detectors,
                                  const DenseBasis &basis);

/// Every joint count pattern the basis can express for these detectors.
std::vector<OutcomePattern> all_patterns(const std::vector<DetectorSpec> &detectors, unsigned max_photons);

struct OracleOutcome {
    double probability = 0;
    bool accepted = false;
    PhotonState state;  // undetected modes, normalized, corrected if accepted
};

struct OracleResult {
    std::map<OutcomePattern, OracleOutcome> outcomes;
    double success_probability = 0;
    double failure_probability = 0;
    std::size_t dimension = 0;
};

/// Dense run of a circuit; the truncation is sized from the prepared inputs.
OracleResult run_circuit(const CircuitSpec &spec, bool passive = false);

}  // namespace pbsgate::oracle

#endif
