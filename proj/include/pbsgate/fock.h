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

#ifndef PBSGATE_FOCK_H
#define PBSGATE_FOCK_H

#include <complex>
#include <compare>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace pbsgate {

using Amplitude = std::complex<double>;
using ModeLabel = std::string;

inline constexpr double kDefaultPruneTolerance = 1e-12;

/// Polarization of a creation operator. The canonical basis is always HV.
///
/// While a mode is rebased into the FS basis (inside a beam splitter or a
/// detector), the H slot carries F and the V slot carries S; callers never
/// observe that representation outside of those routines.
enum class Pol : std::uint8_t { H = 0, V = 1 };

char pol_char(Pol p);

struct PolSlot {
    ModeLabel mode;
    Pol pol = Pol::H;

    auto operator<=>(const PolSlot &) const = default;
    bool operator==(const PolSlot &) const = default;
};

/// One classical photon configuration: a canonical sparse occupation map.
class FockBasisState {
   public:
    using Occupations = std::map<PolSlot, unsigned>;

    FockBasisState() = default;
    /// Zero counts are dropped.
    explicit FockBasisState(const Occupations &occupations);

    const Occupations &occupations() const { return occupations_; }
    unsigned count(const PolSlot &slot) const;
    unsigned total() const;
    bool is_vacuum() const { return occupations_.empty(); }
    bool touches_mode(const ModeLabel &mode) const;
    std::set<ModeLabel> modes() const;

    FockBasisState with_added(const PolSlot &slot, unsigned n = 1) const;
    FockBasisState without_mode(const ModeLabel &mode) const;

    /// "mode:pol:count" entries, sorted by slot.
    std::vector<std::string> describe() const;
    std::string str() const;

    auto operator<=>(const FockBasisState &) const = default;
    bool operator==(const FockBasisState &) const = default;

   private:
    Occupations occupations_;
};

/// Sparse superposition of Fock basis states.
///
/// Values are immutable once built; every operation returns a new state.
/// Amplitudes smaller in magnitude than the tolerance are never stored.
class PhotonState {
   public:
    using Terms = std::map<FockBasisState, Amplitude>;

    /// The zero vector.
    explicit PhotonState(double tolerance = kDefaultPruneTolerance);
    PhotonState(Terms terms, double tolerance);

    static PhotonState basis(const FockBasisState &b, Amplitude amp = 1.0, double tolerance = kDefaultPruneTolerance);

    const Terms &terms() const { return terms_; }
    double tolerance() const { return tolerance_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }

    Amplitude amplitude(const FockBasisState &b) const;
    double norm2() const;
    std::set<ModeLabel> modes() const;
    bool touches_mode(const ModeLabel &mode) const;
    unsigned max_photons() const;

    PhotonState scaled(Amplitude factor) const;
    /// Throws NonNormalized on the zero vector.
    PhotonState normalized() const;
    PhotonState with_tolerance(double tolerance) const;

    /// Exact equality of stored terms.
    bool operator==(const PhotonState &other) const { return terms_ == other.terms_; }

   private:
    Terms terms_;
    double tolerance_;
};

PhotonState vacuum(double tolerance = kDefaultPruneTolerance);

/// Applies a†(slot) with the bosonic √(n+1) factor.
PhotonState create(const PhotonState &state, const PolSlot &slot);

PhotonState superpose(const PhotonState &a, Amplitude ca, const PhotonState &b, Amplitude cb);

/// Throws OverlappingModes when a spatial mode occurs in both factors.
PhotonState tensor(const PhotonState &a, const PhotonState &b);

/// ⟨a|b⟩, conjugate-linear in a.
Amplitude inner_product(const PhotonState &a, const PhotonState &b);

/// Largest per-amplitude deviation over the union of supports.
double max_amplitude_difference(const PhotonState &a, const PhotonState &b);

enum class BasisChange { HVtoFS, FStoHV };

/// Re-expresses one mode's polarization amplitudes between the HV and FS
/// bases, with F = (H+V)/√2 and S = (V−H)/√2. After HVtoFS the H/V slots of
/// `mode` hold F/S amplitudes. An absent mode is a no-op.
PhotonState rebase_polarization(const PhotonState &state, const ModeLabel &mode, BasisChange direction);

/// Linear substitution of creation operators: each a†(key) is replaced by
/// Σ c·a†(target). Slots without an entry are left untouched.
using CreationMap = std::map<PolSlot, std::vector<std::pair<PolSlot, Amplitude>>>;

PhotonState transform_creation_operators(const PhotonState &state, const CreationMap &map);

}  // namespace pbsgate

#endif
