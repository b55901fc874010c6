#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <vector>

namespace jchring {

/// Fixed total-excitation sector. n_total counts photons plus excited site
/// qubits, plus excited coupler qubits when those are part of the state.
struct SectorSpec {
  int n_total = 0;
  bool include_couplers = false;

  friend bool operator==(const SectorSpec&, const SectorSpec&) = default;
};

/// One occupation-number configuration |n_1..n_k; s_1..s_k (; c_1..c_k)>.
/// coupler_qubits stays empty unless the sector includes couplers.
struct BasisState {
  std::vector<std::uint8_t> photons;
  std::vector<std::uint8_t> site_qubits;
  std::vector<std::uint8_t> coupler_qubits;

  int total_excitation() const noexcept;

  friend auto operator<=>(const BasisState&, const BasisState&) = default;
};

class BasisSet;
using BasisPtr = std::shared_ptr<const BasisSet>;

/// All configurations of one sector, in lexicographic order of the flattened
/// tuple (photons, site_qubits, coupler_qubits), so matrix layouts are
/// reproducible across runs.
class BasisSet {
 public:
  static BasisPtr enumerate(int n_sites, SectorSpec sector);

  int size() const noexcept { return static_cast<int>(states_.size()); }
  int n_sites() const noexcept { return n_sites_; }
  const SectorSpec& sector() const noexcept { return sector_; }
  const BasisState& state(int k) const { return states_[static_cast<std::size_t>(k)]; }
  const std::vector<BasisState>& states() const noexcept { return states_; }

  /// Position of a configuration in the ordering, or -1 if it lies outside
  /// the sector.
  int find(const BasisState& s) const noexcept;

  /// As find(), but a miss means an operator leaked out of the sector and
  /// throws std::logic_error.
  int index_of(const BasisState& s) const;

  /// Two deterministic enumerations with equal inputs are interchangeable.
  bool compatible_with(const BasisSet& other) const noexcept;

 private:
  BasisSet() = default;

  int n_sites_ = 0;
  SectorSpec sector_;
  std::vector<BasisState> states_;
};

/// Free-function spelling of BasisSet::enumerate.
BasisPtr enumerate_basis(int n_sites, SectorSpec sector);

/// Sector dimension from combinatorics, without materializing the states.
long long basis_dimension(int n_sites, SectorSpec sector);

}  // namespace jchring
