#pragma once

#include <optional>
#include <vector>

namespace jchring {

/// Couplings and detunings of the resonator ring, all in units of g
/// (g == 1 by convention; times are in units of 1/g).
///
/// delta   = site-qubit transition frequency minus resonator frequency.
/// delta_c = the same detuning for the junction couplers that mediate the
///           photon hopping.
///
/// The optional per-element lists model static fabrication spreads. They hold
/// absolute values (not offsets) and must match n_sites in length.
struct ModelParams {
  int n_sites = 1;
  double g = 1.0;
  double g_c = 1.0;
  double delta = 0.0;
  double delta_c = 10.0;

  std::optional<std::vector<double>> per_site_delta;
  std::optional<std::vector<double>> per_site_g;
  std::optional<std::vector<double>> per_junction_g_c;
  std::optional<std::vector<double>> per_junction_delta_c;

  /// A ring of n >= 2 resonators has one coupler per junction, with junction
  /// j sitting between sites j and j+1 (mod n). A single resonator has none.
  int junction_count() const noexcept { return n_sites >= 2 ? n_sites : 0; }

  double site_delta(int i) const;
  double site_g(int i) const;
  double junction_g_c(int j) const;
  double junction_delta_c(int j) const;

  /// Coupler-mediated hopping rate g_c^2 / delta_c at junction j.
  double junction_kappa(int j) const;

  /// Average hopping rate over the ring (0 when there are no junctions).
  double mean_kappa() const;

  /// delta' = delta + kappa_{i-1} + kappa_i: the detuning between the site
  /// qubit and its Stark-shifted resonator mode. Uniform rings give the
  /// familiar delta + 2 g_c^2/delta_c.
  double site_delta_prime(int i) const;

  bool has_overrides() const noexcept;

  /// Well-formedness: counts, positivity of g and delta_c. Throws
  /// std::invalid_argument with the offending field named.
  void validate() const;

  /// validate() plus the dispersive bound delta_c >= 10 g_c on every
  /// junction, the regime in which the effective model holds.
  void validate_for_effective() const;
};

}  // namespace jchring
