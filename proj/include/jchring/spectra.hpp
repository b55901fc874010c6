#pragma once

#include <vector>

#include "jchring/model.hpp"

namespace jchring {

struct EigenDecomposition {
  Eigen::VectorXd values;   // ascending
  Eigen::MatrixXd vectors;  // orthonormal columns aligned with values
};

/// Full symmetric eigensolve. Values come out ascending; each vector's first
/// resolvable component is made positive so repeated runs are bit-identical.
EigenDecomposition eigendecompose(const SymmetricOperator& op);

struct GroundState {
  double energy = 0.0;
  StateVector state;
  /// Set when the two lowest eigenvalues are within 1e-10 of each other;
  /// the returned vector is then one arbitrary member of the cluster.
  bool degenerate = false;
};

GroundState ground_state(const SymmetricOperator& op);

enum class Branch { lower, upper };

/// Single-site polariton |n, +/-> at qubit-resonator detuning delta'.
struct PolaritonLevel {
  int n = 0;
  Branch branch = Branch::lower;
  double energy = 0.0;
  double mixing_angle = 0.0;  // theta_n; 0 for the n = 0 level
};

/// E_n^sigma = delta'/2 + sigma sqrt((delta'/2)^2 + n g^2) for n >= 1,
/// E_0^- = 0 (and there is no n = 0 upper branch).
PolaritonLevel polariton_level(int n, Branch branch, double delta_prime, double g);

/// Energy cost of injecting a second polariton into a singly occupied
/// resonator: U_eff(1) = E_2^- - 2 E_1^-.
double u_eff(double delta_prime, double g);

/// Coupler-mediated photon hopping rate g_c^2 / delta_c. Requires
/// delta_c > 0 (dispersive side of the coupler resonance).
double kappa(double g_c, double delta_c);

/// Product of lower polaritons, one per site: the zero-variance Mott state.
/// Needs the unit-filling coupler-free sector. Mixing angles follow each
/// site's delta', so per-site spreads are honored.
StateVector analytic_mi_state(const BasisPtr& basis, const ModelParams& params);

/// n photons condensed into the k = 0 ring mode with all qubits idle:
/// (1/sqrt(n!)) ((1/sqrt(n)) sum_i a^+_i)^n |vac>, the superfluid state.
/// Needs the unit-filling coupler-free sector.
StateVector analytic_sf_state(const BasisPtr& basis);

/// Single-photon ring dispersion {-2 kappa cos(2 pi k / n)}, k = 0..n-1.
std::vector<double> hopping_band(int n_sites, double kappa);

}  // namespace jchring
