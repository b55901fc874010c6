#pragma once

#include "jchring/basis.hpp"
#include "jchring/operators.hpp"
#include "jchring/params.hpp"

namespace jchring {

/// Effective ring Hamiltonian after the dispersive elimination of the
/// junction couplers:
///
///   H = sum_j -kappa_j (a^+_{j+1} a_j + h.c.)
///     + sum_i [ delta'_i |e><e|_i + g_i (sigma^+_i a_i + h.c.) ]
///
/// with periodic wrap a_{n+1} = a_1. On a uniform ring the coupler Stark
/// shift of the photons folds into delta' = delta + 2 g_c^2/delta_c exactly;
/// with per-junction spreads the non-uniform residual photon shift is kept
/// explicitly so the operator stays exact in the chosen frame.
///
/// Requires a coupler-free basis and dispersive-regime parameters.
SymmetricOperator build_effective_hamiltonian(const ModelParams& params, const BasisPtr& basis);

/// Rotating-frame Hamiltonian with the junction couplers kept dynamical:
///
///   H = sum_i [ delta |e><e|_i + g (sigma^+_i a_i + h.c.) ]
///     + sum_j [ delta_c |e^c><e^c|_j + g_c (sigma^+_{cj} (a_j + a_{j+1}) + h.c.) ]
///
/// Requires a basis that includes coupler qubits.
SymmetricOperator build_full_hamiltonian(const ModelParams& params, const BasisPtr& basis);

/// Polariton number N_i = a^+_i a_i + |e><e|_i, diagonal in this basis.
/// Coupler excitations do not count.
SymmetricOperator build_number_operator(int site, const BasisPtr& basis);

}  // namespace jchring
