#pragma once

#include <vector>

#include "jchring/operators.hpp"

namespace jchring {

/// Probability distribution of the polariton number at one site.
struct NumberDistribution {
  std::vector<double> probs;  // index l = polariton count, l = 0..N_total
  int site = 0;

  double mean() const;
  /// sum l^2 p_l - (sum l p_l)^2
  double variance() const;
};

/// <psi|A|psi>. Real by construction for symmetric A, also with complex
/// amplitudes.
double expectation(const StateVector& state, const SymmetricOperator& op);

/// var(N_i) = <N_i^2> - <N_i>^2. Rounding within -1e-12 is clamped to zero;
/// anything more negative is a defect and throws.
double variance_polariton_number(const StateVector& state, int site);

/// p_l = probability of finding exactly l polaritons at the site.
NumberDistribution marginal_distribution(const StateVector& state, int site);

/// |<a|b>|^2; insensitive to any phase convention.
double fidelity(const StateVector& a, const StateVector& b);

}  // namespace jchring
