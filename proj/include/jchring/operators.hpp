#pragma once

#include <Eigen/Dense>

#include "jchring/basis.hpp"

namespace jchring {

/// Dense real symmetric matrix over a basis. Symmetry must hold bit-exactly;
/// the constructor rejects anything else rather than symmetrizing.
///
/// The basis pointer may be null for detached matrices (e.g. hand-built test
/// blocks); operations that need occupation numbers require it.
class SymmetricOperator {
 public:
  explicit SymmetricOperator(Eigen::MatrixXd matrix, BasisPtr basis = nullptr);

  int dim() const noexcept { return static_cast<int>(matrix_.rows()); }
  const Eigen::MatrixXd& matrix() const noexcept { return matrix_; }
  const BasisPtr& basis() const noexcept { return basis_; }

 private:
  Eigen::MatrixXd matrix_;
  BasisPtr basis_;
};

/// Amplitude vector over a basis, unit norm. Static states are real (zero
/// imaginary part); time evolution fills both parts.
struct StateVector {
  Eigen::VectorXcd amplitudes;
  BasisPtr basis;

  StateVector() = default;
  StateVector(Eigen::VectorXcd amps, BasisPtr b);
  StateVector(const Eigen::VectorXd& real_amps, BasisPtr b);

  int dim() const noexcept { return static_cast<int>(amplitudes.size()); }
  double norm() const { return amplitudes.norm(); }
};

namespace detail {
/// Shared precondition helpers.
void require_unit_norm(const StateVector& s, const char* where);
void require_same_basis(const StateVector& a, const StateVector& b, const char* where);
void require_basis(const StateVector& s, const char* where);
}  // namespace detail

}  // namespace jchring
