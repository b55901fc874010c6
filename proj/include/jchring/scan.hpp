#pragma once

#include <vector>

#include "jchring/model.hpp"

namespace jchring {

enum class ModelKind { effective, full };

/// Rectangular (delta, delta_c) grid. Both axes must be strictly increasing;
/// effective-model grids must respect the dispersive bound on every delta_c.
struct ScanGrid {
  std::vector<double> delta_values;
  std::vector<double> delta_c_values;
  int n_sites = 3;
  ModelKind model = ModelKind::effective;
};

struct ScanRecord {
  double delta = 0.0;
  double delta_c = 0.0;
  double var = 0.0;           // ground-state var(N_0)
  double ratio = 0.0;         // kappa / U_eff(1)
  double ground_energy = 0.0;
  bool degenerate = false;
};

/// Records are stored delta_c-major: one row per delta_c, delta ascending
/// within a row.
struct PhaseDiagram {
  ScanGrid grid;
  std::vector<ScanRecord> records;

  const ScanRecord& at(int i_delta_c, int i_delta) const;
};

/// Dense-solver ceiling: a single diagonalization above this dimension is
/// refused up front.
inline constexpr long long kDimensionGuard = 4000;

/// Ground-state diagonalization on every grid point. Points are independent
/// jobs; n_threads > 1 runs them concurrently with results gathered by grid
/// index, so output is identical to the serial run.
PhaseDiagram scan_grid(const ScanGrid& grid, const ModelParams& params, int n_threads = 1);

/// Analytic kappa / U_eff(1) on every grid point; no diagonalization runs,
/// so var and ground_energy are NaN in the records.
PhaseDiagram ratio_map(const ScanGrid& grid, const ModelParams& params);

/// Where a delta-slice's var crosses the threshold. mid_range puts the
/// threshold halfway between the slice's min and max var; absolute uses the
/// given value directly.
struct BoundaryCriterion {
  enum class Kind { mid_range, absolute };
  Kind kind = Kind::mid_range;
  double value = 0.0;
};

struct BoundaryPoint {
  double delta_c = 0.0;
  double delta_star = 0.0;  // linear interpolation between adjacent grid points
  double ratio = 0.0;       // kappa / U_eff(1) evaluated at (delta_star, delta_c)
};

struct BoundaryResult {
  std::vector<BoundaryPoint> points;
  std::vector<double> slices_without_crossing;  // delta_c of omitted slices
};

BoundaryResult find_boundary(const PhaseDiagram& diagram, BoundaryCriterion criterion = {});

struct ComparisonRow {
  double delta = 0.0;
  double var_effective = 0.0;
  double var_full = 0.0;
};

struct ComparisonTable {
  std::vector<ComparisonRow> rows;
  double max_abs_difference = 0.0;
};

/// Ground-state var(N_0) from the effective and the full Hamiltonian at each
/// delta, everything else taken from params.
ComparisonTable compare_eff_full(const std::vector<double>& delta_values,
                                 const ModelParams& params);

struct SizeCurve {
  int n_sites = 0;
  std::vector<double> var;    // aligned with delta_values
  double max_abs_slope = 0.0; // max finite-difference |d var / d delta|
  double delta_star = 0.0;    // mid-range crossing; NaN when the curve has none
};

struct SizeComparison {
  std::vector<double> delta_values;
  std::vector<SizeCurve> curves;
};

/// Effective-model var curves at unit filling for several ring sizes.
SizeComparison size_comparison(const std::vector<double>& delta_values,
                               const ModelParams& params,
                               const std::vector<int>& sizes = {2, 3, 4});

/// count uniformly spaced values over [lo, hi], endpoints included.
std::vector<double> linspace(double lo, double hi, int count);

}  // namespace jchring
