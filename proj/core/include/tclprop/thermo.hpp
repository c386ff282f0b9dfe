#pragma once

#include <vector>

#include "tclprop/models.hpp"
#include "tclprop/types.hpp"

namespace tclprop {

// Partition functions of the XY chain via the Wick rotation t -> -i beta.
struct PartitionResult {
  double a_beta = 0.0;
  double z_exact = 0.0;
  double z_tcl2 = 0.0;
  double z_dyson2 = 0.0;
  double z_average = 0.0;
};

// Tr exp(-beta H) by eigendecomposition. H must be Hermitian.
double z_exact(const ComplexMatrix& h, double beta);

// Second-order projection approximation Tr exp[P beta^2 H^2 / 2], i.e.
// sum_k exp(beta^2 (H^2)_kk / 2). Valid only for zero-diagonal H; the
// diagonal of H^2 is taken as row-wise squared norms without forming H^2.
double z_tcl2(const ComplexMatrix& h, double beta);

// Traditional second-order approximation Tr(I + beta^2/2 H^2).
double z_dyson2(const ComplexMatrix& h, double beta);

// Literal closed forms for the 10-site chain as functions of A*beta.
double z_closed_form_tcl_n10(double a_beta);
double z_closed_form_dyson_n10(double a_beta);

// All four Z values per grid point; the exact spectrum is diagonalized once
// and reused across the grid.
std::vector<PartitionResult> partition_sweep(const XYChainParams& p,
                                             const std::vector<double>& a_beta_grid);

} // namespace tclprop
