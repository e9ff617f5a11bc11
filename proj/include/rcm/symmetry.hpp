#pragma once

#include <complex>
#include <vector>

#include "rcm/ensemble.hpp"

namespace rcm {

using ComplexVector = std::vector<std::complex<double>>;

// Permute v by the parity index map; a pure rearrangement, no arithmetic.
ComplexVector apply_parity(const ComplexVector& v, const Parity& parity);

// min over lambda in {+1, -1} of |P v - lambda v|_inf / |v|_inf.
// Zero means v is a parity eigenvector.
double parity_eigen_residual(const ComplexVector& v, const Parity& parity);

// Sesquilinear parity inner product <v, P v>, conjugate-linear in the first
// slot. Vanishes for the complex-class Fourier vectors ("zero PT-norm").
std::complex<double> pt_norm(const ComplexVector& v, const Parity& parity);

// Both readings of parity orthogonality for a pair of vectors; the report
// records which one vanishes instead of guessing a convention.
struct PairProducts {
  std::complex<double> sesquilinear;  // <v1, P v2>
  std::complex<double> bilinear;      // v1^T P v2
};

PairProducts pair_products(const ComplexVector& v1, const ComplexVector& v2,
                           const Parity& parity);

struct VectorSymmetryRecord {
  int index = 0;
  bool real_class = false;
  double parity_eigen_residual = 0.0;
  std::complex<double> pt_norm;
  // Products with the conjugate-partner vector (the vector itself for the
  // real classes).
  std::complex<double> pair_sesquilinear;
  std::complex<double> pair_bilinear;
};

// Symmetry diagnostics for the Fourier eigenbasis at dimension n: real-class
// vectors are parity eigenvectors, complex-class vectors have vanishing
// pt-norm and are parity-mapped onto their conjugate partners.
struct SymmetryReport {
  int dimension = 0;
  std::vector<VectorSymmetryRecord> records;
  double max_real_class_residual = 0.0;
  double max_complex_class_pt_norm = 0.0;
  double min_complex_class_residual = 0.0;
};

SymmetryReport fourier_symmetry_report(int n);

}  // namespace rcm
