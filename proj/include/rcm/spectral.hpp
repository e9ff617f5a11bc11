#pragma once

#include <complex>
#include <cstdint>
#include <utility>
#include <vector>

#include <Eigen/Core>

#include "rcm/ensemble.hpp"

namespace rcm {

// Spectrum of a circulant matrix. Eigenvalue l is the DFT of the first row
// at frequency l; classification is structural, never by thresholding an
// imaginary part: l = 0 is real, l = n/2 is real for even n, and every other
// l pairs with n - l as an exact complex conjugate.
class Spectrum {
 public:
  Spectrum(std::vector<std::complex<double>> eigenvalues, std::int64_t realization_index);

  int dimension() const { return static_cast<int>(values_.size()); }
  const std::vector<std::complex<double>>& eigenvalues() const { return values_; }
  std::complex<double> eigenvalue(int l) const;
  std::int64_t realization_index() const { return realization_index_; }

  bool is_real_class(int l) const;
  int partner(int l) const;  // n - l mod n; real-class indices are their own partner

  std::vector<int> real_indices() const;
  std::vector<int> complex_indices() const;
  std::vector<std::pair<int, int>> conjugate_pairs() const;  // (l, partner) with l < partner

 private:
  std::vector<std::complex<double>> values_;
  std::int64_t realization_index_;
};

// exp(2 pi i m / n) for m = 0..n-1. The table is built with bit-exact
// conjugate symmetry (roots[n - m] == conj(roots[m])) and exact values at the
// half and quarter points, which makes the pairing identities of the spectrum
// exact rather than merely close.
std::vector<std::complex<double>> unit_roots(int n);

// Direct O(n^2) DFT of the first row; E_0 is the coefficient sum evaluated in
// the same floating-point order as a plain left-to-right accumulation.
Spectrum compute_spectrum(const FirstRow& row);

// Unit-norm Fourier eigenvector u_j = exp(2 pi i j l / n) / sqrt(n).
std::vector<std::complex<double>> fourier_eigenvector(int n, int l);

// Inverse of the spectral map: a_i = (1/n) sum_l w^{i (n - l)} E_l. The
// printed inversion omits the 1/n; round-trip consistency with
// compute_spectrum fixes it on this side. Imaginary residues are checked
// against 1e-10 * max(1, max |E_l|) and then discarded; a violation means the
// spectrum does not have the conjugate-pairing structure.
FirstRow inverse_coefficients(const Spectrum& spectrum);

// Symmetric inversion matrix S(i, l) = w^{i (n - l)}; satisfies S^2 = n * P
// with P the generalized parity. Dense, for oracles and inspection.
Eigen::MatrixXcd inversion_matrix(int n);

}  // namespace rcm
