#include "rcm/spectral.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace rcm {
namespace {

constexpr double kPi = 3.14159265358979323846;

}  // namespace

Spectrum::Spectrum(std::vector<std::complex<double>> eigenvalues, std::int64_t realization_index)
    : values_(std::move(eigenvalues)), realization_index_(realization_index) {
  if (values_.size() < 2) {
    throw std::invalid_argument("Spectrum: need at least 2 eigenvalues");
  }
}

std::complex<double> Spectrum::eigenvalue(int l) const {
  if (l < 0 || l >= dimension()) {
    throw std::out_of_range("Spectrum: eigenvalue index out of range");
  }
  return values_[l];
}

bool Spectrum::is_real_class(int l) const {
  const int n = dimension();
  if (l < 0 || l >= n) {
    throw std::out_of_range("Spectrum: eigenvalue index out of range");
  }
  return l == 0 || (n % 2 == 0 && l == n / 2);
}

int Spectrum::partner(int l) const {
  const int n = dimension();
  if (l < 0 || l >= n) {
    throw std::out_of_range("Spectrum: eigenvalue index out of range");
  }
  return l == 0 ? 0 : n - l;
}

std::vector<int> Spectrum::real_indices() const {
  std::vector<int> out{0};
  if (dimension() % 2 == 0) {
    out.push_back(dimension() / 2);
  }
  return out;
}

std::vector<int> Spectrum::complex_indices() const {
  std::vector<int> out;
  for (int l = 1; l < dimension(); ++l) {
    if (!is_real_class(l)) {
      out.push_back(l);
    }
  }
  return out;
}

std::vector<std::pair<int, int>> Spectrum::conjugate_pairs() const {
  std::vector<std::pair<int, int>> out;
  for (int l = 1; l < dimension(); ++l) {
    if (!is_real_class(l) && l < partner(l)) {
      out.emplace_back(l, partner(l));
    }
  }
  return out;
}

std::vector<std::complex<double>> unit_roots(int n) {
  if (n < 1) {
    throw std::domain_error("unit_roots: n must be >= 1");
  }
  std::vector<std::complex<double>> roots(n);
  roots[0] = {1.0, 0.0};
  if (n % 2 == 0) {
    roots[n / 2] = {-1.0, 0.0};
  }
  for (int m = 1; m <= (n - 1) / 2; ++m) {
    const double angle = 2.0 * kPi * m / n;
    roots[m] = {std::cos(angle), std::sin(angle)};
    roots[n - m] = std::conj(roots[m]);
  }
  if (n % 4 == 0) {
    roots[n / 4] = {0.0, 1.0};
    roots[3 * n / 4] = {0.0, -1.0};
  }
  return roots;
}

Spectrum compute_spectrum(const FirstRow& row) {
  const int n = row.dimension();
  if (n < 2) {
    throw std::invalid_argument("compute_spectrum: first row must have length >= 2");
  }
  const auto roots = unit_roots(n);
  std::vector<std::complex<double>> values(n);
  // Frequencies l and n - l are term-by-term conjugate sums of the same real
  // data, so the upper half is assigned as the exact conjugate of the lower.
  for (int l = 0; l <= n / 2; ++l) {
    std::complex<double> sum{0.0, 0.0};
    for (int p = 0; p < n; ++p) {
      sum += row.coefficients[p] * roots[static_cast<std::size_t>(p) * l % n];
    }
    values[l] = sum;
    if (l != 0 && l != n - l) {
      values[n - l] = std::conj(sum);
    }
  }
  return Spectrum(std::move(values), row.realization_index);
}

std::vector<std::complex<double>> fourier_eigenvector(int n, int l) {
  if (n < 2) {
    throw std::domain_error("fourier_eigenvector: n must be >= 2");
  }
  if (l < 0 || l >= n) {
    throw std::out_of_range("fourier_eigenvector: index " + std::to_string(l) +
                            " outside [0, " + std::to_string(n) + ")");
  }
  const auto roots = unit_roots(n);
  const double scale = 1.0 / std::sqrt(static_cast<double>(n));
  std::vector<std::complex<double>> u(n);
  for (int j = 0; j < n; ++j) {
    u[j] = scale * roots[static_cast<std::size_t>(j) * l % n];
  }
  return u;
}

FirstRow inverse_coefficients(const Spectrum& spectrum) {
  const int n = spectrum.dimension();
  const auto roots = unit_roots(n);
  const auto& values = spectrum.eigenvalues();

  double max_abs = 0.0;
  for (const auto& value : values) {
    max_abs = std::max(max_abs, std::abs(value));
  }
  const double imag_tol = 1e-10 * std::max(1.0, max_abs);

  FirstRow row;
  row.realization_index = spectrum.realization_index();
  row.coefficients.resize(n);
  for (int i = 0; i < n; ++i) {
    std::complex<double> sum{0.0, 0.0};
    for (int l = 0; l < n; ++l) {
      sum += roots[static_cast<std::size_t>(i) * (n - l) % n] * values[l];
    }
    sum /= static_cast<double>(n);
    if (std::abs(sum.imag()) > imag_tol) {
      throw std::domain_error(
          "inverse_coefficients: imaginary residue " + std::to_string(sum.imag()) +
          " at coefficient " + std::to_string(i) +
          "; spectrum violates the conjugate-pairing structure");
    }
    row.coefficients[i] = sum.real();
  }
  return row;
}

Eigen::MatrixXcd inversion_matrix(int n) {
  if (n < 2) {
    throw std::domain_error("inversion_matrix: n must be >= 2");
  }
  const auto roots = unit_roots(n);
  Eigen::MatrixXcd s(n, n);
  for (int i = 0; i < n; ++i) {
    for (int l = 0; l < n; ++l) {
      // Exponent reduced mod n before the table lookup, so the (i, l) and
      // (l, i) entries are the same table element and symmetry is exact.
      s(i, l) = roots[static_cast<std::size_t>(i) * (n - l) % n];
    }
  }
  return s;
}

}  // namespace rcm
