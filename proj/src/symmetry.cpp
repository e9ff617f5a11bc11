#include "rcm/symmetry.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "rcm/spectral.hpp"

namespace rcm {
namespace {

void check_length(const ComplexVector& v, const Parity& parity, const char* where) {
  if (static_cast<int>(v.size()) != parity.dimension()) {
    throw std::invalid_argument(std::string(where) + ": vector length does not match parity dimension");
  }
}

}  // namespace

ComplexVector apply_parity(const ComplexVector& v, const Parity& parity) {
  check_length(v, parity, "apply_parity");
  ComplexVector out(v.size());
  for (int j = 0; j < parity.dimension(); ++j) {
    out[j] = v[parity.map(j)];
  }
  return out;
}

double parity_eigen_residual(const ComplexVector& v, const Parity& parity) {
  check_length(v, parity, "parity_eigen_residual");
  double norm = 0.0;
  for (const auto& x : v) {
    norm = std::max(norm, std::abs(x));
  }
  if (norm == 0.0) {
    throw std::domain_error("parity_eigen_residual: zero vector");
  }
  double plus = 0.0;
  double minus = 0.0;
  for (int j = 0; j < parity.dimension(); ++j) {
    const auto permuted = v[parity.map(j)];
    plus = std::max(plus, std::abs(permuted - v[j]));
    minus = std::max(minus, std::abs(permuted + v[j]));
  }
  return std::min(plus, minus) / norm;
}

std::complex<double> pt_norm(const ComplexVector& v, const Parity& parity) {
  check_length(v, parity, "pt_norm");
  std::complex<double> sum{0.0, 0.0};
  for (int j = 0; j < parity.dimension(); ++j) {
    sum += std::conj(v[j]) * v[parity.map(j)];
  }
  return sum;
}

PairProducts pair_products(const ComplexVector& v1, const ComplexVector& v2,
                           const Parity& parity) {
  check_length(v1, parity, "pair_products");
  check_length(v2, parity, "pair_products");
  PairProducts out;
  for (int j = 0; j < parity.dimension(); ++j) {
    const auto permuted = v2[parity.map(j)];
    out.sesquilinear += std::conj(v1[j]) * permuted;
    out.bilinear += v1[j] * permuted;
  }
  return out;
}

SymmetryReport fourier_symmetry_report(int n) {
  const Parity parity(n);
  SymmetryReport report;
  report.dimension = n;
  report.min_complex_class_residual = std::numeric_limits<double>::infinity();

  std::vector<ComplexVector> basis(n);
  for (int l = 0; l < n; ++l) {
    basis[l] = fourier_eigenvector(n, l);
  }

  bool any_complex = false;
  for (int l = 0; l < n; ++l) {
    const bool real_class = (l == 0) || (n % 2 == 0 && l == n / 2);
    const int partner = l == 0 ? 0 : n - l;

    VectorSymmetryRecord record;
    record.index = l;
    record.real_class = real_class;
    record.parity_eigen_residual = parity_eigen_residual(basis[l], parity);
    record.pt_norm = pt_norm(basis[l], parity);
    const auto products = pair_products(basis[l], basis[partner], parity);
    record.pair_sesquilinear = products.sesquilinear;
    record.pair_bilinear = products.bilinear;
    report.records.push_back(record);

    if (real_class) {
      report.max_real_class_residual =
          std::max(report.max_real_class_residual, record.parity_eigen_residual);
    } else {
      any_complex = true;
      report.max_complex_class_pt_norm =
          std::max(report.max_complex_class_pt_norm, std::abs(record.pt_norm));
      report.min_complex_class_residual =
          std::min(report.min_complex_class_residual, record.parity_eigen_residual);
    }
  }
  if (!any_complex) {
    report.min_complex_class_residual = 0.0;
  }
  return report;
}

}  // namespace rcm
