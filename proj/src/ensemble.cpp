#include "rcm/ensemble.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "rcm/rng.hpp"

namespace rcm {

void EnsembleConfig::validate() const {
  if (dimension < 2) {
    throw std::invalid_argument("EnsembleConfig: dimension must be >= 2, got " +
                                std::to_string(dimension));
  }
  if (!(scale_a > 0.0) || !std::isfinite(scale_a)) {
    throw std::invalid_argument("EnsembleConfig: scale_a must be positive and finite");
  }
  if (realization_count < 1) {
    throw std::invalid_argument("EnsembleConfig: realization_count must be >= 1");
  }
}

double EnsembleConfig::coefficient_sigma() const {
  return 1.0 / std::sqrt(2.0 * dimension * scale_a);
}

Parity::Parity(int n) : n_(n) {
  if (n < 2) {
    throw std::domain_error("Parity: dimension must be >= 2, got " + std::to_string(n));
  }
}

Eigen::MatrixXd Parity::dense() const {
  Eigen::MatrixXd p = Eigen::MatrixXd::Zero(n_, n_);
  for (int j = 0; j < n_; ++j) {
    p(j, map(j)) = 1.0;
  }
  return p;
}

Parity generalized_parity(int n) { return Parity(n); }

FirstRow sample_first_row(const EnsembleConfig& config, std::int64_t k) {
  config.validate();
  if (k < 0 || k >= config.realization_count) {
    throw std::out_of_range("sample_first_row: realization index " + std::to_string(k) +
                            " outside [0, " + std::to_string(config.realization_count) + ")");
  }
  Substream stream(config.master_seed, static_cast<std::uint64_t>(k), kDomainCoefficients);
  const double sigma = config.coefficient_sigma();
  FirstRow row;
  row.realization_index = k;
  row.coefficients.resize(config.dimension);
  for (double& a : row.coefficients) {
    a = sigma * stream.next_gaussian();
  }
  return row;
}

Eigen::MatrixXd materialize_matrix(const FirstRow& row) {
  const int n = row.dimension();
  if (n < 2) {
    throw std::invalid_argument("materialize_matrix: first row must have length >= 2");
  }
  Eigen::MatrixXd m(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      m(i, j) = row.coefficients[(j - i + n) % n];
    }
  }
  return m;
}

double pseudo_symmetry_residual(const Eigen::MatrixXd& m, const Parity& parity) {
  const int n = parity.dimension();
  if (m.rows() != n || m.cols() != n) {
    throw std::invalid_argument("pseudo_symmetry_residual: matrix shape " +
                                std::to_string(m.rows()) + "x" + std::to_string(m.cols()) +
                                " does not match parity dimension " + std::to_string(n));
  }
  double residual = 0.0;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      // (P M P^{-1})(i, j) = m(p(i), p(j)); compare against the transpose.
      residual = std::max(residual, std::abs(m(j, i) - m(parity.map(i), parity.map(j))));
    }
  }
  return residual;
}

}  // namespace rcm
