#pragma once

#include <cstdint>
#include <vector>

#include <Eigen/Core>

namespace rcm {

// Gaussian ensemble of real circulant matrices with weight
// exp(-A tr(M^T M)). Since tr(M^T M) = N sum_i a_i^2 for a circulant built
// from first row a, each coefficient is an independent zero-mean Gaussian
// with variance 1 / (2 N A).
struct EnsembleConfig {
  int dimension = 3;
  double scale_a = 1.0;
  std::int64_t realization_count = 1;
  std::uint64_t master_seed = 1;

  void validate() const;  // throws std::invalid_argument
  double coefficient_sigma() const;
};

// First row of one circulant realization; the matrix is fully determined
// by it, so hot paths never materialize the dense form.
struct FirstRow {
  std::vector<double> coefficients;
  std::int64_t realization_index = 0;

  int dimension() const { return static_cast<int>(coefficients.size()); }
};

// Index-reversal permutation: 0 fixed, j <-> n - j. An exact involution,
// stored as an index map so applying it never touches floating point.
class Parity {
 public:
  explicit Parity(int n);  // throws std::domain_error if n < 2

  int dimension() const { return n_; }
  int map(int j) const { return j == 0 ? 0 : n_ - j; }
  Eigen::MatrixXd dense() const;

 private:
  int n_;
};

Parity generalized_parity(int n);

// Deterministic draw of realization k from the config's substream; pure in
// (config, k) and safe to call concurrently.
FirstRow sample_first_row(const EnsembleConfig& config, std::int64_t k);

// Dense form, intended for tests and oracles: row i is the first row
// cyclically right-shifted i times, m(i, j) = a[(j - i) mod n].
Eigen::MatrixXd materialize_matrix(const FirstRow& row);

// Max-norm of M^T - P M P^{-1}. Both sides are element rearrangements, so
// for an exactly circulant M the result is exactly zero.
double pseudo_symmetry_residual(const Eigen::MatrixXd& m, const Parity& parity);

}  // namespace rcm
