#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "bgf/dunkl.hpp"
#include "bgf/rational.hpp"
#include "bgf/series.hpp"

namespace bgf {

/// (N / 2θ) Σ x_i², the log-BGF of the β-Hermite ensemble, θ = β/2.
MultivariatePoly hermite_log_bgf(int n, const Rational& theta);
/// The same function as a symmetric series: c^{(2)} = N / 2θ.
SymmetricSeries hermite_log_bgf_series(int n, const Rational& theta, int cap);

/// {(2): 1/θ}.
CumulantSpec hermite_spec(const Rational& theta);

struct EnsembleSample {
  std::vector<double> eigenvalues;  // ascending
  double beta = 2.0;
  bool scaled = false;  // true once multiplied by √N
};

class EigensolverError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Per-trial seed derived from (seed, stream) by splitmix64.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream);

/// Eigenvalues of √(2/β) · H with H the Dumitriu–Edelman tridiagonal model:
/// diagonal N(0,2)/√2, off-diagonal χ_{β(N−k)}/√2. Density ∝ |Δ|^β e^{−βΣx²/4}.
/// Throws EigensolverError if the tridiagonal solver does not converge.
EnsembleSample sample_beta_hermite(int n, double beta, std::uint64_t seed);

/// Multiplies eigenvalues by √N and sets the flag.
EnsembleSample scaled(const EnsembleSample& sample);

/// (1/N) Σ (a_i / N)^k for scaled samples, (1/N) Σ (λ_i / √N)^k otherwise.
double p_k_statistic(const EnsembleSample& sample, int k);

struct MomentEstimate {
  int order = 0;
  double mean = 0.0;
  double std_error = 0.0;
  int trials = 0;
};

struct MonteCarloResult {
  std::vector<MomentEstimate> estimates;
  int solver_failures = 0;
};

/// Per-order mean and standard error of p_k over trials that solved. Trial t
/// draws from derive_seed(seed, t).
MonteCarloResult monte_carlo_moments(int n, double beta, int trials, std::span<const int> orders,
                                     std::uint64_t seed);

/// Mean and standard error of the mean of the values.
MomentEstimate summarize(int order, std::span<const double> values);

}  // namespace bgf
