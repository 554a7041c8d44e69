#include "bgf/ensembles.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include <Eigen/Eigenvalues>

namespace bgf {

MultivariatePoly hermite_log_bgf(int n, const Rational& theta) {
  if (theta <= 0) throw std::invalid_argument("theta must be positive");
  return monomial_symmetric(n, Partition{2}, Rational(n) / (2 * theta));
}

SymmetricSeries hermite_log_bgf_series(int n, const Rational& theta, int cap) {
  if (theta <= 0) throw std::invalid_argument("theta must be positive");
  SymmetricSeries s(VarCount::finite(n), cap);
  if (cap >= 2) s.set(Partition{2}, Rational(n) / (2 * theta));
  return s;
}

CumulantSpec hermite_spec(const Rational& theta) {
  if (theta <= 0) throw std::invalid_argument("theta must be positive");
  CumulantSpec spec;
  spec.theta = theta;
  spec.c[Partition{2}] = 1 / theta;
  spec.validate();
  return spec;
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

EnsembleSample sample_beta_hermite(int n, double beta, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("N must be positive");
  if (!(beta > 0)) throw std::invalid_argument("beta must be positive");
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, std::sqrt(2.0));

  const double scale = std::sqrt(2.0 / beta) / std::sqrt(2.0);
  Eigen::VectorXd diag(n);
  Eigen::VectorXd sub(std::max(n - 1, 0));
  for (int k = 0; k < n; ++k) diag[k] = scale * gauss(rng);
  for (int k = 1; k < n; ++k) {
    std::chi_squared_distribution<double> chi2(beta * (n - k));
    sub[k - 1] = scale * std::sqrt(chi2(rng));
  }

  EnsembleSample out;
  out.beta = beta;
  if (n == 1) {
    out.eigenvalues = {diag[0]};
    return out;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
  solver.computeFromTridiagonal(diag, sub, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) throw EigensolverError("tridiagonal eigensolver failed");
  const auto& ev = solver.eigenvalues();
  out.eigenvalues.assign(ev.data(), ev.data() + ev.size());
  std::sort(out.eigenvalues.begin(), out.eigenvalues.end());
  return out;
}

EnsembleSample scaled(const EnsembleSample& sample) {
  if (sample.scaled) return sample;
  EnsembleSample out = sample;
  const double root = std::sqrt(static_cast<double>(sample.eigenvalues.size()));
  for (double& x : out.eigenvalues) x *= root;
  out.scaled = true;
  return out;
}

double p_k_statistic(const EnsembleSample& sample, int k) {
  const double n = static_cast<double>(sample.eigenvalues.size());
  if (n == 0) return 0.0;
  const double divisor = sample.scaled ? n : std::sqrt(n);
  double total = 0.0;
  for (double x : sample.eigenvalues) total += std::pow(x / divisor, k);
  return total / n;
}

MomentEstimate summarize(int order, std::span<const double> values) {
  MomentEstimate est;
  est.order = order;
  est.trials = static_cast<int>(values.size());
  if (values.empty()) return est;
  double sum = 0.0;
  for (double v : values) sum += v;
  est.mean = sum / est.trials;
  if (est.trials < 2) return est;
  double ss = 0.0;
  for (double v : values) ss += (v - est.mean) * (v - est.mean);
  est.std_error = std::sqrt(ss / (est.trials - 1) / est.trials);
  return est;
}

MonteCarloResult monte_carlo_moments(int n, double beta, int trials, std::span<const int> orders,
                                     std::uint64_t seed) {
  if (trials < 2) throw std::invalid_argument("at least two trials are required");
  MonteCarloResult result;
  std::vector<std::vector<double>> values(orders.size());
  for (int t = 0; t < trials; ++t) {
    EnsembleSample sample;
    try {
      sample = sample_beta_hermite(n, beta, derive_seed(seed, static_cast<std::uint64_t>(t)));
    } catch (const EigensolverError&) {
      ++result.solver_failures;
      continue;
    }
    for (std::size_t o = 0; o < orders.size(); ++o) {
      values[o].push_back(p_k_statistic(sample, orders[o]));
    }
  }
  for (std::size_t o = 0; o < orders.size(); ++o) {
    result.estimates.push_back(summarize(orders[o], values[o]));
  }
  return result;
}

}  // namespace bgf
