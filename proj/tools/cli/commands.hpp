#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "bgf/combinatorics.hpp"
#include "bgf/rational.hpp"
#include "bgf/series.hpp"

namespace bgf::cli {

enum ExitCode : int {
  kSuccess = 0,
  kVerificationFailure = 1,
  kUsageError = 2,
  kBudgetRefusal = 3,
};

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class BudgetRefusal : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::string command;
  std::string out_path;  // empty means stdout
  std::uint64_t seed = 0;
};

/// "2,4,6" → {2,4,6}; rejects empty items and non-integers.
std::vector<int> parse_int_list(const std::string& text);
/// "LO..HI" with 1 ≤ LO ≤ HI.
std::pair<int, int> parse_range(const std::string& text);
/// Rational flag values: "p/q" or an integer.
Rational parse_rational_flag(const std::string& name, const std::string& text);

/// Rows "k,m_k" for k = 1..K with m_k as p/q.
int cmd_moments(const CumulantSpec& spec, int max_order, std::ostream& out);

struct ConvergeOptions {
  /// Absent means the built-in Hermite log-BGF with `theta`.
  std::optional<CumulantSpec> spec;
  Rational theta{1};
  Partition lambda{2};
  int n_lo = 1;
  int n_hi = 6;
  double budget = 1e8;
};

/// Operation estimate Σ_N N^{ℓ(λ)} · |λ| · N² used by the budget guard.
double converge_cost(const Partition& lambda, int n_lo, int n_hi);

/// Rows "N,value,limit,gap"; throws BudgetRefusal before any work when the
/// cost estimate exceeds the budget.
int cmd_converge(const ConvergeOptions& options, std::ostream& out);

struct VerifyOptions {
  std::string suite;  // appendix | operators | ensembles
  std::uint64_t seed = 20240601;
  /// "binom" corrupts the binomial identity check.
  std::string inject_fault;
};

/// One "PASS name" or "FAIL name: detail" line per property; returns
/// kVerificationFailure if any property fails.
int cmd_verify(const VerifyOptions& options, std::ostream& out);

struct SampleOptions {
  int n = 200;
  double beta = 2.0;
  int trials = 500;
  std::vector<int> orders{2, 4};
  std::uint64_t seed = 1;
};

/// CSV columns order,mean,stderr,trials,N,beta,seed,limit. Solver failures
/// are reported on `log`.
int cmd_sample(const SampleOptions& options, std::ostream& out, std::ostream& log);

/// Full command-line entry point; never throws.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace bgf::cli
