#include "commands.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "bgf/cumulants.hpp"
#include "bgf/dunkl.hpp"
#include "bgf/ensembles.hpp"
#include "bgf/spec_io.hpp"

namespace bgf::cli {

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    int value = 0;
    try {
      value = std::stoi(item, &used);
    } catch (const std::exception&) {
      throw UsageError("not an integer list: '" + text + "'");
    }
    if (used != item.size()) throw UsageError("not an integer list: '" + text + "'");
    out.push_back(value);
  }
  if (out.empty() || (!text.empty() && text.back() == ',')) {
    throw UsageError("not an integer list: '" + text + "'");
  }
  return out;
}

std::pair<int, int> parse_range(const std::string& text) {
  const auto dots = text.find("..");
  if (dots == std::string::npos) throw UsageError("range must look like LO..HI");
  const auto lo = parse_int_list(text.substr(0, dots));
  const auto hi = parse_int_list(text.substr(dots + 2));
  if (lo.size() != 1 || hi.size() != 1 || lo[0] < 1 || lo[0] > hi[0]) {
    throw UsageError("range must satisfy 1 <= LO <= HI");
  }
  return {lo[0], hi[0]};
}

Rational parse_rational_flag(const std::string& name, const std::string& text) {
  try {
    return parse_rational(text);
  } catch (const std::invalid_argument& e) {
    throw UsageError(name + ": " + e.what());
  }
}

int cmd_moments(const CumulantSpec& spec, int max_order, std::ostream& out) {
  if (max_order < 1) throw UsageError("--max-order must be positive");
  const auto m = moments_from_spec(spec, max_order);
  out << "k,m_k\n";
  for (int k = 1; k <= max_order; ++k) out << k << ',' << format_rational(m[k - 1]) << '\n';
  return kSuccess;
}

double converge_cost(const Partition& lambda, int n_lo, int n_hi) {
  double total = 0;
  for (int n = n_lo; n <= n_hi; ++n) {
    total += std::pow(n, lambda.length()) * lambda.size() * n * n;
  }
  return total;
}

namespace {

// F_N with c_F^ν = N ℓ(ν) c_ν / |ν|, truncated to the degree the moment reads.
MultivariatePoly canonical_polynomial(const CumulantSpec& spec, int n, int degree) {
  std::map<Partition, Rational> coeffs;
  for (const auto& [nu, c] : spec.c) {
    if (nu.size() > degree || nu.length() > n) continue;
    coeffs[nu] = Rational(n) * nu.length() * c / nu.size();
  }
  return symmetric_polynomial(n, coeffs);
}

std::string decimal(double value) {
  char buffer[64];
  std::snprintf(buffer, sizeof buffer, "%.12g", value);
  return buffer;
}

}  // namespace

int cmd_converge(const ConvergeOptions& options, std::ostream& out) {
  if (options.lambda.empty()) throw UsageError("--lambda must be nonempty");
  if (options.n_lo < 1 || options.n_lo > options.n_hi) throw UsageError("bad N range");
  const double cost = converge_cost(options.lambda, options.n_lo, options.n_hi);
  if (cost > options.budget) {
    std::ostringstream os;
    os << "estimated cost " << cost << " exceeds budget " << options.budget;
    throw BudgetRefusal(os.str());
  }
  const CumulantSpec spec = options.spec ? *options.spec : hermite_spec(options.theta);
  const Rational limit = mixed_moment_limit(spec, options.lambda);
  out << "N,value,limit,gap\n";
  for (int n = options.n_lo; n <= options.n_hi; ++n) {
    const MultivariatePoly F = options.spec
                                   ? canonical_polynomial(spec, n, options.lambda.size())
                                   : hermite_log_bgf(n, options.theta);
    const Rational value = finite_mixed_moment(F, options.lambda, spec.theta);
    const Rational gap = abs(value - limit);
    out << n << ',' << format_rational(value) << ',' << format_rational(limit) << ','
        << decimal(to_double(gap)) << '\n';
  }
  return kSuccess;
}

int cmd_sample(const SampleOptions& options, std::ostream& out, std::ostream& log) {
  if (options.trials < 2) throw UsageError("--trials must be at least 2");
  if (options.n < 1) throw UsageError("--n must be positive");
  if (!(options.beta > 0)) throw UsageError("--beta must be positive");
  for (int k : options.orders) {
    if (k < 1) throw UsageError("--orders must be positive");
  }
  const auto result =
      monte_carlo_moments(options.n, options.beta, options.trials, options.orders, options.seed);
  if (result.solver_failures > 0) {
    log << "warning: " << result.solver_failures << " eigensolver failures excluded\n";
  }
  int max_order = 1;
  for (int k : options.orders) max_order = std::max(max_order, k);
  const auto limits = moments_from_spec(hermite_spec(Rational(options.beta) / 2), max_order);

  out << "order,mean,stderr,trials,N,beta,seed,limit\n";
  for (const auto& est : result.estimates) {
    out << est.order << ',' << decimal(est.mean) << ',' << decimal(est.std_error) << ','
        << est.trials << ',' << options.n << ',' << decimal(options.beta) << ',' << options.seed
        << ',' << format_rational(limits[est.order - 1]) << '\n';
  }
  return kSuccess;
}

// ---------------------------------------------------------------------------

namespace {

struct SpecSource {
  std::string spec_path;
  std::string builtin;
  std::string theta_text;

  CumulantSpec resolve(bool allow_none) const {
    if (!spec_path.empty() && !builtin.empty()) {
      throw UsageError("--spec and --builtin are mutually exclusive");
    }
    if (!spec_path.empty()) {
      CumulantSpec spec;
      try {
        spec = load_spec(spec_path);
      } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
      }
      if (!theta_text.empty() && parse_rational_flag("--theta", theta_text) != spec.theta) {
        throw UsageError("--theta disagrees with the spec file");
      }
      return spec;
    }
    if (builtin.empty() && !allow_none) throw UsageError("--spec or --builtin is required");
    if (!builtin.empty() && builtin != "hermite") {
      throw UsageError("unknown builtin '" + builtin + "'");
    }
    const Rational theta = theta_text.empty() ? Rational{1} : parse_rational_flag("--theta", theta_text);
    if (theta <= 0) throw UsageError("--theta must be positive");
    return hermite_spec(theta);
  }
};

void add_spec_flags(CLI::App* app, SpecSource& source) {
  app->add_option("--spec", source.spec_path, "CumulantSpec JSON file");
  app->add_option("--builtin", source.builtin, "built-in spec: hermite");
  app->add_option("--theta", source.theta_text, "theta as p/q");
}

int emit(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return kSuccess;
  }
  std::ofstream file(path);
  if (!file) throw UsageError("cannot write '" + path + "'");
  file << text;
  return kSuccess;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Bessel generating function LLN engine"};
  app.require_subcommand(1);

  RunConfig config;
  SpecSource moments_src;
  SpecSource converge_src;
  int max_order = 10;
  std::string lambda_text = "2";
  std::string n_single;
  std::string n_range;
  double budget = 1e8;
  VerifyOptions verify;
  SampleOptions sample;
  std::string orders_text = "2,4";
  std::string beta_text = "2";

  auto* moments = app.add_subcommand("moments", "limit moments m_1..m_K from a cumulant spec");
  add_spec_flags(moments, moments_src);
  moments->add_option("--max-order", max_order, "K");
  moments->add_option("--out", config.out_path, "output CSV path");

  auto* converge = app.add_subcommand("converge", "finite-N mixed moments against the limit");
  add_spec_flags(converge, converge_src);
  converge->add_option("--lambda", lambda_text, "partition a,b,c");
  converge->add_option("--n", n_single, "single N");
  converge->add_option("--n-range", n_range, "LO..HI");
  converge->add_option("--budget", budget, "operation budget");
  converge->add_option("--out", config.out_path, "output CSV path");

  auto* verify_cmd = app.add_subcommand("verify", "run a property suite");
  verify_cmd->add_option("--suite", verify.suite, "appendix | operators | ensembles")->required();
  verify_cmd->add_option("--seed", verify.seed, "generator seed");
  verify_cmd->add_option("--inject-fault", verify.inject_fault, "negative control: binom");
  verify_cmd->add_option("--out", config.out_path, "report path");

  auto* sample_cmd = app.add_subcommand("sample", "Monte Carlo p_k for the beta-Hermite ensemble");
  sample_cmd->add_option("--n", sample.n, "matrix size");
  sample_cmd->add_option("--beta", beta_text, "beta > 0");
  sample_cmd->add_option("--trials", sample.trials, "trials >= 2");
  sample_cmd->add_option("--orders", orders_text, "orders k,l,...");
  sample_cmd->add_option("--seed", sample.seed, "seed");
  sample_cmd->add_option("--out", config.out_path, "output CSV path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsageError;
  }

  try {
    std::ostringstream buffer;
    int code = kSuccess;
    if (moments->parsed()) {
      code = cmd_moments(moments_src.resolve(false), max_order, buffer);
    } else if (converge->parsed()) {
      ConvergeOptions options;
      const CumulantSpec spec = converge_src.resolve(true);
      if (!converge_src.spec_path.empty()) options.spec = spec;
      options.theta = spec.theta;
      options.lambda = Partition::from_parts(parse_int_list(lambda_text));
      if (!n_single.empty() && !n_range.empty()) throw UsageError("--n and --n-range conflict");
      if (!n_range.empty()) {
        std::tie(options.n_lo, options.n_hi) = parse_range(n_range);
      } else if (!n_single.empty()) {
        options.n_lo = options.n_hi = parse_range(n_single + ".." + n_single).first;
      }
      options.budget = budget;
      code = cmd_converge(options, buffer);
    } else if (verify_cmd->parsed()) {
      code = cmd_verify(verify, buffer);
    } else if (sample_cmd->parsed()) {
      sample.orders = parse_int_list(orders_text);
      sample.beta = to_double(parse_rational_flag("--beta", beta_text));
      code = cmd_sample(sample, buffer, err);
    }
    emit(config.out_path, buffer.str(), out);
    return code;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsageError;
  } catch (const BudgetRefusal& e) {
    err << "refused: " << e.what() << '\n';
    return kBudgetRefusal;
  } catch (const std::invalid_argument& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kVerificationFailure;
  }
}

}  // namespace bgf::cli
