#include <cmath>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <ostream>
#include <sstream>

#include "bgf/cumulants.hpp"
#include "bgf/dunkl.hpp"
#include "bgf/ensembles.hpp"
#include "commands.hpp"
#include "generators.hpp"

namespace bgf::cli {

namespace {

// A property returns a counterexample description, or nothing when it holds.
using Property = std::function<std::optional<std::string>()>;

struct Suite {
  std::vector<std::pair<std::string, Property>> properties;
  void add(std::string name, Property p) { properties.emplace_back(std::move(name), std::move(p)); }
};

std::string join(const std::vector<Rational>& values) {
  std::string out;
  for (const auto& v : values) out += (out.empty() ? "" : ",") + format_rational(v);
  return out;
}

// ---------------------------------------------------------------------------

Suite appendix_suite(const VerifyOptions& options) {
  Suite suite;
  const bool corrupt_binom = options.inject_fault == "binom";
  const auto seed = options.seed;

  suite.add("nc_count_is_catalan", [] () -> std::optional<std::string> {
    for (int k = 1; k <= 10; ++k) {
      const auto count = enumerate_nc(k).size();
      if (Integer(count) != catalan(k)) return "k=" + std::to_string(k);
    }
    return std::nullopt;
  });

  suite.add("kreweras_count", [] () -> std::optional<std::string> {
    for (int n = 1; n <= 9; ++n) {
      std::map<std::vector<int>, int> observed;
      for (const auto& pi : nc_partitions(n)) {
        std::vector<int> m(static_cast<std::size_t>(n), 0);
        for (const auto& block : pi.blocks()) ++m[block.size() - 1];
        ++observed[m];
      }
      Integer total = 0;
      for (const auto& [m, count] : observed) {
        const Integer predicted = kreweras_count(m);
        total += predicted;
        if (predicted != count) return "n=" + std::to_string(n);
      }
      if (total != catalan(n)) return "sum mismatch at n=" + std::to_string(n);
    }
    return std::nullopt;
  });

  suite.add("binom_identity", [corrupt_binom] () -> std::optional<std::string> {
    for (int a = 0; a <= 12; ++a) {
      for (int b = 0; b <= 12; ++b) {
        for (int m = 0; m <= a; ++m) {
          auto sides = binom_identity_sides(a, b, m);
          if (corrupt_binom) sides.rhs = -sides.rhs;
          if (!sides.holds()) {
            std::ostringstream os;
            os << "a=" << a << " b=" << b << " m=" << m << " lhs=" << format_rational(sides.lhs)
               << " rhs=" << format_rational(sides.rhs);
            return os.str();
          }
        }
      }
    }
    return std::nullopt;
  });

  suite.add("nc_recursion", [seed] () -> std::optional<std::string> {
    gen::Rng rng(seed);
    for (int k = 1; k <= 7; ++k) {
      for (int draw = 0; draw < 3; ++draw) {
        const auto a = gen::sequence(rng, k + 1);
        const auto b = gen::sequence(rng, k + 1);
        if (!nc_recursion_check(k, a, b)) {
          return "k=" + std::to_string(k) + " a=(" + join(a) + ") b=(" + join(b) + ")";
        }
      }
    }
    return std::nullopt;
  });

  suite.add("nc_generating", [seed] () -> std::optional<std::string> {
    gen::Rng rng(seed + 1);
    for (int n = 1; n <= 8; ++n) {
      for (int draw = 0; draw < 3; ++draw) {
        const auto r = gen::sequence(rng, n);
        if (!nc_generating_check(n, r)) return "n=" + std::to_string(n) + " r=(" + join(r) + ")";
      }
    }
    return std::nullopt;
  });

  suite.add("perm_count_split", [] () -> std::optional<std::string> {
    for (const auto& nu : partitions_up_to(8)) {
      if (nu.empty()) continue;
      std::uint64_t total = 0;
      int previous = 0;
      for (int p : nu.parts()) {
        if (p == previous) continue;
        previous = p;
        total += perm_count(nu.without_part(p));
      }
      if (total != perm_count(nu)) return "nu=" + nu.to_string();
    }
    return std::nullopt;
  });

  suite.add("coeffsum", [] () -> std::optional<std::string> {
    for (const auto& a : partitions_up_to(5)) {
      for (const auto& b : partitions_up_to(6 - a.size())) {
        if (a.empty() || b.empty()) continue;
        for (int k = 0; k <= std::min(a.length(), b.length()); ++k) {
          if (!coeffsum_sides(a, b, k).holds()) {
            return "nu1=" + a.to_string() + " nu2=" + b.to_string() + " k=" + std::to_string(k);
          }
        }
      }
    }
    return std::nullopt;
  });
  return suite;
}

// ---------------------------------------------------------------------------

Suite operators_suite(const VerifyOptions& options) {
  Suite suite;
  const auto seed = options.seed;

  suite.add("dunkl_commutativity", [seed] () -> std::optional<std::string> {
    gen::Rng rng(seed);
    for (int n = 2; n <= 3; ++n) {
      for (int i = 1; i <= n; ++i) {
        for (int j = i + 1; j <= n; ++j) {
          for (int t = 0; t < 20; ++t) {
            const Rational theta = gen::positive_rational(rng);
            const auto p = gen::polynomial(rng, n, 5, 6);
            if (dunkl_apply(dunkl_apply(p, i, theta), j, theta) !=
                dunkl_apply(dunkl_apply(p, j, theta), i, theta)) {
              return "N=" + std::to_string(n) + " i=" + std::to_string(i) +
                     " j=" + std::to_string(j);
            }
          }
        }
      }
    }
    return std::nullopt;
  });

  suite.add("symmetric_collapse", [seed] () -> std::optional<std::string> {
    gen::Rng rng(seed + 1);
    for (int n = 2; n <= 4; ++n) {
      for (int t = 0; t < 10; ++t) {
        std::map<Partition, Rational> coeffs;
        for (int u = 0; u < 3; ++u) coeffs[gen::partition(rng, 4)] = gen::rational(rng);
        const auto p = symmetric_polynomial(n, coeffs);
        const Rational theta = gen::positive_rational(rng);
        MultivariatePoly lhs(n);
        MultivariatePoly rhs(n);
        for (int i = 1; i <= n; ++i) {
          lhs += dunkl_apply(p, i, theta);
          rhs += partial(p, i);
        }
        if (lhs != rhs) return "N=" + std::to_string(n);
      }
    }
    return std::nullopt;
  });

  suite.add("constant_term_theorem", [seed] () -> std::optional<std::string> {
    gen::Rng rng(seed + 2);
    for (int t = 0; t < 100; ++t) {
      const int k = 1 + t % 5;
      const Rational theta = gen::positive_rational(rng);
      const auto f = gen::axial(rng, VarCount::limit(), 1, 4, 4);
      const auto g = gen::axial(rng, VarCount::limit(), 1, 4, 4);
      if (q_power_constant(f, g, theta, k - 1) != theorem_value_rhs(f, g, k, theta)) {
        return "trial=" + std::to_string(t) + " k=" + std::to_string(k);
      }
    }
    return std::nullopt;
  });

  suite.add("distinct_indices_theorem", [seed] () -> std::optional<std::string> {
    gen::Rng rng(seed + 3);
    for (int t = 0; t < 30; ++t) {
      const Partition lambda = gen::partition(rng, 5);
      const Rational theta = gen::positive_rational(rng);
      std::vector<AxialSeries> fs;
      for (int row = 0; row < lambda.length(); ++row) {
        fs.push_back(gen::axial(rng, VarCount::limit(), 1, 4, 5));
      }
      const auto g = gen::axial(rng, VarCount::limit(), 1, 4, 5);
      if (iterated_r_constant(fs, g, lambda, theta) != finalvalue_rhs(fs, g, lambda, theta)) {
        return "trial=" + std::to_string(t) + " lambda=" + lambda.to_string();
      }
    }
    return std::nullopt;
  });

  suite.add("symmetric_kill_rule", [seed] () -> std::optional<std::string> {
    gen::Rng rng(seed + 4);
    for (int t = 0; t < 20; ++t) {
      SymmetricSeries h(VarCount::limit(), 6);
      for (const auto& nu : partitions_up_to(6)) h.set(nu, gen::rational(rng));
      const Rational theta = gen::positive_rational(rng);
      const auto c = free_cumulants(axial_from_symmetric(h, 1), 7, theta);
      for (int k = 2; k <= 7; ++k) {
        if (c[k - 1] != 0) return "trial=" + std::to_string(t) + " k=" + std::to_string(k);
      }
    }
    return std::nullopt;
  });

  suite.add("limit_drops_correction", [seed] () -> std::optional<std::string> {
    gen::Rng rng(seed + 5);
    for (int n = 2; n <= 5; ++n) {
      for (int t = 0; t < 5; ++t) {
        const Rational theta = gen::positive_rational(rng);
        const auto ff = gen::axial(rng, VarCount::finite(n), 1, 3, 3);
        const auto gf = gen::axial(rng, VarCount::finite(n), 1, 4, 4);
        AxialSeries fl(1, VarCount::limit(), 3);
        AxialSeries gl(1, VarCount::limit(), 4);
        for (const auto& [key, v] : ff.coeffs()) fl.set(key.d, key.nu, v);
        for (const auto& [key, v] : gf.coeffs()) gl.set(key.d, key.nu, v);
        const auto finite = apply_q(ff, gf, theta);
        const auto limit = apply_q(fl, gl, theta);
        for (const auto& nu : partitions_up_to(3)) {
          if (nu.length() > n - 1) continue;
          for (int d = 0; d + nu.size() <= 3; ++d) {
            const Rational correction =
                theta / n *
                (-gf.coefficient(d + 1, nu) + Rational(nu.length() + 1) *
                                                  gf.coefficient(0, nu.with_part(d + 1)));
            if (finite.coefficient(d, nu) != limit.coefficient(d, nu) + correction) {
              return "N=" + std::to_string(n) + " key=(" + std::to_string(d) + "," +
                     nu.to_string() + ")";
            }
          }
        }
      }
    }
    return std::nullopt;
  });

  suite.add("truncation_monotonicity", [seed] () -> std::optional<std::string> {
    gen::Rng rng(seed + 6);
    for (int t = 0; t < 20; ++t) {
      const Rational theta = gen::positive_rational(rng);
      const auto f = gen::axial(rng, VarCount::limit(), 1, 5, 5);
      const auto g = gen::axial(rng, VarCount::limit(), 1, 6, 6);
      if (apply_q(f, g, theta, 5).truncated(3) != apply_q(f, g, theta, 3)) {
        return "trial=" + std::to_string(t);
      }
      if (axial_mul(f, g, 5).truncated(2) != axial_mul(f, g, 2)) {
        return "axial_mul trial=" + std::to_string(t);
      }
    }
    return std::nullopt;
  });
  return suite;
}

// ---------------------------------------------------------------------------

Suite ensembles_suite(const VerifyOptions& options) {
  Suite suite;
  const auto seed = options.seed;

  suite.add("single_site_variance", [seed] () -> std::optional<std::string> {
    const int trials = 20000;
    for (double beta : {1.0, 2.0, 4.0}) {
      std::vector<double> squares;
      for (int t = 0; t < trials; ++t) {
        const double x = sample_beta_hermite(1, beta, derive_seed(seed, t)).eigenvalues[0];
        squares.push_back(x * x);
      }
      const auto est = summarize(2, squares);
      if (std::abs(est.mean - 2.0 / beta) > 3 * est.std_error) {
        std::ostringstream os;
        os << "beta=" << beta << " variance=" << est.mean << " se=" << est.std_error;
        return os.str();
      }
    }
    return std::nullopt;
  });

  suite.add("sampler_determinism", [seed] () -> std::optional<std::string> {
    const auto a = sample_beta_hermite(30, 2.0, seed);
    const auto b = sample_beta_hermite(30, 2.0, seed);
    if (a.eigenvalues != b.eigenvalues) return std::string("eigenvalues differ");
    return std::nullopt;
  });

  suite.add("beta2_second_moment", [seed] () -> std::optional<std::string> {
    const int orders[] = {2};
    const auto result = monte_carlo_moments(50, 2.0, 2000, orders, seed);
    const auto& est = result.estimates[0];
    if (std::abs(est.mean - 1.0) > 4 * est.std_error) {
      std::ostringstream os;
      os << "mean=" << est.mean << " se=" << est.std_error;
      return os.str();
    }
    return std::nullopt;
  });

  suite.add("hermite_spec_matches_bgf", [] () -> std::optional<std::string> {
    for (int n = 1; n <= 4; ++n) {
      for (const Rational& theta : {Rational(1), Rational(1, 2), Rational(2)}) {
        const auto F = hermite_log_bgf(n, theta);
        const Rational second = partial(partial(F, 1), 1).constant_term() / n;
        if (second != hermite_spec(theta).c.at(Partition{2})) {
          return "N=" + std::to_string(n) + " theta=" + format_rational(theta);
        }
      }
    }
    return std::nullopt;
  });

  suite.add("power_sum_homogeneity", [seed] () -> std::optional<std::string> {
    auto sample = sample_beta_hermite(12, 2.0, seed);
    const double c = 1.7;
    EnsembleSample stretched = sample;
    for (double& x : stretched.eigenvalues) x *= c;
    std::reverse(stretched.eigenvalues.begin(), stretched.eigenvalues.end());
    for (int k = 1; k <= 6; ++k) {
      const double lhs = p_k_statistic(stretched, k);
      const double rhs = std::pow(c, k) * p_k_statistic(sample, k);
      if (std::abs(lhs - rhs) > 1e-9 * (1 + std::abs(rhs))) return "k=" + std::to_string(k);
      if (std::abs(p_k_statistic(scaled(sample), k) - p_k_statistic(sample, k)) >
          1e-9 * (1 + std::abs(rhs))) {
        return "scaled form differs at k=" + std::to_string(k);
      }
    }
    return std::nullopt;
  });
  return suite;
}

}  // namespace

int cmd_verify(const VerifyOptions& options, std::ostream& out) {
  Suite suite;
  if (options.suite == "appendix") {
    suite = appendix_suite(options);
  } else if (options.suite == "operators") {
    suite = operators_suite(options);
  } else if (options.suite == "ensembles") {
    suite = ensembles_suite(options);
  } else {
    throw UsageError("unknown suite '" + options.suite + "'");
  }
  if (!options.inject_fault.empty() && options.inject_fault != "binom") {
    throw UsageError("unknown fault '" + options.inject_fault + "'");
  }
  int failures = 0;
  for (const auto& [name, property] : suite.properties) {
    std::optional<std::string> counterexample;
    try {
      counterexample = property();
    } catch (const std::exception& e) {
      counterexample = std::string("exception: ") + e.what();
    }
    if (counterexample) {
      ++failures;
      out << "FAIL " << name << ": " << *counterexample << '\n';
    } else {
      out << "PASS " << name << '\n';
    }
  }
  return failures == 0 ? kSuccess : kVerificationFailure;
}

}  // namespace bgf::cli
