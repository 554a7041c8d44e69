#include "bgf/cumulants.hpp"

namespace bgf {

namespace {

Rational sign(int exponent) { return exponent % 2 == 0 ? Rational{1} : Rational{-1}; }

}  // namespace

Rational free_cumulant(const AxialSeries& s, int k, const Rational& theta) {
  if (k < 1) throw std::invalid_argument("cumulant order must be positive");
  if (s.cap() < k - 1) {
    throw TruncationError("free cumulant of order " + std::to_string(k) +
                          " needs degree " + std::to_string(k - 1));
  }
  Rational total = 0;
  for (const auto& [key, value] : s.coeffs()) {
    if (key.d + key.nu.size() != k - 1) continue;
    total += sign(key.nu.length()) * Rational(perm_count(key.nu)) * value;
  }
  return pow(theta, k - 1) * total;
}

CumulantSequence free_cumulants(const AxialSeries& s, int K, const Rational& theta) {
  CumulantSequence out;
  for (int k = 1; k <= K; ++k) out.push_back(free_cumulant(s, k, theta));
  return out;
}

Rational moment_via_residue(std::span<const Rational> c, int k) {
  return nc_block_sum_residue(k, c);
}

CumulantSequence spec_cumulants(const CumulantSpec& spec, int K) {
  spec.validate();
  CumulantSequence out(static_cast<std::size_t>(std::max(K, 0)), Rational{0});
  for (const auto& [nu, value] : spec.c) {
    const int k = nu.size();
    if (k > K) continue;
    out[k - 1] += sign(nu.length() - 1) * Rational(perm_count(nu)) * value;
  }
  for (int k = 1; k <= K; ++k) out[k - 1] *= pow(spec.theta, k - 1);
  return out;
}

std::vector<Rational> moments_from_spec(const CumulantSpec& spec, int K) {
  const CumulantSequence c = spec_cumulants(spec, K);
  std::vector<Rational> m;
  for (int k = 1; k <= K; ++k) m.push_back(moment_from_cumulants<Rational>(c, k));
  return m;
}

Rational mixed_moment_limit(const CumulantSpec& spec, const Partition& lambda) {
  if (lambda.empty()) return 1;
  const auto m = moments_from_spec(spec, lambda[0]);
  Rational out = 1;
  for (int part : lambda.parts()) out *= m[part - 1];
  return out;
}

Rational theorem_value_rhs(const AxialSeries& f, const AxialSeries& g, int k,
                           const Rational& theta) {
  const CumulantSequence cf = free_cumulants(f, k, theta);
  const CumulantSequence cg = free_cumulants(g, k, theta);
  Rational total = 0;
  for (const auto& pi : nc_partitions(k)) {
    Rational term = cg[pi.blocks()[0].size() - 1];
    for (std::size_t b = 1; b < pi.blocks().size(); ++b) term *= cf[pi.blocks()[b].size() - 1];
    total += term;
  }
  return total;
}

Rational finalvalue_rhs(std::span<const AxialSeries> fs, const AxialSeries& g,
                        const Partition& lambda, const Rational& theta) {
  if (lambda.empty()) throw std::invalid_argument("lambda must be nonempty");
  if (static_cast<int>(fs.size()) != lambda.length()) {
    throw std::invalid_argument("one f per part of lambda is required");
  }
  Rational value = theorem_value_rhs(fs[0], g, lambda[0] + 1, theta);
  for (std::size_t row = 1; row < fs.size(); ++row) {
    const CumulantSequence c = free_cumulants(fs[row], lambda[row], theta);
    value *= moment_from_cumulants<Rational>(c, lambda[row]);
  }
  return value;
}

TagPolynomial leading_order_rhs(const Partition& lambda, const Rational& theta) {
  if (lambda.empty()) throw std::invalid_argument("lambda must be nonempty");
  // Block weight for each block size b.
  std::vector<TagPolynomial> weight(static_cast<std::size_t>(lambda[0]) + 1);
  for (int b = 1; b <= lambda[0]; ++b) {
    TagPolynomial w;
    for (const auto& nu : partitions_of(b)) {
      const Rational coeff = sign(nu.length() - 1) * Rational(nu.size()) *
                             Rational(perm_count(nu)) / Rational(nu.length());
      w += TagPolynomial::variable(nu) * coeff;
    }
    weight[b] = w * pow(theta, b - 1);
  }
  TagPolynomial product{1};
  for (int part : lambda.parts()) {
    TagPolynomial factor;
    for (const auto& pi : nc_partitions(part)) {
      TagPolynomial term{1};
      for (const auto& block : pi.blocks()) term *= weight[block.size()];
      factor += term;
    }
    product *= factor;
  }
  return product;
}

}  // namespace bgf
