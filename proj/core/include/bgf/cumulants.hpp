#pragma once

#include <span>
#include <stdexcept>
#include <vector>

#include "bgf/combinatorics.hpp"
#include "bgf/rational.hpp"
#include "bgf/series.hpp"
#include "bgf/tag_polynomial.hpp"

namespace bgf {

/// c_1, c_2, …: element 0 holds order 1.
using CumulantSequence = std::vector<Rational>;

/// θ^{k−1} Σ_{|ν|+d = k−1} (−1)^{ℓ(ν)} P(ν) c^{d,ν}. Needs s.cap() ≥ k − 1.
Rational free_cumulant(const AxialSeries& s, int k, const Rational& theta);

/// c_1(s) … c_K(s).
CumulantSequence free_cumulants(const AxialSeries& s, int K, const Rational& theta);

/// Σ_{π ∈ NC(k)} ∏_{B ∈ π} c_{|B|}.
template <class T>
T moment_from_cumulants(std::span<const T> c, int k) {
  if (k < 1) throw std::invalid_argument("moment order must be positive");
  if (static_cast<int>(c.size()) < k) throw std::invalid_argument("cumulants missing");
  T total{0};
  for (const auto& pi : nc_partitions(k)) {
    T term{1};
    for (const auto& block : pi.blocks()) term *= c[block.size() - 1];
    total += term;
  }
  return total;
}

/// The same moment through the Laurent residue identity.
Rational moment_via_residue(std::span<const Rational> c, int k);

/// c_k = θ^{k−1} Σ_{|ν|=k} (−1)^{ℓ(ν)−1} P(ν) c_ν for k = 1..K.
CumulantSequence spec_cumulants(const CumulantSpec& spec, int K);

/// m_1 … m_K of the limit measure.
std::vector<Rational> moments_from_spec(const CumulantSpec& spec, int K);

/// ∏_i m_{λ_i}.
Rational mixed_moment_limit(const CumulantSpec& spec, const Partition& lambda);

/// Σ_{π ∈ NC(k)} c_{|B_1|}(g) ∏_{i ≥ 2} c_{|B_i|}(f).
Rational theorem_value_rhs(const AxialSeries& f, const AxialSeries& g, int k,
                           const Rational& theta);

/// First factor: NC(λ_1 + 1) with g on the block of 1 and f_1 elsewhere.
/// Factor i ≥ 2: Σ_{π ∈ NC(λ_i)} ∏ c_{|B|}(f_i).
Rational finalvalue_rhs(std::span<const AxialSeries> fs, const AxialSeries& g,
                        const Partition& lambda, const Rational& theta);

/// ∏_i Σ_{π ∈ NC(λ_i)} ∏_B θ^{|B|−1} Σ_{|ν|=|B|} (−1)^{ℓ(ν)−1} (|ν| P(ν) / ℓ(ν)) c_F^ν
/// as a polynomial in the formal c_F^ν.
TagPolynomial leading_order_rhs(const Partition& lambda, const Rational& theta);

}  // namespace bgf
