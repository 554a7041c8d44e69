#pragma once

#include <random>
#include <vector>

#include "bgf/dunkl.hpp"
#include "bgf/rational.hpp"
#include "bgf/series.hpp"

namespace bgf::gen {

using Rng = std::mt19937_64;

/// p/q with |p| ≤ max_num and 1 ≤ q ≤ max_den.
Rational rational(Rng& rng, int max_num = 5, int max_den = 4);
/// Strictly positive: p/q with 1 ≤ p ≤ max_num.
Rational positive_rational(Rng& rng, int max_num = 4, int max_den = 3);
std::vector<Rational> sequence(Rng& rng, int length);

/// Each admissible key (d, ν) with d + |ν| ≤ support is populated with
/// probability 1/2; the series is exact to `cap` (≥ support).
AxialSeries axial(Rng& rng, VarCount vars, int axis, int support, int cap);

/// Up to `terms` random monomials of total degree ≤ max_degree.
MultivariatePoly polynomial(Rng& rng, int n, int max_degree, int terms);

/// Random partition of size in [1, max_size].
Partition partition(Rng& rng, int max_size);

}  // namespace bgf::gen
