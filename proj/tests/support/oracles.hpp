#pragma once

// Independent reference implementations used only by tests.

#include <cstdint>
#include <vector>

#include "bgf/combinatorics.hpp"
#include "bgf/dunkl.hpp"
#include "bgf/series.hpp"

namespace bgf::oracle {

using Blocks = std::vector<std::vector<int>>;

/// Every set partition of {1..k} (restricted growth strings).
std::vector<Blocks> set_partitions(int k);
/// set_partitions filtered by the four-point crossing test, canonicalized.
std::vector<Blocks> noncrossing_by_filter(int k);

/// Σ_{d,ν} c^{d,ν} x_axis^d M_ν(other variables) as an explicit polynomial.
MultivariatePoly expand_axial(const AxialSeries& s);

/// 𝒬 applied monomial by monomial: ((N−1)θ/N) d_i g − (θ/N) Σ_j C_{i,j} g + f g,
/// then read back in the (d, ν) basis for keys with d + |ν| ≤ cap.
AxialSeries apply_q_by_expansion(const AxialSeries& f, const AxialSeries& g,
                                 const Rational& theta, int cap);

/// M_{ν1} · M_{ν2} over n variables, expanded; returns Σ over monomials that
/// use every variable of coefficient · (number of such monomials in the
/// orbit), grouped by exponent partition: Σ_ν |T(ν)| P(ν).
Integer coeffsum_by_expansion(const Partition& nu1, const Partition& nu2, int n);

/// Eigenvalues of a dense N×N GUE matrix with density ∝ e^{−tr H² / 2}.
std::vector<double> dense_gue_eigenvalues(int n, std::uint64_t seed);

}  // namespace bgf::oracle
