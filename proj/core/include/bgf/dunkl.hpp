#pragma once

#include <map>
#include <span>
#include <string>
#include <vector>

#include "bgf/combinatorics.hpp"
#include "bgf/rational.hpp"
#include "bgf/tag_polynomial.hpp"

namespace bgf {

/// Sparse polynomial in x_1..x_N. Exponent vectors have length exactly N and
/// no stored coefficient is zero. Coeff is Rational or TagPolynomial.
template <class Coeff>
class Polynomial {
 public:
  using Exponents = std::vector<int>;

  explicit Polynomial(int var_count);

  static Polynomial constant(int var_count, const Coeff& c);
  static Polynomial monomial(int var_count, Exponents e, const Coeff& c);
  /// c · x_i, 1-based.
  static Polynomial variable(int var_count, int i, const Coeff& c = Coeff{1});

  int var_count() const { return n_; }
  const std::map<Exponents, Coeff>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int degree() const;

  Coeff coefficient(const Exponents& e) const;
  Coeff constant_term() const;

  void add_term(const Exponents& e, const Coeff& c);

  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Coeff& scalar);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Coeff& s) { return a *= s; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) { return a.times(b); }

  /// Relabels x_v as x_{perm[v-1]} (perm is a 1-based permutation of 1..N).
  Polynomial permuted(std::span<const int> perm) const;
  /// Invariance under (1 2) and (1 2 … N), which generate S_N.
  bool is_symmetric() const;

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  Polynomial times(const Polynomial& other) const;

  int n_;
  std::map<Exponents, Coeff> terms_;
};

using MultivariatePoly = Polynomial<Rational>;
using TaggedPoly = Polynomial<TagPolynomial>;

// All operator indices below are 1-based.

template <class Coeff>
Polynomial<Coeff> partial(const Polynomial<Coeff>& p, int i);

/// d_i: x_i^a m → x_i^{a−1} m, with no factor a; terms free of x_i vanish.
template <class Coeff>
Polynomial<Coeff> shift(const Polynomial<Coeff>& p, int i);

/// θ (1 − s_{ij}) / (x_i − x_j), computed by telescoping each monomial.
template <class Coeff>
Polynomial<Coeff> divided_switch(const Polynomial<Coeff>& p, int i, int j, const Rational& theta);

/// ∂_i + Σ_{j≠i} divided_switch(·, i, j).
template <class Coeff>
Polynomial<Coeff> dunkl_apply(const Polynomial<Coeff>& p, int i, const Rational& theta);

/// C_{i,j}: x_j^{b} m → x_i^{b−1} m when m is free of x_i and b ≥ 1; else 0.
template <class Coeff>
Polynomial<Coeff> change_apply(const Polynomial<Coeff>& p, int i, int j);

/// ∏_j (𝒟_{i_j} + ∂_{i_j} F) applied to 1, with i_1 acting first.
template <class Coeff>
Polynomial<Coeff> d_r_product(const Polynomial<Coeff>& F, std::span<const int> r,
                              const Rational& theta);

/// ∏_j (θ Σ_{l≠i_j} (d_{i_j} − C_{i_j,l}) + ∂_{i_j} F) applied to 1, with i_1
/// acting first and N = F.var_count().
template <class Coeff>
Polynomial<Coeff> q_r_product(const Polynomial<Coeff>& F, std::span<const int> r,
                              const Rational& theta);

/// M_ν(x_1..x_n) · c; zero when ℓ(ν) > n.
template <class Coeff>
Polynomial<Coeff> monomial_symmetric(int n, const Partition& nu, const Coeff& c);

/// (1 / N^{ℓ(λ)+|λ|}) Σ_{l ∈ I_N(λ)} [1] 𝒟_l(F). Prefixes shared by index
/// lists are evaluated once. Throws std::invalid_argument if F is not
/// symmetric or has a nonzero constant term.
Rational finite_mixed_moment(const MultivariatePoly& F, const Partition& lambda,
                             const Rational& theta);

/// Σ_ν coeff(ν) · M_ν over n variables.
MultivariatePoly symmetric_polynomial(int n, const std::map<Partition, Rational>& coeffs);

/// F = Σ_{|ν| ≤ degree, ℓ(ν) ≤ n} c_F^ν M_ν with formal c_F^ν.
TaggedPoly tagged_symmetric_polynomial(int n, int degree);

struct CoefficientFit {
  /// Ascending coefficients of f(N); empty for the zero polynomial.
  std::vector<Rational> coeffs;
  std::vector<std::pair<int, Rational>> samples;
  /// −1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
  Rational coefficient(int power) const;
  Rational evaluate(const Rational& x) const;
};

/// Coefficient of p = ∏ c_F^{ν_i} in [1] 𝒟_r(F) for each N in [n_lo, n_hi],
/// interpolated on all but the last sample and checked on the last one.
/// Throws std::runtime_error if that check fails.
CoefficientFit coefficient_poly_fit(const TagMonomial& target, std::span<const int> r, int n_lo,
                                    int n_hi, const Rational& theta);

}  // namespace bgf
