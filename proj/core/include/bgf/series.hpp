#pragma once

#include <compare>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "bgf/combinatorics.hpp"
#include "bgf/rational.hpp"

namespace bgf {

// Number of variables: a finite N, or the N → ∞ limiting regime.
class VarCount {
 public:
  static VarCount finite(int n);
  static VarCount limit() { return VarCount{}; }

  bool is_limit() const { return !n_.has_value(); }
  /// Throws std::logic_error in the limit regime.
  int n() const;

  friend bool operator==(const VarCount&, const VarCount&) = default;
  std::string to_string() const;

 private:
  std::optional<int> n_;
};

/// Raised when an operation needs coefficients above the degree an input is
/// known to.
class TruncationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Σ_ν c^ν M_ν, exact for |ν| ≤ cap. Finite N keeps ℓ(ν) ≤ N.
class SymmetricSeries {
 public:
  SymmetricSeries(VarCount vars, int cap);

  VarCount vars() const { return vars_; }
  int cap() const { return cap_; }
  const std::map<Partition, Rational>& coeffs() const { return coeffs_; }

  Rational coefficient(const Partition& nu) const;
  /// Keys outside the cap or the length bound are rejected; zero erases.
  void set(const Partition& nu, const Rational& value);

  friend bool operator==(const SymmetricSeries&, const SymmetricSeries&) = default;

 private:
  VarCount vars_;
  int cap_;
  std::map<Partition, Rational> coeffs_;
};

struct AxialKey {
  int d = 0;
  Partition nu;
  friend bool operator==(const AxialKey&, const AxialKey&) = default;
  friend std::strong_ordering operator<=>(const AxialKey& a, const AxialKey& b) {
    if (auto c = a.d <=> b.d; c != 0) return c;
    return a.nu <=> b.nu;
  }
};

/// Σ_{d,ν} c^{d,ν} x_i^d M_ν(other variables), exact for d + |ν| ≤ cap.
/// Finite N keeps ℓ(ν) ≤ N − 1.
class AxialSeries {
 public:
  AxialSeries(int axis, VarCount vars, int cap);

  /// The multiplicative unit c^{0,∅} = 1.
  static AxialSeries unit(int axis, VarCount vars, int cap);

  int axis() const { return axis_; }
  VarCount vars() const { return vars_; }
  int cap() const { return cap_; }
  const std::map<AxialKey, Rational>& coeffs() const { return coeffs_; }

  Rational coefficient(int d, const Partition& nu) const;
  void set(int d, const Partition& nu, const Rational& value);
  void add(int d, const Partition& nu, const Rational& value);

  /// Drops keys above `cap` and lowers the cap.
  AxialSeries truncated(int cap) const;
  /// Same coefficients viewed on another axis.
  AxialSeries on_axis(int axis) const;

  friend bool operator==(const AxialSeries&, const AxialSeries&) = default;

 private:
  bool admissible(int d, const Partition& nu) const;

  int axis_;
  VarCount vars_;
  int cap_;
  std::map<AxialKey, Rational> coeffs_;
};

/// θ together with the limits c_ν, |ν| ≥ 1.
struct CumulantSpec {
  Rational theta{1};
  std::map<Partition, Rational> c;

  /// Throws std::invalid_argument if θ ≤ 0 or a key is ∅.
  void validate() const;
  friend bool operator==(const CumulantSpec&, const CumulantSpec&) = default;
};

/// Convolution over split pairs. Both inputs must share axis and var count;
/// the result cap is min(cap, f.cap, g.cap).
AxialSeries axial_mul(const AxialSeries& f, const AxialSeries& g, int cap);

/// 𝒬_i(f) g. The derivative and change terms read degree cap + 1 of g, so
/// the request must satisfy cap ≤ min(f.cap, g.cap − 1).
AxialSeries apply_q(const AxialSeries& f, const AxialSeries& g, const Rational& theta, int cap);
/// Same with the largest admissible cap.
AxialSeries apply_q(const AxialSeries& f, const AxialSeries& g, const Rational& theta);

/// 𝒬_i(f)^k g restricted to x_i = 0: a symmetric series in the remaining
/// variables (N − 1 of them when N is finite).
SymmetricSeries apply_r(const AxialSeries& f, const AxialSeries& g, const Rational& theta, int k);

Rational constant_term(const AxialSeries& s);
Rational constant_term(const SymmetricSeries& s);

/// c^{d,ν} = scale · (d+1) · c_F^{ν+(d+1)}: the axial form of scale · ∂_i F.
AxialSeries axial_from_symmetric_derivative(const SymmetricSeries& F, int axis,
                                            const Rational& scale);
/// c^{d,ν} = c_h^{ν+(d)}: a symmetric series read along one axis.
AxialSeries axial_from_symmetric(const SymmetricSeries& h, int axis);

/// Limiting sequence of the scaled derivative of F_N with limits c_ν:
/// c^{d,ν} = (d+1)(ℓ(ν)+1) c_{ν+(d+1)} / (|ν|+d+1), keys with d + |ν| ≤ cap.
AxialSeries limit_axial_from_spec(const CumulantSpec& spec, int cap);

/// [1] 𝒬(f)^k g.
Rational q_power_constant(const AxialSeries& f, const AxialSeries& g, const Rational& theta, int k);

/// [1] ∏_i ℛ^{λ_i}(f_i) applied to g, the rows taken in order. Each
/// intermediate symmetric series is read back along the next axis.
Rational iterated_r_constant(std::span<const AxialSeries> fs, const AxialSeries& g,
                             const Partition& lambda, const Rational& theta);

}  // namespace bgf
