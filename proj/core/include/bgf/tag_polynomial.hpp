#pragma once

#include <map>
#include <string>
#include <vector>

#include "bgf/combinatorics.hpp"
#include "bgf/rational.hpp"

namespace bgf {

/// A product ∏ c_F^{ν_i} of formal coefficient variables, kept as a sorted
/// multiset of partitions. The empty multiset is the constant monomial.
using TagMonomial = std::vector<Partition>;

TagMonomial make_tag_monomial(std::vector<Partition> factors);

// Polynomials with rational coefficients in the formal variables c_F^ν.
class TagPolynomial {
 public:
  TagPolynomial() = default;
  TagPolynomial(const Rational& constant);  // NOLINT(google-explicit-constructor)
  TagPolynomial(int constant) : TagPolynomial(Rational{constant}) {}  // NOLINT

  static TagPolynomial variable(const Partition& nu);
  static TagPolynomial monomial(TagMonomial m, const Rational& coeff);

  const std::map<TagMonomial, Rational>& terms() const { return terms_; }
  Rational coefficient(const TagMonomial& m) const;
  bool is_zero() const { return terms_.empty(); }

  TagPolynomial& operator+=(const TagPolynomial& other);
  TagPolynomial& operator-=(const TagPolynomial& other);
  TagPolynomial& operator*=(const TagPolynomial& other);
  TagPolynomial& operator*=(const Rational& scalar);

  friend TagPolynomial operator+(TagPolynomial a, const TagPolynomial& b) { return a += b; }
  friend TagPolynomial operator-(TagPolynomial a, const TagPolynomial& b) { return a -= b; }
  friend TagPolynomial operator*(TagPolynomial a, const TagPolynomial& b) { return a *= b; }
  friend TagPolynomial operator*(TagPolynomial a, const Rational& s) { return a *= s; }
  friend TagPolynomial operator*(const Rational& s, TagPolynomial a) { return a *= s; }
  TagPolynomial operator-() const;

  friend bool operator==(const TagPolynomial&, const TagPolynomial&) = default;

  std::string to_string() const;

 private:
  void add(const TagMonomial& m, const Rational& coeff);

  std::map<TagMonomial, Rational> terms_;
};

}  // namespace bgf
