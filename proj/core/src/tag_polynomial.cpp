#include "bgf/tag_polynomial.hpp"

#include <algorithm>
#include <sstream>

namespace bgf {

TagMonomial make_tag_monomial(std::vector<Partition> factors) {
  std::sort(factors.begin(), factors.end());
  return factors;
}

TagPolynomial::TagPolynomial(const Rational& constant) {
  if (constant != 0) terms_.emplace(TagMonomial{}, constant);
}

TagPolynomial TagPolynomial::variable(const Partition& nu) {
  return monomial(TagMonomial{nu}, Rational{1});
}

TagPolynomial TagPolynomial::monomial(TagMonomial m, const Rational& coeff) {
  TagPolynomial p;
  p.add(make_tag_monomial(std::move(m)), coeff);
  return p;
}

Rational TagPolynomial::coefficient(const TagMonomial& m) const {
  auto it = terms_.find(make_tag_monomial(m));
  return it == terms_.end() ? Rational{0} : it->second;
}

void TagPolynomial::add(const TagMonomial& m, const Rational& coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

TagPolynomial& TagPolynomial::operator+=(const TagPolynomial& other) {
  for (const auto& [m, c] : other.terms_) add(m, c);
  return *this;
}

TagPolynomial& TagPolynomial::operator-=(const TagPolynomial& other) {
  for (const auto& [m, c] : other.terms_) add(m, -c);
  return *this;
}

TagPolynomial& TagPolynomial::operator*=(const TagPolynomial& other) {
  TagPolynomial product;
  for (const auto& [ma, ca] : terms_) {
    for (const auto& [mb, cb] : other.terms_) {
      TagMonomial m;
      m.reserve(ma.size() + mb.size());
      std::merge(ma.begin(), ma.end(), mb.begin(), mb.end(), std::back_inserter(m));
      product.add(m, ca * cb);
    }
  }
  terms_ = std::move(product.terms_);
  return *this;
}

TagPolynomial& TagPolynomial::operator*=(const Rational& scalar) {
  if (scalar == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, c] : terms_) c *= scalar;
  return *this;
}

TagPolynomial TagPolynomial::operator-() const {
  TagPolynomial out = *this;
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

std::string TagPolynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << format_rational(c);
    for (const auto& nu : m) os << "*c" << nu.to_string();
  }
  return os.str();
}

}  // namespace bgf
