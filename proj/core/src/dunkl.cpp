#include "bgf/dunkl.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace bgf {

namespace {

template <class Coeff>
bool is_zero_coeff(const Coeff& c) {
  return c == Coeff{};
}

void check_index(int i, int n) {
  if (i < 1 || i > n) {
    throw std::invalid_argument("index " + std::to_string(i) + " outside 1.." + std::to_string(n));
  }
}

}  // namespace

// ---------------------------------------------------------------------------
// Polynomial

template <class Coeff>
Polynomial<Coeff>::Polynomial(int var_count) : n_(var_count) {
  if (var_count < 1) throw std::invalid_argument("polynomial needs at least one variable");
}

template <class Coeff>
Polynomial<Coeff> Polynomial<Coeff>::constant(int var_count, const Coeff& c) {
  return monomial(var_count, Exponents(static_cast<std::size_t>(var_count), 0), c);
}

template <class Coeff>
Polynomial<Coeff> Polynomial<Coeff>::monomial(int var_count, Exponents e, const Coeff& c) {
  Polynomial p(var_count);
  if (static_cast<int>(e.size()) != var_count) {
    throw std::invalid_argument("exponent vector length differs from variable count");
  }
  for (int a : e) {
    if (a < 0) throw std::invalid_argument("negative exponent");
  }
  p.add_term(e, c);
  return p;
}

template <class Coeff>
Polynomial<Coeff> Polynomial<Coeff>::variable(int var_count, int i, const Coeff& c) {
  check_index(i, var_count);
  Exponents e(static_cast<std::size_t>(var_count), 0);
  e[i - 1] = 1;
  return monomial(var_count, std::move(e), c);
}

template <class Coeff>
int Polynomial<Coeff>::degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, std::accumulate(e.begin(), e.end(), 0));
  return d;
}

template <class Coeff>
Coeff Polynomial<Coeff>::coefficient(const Exponents& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Coeff{} : it->second;
}

template <class Coeff>
Coeff Polynomial<Coeff>::constant_term() const {
  return coefficient(Exponents(static_cast<std::size_t>(n_), 0));
}

template <class Coeff>
void Polynomial<Coeff>::add_term(const Exponents& e, const Coeff& c) {
  if (is_zero_coeff(c)) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (is_zero_coeff(it->second)) terms_.erase(it);
  }
}

template <class Coeff>
Polynomial<Coeff>& Polynomial<Coeff>::operator+=(const Polynomial& other) {
  if (other.n_ != n_) throw std::invalid_argument("variable counts differ");
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

template <class Coeff>
Polynomial<Coeff>& Polynomial<Coeff>::operator-=(const Polynomial& other) {
  if (other.n_ != n_) throw std::invalid_argument("variable counts differ");
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

template <class Coeff>
Polynomial<Coeff>& Polynomial<Coeff>::operator*=(const Coeff& scalar) {
  if (is_zero_coeff(scalar)) {
    terms_.clear();
    return *this;
  }
  for (auto it = terms_.begin(); it != terms_.end();) {
    it->second = it->second * scalar;
    it = is_zero_coeff(it->second) ? terms_.erase(it) : std::next(it);
  }
  return *this;
}

template <class Coeff>
Polynomial<Coeff> Polynomial<Coeff>::times(const Polynomial& other) const {
  if (other.n_ != n_) throw std::invalid_argument("variable counts differ");
  Polynomial out(n_);
  Exponents e(static_cast<std::size_t>(n_));
  for (const auto& [ea, ca] : terms_) {
    for (const auto& [eb, cb] : other.terms_) {
      for (int v = 0; v < n_; ++v) e[v] = ea[v] + eb[v];
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

template <class Coeff>
Polynomial<Coeff> Polynomial<Coeff>::permuted(std::span<const int> perm) const {
  if (static_cast<int>(perm.size()) != n_) throw std::invalid_argument("permutation size");
  Polynomial out(n_);
  Exponents e(static_cast<std::size_t>(n_));
  for (const auto& [src, c] : terms_) {
    for (int v = 0; v < n_; ++v) e[perm[v] - 1] = src[v];
    out.add_term(e, c);
  }
  return out;
}

template <class Coeff>
bool Polynomial<Coeff>::is_symmetric() const {
  if (n_ == 1) return true;
  std::vector<int> swap12(static_cast<std::size_t>(n_));
  std::iota(swap12.begin(), swap12.end(), 1);
  std::swap(swap12[0], swap12[1]);
  std::vector<int> cycle(static_cast<std::size_t>(n_));
  for (int v = 0; v < n_; ++v) cycle[v] = (v + 1) % n_ + 1;
  return permuted(swap12) == *this && permuted(cycle) == *this;
}

// ---------------------------------------------------------------------------
// Operators

template <class Coeff>
Polynomial<Coeff> partial(const Polynomial<Coeff>& p, int i) {
  check_index(i, p.var_count());
  Polynomial<Coeff> out(p.var_count());
  for (const auto& [e, c] : p.terms()) {
    const int a = e[i - 1];
    if (a == 0) continue;
    auto f = e;
    --f[i - 1];
    out.add_term(f, c * Coeff{a});
  }
  return out;
}

template <class Coeff>
Polynomial<Coeff> shift(const Polynomial<Coeff>& p, int i) {
  check_index(i, p.var_count());
  Polynomial<Coeff> out(p.var_count());
  for (const auto& [e, c] : p.terms()) {
    if (e[i - 1] == 0) continue;
    auto f = e;
    --f[i - 1];
    out.add_term(f, c);
  }
  return out;
}

template <class Coeff>
Polynomial<Coeff> divided_switch(const Polynomial<Coeff>& p, int i, int j, const Rational& theta) {
  check_index(i, p.var_count());
  check_index(j, p.var_count());
  if (i == j) throw std::invalid_argument("divided_switch needs i != j");
  Polynomial<Coeff> out(p.var_count());
  const Coeff plus{theta};
  const Coeff minus{-theta};
  for (const auto& [e, c] : p.terms()) {
    const int a = e[i - 1];
    const int b = e[j - 1];
    if (a == b) continue;
    // x_i^a x_j^b − x_i^b x_j^a = ± x_i^m x_j^m (x_hi^g − x_lo^g), g = |a − b|.
    const int m = std::min(a, b);
    const int gap = std::abs(a - b);
    const Coeff w = c * (a > b ? plus : minus);
    auto f = e;
    for (int s = 0; s < gap; ++s) {
      f[i - 1] = m + s;
      f[j - 1] = m + gap - 1 - s;
      out.add_term(f, w);
    }
  }
  return out;
}

template <class Coeff>
Polynomial<Coeff> dunkl_apply(const Polynomial<Coeff>& p, int i, const Rational& theta) {
  Polynomial<Coeff> out = partial(p, i);
  for (int j = 1; j <= p.var_count(); ++j) {
    if (j != i) out += divided_switch(p, i, j, theta);
  }
  return out;
}

template <class Coeff>
Polynomial<Coeff> change_apply(const Polynomial<Coeff>& p, int i, int j) {
  check_index(i, p.var_count());
  check_index(j, p.var_count());
  if (i == j) throw std::invalid_argument("change_apply needs i != j");
  Polynomial<Coeff> out(p.var_count());
  for (const auto& [e, c] : p.terms()) {
    if (e[i - 1] != 0 || e[j - 1] == 0) continue;
    auto f = e;
    f[i - 1] = e[j - 1] - 1;
    f[j - 1] = 0;
    out.add_term(f, c);
  }
  return out;
}

namespace {

template <class Coeff, class Step>
Polynomial<Coeff> run_product(const Polynomial<Coeff>& F, std::span<const int> r, Step step) {
  const int n = F.var_count();
  if (r.empty()) throw std::invalid_argument("index list must be nonempty");
  std::map<int, Polynomial<Coeff>> derivatives;
  Polynomial<Coeff> h = Polynomial<Coeff>::constant(n, Coeff{1});
  for (int i : r) {
    check_index(i, n);
    auto it = derivatives.find(i);
    if (it == derivatives.end()) it = derivatives.emplace(i, partial(F, i)).first;
    h = step(h, i) + it->second * h;
  }
  return h;
}

}  // namespace

template <class Coeff>
Polynomial<Coeff> d_r_product(const Polynomial<Coeff>& F, std::span<const int> r,
                              const Rational& theta) {
  return run_product(F, r, [&](const Polynomial<Coeff>& h, int i) {
    return dunkl_apply(h, i, theta);
  });
}

template <class Coeff>
Polynomial<Coeff> q_r_product(const Polynomial<Coeff>& F, std::span<const int> r,
                              const Rational& theta) {
  const int n = F.var_count();
  return run_product(F, r, [&](const Polynomial<Coeff>& h, int i) {
    Polynomial<Coeff> acc = shift(h, i) * Coeff{Rational(n - 1)};
    for (int l = 1; l <= n; ++l) {
      if (l != i) acc -= change_apply(h, i, l);
    }
    return acc * Coeff{theta};
  });
}

template <class Coeff>
Polynomial<Coeff> monomial_symmetric(int n, const Partition& nu, const Coeff& c) {
  Polynomial<Coeff> out(n);
  if (nu.length() > n) return out;
  std::vector<int> e(static_cast<std::size_t>(n), 0);
  std::copy(nu.parts().begin(), nu.parts().end(), e.begin());
  std::sort(e.begin(), e.end());
  do {
    out.add_term(e, c);
  } while (std::next_permutation(e.begin(), e.end()));
  return out;
}

// ---------------------------------------------------------------------------

Rational finite_mixed_moment(const MultivariatePoly& F, const Partition& lambda,
                             const Rational& theta) {
  if (lambda.empty()) throw std::invalid_argument("lambda must be nonempty");
  if (!F.is_symmetric()) throw std::invalid_argument("F must be symmetric");
  if (F.constant_term() != 0) throw std::invalid_argument("F must have zero constant term");
  const int n = F.var_count();

  std::vector<MultivariatePoly> derivatives;
  for (int i = 1; i <= n; ++i) derivatives.push_back(partial(F, i));

  // Depth-first over (i_1, …, i_m); each row applies λ_row operators.
  Rational total = 0;
  std::function<void(std::size_t, const MultivariatePoly&)> walk =
      [&](std::size_t row, const MultivariatePoly& h) {
        if (row == static_cast<std::size_t>(lambda.length())) {
          total += h.constant_term();
          return;
        }
        for (int i = 1; i <= n; ++i) {
          MultivariatePoly next = h;
          for (int step = 0; step < lambda[row]; ++step) {
            next = dunkl_apply(next, i, theta) + derivatives[i - 1] * next;
          }
          walk(row + 1, next);
        }
      };
  walk(0, MultivariatePoly::constant(n, Rational{1}));
  return total / pow(Rational{n}, lambda.length() + lambda.size());
}

MultivariatePoly symmetric_polynomial(int n, const std::map<Partition, Rational>& coeffs) {
  MultivariatePoly out(n);
  for (const auto& [nu, c] : coeffs) out += monomial_symmetric(n, nu, c);
  return out;
}

TaggedPoly tagged_symmetric_polynomial(int n, int degree) {
  TaggedPoly out(n);
  for (const auto& nu : partitions_up_to(degree)) {
    if (nu.empty() || nu.length() > n) continue;
    out += monomial_symmetric(n, nu, TagPolynomial::variable(nu));
  }
  return out;
}

Rational CoefficientFit::coefficient(int power) const {
  if (power < 0 || power >= static_cast<int>(coeffs.size())) return 0;
  return coeffs[power];
}

Rational CoefficientFit::evaluate(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + *it;
  return acc;
}

namespace {

// Newton divided differences, expanded to the monomial basis.
std::vector<Rational> interpolate(const std::vector<std::pair<int, Rational>>& pts) {
  const std::size_t m = pts.size();
  std::vector<Rational> dd(m);
  for (std::size_t t = 0; t < m; ++t) dd[t] = pts[t].second;
  for (std::size_t level = 1; level < m; ++level) {
    for (std::size_t t = m - 1; t >= level; --t) {
      dd[t] = (dd[t] - dd[t - 1]) / Rational(pts[t].first - pts[t - level].first);
    }
  }
  std::vector<Rational> coeffs(1, dd[m - 1]);
  for (std::size_t t = m - 1; t-- > 0;) {
    // coeffs ← coeffs · (x − x_t) + dd[t]
    std::vector<Rational> next(coeffs.size() + 1, Rational{0});
    for (std::size_t u = 0; u < coeffs.size(); ++u) {
      next[u + 1] += coeffs[u];
      next[u] -= coeffs[u] * pts[t].first;
    }
    next[0] += dd[t];
    coeffs = std::move(next);
  }
  while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
  return coeffs;
}

}  // namespace

CoefficientFit coefficient_poly_fit(const TagMonomial& target, std::span<const int> r, int n_lo,
                                    int n_hi, const Rational& theta) {
  if (r.empty()) throw std::invalid_argument("index list must be nonempty");
  const int max_index = *std::max_element(r.begin(), r.end());
  if (n_lo < max_index) throw std::invalid_argument("N range must start at max(r) or above");
  if (n_hi - n_lo + 1 < 2) throw std::invalid_argument("N range needs at least two values");
  const TagMonomial key = make_tag_monomial(target);
  const int k = static_cast<int>(r.size());

  CoefficientFit fit;
  for (int n = n_lo; n <= n_hi; ++n) {
    const TaggedPoly F = tagged_symmetric_polynomial(n, k);
    const TagPolynomial value = d_r_product(F, r, theta).constant_term();
    fit.samples.emplace_back(n, value.coefficient(key));
  }
  std::vector<std::pair<int, Rational>> head(fit.samples.begin(), fit.samples.end() - 1);
  fit.coeffs = interpolate(head);
  const auto& check = fit.samples.back();
  if (fit.evaluate(Rational(check.first)) != check.second) {
    throw std::runtime_error("coefficient is not a polynomial of degree < " +
                             std::to_string(head.size()) + " over the sampled N");
  }
  return fit;
}

// ---------------------------------------------------------------------------

#define BGF_INSTANTIATE(C)                                                                   \
  template class Polynomial<C>;                                                              \
  template Polynomial<C> partial(const Polynomial<C>&, int);                                 \
  template Polynomial<C> shift(const Polynomial<C>&, int);                                   \
  template Polynomial<C> divided_switch(const Polynomial<C>&, int, int, const Rational&);    \
  template Polynomial<C> dunkl_apply(const Polynomial<C>&, int, const Rational&);            \
  template Polynomial<C> change_apply(const Polynomial<C>&, int, int);                       \
  template Polynomial<C> d_r_product(const Polynomial<C>&, std::span<const int>,             \
                                     const Rational&);                                       \
  template Polynomial<C> q_r_product(const Polynomial<C>&, std::span<const int>,             \
                                     const Rational&);                                       \
  template Polynomial<C> monomial_symmetric(int, const Partition&, const C&);

BGF_INSTANTIATE(Rational)
BGF_INSTANTIATE(TagPolynomial)

#undef BGF_INSTANTIATE

}  // namespace bgf
