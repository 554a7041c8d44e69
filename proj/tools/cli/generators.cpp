#include "generators.hpp"

namespace bgf::gen {

namespace {

int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

}  // namespace

Rational rational(Rng& rng, int max_num, int max_den) {
  return Rational(uniform(rng, -max_num, max_num)) / Rational(uniform(rng, 1, max_den));
}

Rational positive_rational(Rng& rng, int max_num, int max_den) {
  return Rational(uniform(rng, 1, max_num)) / Rational(uniform(rng, 1, max_den));
}

std::vector<Rational> sequence(Rng& rng, int length) {
  std::vector<Rational> out;
  for (int t = 0; t < length; ++t) out.push_back(rational(rng));
  return out;
}

AxialSeries axial(Rng& rng, VarCount vars, int axis, int support, int cap) {
  AxialSeries s(axis, vars, cap);
  const int max_len = vars.is_limit() ? support : vars.n() - 1;
  for (const auto& nu : partitions_up_to(support)) {
    if (nu.length() > max_len) continue;
    for (int d = 0; d + nu.size() <= support; ++d) {
      if (uniform(rng, 0, 1) == 1) s.set(d, nu, rational(rng));
    }
  }
  return s;
}

MultivariatePoly polynomial(Rng& rng, int n, int max_degree, int terms) {
  MultivariatePoly p(n);
  for (int t = 0; t < terms; ++t) {
    std::vector<int> e(static_cast<std::size_t>(n), 0);
    const int degree = uniform(rng, 0, max_degree);
    for (int u = 0; u < degree; ++u) ++e[uniform(rng, 0, n - 1)];
    p.add_term(e, rational(rng));
  }
  return p;
}

Partition partition(Rng& rng, int max_size) {
  const auto all = partitions_of(uniform(rng, 1, max_size));
  return all[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(all.size()) - 1))];
}

}  // namespace bgf::gen
