#include "bgf/cumulants.hpp"
#include "bgf/ensembles.hpp"
#include "doctest.h"
#include "generators.hpp"

using namespace bgf;

TEST_SUITE("cumulants") {

TEST_CASE("free_cumulant of the Hermite sequence") {
  for (const Rational& theta : {Rational(1), Rational(1, 2), Rational(3)}) {
    const auto s = limit_axial_from_spec(hermite_spec(theta), 4);
    CHECK(free_cumulant(s, 2, theta) == 1);
    CHECK(free_cumulant(s, 1, theta) == 0);
    CHECK(free_cumulant(s, 3, theta) == 0);
  }
  const auto s = limit_axial_from_spec(hermite_spec(1), 2);
  CHECK_THROWS_AS(free_cumulant(s, 4, 1), TruncationError);
}

TEST_CASE("symmetric sequences have no cumulants above order one") {
  gen::Rng rng(41);
  for (int trial = 0; trial < 10; ++trial) {
    SymmetricSeries h(VarCount::limit(), 6);
    for (const auto& nu : partitions_up_to(6)) h.set(nu, gen::rational(rng));
    const Rational theta = gen::positive_rational(rng);
    const auto c = free_cumulants(axial_from_symmetric(h, 1), 7, theta);
    CHECK(c[0] == h.coefficient(Partition{}));
    for (int k = 2; k <= 7; ++k) CHECK(c[k - 1] == 0);
  }
}

TEST_CASE("moment_from_cumulants examples") {
  const std::vector<Rational> semicircle{0, 1, 0, 0, 0, 0};
  CHECK(moment_from_cumulants<Rational>(semicircle, 4) == 2);
  CHECK(moment_from_cumulants<Rational>(semicircle, 3) == 0);
  const std::vector<Rational> a{Rational(2, 7)};
  CHECK(moment_from_cumulants<Rational>(a, 1) == Rational(2, 7));
  const std::vector<double> d{0.0, 1.0, 0.0, 0.0, 0.0, 0.0};
  CHECK(moment_from_cumulants<double>(d, 6) == doctest::Approx(5.0));
  CHECK_THROWS_AS(moment_from_cumulants<Rational>(a, 2), std::invalid_argument);
}

TEST_CASE("moment_via_residue agrees with enumeration") {
  const std::vector<Rational> semicircle{0, 1, 0, 0, 0, 0};
  CHECK(moment_via_residue(semicircle, 2) == 1);
  CHECK(moment_via_residue(semicircle, 6) == 5);
  const std::vector<Rational> one{1};
  CHECK(moment_via_residue(one, 1) == 1);
  gen::Rng rng(42);
  for (int k = 1; k <= 9; ++k) {
    const auto c = gen::sequence(rng, k);
    CHECK(moment_via_residue(c, k) == moment_from_cumulants<Rational>(c, k));
  }
}

TEST_CASE("moments_from_spec") {
  const auto m = moments_from_spec(hermite_spec(1), 8);
  const std::vector<Rational> expected{0, 1, 0, 2, 0, 5, 0, 14};
  CHECK(m == expected);

  CumulantSpec linear;
  linear.c[Partition{1}] = Rational(3, 2);
  const auto ml = moments_from_spec(linear, 2);
  CHECK(ml[0] == Rational(3, 2));
  CHECK(ml[1] == Rational(9, 4));

  const auto zero = moments_from_spec(CumulantSpec{}, 5);
  for (const auto& v : zero) CHECK(v == 0);
}

TEST_CASE("spec cumulants ignore zero-valued keys") {
  gen::Rng rng(43);
  CumulantSpec spec;
  spec.theta = Rational(2, 3);
  for (int t = 0; t < 4; ++t) spec.c[gen::partition(rng, 5)] = gen::rational(rng);
  CumulantSpec padded = spec;
  for (const auto& nu : partitions_up_to(5)) {
    if (!nu.empty() && !padded.c.count(nu)) padded.c[nu] = 0;
  }
  CHECK(spec_cumulants(spec, 6) == spec_cumulants(padded, 6));
}

TEST_CASE("spec cumulants match the free cumulants of the limiting sequence") {
  gen::Rng rng(44);
  for (int trial = 0; trial < 10; ++trial) {
    CumulantSpec spec;
    spec.theta = gen::positive_rational(rng);
    for (int t = 0; t < 5; ++t) spec.c[gen::partition(rng, 5)] = gen::rational(rng);
    const auto axial = limit_axial_from_spec(spec, 4);
    CHECK(free_cumulants(axial, 5, spec.theta) == spec_cumulants(spec, 5));
  }
}

TEST_CASE("mixed_moment_limit") {
  const auto herm = hermite_spec(Rational(1, 2));
  CHECK(mixed_moment_limit(herm, Partition{2, 2}) == 1);
  CHECK(mixed_moment_limit(herm, Partition{4, 2}) == 2);
  CumulantSpec linear;
  linear.c[Partition{1}] = Rational(-2);
  CHECK(mixed_moment_limit(linear, Partition{1}) == -2);
}

TEST_CASE("theorem_value_rhs examples") {
  gen::Rng rng(45);
  const auto lim = VarCount::limit();
  const auto f = gen::axial(rng, lim, 1, 3, 3);
  const auto g = gen::axial(rng, lim, 1, 3, 3);
  CHECK(theorem_value_rhs(f, g, 1, 2) == g.coefficient(0, Partition{}));
  const Rational theta(5, 3);
  const auto herm = limit_axial_from_spec(hermite_spec(theta), 3);
  CHECK(theorem_value_rhs(herm, herm, 2, theta) == 1);
  CHECK(theorem_value_rhs(herm, herm, 3, theta) == 0);
}

TEST_CASE("finalvalue_rhs examples") {
  const auto lim = VarCount::limit();
  const Rational theta(1);
  const auto herm = limit_axial_from_spec(hermite_spec(theta), 4);
  const auto unit = AxialSeries::unit(1, lim, 4);

  // λ = (1): NC(2) gives c_2(g) + c_1(g) c_1(f).
  gen::Rng rng(46);
  const auto f = gen::axial(rng, lim, 1, 2, 2);
  const AxialSeries fs1[] = {f};
  const Rational expected = free_cumulant(unit, 2, theta) +
                            free_cumulant(unit, 1, theta) * free_cumulant(f, 1, theta);
  CHECK(finalvalue_rhs(fs1, unit, Partition{1}, theta) == expected);

  const AxialSeries zero(1, lim, 4);
  const AxialSeries zeros[] = {zero, zero};
  CHECK(finalvalue_rhs(zeros, zero, Partition{2, 1}, theta) == 0);

  const AxialSeries herms[] = {herm, herm};
  CHECK(finalvalue_rhs(herms, unit, Partition{2, 2}, theta) == 1);
  CHECK_THROWS_AS(finalvalue_rhs(fs1, unit, Partition{2, 2}, theta), std::invalid_argument);
}

TEST_CASE("operator side equals the cumulant side") {
  gen::Rng rng(47);
  const auto lim = VarCount::limit();
  int nonzero = 0;
  for (int trial = 0; trial < 40; ++trial) {
    const int k = 1 + trial % 5;
    const Rational theta = gen::positive_rational(rng);
    const auto f = gen::axial(rng, lim, 1, 4, 4);
    const auto g = gen::axial(rng, lim, 1, 4, 4);
    const Rational rhs = theorem_value_rhs(f, g, k, theta);
    CHECK(q_power_constant(f, g, theta, k - 1) == rhs);
    nonzero += rhs != 0;
  }
  CHECK(nonzero > 20);
}

TEST_CASE("iterated restriction equals the product formula") {
  gen::Rng rng(48);
  const auto lim = VarCount::limit();
  int nonzero = 0;
  for (int trial = 0; trial < 15; ++trial) {
    const Partition lambda = gen::partition(rng, 5);
    const Rational theta = gen::positive_rational(rng);
    std::vector<AxialSeries> fs;
    for (int row = 0; row < lambda.length(); ++row) fs.push_back(gen::axial(rng, lim, 1, 4, 5));
    const auto g = gen::axial(rng, lim, 1, 4, 5);
    const Rational rhs = finalvalue_rhs(fs, g, lambda, theta);
    CHECK(iterated_r_constant(fs, g, lambda, theta) == rhs);
    nonzero += rhs != 0;
  }
  CHECK(nonzero > 5);
}

TEST_CASE("leading_order_rhs") {
  const Rational theta(2);
  const auto two = leading_order_rhs(Partition{2}, theta);
  // θ (2 c_(2) − c_(1,1)) + c_(1)²
  CHECK(two.coefficient({Partition{2}}) == 2 * theta);
  CHECK(two.coefficient({Partition{1, 1}}) == -theta);
  CHECK(two.coefficient({Partition{1}, Partition{1}}) == 1);
  CHECK(two.terms().size() == 3);
  const auto pair = leading_order_rhs(Partition{1, 1}, theta);
  CHECK(pair == TagPolynomial::monomial({Partition{1}, Partition{1}}, 1));
}

}  // TEST_SUITE
