#include "umbra/barnes.hpp"

#include <catch2/catch_amalgamated.hpp>
#include <map>
#include <random>
#include <vector>

using umbra::BarnesContext;
using umbra::bb_number_multinomial;
using umbra::bb_number_umbral;
using umbra::bb_polynomial;
using umbra::bb_series;
using umbra::bernoulli_number;
using umbra::binomial;
using umbra::DualSequence;
using umbra::dual_transform;
using umbra::MultiPoly;
using umbra::norlund_polynomial;
using umbra::norlund_value;
using umbra::p_sequence;
using umbra::Rational;
using umbra::Var;
using umbra::variable;

namespace {

Rational random_step(std::mt19937& rng) {
  std::uniform_int_distribution<int> num(-5, 5);
  std::uniform_int_distribution<int> den(1, 4);
  int n = 0;
  while (n == 0) n = num(rng);
  return Rational(n, den(rng));
}

}  // namespace

TEST_CASE("context invariants", "[barnes]") {
  CHECK_THROWS_AS(BarnesContext::numeric({Rational(1), Rational(0)}), std::invalid_argument);

  BarnesContext sym = BarnesContext::symbolic(3);
  CHECK(sym.count() == 3);
  CHECK(sym.param(2).str() == "a3");
  CHECK_THROWS_AS(sym.values(), std::logic_error);

  BarnesContext sub = sym.restrict_to({0, 2});
  CHECK(sub.labels() == std::vector<int>{1, 3});
  CHECK(sub.param(1).str() == "a3");  // restriction keeps original names

  BarnesContext num = BarnesContext::numeric({Rational(1, 2), Rational(3)});
  CHECK(num.value_product() == Rational(3, 2));
  CHECK(num.value_sum() == Rational(7, 2));
  CHECK_THROWS_AS(num.param_var(0), std::logic_error);
  CHECK(num.restrict_to({1}).value_product() == Rational(3));
}

TEST_CASE("single unit step reproduces the Bernoulli numbers", "[barnes]") {
  BarnesContext one = BarnesContext::numeric({Rational(1)});
  umbra::TruncatedSeries s = bb_series(one, 12);
  for (int k = 0; k <= 12; ++k) {
    CHECK(bb_number_umbral(k, one).as_constant() == bernoulli_number(k));
    CHECK(bb_number_multinomial(k, one).as_constant() == bernoulli_number(k));
    CHECK(s.egf_coeff(k).as_constant() == bernoulli_number(k));
  }
}

TEST_CASE("small frozen values", "[barnes]") {
  // z/(exp(2z) - 1) has constant term 1/2.
  BarnesContext two = BarnesContext::numeric({Rational(2)});
  CHECK(bb_number_umbral(0, two).as_constant() == Rational(1, 2));
  CHECK(bb_series(two, 4).coeff(0).as_constant() == Rational(1, 2));

  // Two unit steps.
  BarnesContext ones2 = BarnesContext::numeric({Rational(1), Rational(1)});
  CHECK(bb_number_umbral(1, ones2).as_constant() == Rational(-1));
  CHECK(bb_number_umbral(2, ones2).as_constant() == Rational(5, 6));
  CHECK(bb_number_umbral(3, ones2).as_constant() == Rational(-1, 2));
  CHECK(bb_series(ones2, 3).egf_coeff(2).as_constant() == Rational(5, 6));

  // Three unit steps.
  BarnesContext ones3 = BarnesContext::numeric({Rational(1), Rational(1), Rational(1)});
  CHECK(bb_number_umbral(3, ones3).as_constant() == Rational(-9, 4));

  // The cleared symbolic number for one step.
  CHECK(bb_number_umbral(2, BarnesContext::symbolic(1)).str() == "1/6*a1^2");
}

TEST_CASE("three routes agree symbolically", "[barnes]") {
  for (int n = 0; n <= 2; ++n) {
    BarnesContext ctx = BarnesContext::symbolic(n);
    umbra::TruncatedSeries s = bb_series(ctx, 6);
    for (int k = 0; k <= 6; ++k) {
      MultiPoly u = bb_number_umbral(k, ctx);
      CHECK(u == bb_number_multinomial(k, ctx));
      CHECK(u == s.egf_coeff(k));
    }
  }
}

TEST_CASE("cleared numbers are homogeneous", "[barnes]") {
  BarnesContext ctx = BarnesContext::symbolic(3);
  for (int k = 0; k <= 6; ++k) {
    MultiPoly p = bb_number_umbral(k, ctx);
    for (const auto& [m, c] : p) CHECK(m.degree() == k);
  }
}

TEST_CASE("symbolic results specialize to numeric results", "[barnes]") {
  std::mt19937 rng(20240818);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 1 + trial % 3;
    std::vector<Rational> a;
    for (int i = 0; i < n; ++i) a.push_back(random_step(rng));
    BarnesContext sym = BarnesContext::symbolic(n);
    BarnesContext num = BarnesContext::numeric(a);
    std::map<Var, Rational> point;
    Rational prod(1);
    for (int i = 0; i < n; ++i) {
      point.emplace(sym.param_var(i), a[i]);
      prod *= a[i];
    }
    for (int k = 0; k <= 6; ++k) {
      Rational cleared = eval_at(bb_number_umbral(k, sym), point);
      CHECK(cleared / prod == bb_number_umbral(k, num).as_constant());
    }
  }
}

TEST_CASE("polynomial route", "[barnes]") {
  BarnesContext one = BarnesContext::numeric({Rational(1)});
  CHECK(bb_polynomial(2, one).str() == "x^2 - x + 1/6");
  CHECK(bb_polynomial(1, one).str() == "x - 1/2");

  BarnesContext sym = BarnesContext::symbolic(1);
  CHECK(bb_polynomial(2, sym).str() == "x^2 - a1*x + 1/6*a1^2");

  // Binomial convolution oracle: Q_j(x, a) = sum_l C(j, l) x^l P_{j-l}(a).
  BarnesContext sym2 = BarnesContext::symbolic(2);
  for (int j = 0; j <= 5; ++j) {
    MultiPoly direct = bb_polynomial(j, sym2);
    MultiPoly conv;
    for (int l = 0; l <= j; ++l)
      conv += binomial(j, l) * umbra::pow(variable("x"), l) * bb_number_umbral(j - l, sym2);
    CHECK(direct == conv);
  }

  BarnesContext num = BarnesContext::numeric({Rational(1, 2), Rational(3)});
  for (int j = 0; j <= 5; ++j) {
    MultiPoly direct = bb_polynomial(j, num);
    MultiPoly conv;
    for (int l = 0; l <= j; ++l)
      conv += binomial(j, l) * umbra::pow(variable("x"), l) * bb_number_umbral(j - l, num);
    CHECK(direct == conv);
  }
}

TEST_CASE("equal unit steps", "[barnes]") {
  CHECK(norlund_polynomial(1, 3).str() == "x - 3/2");
  CHECK(norlund_polynomial(0, 5).str() == "1");
  CHECK(norlund_polynomial(3, 0).str() == "x^3");

  // B_1 = x - n/2 and B_2 = x^2 - n x + n(3n-1)/12 across small lengths.
  const MultiPoly x = variable("x");
  for (int n = 0; n <= 4; ++n) {
    CHECK(norlund_polynomial(1, n) == x - Rational(n, 2));
    CHECK(norlund_polynomial(2, n) ==
          x * x - Rational(n) * x + Rational(n * (3 * n - 1), 12));
  }

  // The value at zero is the equal-step number.
  for (int n = 1; n <= 3; ++n) {
    BarnesContext ones = BarnesContext::numeric(std::vector<Rational>(n, Rational(1)));
    for (int j = 0; j <= 6; ++j)
      CHECK(norlund_value(j, n, Rational(0)) == bb_number_umbral(j, ones).as_constant());
  }
}

TEST_CASE("dual transform is an involution", "[barnes]") {
  // A frozen pair: the transform of 1, 0, 0, ... is 1, 1, 1, ...
  std::vector<Rational> delta{Rational(1), Rational(0), Rational(0), Rational(0)};
  std::vector<Rational> ones{Rational(1), Rational(1), Rational(1), Rational(1)};
  CHECK(dual_transform(delta) == ones);
  CHECK(dual_transform(ones) == delta);

  std::mt19937 rng(99);
  std::uniform_int_distribution<int> len(1, 16);
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<Rational> s;
    const int L = len(rng);
    for (int i = 0; i < L; ++i) s.push_back(random_step(rng));
    CHECK(dual_transform(dual_transform(s)) == s);
  }
}

TEST_CASE("self-dual sequence", "[barnes]") {
  // One unit step: p_m = (-1)^m B_m.
  DualSequence p = p_sequence(BarnesContext::numeric({Rational(1)}), 10);
  for (int m = 0; m <= 10; ++m)
    CHECK(p[m].as_constant() == (m % 2 == 0 ? bernoulli_number(m) : -bernoulli_number(m)));
  CHECK(p[1].as_constant() == Rational(1, 2));
  CHECK(dual_transform(p) == p);

  // Steps with a vanishing sum have no self-dual sequence.
  CHECK_THROWS_AS(p_sequence(BarnesContext::numeric({Rational(1), Rational(-1)}), 3),
                  std::domain_error);

  // Symbolic mode returns the cleared entries (-1)^m P_m(a).
  DualSequence ps = p_sequence(BarnesContext::symbolic(1), 3);
  CHECK(ps[2].str() == "1/6*a1^2");
  CHECK(ps[1].str() == "1/2*a1");
}

TEST_CASE("empty step vector", "[barnes]") {
  BarnesContext empty = BarnesContext::symbolic(0);
  CHECK(bb_number_umbral(0, empty).as_constant() == Rational(1));
  CHECK(bb_number_umbral(3, empty).is_zero());
  CHECK(bb_polynomial(4, empty) == umbra::pow(variable("x"), 4));
  CHECK(bb_series(empty, 3) == umbra::TruncatedSeries::one(3));
}
