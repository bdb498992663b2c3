#include "umbra/series.hpp"

#include <catch2/catch_amalgamated.hpp>
#include <vector>

using umbra::MultiPoly;
using umbra::Rational;
using umbra::TruncatedSeries;
using umbra::variable;

namespace {

TruncatedSeries from_rationals(const std::vector<Rational>& c) {
  std::vector<MultiPoly> v;
  for (const auto& r : c) v.push_back(MultiPoly::constant(r));
  return TruncatedSeries(std::move(v));
}

// Independent inversion oracle: solve (s * t) == 1 coefficient by
// coefficient with plain rational arithmetic, no series machinery.
std::vector<Rational> invert_by_back_substitution(const std::vector<Rational>& s) {
  std::vector<Rational> t(s.size());
  t[0] = Rational(1) / s[0];
  for (std::size_t k = 1; k < s.size(); ++k) {
    Rational acc(0);
    for (std::size_t i = 1; i <= k; ++i) acc += s[i] * t[k - i];
    t[k] = -acc / s[0];
  }
  return t;
}

}  // namespace

TEST_CASE("geometric series", "[series]") {
  TruncatedSeries s = from_rationals({Rational(1), Rational(-1), Rational(0), Rational(0)});
  TruncatedSeries expect = from_rationals({Rational(1), Rational(1), Rational(1), Rational(1)});
  CHECK(inverse(s) == expect);
}

TEST_CASE("exp(z) times exp(-z) is 1", "[series]") {
  const int N = 4;
  TruncatedSeries ez = TruncatedSeries::exp_linear(MultiPoly::constant(Rational(1)), N);
  TruncatedSeries emz = TruncatedSeries::exp_linear(MultiPoly::constant(Rational(-1)), N);
  CHECK(ez * emz == TruncatedSeries::one(N));
  CHECK(ez.coeff(3).as_constant() == Rational(1, 6));
  CHECK(ez.egf_coeff(3).as_constant() == Rational(1));
}

TEST_CASE("inverting (exp(z) - 1)/z", "[series]") {
  // (exp(z) - 1)/z has coefficients 1/(k+1)!; its inverse starts
  // 1 - z/2 + z^2/12 + 0 z^3.
  const int N = 3;
  TruncatedSeries unit = TruncatedSeries::egf_unit_factor(MultiPoly::constant(Rational(1)), N);
  CHECK(unit.coeff(0).as_constant() == Rational(1));
  CHECK(unit.coeff(2).as_constant() == Rational(1, 6));

  TruncatedSeries inv = inverse(unit);
  CHECK(inv.coeff(0).as_constant() == Rational(1));
  CHECK(inv.coeff(1).as_constant() == Rational(-1, 2));
  CHECK(inv.coeff(2).as_constant() == Rational(1, 12));
  CHECK(inv.coeff(3).as_constant() == Rational(0));

  // Independent back-substitution oracle, a larger window.
  std::vector<Rational> s;
  for (int k = 0; k <= 12; ++k) s.emplace_back(umbra::Integer(1), umbra::factorial(k + 1));
  std::vector<Rational> t = invert_by_back_substitution(s);
  TruncatedSeries big = inverse(TruncatedSeries::egf_unit_factor(MultiPoly::constant(Rational(1)), 12));
  for (int k = 0; k <= 12; ++k) CHECK(big.coeff(k).as_constant() == t[k]);
}

TEST_CASE("product with inverse is 1", "[series]") {
  TruncatedSeries s = from_rationals(
      {Rational(2, 3), Rational(-1, 2), Rational(5), Rational(0), Rational(1, 7)});
  CHECK(s * inverse(s) == TruncatedSeries::one(4));

  // Polynomial coefficients work too, as long as the constant term is a
  // nonzero rational.
  TruncatedSeries u = TruncatedSeries::egf_unit_factor(variable("a1"), 5);
  CHECK(u * inverse(u) == TruncatedSeries::one(5));
  CHECK(inverse(u).coeff(1) == variable("a1") * Rational(-1, 2));
}

TEST_CASE("non-invertible series are rejected", "[series]") {
  TruncatedSeries zero_head = from_rationals({Rational(0), Rational(1)});
  CHECK_THROWS_AS(inverse(zero_head), std::domain_error);

  TruncatedSeries sym_head(2);
  sym_head.set_coeff(0, variable("a1"));
  CHECK_THROWS_AS(inverse(sym_head), std::domain_error);
}

TEST_CASE("order mismatch is an error", "[series]") {
  TruncatedSeries a(3), b(4);
  CHECK_THROWS_AS(a + b, std::invalid_argument);
  CHECK_THROWS_AS(a * b, std::invalid_argument);
}

TEST_CASE("linear exponential with polynomial argument", "[series]") {
  const MultiPoly arg = variable("x") + Rational(1);
  TruncatedSeries s = TruncatedSeries::exp_linear(arg, 3);
  CHECK(s.coeff(2) == umbra::pow(arg, 2) * Rational(1, 2));
  CHECK(s.coeff(3) == umbra::pow(arg, 3) * Rational(1, 6));
}

TEST_CASE("coefficient bounds are checked", "[series]") {
  TruncatedSeries s(2);
  CHECK_THROWS_AS(s.coeff(3), std::out_of_range);
  CHECK_THROWS_AS(s.coeff(-1), std::out_of_range);
  CHECK_THROWS_AS(TruncatedSeries(-1), std::invalid_argument);
}
