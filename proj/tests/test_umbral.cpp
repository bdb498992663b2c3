#include "umbra/umbral.hpp"

#include <catch2/catch_amalgamated.hpp>
#include <vector>

#include "umbra/series.hpp"

using umbra::bernoulli_number;
using umbra::bernoulli_symbol;
using umbra::eval;
using umbra::expand_linear_power;
using umbra::for_each_composition;
using umbra::MomentOverride;
using umbra::MultiPoly;
using umbra::Rational;
using umbra::standard_moments;
using umbra::SymbolKind;
using umbra::TruncatedSeries;
using umbra::UmbralMonomial;
using umbra::UmbralPoly;
using umbra::uniform_moment;
using umbra::uniform_symbol;
using umbra::variable;

namespace {

UmbralPoly symbol_power(umbra::UmbralSymbol s, int k) {
  return UmbralPoly::monomial(UmbralMonomial(s, k));
}

}  // namespace

TEST_CASE("first Bernoulli numbers", "[umbral]") {
  CHECK(bernoulli_number(0) == Rational(1));
  CHECK(bernoulli_number(1) == Rational(-1, 2));
  CHECK(bernoulli_number(2) == Rational(1, 6));
  CHECK(bernoulli_number(3) == Rational(0));
  CHECK(bernoulli_number(4) == Rational(-1, 30));
  CHECK(bernoulli_number(6) == Rational(1, 42));
  CHECK(bernoulli_number(10) == Rational(5, 66));
  CHECK(bernoulli_number(12) == Rational(-691, 2730));
  for (int k = 3; k <= 19; k += 2) CHECK(bernoulli_number(k) == Rational(0));
  CHECK_THROWS_AS(bernoulli_number(-1), std::invalid_argument);
}

TEST_CASE("recurrence agrees with series inversion", "[umbral]") {
  // Independent route: k! [z^k] of the inverse of (exp(z) - 1)/z.
  TruncatedSeries s =
      inverse(TruncatedSeries::egf_unit_factor(MultiPoly::constant(Rational(1)), 20));
  for (int k = 0; k <= 20; ++k)
    CHECK(bernoulli_number(k) == s.egf_coeff(k).as_constant());
}

TEST_CASE("uniform moments", "[umbral]") {
  for (int k = 0; k <= 8; ++k) CHECK(uniform_moment(k) == Rational(1, k + 1));
  CHECK_THROWS_AS(uniform_moment(-1), std::invalid_argument);
}

TEST_CASE("evaluation of plain symbol powers", "[umbral]") {
  for (int k = 0; k <= 12; ++k) {
    CHECK(eval(symbol_power(bernoulli_symbol(1), k)).as_constant() == bernoulli_number(k));
    CHECK(eval(symbol_power(uniform_symbol(1), k)).as_constant() == uniform_moment(k));
  }
}

TEST_CASE("distinct symbols evaluate independently", "[umbral]") {
  UmbralPoly b1b2 = symbol_power(bernoulli_symbol(1), 1) * symbol_power(bernoulli_symbol(2), 1);
  CHECK(eval(b1b2).as_constant() == Rational(1, 4));   // (-1/2)^2
  UmbralPoly b1b1 = symbol_power(bernoulli_symbol(1), 1) * symbol_power(bernoulli_symbol(1), 1);
  CHECK(eval(b1b1).as_constant() == Rational(1, 6));   // a single symbol: B_2

  for (int i = 0; i <= 8; ++i)
    for (int j = 0; j <= 8; ++j) {
      CHECK(eval(symbol_power(bernoulli_symbol(1), i) * symbol_power(bernoulli_symbol(2), j))
                .as_constant() == bernoulli_number(i) * bernoulli_number(j));
      CHECK(eval(symbol_power(bernoulli_symbol(1), i) * symbol_power(uniform_symbol(1), j))
                .as_constant() == bernoulli_number(i) * uniform_moment(j));
    }
}

TEST_CASE("evaluation is linear", "[umbral]") {
  UmbralPoly p = expand_linear_power(variable("x"), {{variable("a1"), bernoulli_symbol(1)}}, 3);
  UmbralPoly q = expand_linear_power(MultiPoly(), {{variable("a2"), uniform_symbol(1)}}, 2);
  CHECK(eval(p + q) == eval(p) + eval(q));
  CHECK(eval(p * Rational(3, 7)) == eval(p) * Rational(3, 7));
}

TEST_CASE("expansion of a weighted symbol power", "[umbral]") {
  const MultiPoly x = variable("x");
  const MultiPoly a1 = variable("a1");
  MultiPoly got = eval(expand_linear_power(x, {{a1, bernoulli_symbol(1)}}, 2));
  CHECK(got == x * x - a1 * x + a1 * a1 * Rational(1, 6));
  CHECK(got.str() == "x^2 - a1*x + 1/6*a1^2");

  CHECK(expand_linear_power(x, {}, 5) == umbra::to_umbral(umbra::pow(x, 5)));
  CHECK(eval(expand_linear_power(MultiPoly(), {{a1, bernoulli_symbol(1)}}, 0)).as_constant() ==
        Rational(1));
  CHECK_THROWS_AS(expand_linear_power(x, {}, -1), std::invalid_argument);
}

TEST_CASE("negation shift law", "[umbral]") {
  // The Bernoulli symbol satisfies eval((B + 1)^k) = eval(B^k) except at
  // k = 1, where the values differ by 1; equivalently
  // eval((-B)^k) = eval((B + 1)^k) for every k.
  for (int k = 0; k <= 12; ++k) {
    Rational shifted =
        eval(expand_linear_power(MultiPoly::constant(Rational(1)),
                                 {{MultiPoly::constant(Rational(1)), bernoulli_symbol(1)}}, k))
            .as_constant();
    Rational negated =
        eval(expand_linear_power(MultiPoly(),
                                 {{MultiPoly::constant(Rational(-1)), bernoulli_symbol(1)}}, k))
            .as_constant();
    Rational plain = bernoulli_number(k);
    CHECK(negated == shifted);
    CHECK(shifted == plain + (k == 1 ? Rational(1) : Rational(0)));
  }
}

TEST_CASE("uniform symbol undoes the Bernoulli symbol", "[umbral]") {
  // eval((x + B + U)^m) = x^m: the uniform moments invert the Bernoulli
  // moments under the umbral product.
  const MultiPoly x = variable("x");
  const MultiPoly one = MultiPoly::constant(Rational(1));
  for (int m = 0; m <= 10; ++m) {
    MultiPoly got = eval(expand_linear_power(
        x, {{one, bernoulli_symbol(1)}, {one, uniform_symbol(1)}}, m));
    CHECK(got == umbra::pow(x, m));
  }
}

TEST_CASE("composition enumeration", "[umbral]") {
  int count = 0;
  int expected_sum = 7;
  for_each_composition(7, 3, [&](const std::vector<int>& m) {
    ++count;
    REQUIRE(m.size() == 3);
    CHECK(m[0] + m[1] + m[2] == expected_sum);
  });
  CHECK(count == 36);  // C(9, 2)

  count = 0;
  for_each_composition(0, 0, [&](const std::vector<int>& m) {
    ++count;
    CHECK(m.empty());
  });
  CHECK(count == 1);

  count = 0;
  for_each_composition(3, 0, [&](const std::vector<int>&) { ++count; });
  CHECK(count == 0);
}

TEST_CASE("moment override replaces exactly one entry", "[umbral]") {
  MomentOverride corrupted(standard_moments(), SymbolKind::bernoulli, 4,
                           bernoulli_number(4) + Rational(1));
  CHECK(corrupted.moment(SymbolKind::bernoulli, 4) == Rational(29, 30));
  CHECK(corrupted.moment(SymbolKind::bernoulli, 2) == Rational(1, 6));
  CHECK(corrupted.moment(SymbolKind::uniform, 4) == Rational(1, 5));

  UmbralPoly p = expand_linear_power(MultiPoly(), {{variable("a1"), bernoulli_symbol(1)}}, 4);
  CHECK(eval(p, corrupted) == umbra::pow(variable("a1"), 4) * Rational(29, 30));
  CHECK(eval(p) == umbra::pow(variable("a1"), 4) * Rational(-1, 30));
}
