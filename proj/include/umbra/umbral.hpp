#pragma once

// Evaluation of umbral polynomials. The whole calculus rests on one linear
// functional: eval replaces each symbol power S^k by the k-th moment of S
// and multiplies moments of DISTINCT symbols independently. Two moment
// families are built in:
//
//   bernoulli:  eval(B^k) = B_k, the Bernoulli numbers with B_1 = -1/2;
//   uniform:    eval(U^k) = 1/(k+1), the moments of Lebesgue measure on
//               [0, 1].
//
// Moments are supplied through a MomentProvider so that a test can inject a
// deliberately corrupted table and confirm the identity checkers notice.

#include <functional>
#include <mutex>
#include <stdexcept>
#include <utility>
#include <vector>

#include "umbra/polynomial.hpp"
#include "umbra/rational.hpp"
#include "umbra/variable.hpp"

namespace umbra {

// B_k via the classical recurrence  sum_{j=0}^{m} C(m+1, j) B_j = 0 for
// m >= 1, i.e.  B_m = -1/(m+1) * sum_{j<m} C(m+1, j) B_j,  with B_0 = 1.
// Process-wide memo table; thread safe.
inline Rational bernoulli_number(int k) {
  if (k < 0) throw std::invalid_argument("bernoulli_number: negative index");
  static std::mutex mu;
  static std::vector<Rational> memo{Rational(1)};
  std::lock_guard<std::mutex> lock(mu);
  while (static_cast<int>(memo.size()) <= k) {
    const int m = static_cast<int>(memo.size());
    Rational acc(0);
    for (int j = 0; j < m; ++j) acc += binomial(m + 1, j) * memo[j];
    memo.push_back(acc * Rational(-1, m + 1));
  }
  return memo[k];
}

// k-th moment of the uniform distribution on [0, 1].
inline Rational uniform_moment(int k) {
  if (k < 0) throw std::invalid_argument("uniform_moment: negative index");
  return Rational(1, k + 1);
}

class MomentProvider {
 public:
  virtual ~MomentProvider() = default;
  virtual Rational moment(SymbolKind kind, int power) const = 0;
};

class StandardMomentProvider final : public MomentProvider {
 public:
  Rational moment(SymbolKind kind, int power) const override {
    switch (kind) {
      case SymbolKind::bernoulli:
        return bernoulli_number(power);
      case SymbolKind::uniform:
        return uniform_moment(power);
    }
    throw std::invalid_argument("moment: unknown symbol kind");
  }
};

inline const MomentProvider& standard_moments() {
  static const StandardMomentProvider p;
  return p;
}

// A provider that agrees with a base provider except at one (kind, power),
// where it returns a chosen value. Used to corrupt a single moment and
// check that the verification suite catches it.
class MomentOverride final : public MomentProvider {
 public:
  MomentOverride(const MomentProvider& base, SymbolKind kind, int power, Rational value)
      : base_(base), kind_(kind), power_(power), value_(std::move(value)) {}

  Rational moment(SymbolKind kind, int power) const override {
    if (kind == kind_ && power == power_) return value_;
    return base_.moment(kind, power);
  }

 private:
  const MomentProvider& base_;
  SymbolKind kind_;
  int power_;
  Rational value_;
};

// Calls fn on every way to write k as an ordered sum of `parts` nonnegative
// integers. fn receives the composition as a vector of length `parts`.
inline void for_each_composition(int k, int parts,
                                 const std::function<void(const std::vector<int>&)>& fn) {
  if (k < 0 || parts < 0) throw std::invalid_argument("for_each_composition: negative input");
  if (parts == 0) {
    if (k == 0) fn({});
    return;
  }
  std::vector<int> m(parts, 0);
  m[0] = k;
  for (;;) {
    fn(m);
    // Next composition in colex-style order: move one unit from the first
    // nonzero entry (other than the last) rightward.
    int i = 0;
    while (i < parts - 1 && m[i] == 0) ++i;
    if (i == parts - 1) break;
    int v = m[i];
    m[i] = 0;
    m[0] = v - 1;
    m[i + 1] += 1;
  }
}

// Expands (constant + sum_i weight_i * symbol_i)^k by the multinomial
// theorem, keeping symbol powers unevaluated. Weights are arbitrary
// polynomials; repeating a symbol in the list is allowed and merges
// exponents.
inline UmbralPoly expand_linear_power(
    const MultiPoly& constant,
    const std::vector<std::pair<MultiPoly, UmbralSymbol>>& weighted_symbols, int k) {
  if (k < 0) throw std::invalid_argument("expand_linear_power: negative power");
  const int r = static_cast<int>(weighted_symbols.size());

  std::vector<MultiPoly> const_pow(k + 1);
  const_pow[0] = MultiPoly::constant(Rational(1));
  for (int j = 1; j <= k; ++j) const_pow[j] = const_pow[j - 1] * constant;

  std::vector<std::vector<MultiPoly>> weight_pow(r);
  for (int i = 0; i < r; ++i) {
    weight_pow[i].resize(k + 1);
    weight_pow[i][0] = MultiPoly::constant(Rational(1));
    for (int j = 1; j <= k; ++j)
      weight_pow[i][j] = weight_pow[i][j - 1] * weighted_symbols[i].first;
  }

  UmbralPoly result;
  for_each_composition(k, r + 1, [&](const std::vector<int>& m) {
    // m[0] exponent for the constant part, m[1..r] for the symbols.
    MultiPoly coeff = const_pow[m[0]];
    if (coeff.is_zero()) return;
    for (int i = 0; i < r; ++i) {
      if (m[i + 1] == 0) continue;
      coeff = coeff * weight_pow[i][m[i + 1]];
      if (coeff.is_zero()) return;
    }
    coeff *= multinomial(k, m);
    UmbralMonomial sym;
    for (int i = 0; i < r; ++i)
      if (m[i + 1] > 0) sym = sym * UmbralMonomial(weighted_symbols[i].second, m[i + 1]);
    for (const auto& [mono, c] : coeff) result.add_term(UmbralMonomial(mono) * sym, c);
  });
  return result;
}

// The evaluation functional. Linear over ordinary-variable coefficients;
// each symbol factor S^e contributes the moment of order e, and distinct
// symbols contribute independently (their moments multiply).
inline MultiPoly eval(const UmbralPoly& p, const MomentProvider& moments = standard_moments()) {
  MultiPoly result;
  for (const auto& [m, c] : p) {
    Rational factor = c;
    for (const auto& [s, e] : m.symbols()) {
      factor *= moments.moment(s.kind, e);
      if (factor.is_zero()) break;
    }
    result.add_term(m.ordinary(), factor);
  }
  return result;
}

}  // namespace umbra
