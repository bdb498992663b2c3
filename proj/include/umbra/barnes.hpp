#pragma once

// Higher-order Bernoulli numbers and polynomials attached to a vector of
// nonzero steps a = (a_1, ..., a_n), defined by the generating function
//
//   prod_j z / (exp(a_j z) - 1)  =  sum_k  B_k(a) z^k / k!,
//
// together with the polynomial version B_j(x; a) (an extra factor
// exp(x z)) and the equal-step specialization B_j^{(n)}(x) at
// a = (1, ..., 1). Three independent routes compute them:
//
//   * umbral evaluation of (a_1 B_1 + ... + a_n B_n)^k,
//   * the multinomial sum over compositions of k,
//   * inversion and multiplication of truncated series.
//
// A context is either numeric (rational steps; results are rationals, and
// the 1/(a_1 ... a_n) division happens for real) or symbolic (the steps
// stay as variables a_i; results are the CLEARED polynomials
//
//   P_k(a) = (a_1 ... a_n) B_k(a),   Q_j(x, a) = (a_1 ... a_n) B_j(x; a),
//
// which live in the polynomial ring and need no division).

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "umbra/polynomial.hpp"
#include "umbra/rational.hpp"
#include "umbra/series.hpp"
#include "umbra/umbral.hpp"
#include "umbra/variable.hpp"

namespace umbra {

class BarnesContext {
 public:
  static BarnesContext symbolic(int n) {
    if (n < 0) throw std::invalid_argument("BarnesContext: negative length");
    BarnesContext c;
    for (int i = 1; i <= n; ++i) c.labels_.push_back(i);
    return c;
  }

  static BarnesContext numeric(std::vector<Rational> a) {
    BarnesContext c;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a[i].is_zero())
        throw std::invalid_argument("BarnesContext: step a_" + std::to_string(i + 1) +
                                    " must be nonzero");
      c.labels_.push_back(static_cast<int>(i) + 1);
    }
    c.values_ = std::move(a);
    c.numeric_ = true;
    return c;
  }

  int count() const { return static_cast<int>(labels_.size()); }
  bool symbolic_mode() const { return !numeric_; }
  const std::vector<int>& labels() const { return labels_; }
  const std::vector<Rational>& values() const {
    require_numeric();
    return values_;
  }

  // Sub-context keeping the steps at the given 0-based positions.
  // Symbolic sub-contexts keep their original variable names (restricting
  // (a_1, a_2, a_3) to {0, 2} yields the steps a_1, a_3).
  BarnesContext restrict_to(const std::vector<int>& positions) const {
    BarnesContext c;
    c.numeric_ = numeric_;
    for (int p : positions) {
      if (p < 0 || p >= count())
        throw std::out_of_range("BarnesContext: position out of range");
      c.labels_.push_back(labels_[p]);
      if (numeric_) c.values_.push_back(values_[p]);
    }
    return c;
  }

  Var param_var(int pos) const {
    require_symbolic();
    return Var("a" + std::to_string(labels_[pos]));
  }

  // The step at `pos` as a polynomial: the variable a_i, or its value.
  MultiPoly param(int pos) const {
    if (pos < 0 || pos >= count())
      throw std::out_of_range("BarnesContext: position out of range");
    if (numeric_) return MultiPoly::constant(values_[pos]);
    return variable(param_var(pos));
  }

  MultiPoly param_sum() const {  // a_1 + ... + a_n
    MultiPoly s;
    for (int i = 0; i < count(); ++i) s += param(i);
    return s;
  }

  MultiPoly param_product() const {  // a_1 * ... * a_n
    MultiPoly p = MultiPoly::constant(Rational(1));
    for (int i = 0; i < count(); ++i) p = p * param(i);
    return p;
  }

  Rational value_sum() const {
    require_numeric();
    Rational s(0);
    for (const auto& v : values_) s += v;
    return s;
  }

  Rational value_product() const {
    require_numeric();
    Rational p(1);
    for (const auto& v : values_) p *= v;
    return p;
  }

 private:
  void require_numeric() const {
    if (!numeric_) throw std::logic_error("BarnesContext: symbolic context has no values");
  }
  void require_symbolic() const {
    if (numeric_) throw std::logic_error("BarnesContext: numeric context has no variables");
  }

  std::vector<int> labels_;       // ascending, distinct; label i names a_i / B_i
  std::vector<Rational> values_;  // aligned with labels_ in numeric mode
  bool numeric_ = false;
};

// (weight_1 B_1 + ... + weight_n B_n) with one independent Bernoulli symbol
// per step, indexed by the context labels.
inline std::vector<std::pair<MultiPoly, UmbralSymbol>> bernoulli_weights(
    const BarnesContext& ctx) {
  std::vector<std::pair<MultiPoly, UmbralSymbol>> w;
  for (int i = 0; i < ctx.count(); ++i)
    w.emplace_back(ctx.param(i), bernoulli_symbol(ctx.labels()[i]));
  return w;
}

// Umbral route. Symbolic: the cleared number P_k(a) = eval((a.B)^k).
// Numeric: B_k(a) = eval((a.B)^k) / (a_1 ... a_n), as a constant.
inline MultiPoly bb_number_umbral(int k, const BarnesContext& ctx,
                                  const MomentProvider& moments = standard_moments()) {
  if (k < 0) throw std::invalid_argument("bb_number_umbral: negative order");
  MultiPoly raw = eval(expand_linear_power(MultiPoly(), bernoulli_weights(ctx), k), moments);
  if (ctx.symbolic_mode()) return raw;
  return MultiPoly::constant(raw.as_constant() / ctx.value_product());
}

// Multinomial route: the sum over compositions m_1 + ... + m_n = k of
// C(k; m) B_{m_1} ... B_{m_n} a_1^{m_1} ... a_n^{m_n}, same normalization
// as the umbral route.
inline MultiPoly bb_number_multinomial(int k, const BarnesContext& ctx,
                                       const MomentProvider& moments = standard_moments()) {
  if (k < 0) throw std::invalid_argument("bb_number_multinomial: negative order");
  const int n = ctx.count();
  MultiPoly cleared;
  for_each_composition(k, n, [&](const std::vector<int>& m) {
    Rational c = multinomial(k, m);
    for (int i = 0; i < n && !c.is_zero(); ++i)
      c *= moments.moment(SymbolKind::bernoulli, m[i]);
    if (c.is_zero()) return;
    MultiPoly term = MultiPoly::constant(c);
    for (int i = 0; i < n; ++i)
      if (m[i] > 0) term = term * pow(ctx.param(i), m[i]);
    cleared += term;
  });
  if (ctx.symbolic_mode()) return cleared;
  return MultiPoly::constant(cleared.as_constant() / ctx.value_product());
}

// Series route: the truncated generating function, coefficientwise.
// Symbolic: prod_j inverse((exp(a_j z) - 1) / (a_j z)), whose k-th EGF
// coefficient is the cleared P_k(a). Numeric: the same divided by
// a_1 ... a_n, with k-th EGF coefficient B_k(a).
inline TruncatedSeries bb_series(const BarnesContext& ctx, int order) {
  TruncatedSeries s = TruncatedSeries::one(order);
  for (int i = 0; i < ctx.count(); ++i)
    s = s * inverse(TruncatedSeries::egf_unit_factor(ctx.param(i), order));
  if (!ctx.symbolic_mode()) s = s * (Rational(1) / ctx.value_product());
  return s;
}

// Polynomial version, umbral route. Symbolic: the cleared
// Q_j(x, a) = eval((x + a.B)^j). Numeric: B_j(x; a), a polynomial in x.
inline MultiPoly bb_polynomial(int j, const BarnesContext& ctx,
                               const MomentProvider& moments = standard_moments()) {
  if (j < 0) throw std::invalid_argument("bb_polynomial: negative order");
  MultiPoly raw =
      eval(expand_linear_power(variable("x"), bernoulli_weights(ctx), j), moments);
  if (ctx.symbolic_mode()) return raw;
  return raw * (Rational(1) / ctx.value_product());
}

// B_j^{(n)}(x): the equal-step case a = (1, ..., 1) of length n, with
// B_j^{(0)}(x) = x^j.
inline MultiPoly norlund_polynomial(int j, int n,
                                    const MomentProvider& moments = standard_moments()) {
  if (n < 0) throw std::invalid_argument("norlund_polynomial: negative length");
  return bb_polynomial(j, BarnesContext::numeric(std::vector<Rational>(n, Rational(1))),
                       moments);
}

// B_j^{(n)}(x0) as a number.
inline Rational norlund_value(int j, int n, const Rational& x0,
                              const MomentProvider& moments = standard_moments()) {
  return eval_at(norlund_polynomial(j, n, moments), {{Var("x"), x0}});
}

// The binomial transform s*_m = sum_k C(m, k) (-1)^k s_k. Applying it
// twice gives back the original sequence.
inline std::vector<Rational> dual_transform(const std::vector<Rational>& s) {
  std::vector<Rational> d(s.size());
  for (std::size_t m = 0; m < s.size(); ++m) {
    Rational acc(0);
    for (std::size_t k = 0; k <= m; ++k) {
      Rational t = binomial(static_cast<int>(m), static_cast<int>(k)) * s[k];
      acc += (k % 2 == 0) ? t : -t;
    }
    d[m] = acc;
  }
  return d;
}

using DualSequence = std::vector<MultiPoly>;

inline DualSequence dual_transform(const DualSequence& s) {
  DualSequence d(s.size());
  for (std::size_t m = 0; m < s.size(); ++m) {
    MultiPoly acc;
    for (std::size_t k = 0; k <= m; ++k) {
      Rational c = binomial(static_cast<int>(m), static_cast<int>(k));
      acc += s[k] * ((k % 2 == 0) ? c : -c);
    }
    d[m] = acc;
  }
  return d;
}

// The sequence p_m = (-1)^m (a_1 + ... + a_n)^{-m} B_m(a) for m = 0 .. N,
// which is its own binomial transform. Numeric mode requires
// a_1 + ... + a_n != 0 and performs the divisions; symbolic mode returns
// the cleared entries (-1)^m P_m(a) instead (no division is possible in
// the ring, so the A^{-m} and 1/(a_1...a_n) normalizations are omitted).
inline DualSequence p_sequence(const BarnesContext& ctx, int N,
                               const MomentProvider& moments = standard_moments()) {
  if (N < 0) throw std::invalid_argument("p_sequence: negative length");
  DualSequence s;
  s.reserve(N + 1);
  if (ctx.symbolic_mode()) {
    for (int m = 0; m <= N; ++m) {
      MultiPoly p = bb_number_umbral(m, ctx, moments);
      s.push_back(m % 2 == 0 ? p : p * Rational(-1));
    }
    return s;
  }
  const Rational A = ctx.value_sum();
  if (A.is_zero())
    throw std::domain_error("p_sequence: a_1 + ... + a_n must be nonzero");
  for (int m = 0; m <= N; ++m) {
    Rational v = bb_number_umbral(m, ctx, moments).as_constant() / pow(A, m);
    s.push_back(MultiPoly::constant(m % 2 == 0 ? v : -v));
  }
  return s;
}

}  // namespace umbra
