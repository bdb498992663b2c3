#pragma once

// Identity verification layer.
//
// Every checker proves (or refutes, with a witness) one polynomial identity
// about Bernoulli-Barnes numbers/polynomials, exactly over the rationals.
//
// Two modes, decided by the BarnesContext:
//   * symbolic  — steps a_1..a_n are indeterminates.  Checkers verify the
//     denominator-cleared form of each identity (multiplied through by
//     |a| = a_1...a_n and, where a 1/A factor appears, by A = a_1+...+a_n)
//     so both sides live in the polynomial ring Q[x, a_1..a_n].
//   * numeric   — steps are fixed rationals.  Checkers evaluate the divided
//     formulas as displayed (1/|a|, 1/A factors and all) so the division
//     paths are exercised.
//
// All moments flow through the MomentProvider held by the Verifier, so a
// corrupted provider (mutation testing) propagates into every route.

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <functional>
#include <map>
#include <mutex>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "umbra/barnes.hpp"

namespace umbra {

// ---------------------------------------------------------------------------
// Reports

// First monomial (in canonical term order) on which the two sides disagree.
struct Witness {
  std::string monomial;
  Rational lhs_coeff;
  Rational rhs_coeff;
};

struct IdentityReport {
  std::string identity;                              // stable identity id
  std::vector<std::pair<std::string, int>> params;   // e.g. {{"m",3},{"n",3}}
  std::vector<Rational> steps;    // numeric instance steps; empty => symbolic
  std::vector<Rational> weights;  // palindromic weight vector, when relevant
  MultiPoly lhs;                  // canonical form of the left-hand side
  MultiPoly rhs;                  // canonical form of the right-hand side
  bool passed = false;
  std::optional<Witness> witness;  // set iff !passed
};

inline std::optional<Witness> first_difference(const MultiPoly& lhs,
                                               const MultiPoly& rhs) {
  MultiPoly diff = lhs - rhs;
  if (diff.is_zero()) return std::nullopt;
  const auto& [mono, coeff] = *diff.begin();
  (void)coeff;
  return Witness{mono.is_unit() ? std::string("1") : mono.str(),
                 lhs.coefficient(mono), rhs.coefficient(mono)};
}

// ---------------------------------------------------------------------------
// Palindromic weight vectors (alpha_j = alpha_{n-j}) for the generalized
// vanishing identity.

class PalindromicWeights {
 public:
  explicit PalindromicWeights(std::vector<Rational> alpha)
      : alpha_(std::move(alpha)) {
    if (alpha_.empty())
      throw std::invalid_argument("PalindromicWeights: empty weight vector");
    const int n = order();
    for (int j = 0; 2 * j <= n; ++j) {
      if (!(alpha_[static_cast<std::size_t>(j)] ==
            alpha_[static_cast<std::size_t>(n - j)]))
        throw std::invalid_argument(
            "PalindromicWeights: weights are not palindromic");
    }
  }

  // The window alpha_j = C(n-4, j-2) for 2 <= j <= n-2, else 0.  Palindromic
  // because C(n-4, j-2) = C(n-4, (n-j)-2); reproduces the binomial weights of
  // the flagship vanishing identity.
  static PalindromicWeights binomial_window(int n) {
    if (n < 0) throw std::invalid_argument("binomial_window: negative order");
    std::vector<Rational> alpha(static_cast<std::size_t>(n) + 1, Rational(0));
    for (int j = 2; j <= n - 2; ++j)
      alpha[static_cast<std::size_t>(j)] = binomial(n - 4, j - 2);
    return PalindromicWeights(std::move(alpha));
  }

  int order() const { return static_cast<int>(alpha_.size()) - 1; }  // n
  const Rational& at(int j) const {
    return alpha_.at(static_cast<std::size_t>(j));
  }
  const std::vector<Rational>& values() const { return alpha_; }

 private:
  std::vector<Rational> alpha_;
};

// ---------------------------------------------------------------------------
// Verifier

class Verifier {
 public:
  explicit Verifier(const MomentProvider& moments = standard_moments())
      : moments_(moments) {}

  Verifier(const Verifier&) = delete;
  Verifier& operator=(const Verifier&) = delete;

  const MomentProvider& moments() const { return moments_; }

  // (-1)^m B_m(-x; a) - B_m(x; a)
  //   = m! * sum_{l=0}^{n-1} sum_{|L|=l} B_{m-n+l}(x; a_L) / (m-n+l)!
  // over all proper subsets L of the step multiset (terms with a negative
  // factorial index vanish).  Cleared form multiplies through by |a|, turning
  // each right-hand term into |a|_{L*} * Q_{m-n+l}(x; a_L).
  IdentityReport check_difference_formula(int m, const BarnesContext& ctx) {
    require_nonneg(m, "difference_formula");
    const int n = ctx.count();
    if (n < 1)
      throw std::invalid_argument(
          "difference_formula: needs at least one step");
    const MultiPoly qm = poly_term(m, all_positions(n), ctx);
    MultiPoly lhs = sign(m) * substitute(qm, Var("x"), neg_x()) - qm;

    MultiPoly rhs;
    const Rational mfact{factorial(m)};
    for_each_subset(n, [&](const std::vector<int>& inside,
                           const std::vector<int>& outside) {
      if (static_cast<int>(inside.size()) == n) return;  // proper subsets only
      const int j = m - n + static_cast<int>(inside.size());
      if (j < 0) return;
      MultiPoly term = poly_term(j, inside, ctx);
      if (ctx.symbolic_mode()) term = product_over(outside, ctx) * term;
      rhs += (mfact / Rational{factorial(j)}) * term;
    });
    return finish("difference_formula", {{"m", m}, {"n", n}}, ctx,
                  std::move(lhs), std::move(rhs));
  }

  // B_m(x + A; a) = (-1)^m B_m(-x; a)  with  A = a_1 + ... + a_n.
  IdentityReport check_reflection(int m, const BarnesContext& ctx) {
    require_nonneg(m, "reflection");
    const int n = ctx.count();
    const MultiPoly qm = poly_term(m, all_positions(n), ctx);
    MultiPoly shifted = variable("x") + ctx.param_sum();
    MultiPoly lhs = substitute(qm, Var("x"), shifted);
    MultiPoly rhs = sign(m) * substitute(qm, Var("x"), neg_x());
    return finish("reflection", {{"m", m}, {"n", n}}, ctx, std::move(lhs),
                  std::move(rhs));
  }

  // For f = x^m (scaled by m! so both sides stay division-free):
  //   f(x - a.B) = sum_{j=0}^{n} sum_{|J|=j} |a|_{J*} f^{(n-j)}(x + (a.B)_J)
  // where f^{(n-j)}(u) = m!/(m-n+j)! * u^{m-n+j}  (zero if the exponent is
  // negative).  Identical formula in both modes: no divisions appear.
  IdentityReport check_general_expansion(int m, const BarnesContext& ctx) {
    require_nonneg(m, "general_expansion");
    const int n = ctx.count();

    std::vector<std::pair<MultiPoly, UmbralSymbol>> neg_weights;
    for (int i = 0; i < n; ++i)
      neg_weights.emplace_back(ctx.param(i) * Rational(-1),
                               bernoulli_symbol(ctx.labels()[i]));
    MultiPoly lhs =
        eval(expand_linear_power(variable("x"), neg_weights, m), moments_);

    MultiPoly rhs;
    for_each_subset(n, [&](const std::vector<int>& inside,
                           const std::vector<int>& outside) {
      const int e = m - n + static_cast<int>(inside.size());
      if (e < 0) return;
      MultiPoly term = raw_poly(e, inside, ctx);
      rhs += Rational{factorial_ratio(m, e)} * product_over(outside, ctx) *
             term;
    });
    return finish("general_expansion", {{"m", m}, {"n", n}}, ctx,
                  std::move(lhs), std::move(rhs));
  }

  // eval((x + A + a.B)^m) = eval((x - a.B)^m): the umbral shift-negation law
  // -B ~ B + 1 lifted to multiple steps.  Division-free in both modes.
  IdentityReport check_shift_negation(int m, const BarnesContext& ctx) {
    require_nonneg(m, "shift_negation");
    const int n = ctx.count();
    std::vector<std::pair<MultiPoly, UmbralSymbol>> pos, neg;
    for (int i = 0; i < n; ++i) {
      const UmbralSymbol s = bernoulli_symbol(ctx.labels()[i]);
      pos.emplace_back(ctx.param(i), s);
      neg.emplace_back(ctx.param(i) * Rational(-1), s);
    }
    MultiPoly lhs = eval(
        expand_linear_power(variable("x") + ctx.param_sum(), pos, m), moments_);
    MultiPoly rhs =
        eval(expand_linear_power(variable("x"), neg, m), moments_);
    return finish("shift_negation", {{"m", m}, {"n", n}}, ctx, std::move(lhs),
                  std::move(rhs));
  }

  // (x+a)^m - x^m = a * m * eval((x + a U)^{m-1}): the uniform umbra turns a
  // forward difference into a derivative-style evaluation.  Single step.
  IdentityReport check_uniform_ftc(int m, const BarnesContext& ctx) {
    require_nonneg(m, "uniform_ftc");
    if (ctx.count() != 1)
      throw std::invalid_argument("uniform_ftc: needs exactly one step");
    const MultiPoly a = ctx.param(0);
    const MultiPoly xm = pow(variable("x"), m);
    MultiPoly lhs = substitute(xm, Var("x"), variable("x") + a) - xm;
    MultiPoly rhs;
    if (m >= 1) {
      std::vector<std::pair<MultiPoly, UmbralSymbol>> w{
          {a, uniform_symbol(ctx.labels()[0])}};
      rhs = a * Rational(m) *
            eval(expand_linear_power(variable("x"), w, m - 1), moments_);
    }
    return finish("uniform_ftc", {{"m", m}}, ctx, std::move(lhs),
                  std::move(rhs));
  }

  // Delta_{a_1} ... Delta_{a_n} x^m
  //   = a_1...a_n * m!/(m-n)! * eval((x + a_1 U_1 + ... + a_n U_n)^{m-n})
  // (both sides zero when m < n).  Independent uniform umbrae, one per step.
  IdentityReport check_multi_uniform_difference(int m,
                                                const BarnesContext& ctx) {
    require_nonneg(m, "multi_uniform_difference");
    const int n = ctx.count();
    MultiPoly lhs = pow(variable("x"), m);
    for (int i = 0; i < n; ++i)
      lhs = substitute(lhs, Var("x"), variable("x") + ctx.param(i)) - lhs;
    MultiPoly rhs;
    if (m >= n) {
      std::vector<std::pair<MultiPoly, UmbralSymbol>> w;
      for (int i = 0; i < n; ++i)
        w.emplace_back(ctx.param(i), uniform_symbol(ctx.labels()[i]));
      rhs = ctx.param_product() * Rational{factorial_ratio(m, m - n)} *
            eval(expand_linear_power(variable("x"), w, m - n), moments_);
    }
    return finish("multi_uniform_difference", {{"m", m}, {"n", n}}, ctx,
                  std::move(lhs), std::move(rhs));
  }

  // Entry j of the binomial dual of p_k = (-1)^k A^{-k} B_k(a) equals p_j:
  //   sum_{k=0}^{j} C(j,k) (-1)^k p_k = p_j.
  // Cleared (multiply by A^j |a|):  sum_k C(j,k) A^{j-k} P_k = (-1)^j P_j.
  // Numeric mode computes the divided p_k directly (requires A != 0).
  IdentityReport check_self_dual(int j, const BarnesContext& ctx) {
    require_nonneg(j, "self_dual");
    const int n = ctx.count();
    MultiPoly lhs, rhs;
    if (ctx.symbolic_mode()) {
      for (int k = 0; k <= j; ++k)
        lhs += binomial(j, k) * a_power(j - k, ctx) *
               number_term(k, all_positions(n), ctx);
      rhs = sign(j) * number_term(j, all_positions(n), ctx);
    } else {
      const DualSequence p = p_sequence(ctx, j, moments_);
      for (int k = 0; k <= j; ++k)
        lhs += binomial(j, k) * sign(k) * p[static_cast<std::size_t>(k)];
      rhs = p[static_cast<std::size_t>(j)];
    }
    return finish("self_dual", {{"j", j}, {"n", n}}, ctx, std::move(lhs),
                  std::move(rhs));
  }

  // First symmetry law:
  //   (-1)^m sum_{k=0}^{m} C(m,k) A^{m-k} B_{l+k}(x; a)
  //     = (-1)^l sum_{k=0}^{l} C(l,k) A^{l-k} B_{m+k}(-x; a).
  IdentityReport check_symmetry_1(int l, int m, const BarnesContext& ctx) {
    require_nonneg(l, "symmetry_1");
    require_nonneg(m, "symmetry_1");
    const int n = ctx.count();
    const std::vector<int> all = all_positions(n);
    MultiPoly lhs, rhs;
    for (int k = 0; k <= m; ++k)
      lhs += binomial(m, k) * a_power(m - k, ctx) * poly_term(l + k, all, ctx);
    lhs = sign(m) * lhs;
    for (int k = 0; k <= l; ++k)
      rhs += binomial(l, k) * a_power(l - k, ctx) *
             substitute(poly_term(m + k, all, ctx), Var("x"), neg_x());
    rhs = sign(l) * rhs;
    return finish("symmetry_1", {{"l", l}, {"m", m}, {"n", n}}, ctx,
                  std::move(lhs), std::move(rhs));
  }

  // Second symmetry law (corrected: the second sum evaluates at -x; the
  // uncorrected variant fails already at l=0, m=1, n=1, a=(1)):
  //   (-1)^m/(m+l+2) sum_{k=0}^{m} C(m+1,k)(l+k+1) A^{m+1-k} B_{l+k}(x; a)
  // + (-1)^l/(m+l+2) sum_{k=0}^{l} C(l+1,k)(m+k+1) A^{l+1-k} B_{m+k}(-x; a)
  //   = (-1)^{m+1} B_{l+m+1}(x; a) + (-1)^{l+1} B_{l+m+1}(-x; a).
  IdentityReport check_symmetry_2(int l, int m, const BarnesContext& ctx) {
    require_nonneg(l, "symmetry_2");
    require_nonneg(m, "symmetry_2");
    const int n = ctx.count();
    const std::vector<int> all = all_positions(n);
    const Rational pref{1, static_cast<long long>(m) + l + 2};

    MultiPoly sum1, sum2;
    for (int k = 0; k <= m; ++k)
      sum1 += binomial(m + 1, k) * Rational(l + k + 1) *
              a_power(m + 1 - k, ctx) * poly_term(l + k, all, ctx);
    for (int k = 0; k <= l; ++k)
      sum2 += binomial(l + 1, k) * Rational(m + k + 1) *
              a_power(l + 1 - k, ctx) *
              substitute(poly_term(m + k, all, ctx), Var("x"), neg_x());
    MultiPoly lhs = sign(m) * pref * sum1 + sign(l) * pref * sum2;

    const MultiPoly top = poly_term(l + m + 1, all, ctx);
    MultiPoly rhs = sign(m + 1) * top +
                    sign(l + 1) * substitute(top, Var("x"), neg_x());
    return finish("symmetry_2", {{"l", l}, {"m", m}, {"n", n}}, ctx,
                  std::move(lhs), std::move(rhs));
  }

  // Odd-index recurrence:
  //   B_{2m+1}(a) =
  //     -1/(2(m+1)) sum_{k=0}^{m} C(m+1,k)(m+k+1) A^{m+1-k} B_{m+k}(a).
  IdentityReport check_odd_recurrence(int m, const BarnesContext& ctx) {
    require_nonneg(m, "odd_recurrence");
    const int n = ctx.count();
    const std::vector<int> all = all_positions(n);
    MultiPoly lhs = number_term(2 * m + 1, all, ctx);
    MultiPoly sum;
    for (int k = 0; k <= m; ++k)
      sum += binomial(m + 1, k) * Rational(m + k + 1) *
             a_power(m + 1 - k, ctx) * number_term(m + k, all, ctx);
    MultiPoly rhs = Rational(-1, 2 * (static_cast<long long>(m) + 1)) * sum;
    return finish("odd_recurrence", {{"m", m}, {"n", n}}, ctx, std::move(lhs),
                  std::move(rhs));
  }

  // Even-index recurrence:
  //   B_{2m}(a) =
  //     -1/((m+1)(2m+1)) sum_{k=0}^{m-1} C(m+1,k)(m+k+1) A^{m-k} B_{m+k}(a)
  //   + (2m)!/A sum_{k=0}^{n-1} sum_{|I|=k} B_{2m+1-n+k}(a_I) / (2m+1-n+k)!.
  // Symbolic mode clears the lone 1/A by multiplying both sides by A (the
  // |a| clearing is already built into the P/Q terms); numeric mode needs
  // A != 0.
  IdentityReport check_even_recurrence(int m, const BarnesContext& ctx) {
    require_nonneg(m, "even_recurrence");
    const int n = ctx.count();
    if (n < 1)
      throw std::invalid_argument("even_recurrence: needs at least one step");
    const std::vector<int> all = all_positions(n);
    const Rational inner_pref{-1, (static_cast<long long>(m) + 1) *
                                      (2 * static_cast<long long>(m) + 1)};
    const Rational two_m_fact{factorial(2 * m)};

    MultiPoly inner;
    for (int k = 0; k <= m - 1; ++k)
      inner += binomial(m + 1, k) * Rational(m + k + 1) *
               a_power(m - k, ctx) * number_term(m + k, all, ctx);

    MultiPoly tail;
    for_each_subset(n, [&](const std::vector<int>& inside,
                           const std::vector<int>& outside) {
      if (static_cast<int>(inside.size()) == n) return;  // |I| <= n-1
      const int j = 2 * m + 1 - n + static_cast<int>(inside.size());
      if (j < 0) return;
      MultiPoly term = number_term(j, inside, ctx);
      if (ctx.symbolic_mode()) term = product_over(outside, ctx) * term;
      tail += (Rational(1) / Rational{factorial(j)}) * term;
    });

    MultiPoly lhs, rhs;
    if (ctx.symbolic_mode()) {
      const MultiPoly a_sum = ctx.param_sum();
      lhs = a_sum * number_term(2 * m, all, ctx);
      rhs = inner_pref * a_sum * inner + two_m_fact * tail;
    } else {
      const Rational a_sum = ctx.value_sum();
      if (a_sum.is_zero())
        throw std::domain_error(
            "even_recurrence: steps must not sum to zero in numeric mode");
      lhs = number_term(2 * m, all, ctx);
      rhs = inner_pref * inner +
            MultiPoly::constant(two_m_fact / a_sum) * tail;
    }
    return finish("even_recurrence", {{"m", m}, {"n", n}}, ctx, std::move(lhs),
                  std::move(rhs));
  }

  // Flagship vanishing identity (m odd, n >= 3):
  //   sum_{j} C(n+j-4, j-2) 1/(m-n+j)! sum_{|J|=j} B_{m-n+j}(a_J)
  //     = 1/2 if (m,n) = (3,3), else 0.
  IdentityReport check_main_identity(int m, const BarnesContext& ctx) {
    const int n = ctx.count();
    if (n < 3)
      throw std::invalid_argument("main_identity: needs at least three steps");
    if (m < 1 || m % 2 == 0)
      throw std::invalid_argument("main_identity: m must be odd and >= 1");

    MultiPoly lhs;
    for_each_subset(n, [&](const std::vector<int>& inside,
                           const std::vector<int>& outside) {
      const int j = static_cast<int>(inside.size());
      const Rational c = binomial(n + j - 4, j - 2);
      if (c.is_zero()) return;
      const int e = m - n + j;
      if (e < 0) return;
      MultiPoly term = number_term(e, inside, ctx);
      if (ctx.symbolic_mode()) term = product_over(outside, ctx) * term;
      lhs += (c / Rational{factorial(e)}) * term;
    });

    const Rational value =
        (m == 3 && n == 3) ? Rational(1, 2) : Rational(0);
    MultiPoly rhs = ctx.symbolic_mode()
                        ? ctx.param_product() * value
                        : MultiPoly::constant(value);
    return finish("main_identity", {{"m", m}, {"n", n}}, ctx, std::move(lhs),
                  std::move(rhs));
  }

  // Generalized vanishing: for palindromic weights alpha_j = alpha_{n-j} and
  // odd m,
  //   sum_{j=0}^{n} alpha_j sum_{|J|=j} eval(((a.B)_J - (a.B)_{J*})^m) = 0.
  // Division-free; identical in both modes.
  IdentityReport check_palindromic_general(const PalindromicWeights& w, int m,
                                           const BarnesContext& ctx) {
    const int n = ctx.count();
    if (w.order() != n)
      throw std::invalid_argument(
          "palindromic_general: weight vector length must be step count + 1");
    if (m < 1 || m % 2 == 0)
      throw std::invalid_argument(
          "palindromic_general: m must be odd and >= 1");

    MultiPoly lhs;
    for_each_subset(n, [&](const std::vector<int>& inside,
                           const std::vector<int>& outside) {
      const Rational& alpha = w.at(static_cast<int>(inside.size()));
      if (alpha.is_zero()) return;
      std::vector<std::pair<MultiPoly, UmbralSymbol>> wts;
      for (int i : inside)
        wts.emplace_back(ctx.param(i), bernoulli_symbol(ctx.labels()[i]));
      for (int i : outside)
        wts.emplace_back(ctx.param(i) * Rational(-1),
                         bernoulli_symbol(ctx.labels()[i]));
      lhs += alpha * eval(expand_linear_power(MultiPoly(), wts, m), moments_);
    });
    return finish("palindromic_general", {{"m", m}, {"n", n}}, ctx,
                  std::move(lhs), MultiPoly(), w.values());
  }

  // Equal-step (all steps 1) recurrences, 0 <= r <= p-1.  Both arrangements
  // must hold:
  //  (i)  B_r^{(p+1)}(p)/r! = sum_{k=1}^{r+1} 1/k B_{r+1-k}^{(p+1-k)}(p-k)
  //                               / (r+1-k)!
  //  (ii) B_r^{(p+1)}(p)/r! - B_r^{(p)}(p-1)/r!
  //         = sum_{k=1}^{r} 1/(k+1) B_{r-k}^{(p-k)}(p-1-k) / (r-k)!
  // Form (ii) follows from (i) by splitting off the k=1 term and reindexing;
  // the evaluation point is p-1-k (a p+1-k variant fails at r=2, p=3).
  IdentityReport check_norlund_recurrence(int r, int p) {
    if (p < 1 || r < 0 || r > p - 1)
      throw std::invalid_argument(
          "norlund_recurrence: requires p >= 1 and 0 <= r <= p-1");
    const auto v = [&](int j, int order, int x0) {
      return norlund_value(j, order, Rational(x0), moments_);
    };

    const Rational lhs1 = v(r, p + 1, p) / Rational{factorial(r)};
    Rational rhs1;
    for (int k = 1; k <= r + 1; ++k)
      rhs1 = rhs1 + Rational(1, k) * v(r + 1 - k, p + 1 - k, p - k) /
                        Rational{factorial(r + 1 - k)};

    const Rational lhs2 = lhs1 - v(r, p, p - 1) / Rational{factorial(r)};
    Rational rhs2;
    for (int k = 1; k <= r; ++k)
      rhs2 = rhs2 + Rational(1, k + 1) * v(r - k, p - k, p - 1 - k) /
                        Rational{factorial(r - k)};

    IdentityReport rep;
    rep.identity = "norlund_recurrence";
    rep.params = {{"p", p}, {"r", r}};
    const bool ok1 = lhs1 == rhs1;
    const bool ok2 = lhs2 == rhs2;
    rep.passed = ok1 && ok2;
    // Report the first failing arrangement, or arrangement (i) when both hold.
    const Rational& l = ok1 ? (ok2 ? lhs1 : lhs2) : lhs1;
    const Rational& rr = ok1 ? (ok2 ? rhs1 : rhs2) : rhs1;
    rep.lhs = MultiPoly::constant(l);
    rep.rhs = MultiPoly::constant(rr);
    if (!rep.passed) rep.witness = first_difference(rep.lhs, rep.rhs);
    return rep;
  }

 private:
  // --- shared plumbing ---

  static void require_nonneg(int m, const char* who) {
    if (m < 0)
      throw std::invalid_argument(std::string(who) +
                                  ": index must be nonnegative");
  }

  static MultiPoly neg_x() { return variable("x") * Rational(-1); }
  static Rational sign(int m) { return (m % 2 == 0) ? Rational(1) : Rational(-1); }

  static std::vector<int> all_positions(int n) {
    std::vector<int> v(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = i;
    return v;
  }

  // Calls fn(inside, outside) for every subset of {0..n-1}, in increasing
  // bitmask order (deterministic; sums do not depend on the order).
  template <typename Fn>
  static void for_each_subset(int n, Fn&& fn) {
    const unsigned long total = 1ul << n;
    std::vector<int> inside, outside;
    for (unsigned long mask = 0; mask < total; ++mask) {
      inside.clear();
      outside.clear();
      for (int i = 0; i < n; ++i) {
        if (mask & (1ul << i))
          inside.push_back(i);
        else
          outside.push_back(i);
      }
      fn(static_cast<const std::vector<int>&>(inside),
         static_cast<const std::vector<int>&>(outside));
    }
  }

  // Product of the step parameters at the given positions (symbolic:
  // monomial in the a_i; numeric: constant).  This is |a|_{L*} when called
  // with the complement of L.
  static MultiPoly product_over(const std::vector<int>& positions,
                                const BarnesContext& ctx) {
    MultiPoly prod = MultiPoly::constant(Rational(1));
    for (int i : positions) prod = prod * ctx.param(i);
    return prod;
  }

  // eval((x + sum_{i in pos} a_i B_i)^j): the cleared polynomial
  // Q_j(x; a_pos) = |a_pos| B_j(x; a_pos).  Division-free, cached when
  // symbolic.
  MultiPoly raw_poly(int j, const std::vector<int>& pos,
                     const BarnesContext& ctx) {
    if (ctx.symbolic_mode()) {
      return cached(q_cache_, cache_key(j, pos, ctx), [&] {
        return raw_poly_compute(j, pos, ctx, /*include_x=*/true);
      });
    }
    return raw_poly_compute(j, pos, ctx, /*include_x=*/true);
  }

  // eval((sum_{i in pos} a_i B_i)^k): the cleared number
  // P_k(a_pos) = |a_pos| B_k(a_pos).
  MultiPoly raw_number(int k, const std::vector<int>& pos,
                       const BarnesContext& ctx) {
    if (ctx.symbolic_mode()) {
      return cached(p_cache_, cache_key(k, pos, ctx), [&] {
        return raw_poly_compute(k, pos, ctx, /*include_x=*/false);
      });
    }
    return raw_poly_compute(k, pos, ctx, /*include_x=*/false);
  }

  MultiPoly raw_poly_compute(int j, const std::vector<int>& pos,
                             const BarnesContext& ctx, bool include_x) {
    std::vector<std::pair<MultiPoly, UmbralSymbol>> wts;
    for (int i : pos)
      wts.emplace_back(ctx.param(i), bernoulli_symbol(ctx.labels()[i]));
    const MultiPoly base = include_x ? variable("x") : MultiPoly();
    return eval(expand_linear_power(base, wts, j), moments_);
  }

  // The polynomial B_j(x; a_pos) in the identity's own normalization:
  // symbolic mode substitutes the cleared Q form, numeric mode performs the
  // 1/|a_pos| division for real.
  MultiPoly poly_term(int j, const std::vector<int>& pos,
                      const BarnesContext& ctx) {
    if (ctx.symbolic_mode()) return raw_poly(j, pos, ctx);
    return bb_polynomial(j, ctx.restrict_to(pos), moments_);
  }

  // Likewise for the number B_k(a_pos) (cleared P form vs divided value).
  MultiPoly number_term(int k, const std::vector<int>& pos,
                        const BarnesContext& ctx) {
    if (ctx.symbolic_mode()) return raw_number(k, pos, ctx);
    return MultiPoly::constant(
        bb_number_umbral(k, ctx.restrict_to(pos), moments_).as_constant());
  }

  // (a_1 + ... + a_n)^e, cached in symbolic mode.
  MultiPoly a_power(int e, const BarnesContext& ctx) {
    if (!ctx.symbolic_mode()) return pow(ctx.param_sum(), e);
    return cached(apow_cache_, cache_key(e, all_positions(ctx.count()), ctx),
                  [&] { return pow(ctx.param_sum(), e); });
  }

  using CacheKey = std::pair<std::vector<int>, int>;
  using Cache = std::map<CacheKey, MultiPoly>;

  static CacheKey cache_key(int order, const std::vector<int>& pos,
                            const BarnesContext& ctx) {
    std::vector<int> labels;
    labels.reserve(pos.size());
    for (int i : pos) labels.push_back(ctx.labels()[i]);
    return {std::move(labels), order};
  }

  template <typename Make>
  MultiPoly cached(Cache& cache, CacheKey key, Make&& make) {
    {
      std::lock_guard<std::mutex> lock(mu_);
      auto it = cache.find(key);
      if (it != cache.end()) return it->second;
    }
    MultiPoly value = make();  // computed outside the lock; races are benign
    std::lock_guard<std::mutex> lock(mu_);
    auto [it, inserted] = cache.emplace(std::move(key), std::move(value));
    return it->second;
  }

  IdentityReport finish(std::string id,
                        std::vector<std::pair<std::string, int>> params,
                        const BarnesContext& ctx, MultiPoly lhs, MultiPoly rhs,
                        std::vector<Rational> weights = {}) {
    IdentityReport rep;
    rep.identity = std::move(id);
    rep.params = std::move(params);
    if (!ctx.symbolic_mode()) rep.steps = ctx.values();
    rep.weights = std::move(weights);
    rep.passed = lhs == rhs;
    if (!rep.passed) rep.witness = first_difference(lhs, rhs);
    rep.lhs = std::move(lhs);
    rep.rhs = std::move(rhs);
    return rep;
  }

  const MomentProvider& moments_;
  std::mutex mu_;
  Cache q_cache_, p_cache_, apow_cache_;
};

// ---------------------------------------------------------------------------
// Suite runner

struct SuiteRanges {
  int max_m = 6;    // highest m (and 2m+1 style indices derive from it)
  int max_l = 6;    // highest l in the two-parameter symmetry laws
  int max_n = 4;    // most steps in symbolic sweeps
  int max_seq = 10; // dual/self-dual sequence length
  int max_p = 8;    // equal-step recurrence depth
};

struct SuiteOptions {
  SuiteRanges ranges{};
  int workers = 1;
  std::uint64_t seed = 0;
  int spots_per_identity = 3;  // seeded numeric instances per identity
};

inline const std::vector<std::string>& identity_names() {
  static const std::vector<std::string> names = {
      "difference_formula", "even_recurrence", "general_expansion",
      "main_identity",      "multi_uniform_difference",
      "norlund_recurrence", "odd_recurrence", "palindromic_general",
      "reflection",         "self_dual",      "shift_negation",
      "symmetry_1",         "symmetry_2",     "uniform_ftc"};
  return names;
}

namespace detail {

// Deterministic rational step/weight generation for numeric spot checks.
class SpotRng {
 public:
  explicit SpotRng(std::uint64_t seed) : rng_(seed) {}

  int int_in(int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng_);
  }

  Rational nonzero_step() {
    int num = 0;
    while (num == 0) num = int_in(-5, 5);
    return Rational(num, int_in(1, 4));
  }

  // n nonzero steps whose sum is nonzero (so the divided formulas that
  // involve 1/A stay defined).
  std::vector<Rational> steps(int n) {
    for (;;) {
      std::vector<Rational> v;
      v.reserve(static_cast<std::size_t>(n));
      Rational sum;
      for (int i = 0; i < n; ++i) {
        v.push_back(nonzero_step());
        sum = sum + v.back();
      }
      if (!sum.is_zero()) return v;
    }
  }

  Rational weight() { return Rational(int_in(-3, 3), int_in(1, 2)); }

  PalindromicWeights palindromic(int n) {
    std::vector<Rational> alpha(static_cast<std::size_t>(n) + 1);
    for (int j = 0; 2 * j <= n; ++j) {
      alpha[static_cast<std::size_t>(j)] = weight();
      alpha[static_cast<std::size_t>(n - j)] = alpha[static_cast<std::size_t>(j)];
    }
    return PalindromicWeights(std::move(alpha));
  }

 private:
  std::mt19937_64 rng_;
};

inline bool report_order(const IdentityReport& a, const IdentityReport& b) {
  if (a.identity != b.identity) return a.identity < b.identity;
  if (a.params != b.params) return a.params < b.params;
  auto text = [](const std::vector<Rational>& v) {
    std::string s;
    for (const auto& r : v) {
      s += r.str();
      s += ';';
    }
    return s;
  };
  const std::string as = text(a.steps), bs = text(b.steps);
  if (as != bs) return as < bs;
  return text(a.weights) < text(b.weights);
}

}  // namespace detail

// Runs the full battery: a symbolic sweep over the configured ranges plus
// seeded numeric spot checks, in a deterministic report order that does not
// depend on the worker count.  Failures are collected, never fatal.
inline std::vector<IdentityReport> run_suite(
    const SuiteOptions& opt, const MomentProvider& moments = standard_moments()) {
  const SuiteRanges& R = opt.ranges;
  Verifier verifier(moments);
  std::vector<std::function<IdentityReport()>> tasks;
  const auto add = [&tasks](std::function<IdentityReport()> fn) {
    tasks.push_back(std::move(fn));
  };

  std::vector<BarnesContext> sym;  // symbolic contexts, index = step count
  sym.reserve(static_cast<std::size_t>(std::max(R.max_n, 3)) + 1);
  for (int n = 0; n <= std::max(R.max_n, 3); ++n)
    sym.push_back(BarnesContext::symbolic(n));
  detail::SpotRng rng(opt.seed);

  // --- symbolic sweeps, identities in alphabetical order ---
  for (int m = 0; m <= R.max_m; ++m)
    for (int n = 1; n <= R.max_n; ++n)
      add([&verifier, m, n, &sym] {
        return verifier.check_difference_formula(m, sym[static_cast<std::size_t>(n)]);
      });
  for (int m = 0; m <= R.max_m; ++m)
    for (int n = 1; n <= R.max_n; ++n)
      add([&verifier, m, n, &sym] {
        return verifier.check_even_recurrence(m, sym[static_cast<std::size_t>(n)]);
      });
  for (int m = 0; m <= R.max_m; ++m)
    for (int n = 1; n <= R.max_n; ++n)
      add([&verifier, m, n, &sym] {
        return verifier.check_general_expansion(m, sym[static_cast<std::size_t>(n)]);
      });
  for (int m = 1; m <= R.max_m; m += 2)
    for (int n = 3; n <= R.max_n; ++n)
      add([&verifier, m, n, &sym] {
        return verifier.check_main_identity(m, sym[static_cast<std::size_t>(n)]);
      });
  for (int m = 0; m <= R.max_m; ++m)
    for (int n = 1; n <= R.max_n; ++n)
      add([&verifier, m, n, &sym] {
        return verifier.check_multi_uniform_difference(
            m, sym[static_cast<std::size_t>(n)]);
      });
  for (int p = 1; p <= R.max_p; ++p)
    for (int r = 0; r <= p - 1; ++r)
      add([&verifier, r, p] { return verifier.check_norlund_recurrence(r, p); });
  for (int m = 0; m <= R.max_m; ++m)
    for (int n = 1; n <= R.max_n; ++n)
      add([&verifier, m, n, &sym] {
        return verifier.check_odd_recurrence(m, sym[static_cast<std::size_t>(n)]);
      });
  {
    // Weight vectors are drawn at enumeration time so the stream of random
    // draws (and therefore every report) is fixed by the seed alone.
    for (int m = 1; m <= R.max_m; m += 2)
      for (int n = 1; n <= R.max_n; ++n) {
        PalindromicWeights w = rng.palindromic(n);
        add([&verifier, w, m, n, &sym] {
          return verifier.check_palindromic_general(
              w, m, sym[static_cast<std::size_t>(n)]);
        });
      }
  }
  for (int m = 0; m <= R.max_m; ++m)
    for (int n = 1; n <= R.max_n; ++n)
      add([&verifier, m, n, &sym] {
        return verifier.check_reflection(m, sym[static_cast<std::size_t>(n)]);
      });
  for (int j = 0; j <= R.max_seq; ++j)
    for (int n = 1; n <= R.max_n; ++n)
      add([&verifier, j, n, &sym] {
        return verifier.check_self_dual(j, sym[static_cast<std::size_t>(n)]);
      });
  for (int m = 0; m <= R.max_m; ++m)
    for (int n = 1; n <= R.max_n; ++n)
      add([&verifier, m, n, &sym] {
        return verifier.check_shift_negation(m, sym[static_cast<std::size_t>(n)]);
      });
  for (int l = 0; l <= R.max_l; ++l)
    for (int m = 0; m <= R.max_m; ++m)
      for (int n = 1; n <= R.max_n; ++n)
        add([&verifier, l, m, n, &sym] {
          return verifier.check_symmetry_1(l, m, sym[static_cast<std::size_t>(n)]);
        });
  for (int l = 0; l <= R.max_l; ++l)
    for (int m = 0; m <= R.max_m; ++m)
      for (int n = 1; n <= R.max_n; ++n)
        add([&verifier, l, m, n, &sym] {
          return verifier.check_symmetry_2(l, m, sym[static_cast<std::size_t>(n)]);
        });
  for (int m = 0; m <= R.max_m; ++m)
    add([&verifier, m, &sym] {
      return verifier.check_uniform_ftc(m, sym[1]);
    });

  // --- seeded numeric spot checks (divided formulas), same id order ---
  // The equal-step recurrence is numeric by construction, so it takes no
  // extra spots.
  for (const std::string& id : identity_names()) {
    if (id == "norlund_recurrence") continue;
    for (int s = 0; s < opt.spots_per_identity; ++s) {
      const int m = rng.int_in(0, R.max_m);
      const int l = rng.int_in(0, R.max_l);
      const int n = id == "uniform_ftc"
                        ? 1
                        : (id == "main_identity"
                               ? rng.int_in(3, std::max(3, R.max_n))
                               : rng.int_in(1, std::max(1, R.max_n)));
      const int odd_m = 2 * rng.int_in(0, std::max(0, (R.max_m - 1) / 2)) + 1;
      const int j = rng.int_in(0, R.max_seq);
      BarnesContext ctx = BarnesContext::numeric(rng.steps(n));
      if (id == "difference_formula")
        add([&verifier, m, ctx] { return verifier.check_difference_formula(m, ctx); });
      else if (id == "even_recurrence")
        add([&verifier, m, ctx] { return verifier.check_even_recurrence(m, ctx); });
      else if (id == "general_expansion")
        add([&verifier, m, ctx] { return verifier.check_general_expansion(m, ctx); });
      else if (id == "main_identity")
        add([&verifier, odd_m, ctx] { return verifier.check_main_identity(odd_m, ctx); });
      else if (id == "multi_uniform_difference")
        add([&verifier, m, ctx] {
          return verifier.check_multi_uniform_difference(m, ctx);
        });
      else if (id == "odd_recurrence")
        add([&verifier, m, ctx] { return verifier.check_odd_recurrence(m, ctx); });
      else if (id == "palindromic_general") {
        PalindromicWeights w = rng.palindromic(n);
        add([&verifier, w, odd_m, ctx] {
          return verifier.check_palindromic_general(w, odd_m, ctx);
        });
      } else if (id == "reflection")
        add([&verifier, m, ctx] { return verifier.check_reflection(m, ctx); });
      else if (id == "self_dual")
        add([&verifier, j, ctx] { return verifier.check_self_dual(j, ctx); });
      else if (id == "shift_negation")
        add([&verifier, m, ctx] { return verifier.check_shift_negation(m, ctx); });
      else if (id == "symmetry_1")
        add([&verifier, l, m, ctx] { return verifier.check_symmetry_1(l, m, ctx); });
      else if (id == "symmetry_2")
        add([&verifier, l, m, ctx] { return verifier.check_symmetry_2(l, m, ctx); });
      else if (id == "uniform_ftc")
        add([&verifier, m, ctx] { return verifier.check_uniform_ftc(m, ctx); });
    }
  }

  // --- execute: workers pull tasks by atomic index into fixed slots ---
  std::vector<IdentityReport> reports(tasks.size());
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mu;
  const auto work = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= tasks.size()) return;
      try {
        reports[i] = tasks[i]();
      } catch (...) {
        std::lock_guard<std::mutex> lock(failure_mu);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  const int workers = std::max(1, opt.workers);
  std::vector<std::thread> pool;
  for (int t = 1; t < workers; ++t) pool.emplace_back(work);
  work();
  for (auto& th : pool) th.join();
  if (failure) std::rethrow_exception(failure);

  std::stable_sort(reports.begin(), reports.end(), detail::report_order);
  return reports;
}

}  // namespace umbra
