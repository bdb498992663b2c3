#pragma once

// Truncated power series in one distinguished variable z, with MultiPoly
// coefficients (constants are the special case). A series of order N keeps
// the coefficients of z^0 .. z^N exactly and discards everything beyond.
// All operands of a binary operation must share the same order; mixing
// orders is an error rather than a silent truncation.

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "umbra/polynomial.hpp"
#include "umbra/rational.hpp"

namespace umbra {

class TruncatedSeries {
 public:
  explicit TruncatedSeries(int order) : c_(check_order(order) + 1) {}

  explicit TruncatedSeries(std::vector<MultiPoly> coeffs) : c_(std::move(coeffs)) {
    if (c_.empty()) throw std::invalid_argument("TruncatedSeries: no coefficients");
  }

  static TruncatedSeries one(int order) {
    TruncatedSeries s(order);
    s.c_[0] = MultiPoly::constant(Rational(1));
    return s;
  }

  // exp(c z) truncated: coefficient of z^k is c^k / k!.
  static TruncatedSeries exp_linear(const MultiPoly& c, int order) {
    TruncatedSeries s(order);
    MultiPoly p = MultiPoly::constant(Rational(1));
    for (int k = 0; k <= order; ++k) {
      s.c_[k] = p * Rational(Integer(1), factorial(k));
      if (k < order) p = p * c;
    }
    return s;
  }

  // (exp(c z) - 1) / (c z) truncated: coefficient of z^k is c^k / (k+1)!.
  // Its constant term is 1 for every c, so it is always invertible; for
  // c = a_j it carries the z/(exp(a_j z) - 1) factor with the 1/a_j pole
  // cleared.
  static TruncatedSeries egf_unit_factor(const MultiPoly& c, int order) {
    TruncatedSeries s(order);
    MultiPoly p = MultiPoly::constant(Rational(1));
    for (int k = 0; k <= order; ++k) {
      s.c_[k] = p * Rational(Integer(1), factorial(k + 1));
      if (k < order) p = p * c;
    }
    return s;
  }

  int order() const { return static_cast<int>(c_.size()) - 1; }

  const MultiPoly& coeff(int k) const {
    range_check(k);
    return c_[k];
  }

  void set_coeff(int k, MultiPoly p) {
    range_check(k);
    c_[k] = std::move(p);
  }

  // k! * [z^k]: the reading of a coefficient under the exponential
  // generating function convention.
  MultiPoly egf_coeff(int k) const {
    range_check(k);
    return c_[k] * Rational(factorial(k));
  }

  TruncatedSeries& operator+=(const TruncatedSeries& o) {
    match(o);
    for (std::size_t k = 0; k < c_.size(); ++k) c_[k] += o.c_[k];
    return *this;
  }
  TruncatedSeries& operator-=(const TruncatedSeries& o) {
    match(o);
    for (std::size_t k = 0; k < c_.size(); ++k) c_[k] -= o.c_[k];
    return *this;
  }

  friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) {
    return a += b;
  }
  friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) {
    return a -= b;
  }

  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    a.match(b);
    TruncatedSeries r(a.order());
    for (int i = 0; i <= a.order(); ++i) {
      if (a.c_[i].is_zero()) continue;
      for (int j = 0; i + j <= a.order(); ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
    }
    return r;
  }

  friend TruncatedSeries operator*(TruncatedSeries a, const Rational& r) {
    for (auto& p : a.c_) p *= r;
    return a;
  }
  friend TruncatedSeries operator*(const Rational& r, TruncatedSeries a) {
    for (auto& p : a.c_) p *= r;
    return a;
  }

  bool operator==(const TruncatedSeries&) const = default;

 private:
  static int check_order(int order) {
    if (order < 0) throw std::invalid_argument("TruncatedSeries: negative order");
    return order;
  }
  void range_check(int k) const {
    if (k < 0 || k > order())
      throw std::out_of_range("TruncatedSeries: coefficient index " + std::to_string(k) +
                              " outside order " + std::to_string(order()));
  }
  void match(const TruncatedSeries& o) const {
    if (c_.size() != o.c_.size())
      throw std::invalid_argument("TruncatedSeries: order mismatch (" +
                                  std::to_string(order()) + " vs " +
                                  std::to_string(o.order()) + ")");
  }

  std::vector<MultiPoly> c_;  // c_[k] is the coefficient of z^k
};

// Multiplicative inverse. The constant term must be a nonzero rational
// constant; the remaining coefficients follow by back substitution from
// (s * inverse(s)) == 1.
inline TruncatedSeries inverse(const TruncatedSeries& s) {
  Rational s0;
  try {
    s0 = s.coeff(0).as_constant();
  } catch (const std::domain_error&) {
    throw std::domain_error("inverse: constant term is not a rational constant");
  }
  if (s0.is_zero()) throw std::domain_error("inverse: constant term is zero");
  const Rational inv0 = Rational(1) / s0;
  TruncatedSeries r(s.order());
  r.set_coeff(0, MultiPoly::constant(inv0));
  for (int k = 1; k <= s.order(); ++k) {
    MultiPoly acc;
    for (int i = 1; i <= k; ++i) acc += s.coeff(i) * r.coeff(k - i);
    r.set_coeff(k, acc * (-inv0));
  }
  return r;
}

}  // namespace umbra
