#pragma once

// Exact rational arithmetic. Every quantity in this library is a rational
// number kept in lowest terms with a positive denominator; nothing is ever
// rounded. Backed by boost::multiprecision (header-only, arbitrary
// precision).

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <mutex>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace umbra {

using Integer = boost::multiprecision::cpp_int;

class Rational {
 public:
  Rational() = default;
  Rational(long long n) : v_(n) {}  // NOLINT: implicit by design
  Rational(Integer n) : v_(std::move(n)) {}

  // Normalizes sign and reduces to lowest terms. A zero denominator is an
  // error, never a sentinel value.
  Rational(Integer num, Integer den) {
    if (den == 0) throw std::domain_error("Rational: zero denominator");
    if (den < 0) {
      num = -num;
      den = -den;
    }
    v_ = boost::multiprecision::cpp_rational(num, den);
  }

  Rational(long long num, long long den) : Rational(Integer(num), Integer(den)) {}

  Integer num() const { return boost::multiprecision::numerator(v_); }
  Integer den() const { return boost::multiprecision::denominator(v_); }

  bool is_zero() const { return v_.is_zero(); }
  bool is_one() const { return v_ == 1; }
  bool is_integer() const { return den() == 1; }
  int sign() const { return v_.sign(); }

  Rational operator-() const {
    Rational r;
    r.v_ = -v_;
    return r;
  }

  Rational& operator+=(const Rational& o) {
    v_ += o.v_;
    return *this;
  }
  Rational& operator-=(const Rational& o) {
    v_ -= o.v_;
    return *this;
  }
  Rational& operator*=(const Rational& o) {
    v_ *= o.v_;
    return *this;
  }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("Rational: division by zero");
    v_ /= o.v_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    if (a.v_ < b.v_) return std::strong_ordering::less;
    if (a.v_ > b.v_) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  // Canonical text form: "p/q" in lowest terms, "p" when q == 1.
  std::string str() const {
    if (is_integer()) return num().str();
    return num().str() + "/" + den().str();
  }

  // Parses the canonical text form. Accepts an optional leading '-', then
  // digits, then optionally '/' and digits. Anything else is rejected.
  static Rational from_text(std::string_view s) {
    auto fail = [&] {
      throw std::invalid_argument("Rational: cannot parse \"" + std::string(s) + "\"");
    };
    if (s.empty()) fail();
    std::string_view num_part = s;
    std::string_view den_part;
    if (auto slash = s.find('/'); slash != std::string_view::npos) {
      num_part = s.substr(0, slash);
      den_part = s.substr(slash + 1);
      if (den_part.empty()) fail();
    }
    auto digits_only = [&](std::string_view t, bool allow_sign) {
      if (t.empty()) fail();
      std::size_t i = 0;
      if (allow_sign && (t[0] == '-' || t[0] == '+')) i = 1;
      if (i == t.size()) fail();
      for (; i < t.size(); ++i)
        if (t[i] < '0' || t[i] > '9') fail();
    };
    digits_only(num_part, true);
    if (!den_part.empty()) digits_only(den_part, false);
    Integer n{std::string(num_part)};
    Integer d = den_part.empty() ? Integer(1) : Integer{std::string(den_part)};
    return Rational(std::move(n), std::move(d));
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

 private:
  boost::multiprecision::cpp_rational v_;
};

// r^k for k >= 0 (r^0 == 1, including r == 0).
inline Rational pow(const Rational& r, int k) {
  if (k < 0) throw std::invalid_argument("pow: negative exponent");
  using boost::multiprecision::pow;
  if (k == 0) return Rational(1);
  return Rational(pow(r.num(), static_cast<unsigned>(k)),
                  pow(r.den(), static_cast<unsigned>(k)));
}

// n! with a process-wide memo table. Thread safe.
inline Integer factorial(int n) {
  if (n < 0) throw std::invalid_argument("factorial: negative argument");
  static std::mutex mu;
  static std::vector<Integer> memo{1};
  std::lock_guard<std::mutex> lock(mu);
  while (static_cast<int>(memo.size()) <= n)
    memo.push_back(memo.back() * static_cast<int>(memo.size()));
  return memo[n];
}

// Binomial coefficient C(n, k); zero outside 0 <= k <= n, C(0, 0) == 1.
inline Rational binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return Rational(0);
  return Rational(factorial(n) / (factorial(k) * factorial(n - k)));
}

// Multinomial coefficient k! / (parts_1! ... parts_r!). The parts must be
// nonnegative and sum to k.
inline Rational multinomial(int k, const std::vector<int>& parts) {
  int sum = 0;
  Integer d = 1;
  for (int p : parts) {
    if (p < 0) throw std::invalid_argument("multinomial: negative part");
    sum += p;
    d *= factorial(p);
  }
  if (sum != k) throw std::invalid_argument("multinomial: parts do not sum to order");
  return Rational(factorial(k) / d);
}

// m! / j! for 0 <= j <= m (the falling factorial m (m-1) ... (j+1)).
inline Rational factorial_ratio(int m, int j) {
  if (j < 0 || m < j) throw std::invalid_argument("factorial_ratio: need 0 <= j <= m");
  return Rational(factorial(m) / factorial(j));
}

}  // namespace umbra
