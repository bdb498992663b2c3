#pragma once

// Sparse multivariate polynomials with exact rational coefficients.
//
// A Monomial is a product of ordinary-variable powers; an UmbralMonomial
// additionally carries evaluation-symbol powers. Polynomial<M> stores terms
// in a map whose key order IS the canonical term order, so iteration,
// printing, and equality all agree on one canonical form:
//
//   * higher total degree first;
//   * ties broken by exponents, most significant variable first
//     (x, then a1, a2, ... in natural name order; symbols compare
//     B1 < B2 < ... < U1 < U2 < ...).
//
// Within a printed monomial, factors appear in natural name order
// (symbols first, then ordinary variables): "B1^2*U1*a2", "5/6*a1^2*x^3".

#include <algorithm>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "umbra/rational.hpp"
#include "umbra/variable.hpp"

namespace umbra {

class Monomial {
 public:
  Monomial() = default;  // the monomial 1

  explicit Monomial(Var v, int exp = 1) {
    if (exp < 0) throw std::invalid_argument("Monomial: negative exponent");
    if (exp > 0) factors_.emplace_back(v, exp);
  }

  static Monomial from_factors(std::vector<std::pair<Var, int>> fs) {
    Monomial m;
    for (auto& [v, e] : fs) {
      if (e < 0) throw std::invalid_argument("Monomial: negative exponent");
    }
    std::sort(fs.begin(), fs.end(), [](const auto& a, const auto& b) {
      return more_significant(a.first, b.first);
    });
    for (auto& [v, e] : fs) {
      if (e == 0) continue;
      if (!m.factors_.empty() && m.factors_.back().first == v)
        m.factors_.back().second += e;
      else
        m.factors_.emplace_back(v, e);
    }
    return m;
  }

  bool is_unit() const { return factors_.empty(); }

  int degree() const {
    int d = 0;
    for (const auto& [v, e] : factors_) d += e;
    return d;
  }

  int exponent_of(const Var& v) const {
    for (const auto& [w, e] : factors_)
      if (w == v) return e;
    return 0;
  }

  const std::vector<std::pair<Var, int>>& factors() const { return factors_; }

  Monomial operator*(const Monomial& o) const {
    Monomial r;
    auto a = factors_.begin(), b = o.factors_.begin();
    while (a != factors_.end() || b != o.factors_.end()) {
      if (b == o.factors_.end() ||
          (a != factors_.end() && more_significant(a->first, b->first))) {
        r.factors_.push_back(*a++);
      } else if (a == factors_.end() || more_significant(b->first, a->first)) {
        r.factors_.push_back(*b++);
      } else {
        r.factors_.emplace_back(a->first, a->second + b->second);
        ++a, ++b;
      }
    }
    return r;
  }

  // Canonical term order; "less" means "printed first".
  static std::strong_ordering order(const Monomial& a, const Monomial& b) {
    if (int da = a.degree(), db = b.degree(); da != db)
      return da > db ? std::strong_ordering::less : std::strong_ordering::greater;
    std::size_t i = 0, j = 0;
    while (i < a.factors_.size() && j < b.factors_.size()) {
      const auto& [va, ea] = a.factors_[i];
      const auto& [vb, eb] = b.factors_[j];
      if (va != vb)
        return more_significant(va, vb) ? std::strong_ordering::less
                                        : std::strong_ordering::greater;
      if (ea != eb)
        return ea > eb ? std::strong_ordering::less : std::strong_ordering::greater;
      ++i, ++j;
    }
    if (i < a.factors_.size()) return std::strong_ordering::less;
    if (j < b.factors_.size()) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  struct Before {
    bool operator()(const Monomial& a, const Monomial& b) const {
      return order(a, b) == std::strong_ordering::less;
    }
  };

  bool operator==(const Monomial&) const = default;

  void print(std::ostream& os) const {
    auto fs = factors_;
    std::sort(fs.begin(), fs.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    bool first = true;
    for (const auto& [v, e] : fs) {
      if (!first) os << '*';
      first = false;
      os << v.name();
      if (e > 1) os << '^' << e;
    }
  }

  std::string str() const {
    std::ostringstream os;
    print(os);
    return os.str();
  }

 private:
  // Sorted by significance (x first, then natural order); exponents > 0.
  std::vector<std::pair<Var, int>> factors_;
};

class UmbralMonomial {
 public:
  UmbralMonomial() = default;  // the monomial 1

  explicit UmbralMonomial(Monomial ordinary) : ord_(std::move(ordinary)) {}

  explicit UmbralMonomial(UmbralSymbol s, int exp = 1) {
    if (exp < 0) throw std::invalid_argument("UmbralMonomial: negative exponent");
    if (exp > 0) sym_.emplace_back(s, exp);
  }

  const Monomial& ordinary() const { return ord_; }
  const std::vector<std::pair<UmbralSymbol, int>>& symbols() const { return sym_; }
  bool symbol_free() const { return sym_.empty(); }

  int degree() const {
    int d = ord_.degree();
    for (const auto& [s, e] : sym_) d += e;
    return d;
  }

  // Powers of a repeated symbol merge by adding exponents, so the product
  // (B1)^p * (B1)^q is the single placeholder (B1)^(p+q), and evaluation
  // later sees one moment of order p+q.
  UmbralMonomial operator*(const UmbralMonomial& o) const {
    UmbralMonomial r;
    r.ord_ = ord_ * o.ord_;
    auto a = sym_.begin(), b = o.sym_.begin();
    while (a != sym_.end() || b != o.sym_.end()) {
      if (b == o.sym_.end() || (a != sym_.end() && a->first < b->first)) {
        r.sym_.push_back(*a++);
      } else if (a == sym_.end() || b->first < a->first) {
        r.sym_.push_back(*b++);
      } else {
        r.sym_.emplace_back(a->first, a->second + b->second);
        ++a, ++b;
      }
    }
    return r;
  }

  static std::strong_ordering order(const UmbralMonomial& a, const UmbralMonomial& b) {
    if (int da = a.degree(), db = b.degree(); da != db)
      return da > db ? std::strong_ordering::less : std::strong_ordering::greater;
    std::size_t i = 0, j = 0;
    while (i < a.sym_.size() && j < b.sym_.size()) {
      const auto& [sa, ea] = a.sym_[i];
      const auto& [sb, eb] = b.sym_[j];
      if (sa != sb)
        return sa < sb ? std::strong_ordering::less : std::strong_ordering::greater;
      if (ea != eb)
        return ea > eb ? std::strong_ordering::less : std::strong_ordering::greater;
      ++i, ++j;
    }
    if (i < a.sym_.size()) return std::strong_ordering::less;
    if (j < b.sym_.size()) return std::strong_ordering::greater;
    return Monomial::order(a.ord_, b.ord_);
  }

  struct Before {
    bool operator()(const UmbralMonomial& a, const UmbralMonomial& b) const {
      return order(a, b) == std::strong_ordering::less;
    }
  };

  bool operator==(const UmbralMonomial&) const = default;

  void print(std::ostream& os) const {
    bool first = true;
    for (const auto& [s, e] : sym_) {
      if (!first) os << '*';
      first = false;
      os << s.name();
      if (e > 1) os << '^' << e;
    }
    if (!ord_.is_unit()) {
      if (!first) os << '*';
      ord_.print(os);
    }
  }

  bool is_unit() const { return ord_.is_unit() && sym_.empty(); }

  std::string str() const {
    std::ostringstream os;
    print(os);
    return os.str();
  }

 private:
  Monomial ord_;
  std::vector<std::pair<UmbralSymbol, int>> sym_;  // sorted; exponents > 0
};

template <class M>
class Polynomial {
 public:
  using TermMap = std::map<M, Rational, typename M::Before>;

  Polynomial() = default;  // zero

  static Polynomial constant(Rational c) {
    Polynomial p;
    p.add_term(M{}, std::move(c));
    return p;
  }

  static Polynomial monomial(M m, Rational c = Rational(1)) {
    Polynomial p;
    p.add_term(std::move(m), std::move(c));
    return p;
  }

  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }
  auto begin() const { return terms_.begin(); }
  auto end() const { return terms_.end(); }

  int degree() const {  // total degree; 0 for the zero polynomial
    int d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
    return d;
  }

  Rational coefficient(const M& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  // The value of a constant polynomial; error if any term has a variable.
  Rational as_constant() const {
    if (terms_.empty()) return Rational(0);
    if (terms_.size() == 1 && terms_.begin()->first.is_unit())
      return terms_.begin()->second;
    throw std::domain_error("Polynomial: not a constant: " + str());
  }

  void add_term(M m, Rational c) {
    if (c.is_zero()) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
      terms_.emplace(std::move(m), std::move(c));
    } else {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  Polynomial& operator+=(const Polynomial& o) {
    if (this == &o) return *this *= Rational(2);
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    if (this == &o) {
      terms_.clear();
      return *this;
    }
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
  }
  Polynomial& operator*=(const Rational& r) {
    if (r.is_zero()) {
      terms_.clear();
    } else {
      for (auto& [m, c] : terms_) c *= r;
    }
    return *this;
  }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator-(const Polynomial& a) {
    Polynomial r;
    for (const auto& [m, c] : a.terms_) r.terms_.emplace(m, -c);
    return r;
  }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    Polynomial r;
    for (const auto& [ma, ca] : a.terms_)
      for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
    return r;
  }

  friend Polynomial operator*(Polynomial a, const Rational& r) { return a *= r; }
  friend Polynomial operator*(const Rational& r, Polynomial a) { return a *= r; }
  friend Polynomial operator+(Polynomial a, const Rational& r) {
    a.add_term(M{}, r);
    return a;
  }
  friend Polynomial operator+(const Rational& r, Polynomial a) {
    a.add_term(M{}, r);
    return a;
  }
  friend Polynomial operator-(Polynomial a, const Rational& r) {
    a.add_term(M{}, -r);
    return a;
  }
  friend Polynomial operator-(const Rational& r, const Polynomial& a) {
    Polynomial b = -a;
    b.add_term(M{}, r);
    return b;
  }

  bool operator==(const Polynomial&) const = default;

  void print(std::ostream& os) const {
    if (terms_.empty()) {
      os << '0';
      return;
    }
    bool first = true;
    for (const auto& [m, c] : terms_) {
      Rational a = c.sign() < 0 ? -c : c;
      if (first) {
        if (c.sign() < 0) os << '-';
        first = false;
      } else {
        os << (c.sign() < 0 ? " - " : " + ");
      }
      if (m.is_unit()) {
        os << a.str();
      } else {
        if (!a.is_one()) os << a.str() << '*';
        m.print(os);
      }
    }
  }

  std::string str() const {
    std::ostringstream os;
    print(os);
    return os.str();
  }

  friend std::ostream& operator<<(std::ostream& os, const Polynomial& p) {
    p.print(os);
    return os;
  }

 private:
  TermMap terms_;  // canonical order; no zero coefficients
};

using MultiPoly = Polynomial<Monomial>;
using UmbralPoly = Polynomial<UmbralMonomial>;

inline MultiPoly variable(Var v) { return MultiPoly::monomial(Monomial(v)); }
inline MultiPoly variable(std::string_view name) { return variable(Var(name)); }

template <class M>
Polynomial<M> pow(const Polynomial<M>& p, int k) {
  if (k < 0) throw std::invalid_argument("pow: negative exponent");
  Polynomial<M> r = Polynomial<M>::constant(Rational(1));
  Polynomial<M> base = p;
  while (k > 0) {
    if (k & 1) r = r * base;
    k >>= 1;
    if (k > 0) base = base * base;
  }
  return r;
}

// Simultaneous substitution of polynomials for variables. Unbound variables
// pass through unchanged. A ring homomorphism: it distributes over + and *.
inline MultiPoly substitute(const MultiPoly& p, const std::map<Var, MultiPoly>& bindings) {
  MultiPoly result;
  std::map<std::pair<Var, int>, MultiPoly> pow_cache;
  for (const auto& [m, c] : p) {
    MultiPoly term = MultiPoly::constant(c);
    for (const auto& [v, e] : m.factors()) {
      auto key = std::make_pair(v, e);
      auto it = pow_cache.find(key);
      if (it == pow_cache.end()) {
        auto b = bindings.find(v);
        MultiPoly base = b == bindings.end() ? variable(v) : b->second;
        it = pow_cache.emplace(key, pow(base, e)).first;
      }
      term = term * it->second;
    }
    result += term;
  }
  return result;
}

inline MultiPoly substitute(const MultiPoly& p, const Var& v, const MultiPoly& value) {
  return substitute(p, std::map<Var, MultiPoly>{{v, value}});
}

// Partial derivative with respect to an ordinary variable.
inline MultiPoly derivative(const MultiPoly& p, const Var& v) {
  MultiPoly result;
  for (const auto& [m, c] : p) {
    int e = m.exponent_of(v);
    if (e == 0) continue;
    auto fs = m.factors();
    for (auto& [w, we] : fs)
      if (w == v) --we;
    result.add_term(Monomial::from_factors(std::move(fs)), c * Rational(e));
  }
  return result;
}

// Derivative of an umbral polynomial with respect to an ORDINARY variable;
// symbol powers ride along as constants. (Differentiating with respect to a
// symbol is not an operation of this calculus, and the signature makes it
// unrepresentable.)
inline UmbralPoly derivative(const UmbralPoly& p, const Var& v) {
  UmbralPoly result;
  for (const auto& [m, c] : p) {
    int e = m.ordinary().exponent_of(v);
    if (e == 0) continue;
    auto fs = m.ordinary().factors();
    for (auto& [w, we] : fs)
      if (w == v) --we;
    UmbralMonomial nm = UmbralMonomial(Monomial::from_factors(std::move(fs)));
    for (const auto& [s, se] : m.symbols()) nm = nm * UmbralMonomial(s, se);
    result.add_term(std::move(nm), c * Rational(e));
  }
  return result;
}

// Embeds an ordinary polynomial into the umbral ring.
inline UmbralPoly to_umbral(const MultiPoly& p) {
  UmbralPoly r;
  for (const auto& [m, c] : p) r.add_term(UmbralMonomial(m), c);
  return r;
}

// The inverse embedding; requires every term to be symbol free.
inline MultiPoly to_multipoly(const UmbralPoly& p) {
  MultiPoly r;
  for (const auto& [m, c] : p) {
    if (!m.symbol_free())
      throw std::invalid_argument("to_multipoly: term " + m.str() + " carries symbols");
    r.add_term(m.ordinary(), c);
  }
  return r;
}

// Evaluates at a rational point. Every variable occurring in p must be bound.
inline Rational eval_at(const MultiPoly& p, const std::map<Var, Rational>& point) {
  Rational result(0);
  for (const auto& [m, c] : p) {
    Rational term = c;
    for (const auto& [v, e] : m.factors()) {
      auto it = point.find(v);
      if (it == point.end())
        throw std::invalid_argument("eval_at: unbound variable " + v.name());
      term *= pow(it->second, e);
    }
    result += term;
  }
  return result;
}

}  // namespace umbra
