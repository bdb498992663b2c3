#pragma once

// Indeterminates. Two distinct alphabets coexist:
//
//  * Var — an ordinary commuting variable such as x or a1. Ordinary
//    variables survive evaluation untouched.
//  * UmbralSymbol — an evaluation symbol (B1, B2, ..., U1, ...). Powers of
//    a symbol are placeholders for moments: evaluation replaces S^k by the
//    k-th moment of S, and moments of distinct symbols multiply
//    independently.
//
// A name is a short alphabetic base plus an optional numeric suffix
// ("x", "a1", "a12"). Natural order compares the base lexicographically and
// the suffix numerically, so a2 < a10.

#include <array>
#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace umbra {

struct Var {
  std::array<char, 4> base{};  // NUL padded, at most 3 characters
  std::int32_t index = -1;     // numeric suffix; -1 when absent

  Var() = default;

  explicit Var(std::string_view name) {
    std::size_t split = name.size();
    while (split > 0 && name[split - 1] >= '0' && name[split - 1] <= '9') --split;
    std::string_view alpha = name.substr(0, split);
    std::string_view digits = name.substr(split);
    if (alpha.empty() || alpha.size() > 3)
      throw std::invalid_argument("Var: bad name \"" + std::string(name) + "\"");
    for (char c : alpha)
      if (!((c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z')))
        throw std::invalid_argument("Var: bad name \"" + std::string(name) + "\"");
    for (std::size_t i = 0; i < alpha.size(); ++i) base[i] = alpha[i];
    if (!digits.empty()) {
      if (digits.size() > 9) throw std::invalid_argument("Var: suffix too long");
      index = 0;
      for (char c : digits) index = index * 10 + (c - '0');
    }
  }

  std::string name() const {
    std::string s;
    for (char c : base)
      if (c != '\0') s.push_back(c);
    if (index >= 0) s += std::to_string(index);
    return s;
  }

  bool operator==(const Var&) const = default;

  // Natural (display) order: base, then numeric suffix.
  friend std::strong_ordering operator<=>(const Var& a, const Var& b) {
    if (auto c = a.base <=> b.base; c != 0) return c;
    return a.index <=> b.index;
  }
};

// Term-order significance: x outranks everything else, the rest follow
// natural order. Sorting monomial factors by significance makes the graded
// order below read like "a polynomial in x whose coefficients involve the
// a_i", which is how results are naturally presented.
inline bool more_significant(const Var& a, const Var& b) {
  const bool ax = a.base == std::array<char, 4>{'x'} && a.index < 0;
  const bool bx = b.base == std::array<char, 4>{'x'} && b.index < 0;
  if (ax != bx) return ax;
  return a < b;
}

enum class SymbolKind : std::uint8_t {
  bernoulli,  // moments 1, -1/2, 1/6, 0, -1/30, ...
  uniform,    // moments 1/(k+1)
};

struct UmbralSymbol {
  SymbolKind kind = SymbolKind::bernoulli;
  std::int32_t index = 1;  // distinct indices mean independent symbols

  UmbralSymbol() = default;
  UmbralSymbol(SymbolKind k, int i) : kind(k), index(i) {
    if (i < 1) throw std::invalid_argument("UmbralSymbol: index must be >= 1");
  }

  std::string name() const {
    return (kind == SymbolKind::bernoulli ? "B" : "U") + std::to_string(index);
  }

  bool operator==(const UmbralSymbol&) const = default;
  friend std::strong_ordering operator<=>(const UmbralSymbol& a, const UmbralSymbol& b) {
    if (auto c = static_cast<int>(a.kind) <=> static_cast<int>(b.kind); c != 0) return c;
    return a.index <=> b.index;
  }
};

inline UmbralSymbol bernoulli_symbol(int i) { return {SymbolKind::bernoulli, i}; }
inline UmbralSymbol uniform_symbol(int i) { return {SymbolKind::uniform, i}; }

}  // namespace umbra
