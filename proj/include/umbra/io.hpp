#pragma once

// Output formats: LaTeX rendering for rationals and polynomials, and
// JSON (NDJSON), CSV, and LaTeX serializations of identity reports.
//
// Determinism contract: every emitter below writes fields in a fixed order
// and renders all exact values through Rational::str() / Polynomial::str(),
// so identical inputs produce byte-identical output.

#include <algorithm>
#include <cctype>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "umbra/identities.hpp"

namespace umbra {

// ---------------------------------------------------------------------------
// LaTeX

// "-\frac{3}{4}" style: the sign stays outside the fraction; integers render
// without a fraction.
inline std::string to_latex(const Rational& r) {
  const bool negative = r.sign() < 0;
  const Rational mag = negative ? -r : r;
  std::string body;
  if (mag.is_integer()) {
    body = mag.str();
  } else {
    body = "\\frac{" + mag.num().str() + "}{" + mag.den().str() + "}";
  }
  return negative ? "-" + body : body;
}

namespace detail {

// "a1" -> "a_{1}", "x" -> "x": a trailing digit run becomes a subscript.
inline std::string latex_var(const Var& v) {
  const std::string name = v.name();
  std::size_t cut = name.size();
  while (cut > 0 && std::isdigit(static_cast<unsigned char>(name[cut - 1])))
    --cut;
  if (cut == name.size()) return name;
  return name.substr(0, cut) + "_{" + name.substr(cut) + "}";
}

inline std::string latex_monomial(const Monomial& m) {
  // Factors in natural display order, juxtaposed with spaces.
  std::vector<std::pair<Var, int>> factors(m.factors().begin(),
                                           m.factors().end());
  std::sort(factors.begin(), factors.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  std::string out;
  for (const auto& [var, exp] : factors) {
    if (!out.empty()) out += ' ';
    out += latex_var(var);
    if (exp != 1) out += "^{" + std::to_string(exp) + "}";
  }
  return out;
}

}  // namespace detail

inline std::string to_latex(const MultiPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [mono, coeff] : p) {
    const bool negative = coeff.sign() < 0;
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    const Rational mag = negative ? -coeff : coeff;
    if (mono.is_unit()) {
      out += to_latex(mag);
    } else {
      if (!mag.is_one()) {
        out += to_latex(mag);
        out += ' ';
      }
      out += detail::latex_monomial(mono);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// JSON

inline nlohmann::ordered_json report_to_json(const IdentityReport& r) {
  nlohmann::ordered_json j;
  j["kind"] = "report";
  j["identity"] = r.identity;
  nlohmann::ordered_json params = nlohmann::ordered_json::object();
  for (const auto& [key, value] : r.params) params[key] = value;
  j["params"] = std::move(params);
  j["mode"] = r.steps.empty() ? "symbolic" : "numeric";
  if (!r.steps.empty()) {
    nlohmann::ordered_json steps = nlohmann::ordered_json::array();
    for (const Rational& s : r.steps) steps.push_back(s.str());
    j["steps"] = std::move(steps);
  }
  if (!r.weights.empty()) {
    nlohmann::ordered_json weights = nlohmann::ordered_json::array();
    for (const Rational& w : r.weights) weights.push_back(w.str());
    j["weights"] = std::move(weights);
  }
  j["lhs"] = r.lhs.str();
  j["rhs"] = r.rhs.str();
  j["passed"] = r.passed;
  if (r.witness) {
    nlohmann::ordered_json w;
    w["monomial"] = r.witness->monomial;
    w["lhs_coeff"] = r.witness->lhs_coeff.str();
    w["rhs_coeff"] = r.witness->rhs_coeff.str();
    j["witness"] = std::move(w);
  }
  return j;
}

struct SuiteSummary {
  int total = 0;
  int passed = 0;
  int failed = 0;
};

inline SuiteSummary summarize(const std::vector<IdentityReport>& reports) {
  SuiteSummary s;
  s.total = static_cast<int>(reports.size());
  for (const IdentityReport& r : reports) (r.passed ? s.passed : s.failed)++;
  return s;
}

// NDJSON: one compact JSON object per line, reports first, then a summary
// line.  `seed` is recorded in the summary when provided (values < 0 omit it).
inline void write_reports_json(std::ostream& os,
                               const std::vector<IdentityReport>& reports,
                               long long seed = -1) {
  for (const IdentityReport& r : reports) os << report_to_json(r).dump() << '\n';
  const SuiteSummary s = summarize(reports);
  nlohmann::ordered_json j;
  j["kind"] = "summary";
  j["total"] = s.total;
  j["passed"] = s.passed;
  j["failed"] = s.failed;
  if (seed >= 0) j["seed"] = seed;
  os << j.dump() << '\n';
}

// ---------------------------------------------------------------------------
// CSV

namespace detail {

inline std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

template <typename Range, typename Render>
std::string joined(const Range& range, Render&& render) {
  std::string out;
  for (const auto& item : range) {
    if (!out.empty()) out += ';';
    out += render(item);
  }
  return out;
}

}  // namespace detail

inline void write_reports_csv(std::ostream& os,
                              const std::vector<IdentityReport>& reports) {
  os << "identity,params,steps,weights,passed,lhs,rhs,"
        "witness_monomial,witness_lhs,witness_rhs\n";
  for (const IdentityReport& r : reports) {
    const std::string params = detail::joined(r.params, [](const auto& p) {
      return p.first + "=" + std::to_string(p.second);
    });
    const std::string steps =
        detail::joined(r.steps, [](const Rational& s) { return s.str(); });
    const std::string weights =
        detail::joined(r.weights, [](const Rational& w) { return w.str(); });
    os << detail::csv_field(r.identity) << ',' << detail::csv_field(params)
       << ',' << detail::csv_field(steps) << ',' << detail::csv_field(weights)
       << ',' << (r.passed ? "true" : "false") << ','
       << detail::csv_field(r.lhs.str()) << ',' << detail::csv_field(r.rhs.str())
       << ',';
    if (r.witness) {
      os << detail::csv_field(r.witness->monomial) << ','
         << detail::csv_field(r.witness->lhs_coeff.str()) << ','
         << detail::csv_field(r.witness->rhs_coeff.str());
    } else {
      os << ",,";
    }
    os << '\n';
  }
}

// ---------------------------------------------------------------------------
// LaTeX report table

namespace detail {

inline std::string latex_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '_' || c == '%' || c == '&' || c == '#') out += '\\';
    out += c;
  }
  return out;
}

}  // namespace detail

inline void write_reports_latex(std::ostream& os,
                                const std::vector<IdentityReport>& reports) {
  os << "\\begin{tabular}{llll}\n"
     << "\\hline\n"
     << "Identity & Parameters & Steps & Status \\\\\n"
     << "\\hline\n";
  for (const IdentityReport& r : reports) {
    const std::string params = detail::joined(r.params, [](const auto& p) {
      return p.first + "=" + std::to_string(p.second);
    });
    const std::string steps =
        r.steps.empty()
            ? std::string("symbolic")
            : detail::joined(r.steps,
                             [](const Rational& s) { return s.str(); });
    os << detail::latex_escape(r.identity) << " & "
       << detail::latex_escape(params) << " & $" << detail::latex_escape(steps)
       << "$ & " << (r.passed ? "pass" : "\\textbf{FAIL}") << " \\\\\n";
  }
  const SuiteSummary s = summarize(reports);
  os << "\\hline\n"
     << "\\multicolumn{4}{l}{" << s.passed << " of " << s.total
     << " checks passed} \\\\\n"
     << "\\hline\n"
     << "\\end{tabular}\n";
}

}  // namespace umbra
