// Tests for the output layer: LaTeX rendering, NDJSON report serialization
// (including the byte-identical round-trip guarantee), CSV, and the LaTeX
// status table.

#include <catch2/catch_amalgamated.hpp>

#include <sstream>
#include <string>
#include <vector>

#include "umbra/io.hpp"

using namespace umbra;

TEST_CASE("rationals render to LaTeX with the sign outside", "[io]") {
  CHECK(to_latex(Rational(5)) == "5");
  CHECK(to_latex(Rational(-5)) == "-5");
  CHECK(to_latex(Rational(0)) == "0");
  CHECK(to_latex(Rational(3, 4)) == "\\frac{3}{4}");
  CHECK(to_latex(Rational(-3, 4)) == "-\\frac{3}{4}");
  CHECK(to_latex(Rational(-691, 2730)) == "-\\frac{691}{2730}");
}

TEST_CASE("polynomials render to LaTeX", "[io]") {
  CHECK(to_latex(MultiPoly()) == "0");
  CHECK(to_latex(MultiPoly::constant(Rational(1))) == "1");

  // B_2(x; (1)) = x^2 - x + 1/6.
  MultiPoly b2 = bb_polynomial(2, BarnesContext::numeric({Rational(1)}));
  CHECK(b2.str() == "x^2 - x + 1/6");
  CHECK(to_latex(b2) == "x^{2} - x + \\frac{1}{6}");

  // Symbolic single step: subscripted parameter with exponents.
  MultiPoly q2 = bb_polynomial(2, BarnesContext::symbolic(1));
  CHECK(q2.str() == "x^2 - a1*x + 1/6*a1^2");
  CHECK(to_latex(q2) == "x^{2} - a_{1} x + \\frac{1}{6} a_{1}^{2}");

  MultiPoly mixed = Rational(5, 6) * pow(variable("a1"), 2) *
                        pow(variable("x"), 3) +
                    variable("x");
  CHECK(to_latex(mixed) == "\\frac{5}{6} a_{1}^{2} x^{3} + x");

  MultiPoly neg = MultiPoly::constant(Rational(1)) - variable("x");
  CHECK(to_latex(neg) == "-x + 1");
}

TEST_CASE("reports serialize to JSON with fixed field order", "[io]") {
  Verifier v;
  IdentityReport sym = v.check_main_identity(3, BarnesContext::symbolic(3));
  nlohmann::ordered_json j = report_to_json(sym);
  CHECK(j["kind"] == "report");
  CHECK(j["identity"] == "main_identity");
  CHECK(j["params"]["m"] == 3);
  CHECK(j["params"]["n"] == 3);
  CHECK(j["mode"] == "symbolic");
  CHECK_FALSE(j.contains("steps"));
  CHECK_FALSE(j.contains("witness"));
  CHECK(j["lhs"] == "1/2*a1*a2*a3");
  CHECK(j["passed"] == true);
  // Field order is part of the determinism contract.
  std::vector<std::string> keys;
  for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
  CHECK(keys == std::vector<std::string>{"kind", "identity", "params", "mode",
                                         "lhs", "rhs", "passed"});

  IdentityReport num = v.check_self_dual(
      3, BarnesContext::numeric({Rational(1), Rational(2), Rational(3)}));
  nlohmann::ordered_json jn = report_to_json(num);
  CHECK(jn["mode"] == "numeric");
  CHECK(jn["steps"] == nlohmann::ordered_json::array({"1", "2", "3"}));

  // A failing check carries its witness.
  MomentOverride corrupted(standard_moments(), SymbolKind::bernoulli, 4,
                           bernoulli_number(4) + Rational(1));
  Verifier bad(corrupted);
  IdentityReport fail = bad.check_odd_recurrence(2, BarnesContext::symbolic(1));
  nlohmann::ordered_json jf = report_to_json(fail);
  CHECK(jf["passed"] == false);
  REQUIRE(jf.contains("witness"));
  CHECK(jf["witness"]["monomial"] == "a1^5");
  CHECK(jf["witness"]["lhs_coeff"] == "0");
}

TEST_CASE("NDJSON stream round-trips byte-identically", "[io]") {
  Verifier v;
  std::vector<IdentityReport> reports;
  reports.push_back(v.check_reflection(2, BarnesContext::symbolic(2)));
  reports.push_back(v.check_self_dual(
      2, BarnesContext::numeric({Rational(1, 2), Rational(3)})));

  std::ostringstream out;
  write_reports_json(out, reports, 7);
  const std::string text = out.str();

  // One line per report plus the summary line.
  std::istringstream lines(text);
  std::string line;
  std::vector<std::string> parsed;
  while (std::getline(lines, line)) parsed.push_back(line);
  REQUIRE(parsed.size() == 3);

  // Parsing and re-dumping each line reproduces it byte-for-byte.
  std::string rebuilt;
  for (const std::string& l : parsed) {
    rebuilt += nlohmann::ordered_json::parse(l).dump();
    rebuilt += '\n';
  }
  CHECK(rebuilt == text);

  nlohmann::ordered_json summary = nlohmann::ordered_json::parse(parsed.back());
  CHECK(summary["kind"] == "summary");
  CHECK(summary["total"] == 2);
  CHECK(summary["passed"] == 2);
  CHECK(summary["failed"] == 0);
  CHECK(summary["seed"] == 7);

  // Emitting the same reports again produces the same bytes.
  std::ostringstream again;
  write_reports_json(again, reports, 7);
  CHECK(again.str() == text);
}

TEST_CASE("CSV output is well-formed", "[io]") {
  Verifier v;
  std::vector<IdentityReport> reports;
  reports.push_back(v.check_main_identity(3, BarnesContext::symbolic(3)));
  reports.push_back(v.check_uniform_ftc(4, BarnesContext::numeric({Rational(3, 2)})));

  std::ostringstream out;
  write_reports_csv(out, reports);
  std::istringstream lines(out.str());
  std::string header;
  std::getline(lines, header);
  CHECK(header ==
        "identity,params,steps,weights,passed,lhs,rhs,"
        "witness_monomial,witness_lhs,witness_rhs");
  std::string row;
  std::getline(lines, row);
  CHECK(row.rfind("main_identity,m=3;n=3,,,true,", 0) == 0);
  std::getline(lines, row);
  CHECK(row.rfind("uniform_ftc,m=4,3/2,,true,", 0) == 0);

  // Escaping: commas and quotes force quoting, quotes double.
  CHECK(detail::csv_field("plain") == "plain");
  CHECK(detail::csv_field("a,b") == "\"a,b\"");
  CHECK(detail::csv_field("say \"hi\"") == "\"say \"\"hi\"\"\"");
}

TEST_CASE("LaTeX table lists each check with its status", "[io]") {
  Verifier v;
  std::vector<IdentityReport> reports;
  reports.push_back(v.check_norlund_recurrence(1, 3));
  reports.push_back(v.check_reflection(1, BarnesContext::symbolic(1)));

  std::ostringstream out;
  write_reports_latex(out, reports);
  const std::string text = out.str();
  CHECK(text.find("\\begin{tabular}") != std::string::npos);
  CHECK(text.find("norlund\\_recurrence") != std::string::npos);
  CHECK(text.find("p=1;r=3") == std::string::npos);  // params are p then r
  CHECK(text.find("p=3;r=1") != std::string::npos);
  CHECK(text.find("2 of 2 checks passed") != std::string::npos);
  CHECK(text.find("FAIL") == std::string::npos);
  CHECK(text.find("\\end{tabular}") != std::string::npos);
}
