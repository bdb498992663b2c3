// Command-line surface for the exact umbral engine.
//
//   umbra number     --k K (--a 1,2/3 | --n N) [--method umbral|multinomial|series]
//   umbra polynomial --j J (--a 1,2/3 | --n N | --norlund P)
//   umbra table      <bernoulli|norlund|bb> [bounds] [--a | --n]
//   umbra verify     <identity-id|all> [instance params | ranges]
//
// Exit status: 0 = success / all checks passed, 1 = at least one identity
// check failed, 2 = usage or parameter error.
//
// Determinism contract: identical invocations produce byte-identical output.
// All exact values print as canonical "p/q" / polynomial strings; no floats,
// no timestamps.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>

#include "umbra/umbra.hpp"

namespace {

using umbra::BarnesContext;
using umbra::IdentityReport;
using umbra::MultiPoly;
using umbra::PalindromicWeights;
using umbra::Rational;
using umbra::SuiteOptions;
using umbra::SuiteRanges;
using umbra::Verifier;

// Thrown for user-facing usage problems; mapped to exit status 2.
struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// --- small parsing helpers -------------------------------------------------

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::string current;
  for (char c : text) {
    if (c == sep) {
      parts.push_back(current);
      current.clear();
    } else {
      current += c;
    }
  }
  parts.push_back(current);
  return parts;
}

std::string trim(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

std::vector<Rational> parse_steps(const std::string& text) {
  std::vector<Rational> steps;
  for (const std::string& part : split(text, ',')) {
    const std::string t = trim(part);
    if (t.empty()) throw UsageError("empty step parameter in --a");
    Rational r;
    try {
      r = Rational::from_text(t);
    } catch (const std::invalid_argument&) {
      throw UsageError("cannot parse step parameter '" + t + "'");
    }
    if (r.is_zero()) throw UsageError("step parameters must be nonzero");
    steps.push_back(r);
  }
  return steps;
}

int parse_int(const std::string& text, const std::string& what) {
  try {
    std::size_t pos = 0;
    const int v = std::stoi(text, &pos);
    if (pos != text.size()) throw std::invalid_argument(text);
    return v;
  } catch (const std::exception&) {
    throw UsageError("cannot parse integer '" + text + "' for " + what);
  }
}

// Keys accepted in --ranges and in the [ranges part of the] config file.
void apply_range_key(SuiteRanges& r, const std::string& key,
                     const std::string& value) {
  const int v = parse_int(value, "range key '" + key + "'");
  if (v < 0) throw UsageError("range key '" + key + "' must be nonnegative");
  if (key == "m")
    r.max_m = v;
  else if (key == "l")
    r.max_l = v;
  else if (key == "n")
    r.max_n = v;
  else if (key == "N")
    r.max_seq = v;
  else if (key == "p")
    r.max_p = v;
  else
    throw UsageError("unknown range key '" + key +
                     "' (expected m, l, n, N, or p)");
}

void apply_ranges_spec(SuiteRanges& r, const std::string& spec) {
  for (const std::string& part : split(spec, ',')) {
    const std::string t = trim(part);
    if (t.empty()) continue;
    const std::size_t eq = t.find('=');
    if (eq == std::string::npos)
      throw UsageError("range entry '" + t + "' is not key=value");
    apply_range_key(r, trim(t.substr(0, eq)), trim(t.substr(eq + 1)));
  }
}

// key = value lines; '#' starts a comment; blank lines ignored.
std::map<std::string, std::string> read_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open config file '" + path + "'");
  std::map<std::string, std::string> kv;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const std::size_t hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const std::size_t eq = line.find('=');
    if (eq == std::string::npos)
      throw UsageError("config line " + std::to_string(lineno) +
                       " is not key = value");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key.empty() || value.empty())
      throw UsageError("config line " + std::to_string(lineno) +
                       " has an empty key or value");
    kv[key] = value;
  }
  return kv;
}

// --- output plumbing -------------------------------------------------------

enum class Format { plain, json, csv, latex };

Format parse_format(const std::string& name) {
  if (name == "plain") return Format::plain;
  if (name == "json") return Format::json;
  if (name == "csv") return Format::csv;
  if (name == "latex") return Format::latex;
  throw UsageError("unknown format '" + name +
                   "' (expected plain, json, csv, or latex)");
}

std::string steps_text(const std::vector<Rational>& steps) {
  std::string out;
  for (const Rational& s : steps) {
    if (!out.empty()) out += ';';
    out += s.str();
  }
  return out;
}

nlohmann::ordered_json steps_json(const std::vector<Rational>& steps) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const Rational& s : steps) arr.push_back(s.str());
  return arr;
}

// Describes the step specification of a value command for records.
struct StepSpec {
  std::optional<int> symbolic_n;       // --n
  std::vector<Rational> steps;         // --a
  std::optional<int> norlund;          // --norlund (polynomial only)

  std::string text() const {
    if (norlund) return "norlund=" + std::to_string(*norlund);
    if (symbolic_n) return "n=" + std::to_string(*symbolic_n);
    return steps_text(steps);
  }
  void add_to(nlohmann::ordered_json& j) const {
    if (norlund)
      j["norlund"] = *norlund;
    else if (symbolic_n)
      j["n"] = *symbolic_n;
    else
      j["a"] = steps_json(steps);
  }
};

// A single exact value (number or polynomial) with its provenance fields.
void emit_value(Format format, const std::string& kind,
                const std::string& index_key, int index, const StepSpec& spec,
                const std::optional<std::string>& method,
                const MultiPoly& value) {
  switch (format) {
    case Format::plain:
      std::cout << value.str() << '\n';
      return;
    case Format::json: {
      nlohmann::ordered_json j;
      j["kind"] = kind;
      j[index_key] = index;
      spec.add_to(j);
      if (method) j["method"] = *method;
      j["value"] = value.str();
      std::cout << j.dump() << '\n';
      return;
    }
    case Format::csv:
      std::cout << index_key << ",a,method,value\n"
                << index << ',' << spec.text() << ','
                << (method ? *method : std::string()) << ',' << value.str()
                << '\n';
      return;
    case Format::latex:
      std::cout << '$' << umbra::to_latex(value) << "$\n";
      return;
  }
}

// --- table command ---------------------------------------------------------

// A rectangular table: fixed column names, rows of canonical cell strings.
void emit_table(Format format, const std::string& table,
                const std::vector<std::string>& columns,
                const std::vector<std::vector<std::string>>& rows) {
  switch (format) {
    case Format::plain: {
      for (std::size_t c = 0; c < columns.size(); ++c)
        std::cout << (c ? "\t" : "") << columns[c];
      std::cout << '\n';
      for (const auto& row : rows) {
        for (std::size_t c = 0; c < row.size(); ++c)
          std::cout << (c ? "\t" : "") << row[c];
        std::cout << '\n';
      }
      return;
    }
    case Format::csv: {
      for (std::size_t c = 0; c < columns.size(); ++c)
        std::cout << (c ? "," : "") << umbra::detail::csv_field(columns[c]);
      std::cout << '\n';
      for (const auto& row : rows) {
        for (std::size_t c = 0; c < row.size(); ++c)
          std::cout << (c ? "," : "") << umbra::detail::csv_field(row[c]);
        std::cout << '\n';
      }
      return;
    }
    case Format::json: {
      nlohmann::ordered_json j;
      j["kind"] = "table";
      j["table"] = table;
      j["columns"] = columns;
      nlohmann::ordered_json jrows = nlohmann::ordered_json::array();
      for (const auto& row : rows) jrows.push_back(row);
      j["rows"] = std::move(jrows);
      std::cout << j.dump() << '\n';
      return;
    }
    case Format::latex: {
      std::cout << "\\begin{tabular}{" << std::string(columns.size(), 'l')
                << "}\n\\hline\n";
      for (std::size_t c = 0; c < columns.size(); ++c)
        std::cout << (c ? " & " : "")
                  << umbra::detail::latex_escape(columns[c]);
      std::cout << " \\\\\n\\hline\n";
      for (const auto& row : rows) {
        for (std::size_t c = 0; c < row.size(); ++c)
          std::cout << (c ? " & $" : "$")
                    << umbra::detail::latex_escape(row[c]) << '$';
        std::cout << " \\\\\n";
      }
      std::cout << "\\hline\n\\end{tabular}\n";
      return;
    }
  }
}

// --- verify command --------------------------------------------------------

void emit_reports_plain(const std::vector<IdentityReport>& reports,
                        std::ostream& os) {
  for (const IdentityReport& r : reports) {
    os << (r.passed ? "PASS " : "FAIL ") << r.identity;
    for (const auto& [k, v] : r.params) os << ' ' << k << '=' << v;
    if (r.steps.empty())
      os << " symbolic";
    else
      os << " a=" << steps_text(r.steps);
    if (!r.weights.empty()) os << " weights=" << steps_text(r.weights);
    if (r.witness)
      os << " witness " << r.witness->monomial
         << " lhs=" << r.witness->lhs_coeff
         << " rhs=" << r.witness->rhs_coeff;
    os << '\n';
  }
  const umbra::SuiteSummary s = umbra::summarize(reports);
  os << s.total << " checks: " << s.passed << " passed, " << s.failed
     << " failed\n";
}

int emit_reports(Format format, const std::vector<IdentityReport>& reports,
                 long long seed_for_summary) {
  switch (format) {
    case Format::plain:
      emit_reports_plain(reports, std::cout);
      break;
    case Format::json:
      umbra::write_reports_json(std::cout, reports, seed_for_summary);
      break;
    case Format::csv:
      umbra::write_reports_csv(std::cout, reports);
      break;
    case Format::latex:
      umbra::write_reports_latex(std::cout, reports);
      break;
  }
  return umbra::summarize(reports).failed == 0 ? 0 : 1;
}

// Instance parameters collected from the command line for `verify <id>`.
struct Instance {
  std::optional<int> m, l, n, j, r, p;
  std::vector<Rational> steps;

  bool any_index() const {
    return m.has_value() || l.has_value() || j.has_value() || r.has_value() ||
           p.has_value();
  }
};

int require_param(const std::optional<int>& value, const char* flag) {
  if (!value) throw UsageError(std::string("missing required ") + flag);
  return *value;
}

BarnesContext make_context(const Instance& inst, const std::string& id) {
  if (!inst.steps.empty()) return BarnesContext::numeric(inst.steps);
  if (inst.n) return BarnesContext::symbolic(*inst.n);
  if (id == "uniform_ftc") return BarnesContext::symbolic(1);
  throw UsageError("identity '" + id + "' needs --n <count> or --a <steps>");
}

IdentityReport run_single(Verifier& verifier, const std::string& id,
                          const Instance& inst) {
  if (id == "difference_formula")
    return verifier.check_difference_formula(require_param(inst.m, "--m"),
                                             make_context(inst, id));
  if (id == "even_recurrence")
    return verifier.check_even_recurrence(require_param(inst.m, "--m"),
                                          make_context(inst, id));
  if (id == "general_expansion")
    return verifier.check_general_expansion(require_param(inst.m, "--m"),
                                            make_context(inst, id));
  if (id == "main_identity")
    return verifier.check_main_identity(require_param(inst.m, "--m"),
                                        make_context(inst, id));
  if (id == "multi_uniform_difference")
    return verifier.check_multi_uniform_difference(
        require_param(inst.m, "--m"), make_context(inst, id));
  if (id == "norlund_recurrence")
    return verifier.check_norlund_recurrence(require_param(inst.r, "--r"),
                                             require_param(inst.p, "--p"));
  if (id == "odd_recurrence")
    return verifier.check_odd_recurrence(require_param(inst.m, "--m"),
                                         make_context(inst, id));
  if (id == "palindromic_general") {
    const BarnesContext ctx = make_context(inst, id);
    // Single instances use the binomial window weights of matching order.
    return verifier.check_palindromic_general(
        PalindromicWeights::binomial_window(ctx.count()),
        require_param(inst.m, "--m"), ctx);
  }
  if (id == "reflection")
    return verifier.check_reflection(require_param(inst.m, "--m"),
                                     make_context(inst, id));
  if (id == "self_dual")
    return verifier.check_self_dual(require_param(inst.j, "--j"),
                                    make_context(inst, id));
  if (id == "shift_negation")
    return verifier.check_shift_negation(require_param(inst.m, "--m"),
                                         make_context(inst, id));
  if (id == "symmetry_1")
    return verifier.check_symmetry_1(require_param(inst.l, "--l"),
                                     require_param(inst.m, "--m"),
                                     make_context(inst, id));
  if (id == "symmetry_2")
    return verifier.check_symmetry_2(require_param(inst.l, "--l"),
                                     require_param(inst.m, "--m"),
                                     make_context(inst, id));
  if (id == "uniform_ftc")
    return verifier.check_uniform_ftc(require_param(inst.m, "--m"),
                                      make_context(inst, id));
  throw UsageError("unreachable");  // guarded by the id check in run_verify
}

bool known_identity(const std::string& id) {
  const auto& names = umbra::identity_names();
  return std::find(names.begin(), names.end(), id) != names.end();
}

std::string identity_list() {
  std::string out;
  for (const std::string& name : umbra::identity_names()) {
    if (!out.empty()) out += ", ";
    out += name;
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "umbra: exact Bernoulli / Bernoulli-Barnes umbral engine.\n"
      "All arithmetic is exact rational; all output is deterministic."};
  app.require_subcommand(1);

  // ---- number ----
  auto* cmd_number = app.add_subcommand(
      "number", "Compute B_k(a) (numeric steps) or the cleared P_k(a) "
                "(symbolic steps)");
  int number_k = 0;
  std::string number_a, number_method = "umbral";
  std::optional<int> number_n;
  std::string number_format = "plain";
  cmd_number->add_option("--k", number_k, "Index k of the number")
      ->required();
  auto* number_a_opt =
      cmd_number->add_option("--a", number_a,
                             "Comma list of nonzero rational steps, e.g. "
                             "1,2/3,-2");
  auto* number_n_opt = cmd_number->add_option(
      "--n", number_n, "Symbolic mode with n indeterminate steps a1..an");
  number_a_opt->excludes(number_n_opt);
  cmd_number->add_option("--method", number_method,
                         "Route: umbral, multinomial, or series");
  cmd_number->add_option("--format", number_format,
                         "Output format: plain, json, csv, or latex");

  // ---- polynomial ----
  auto* cmd_polynomial = app.add_subcommand(
      "polynomial", "Compute B_j(x; a) (numeric steps), the cleared "
                    "Q_j(x; a) (symbolic), or an equal-step polynomial "
                    "of given order (--norlund)");
  int poly_j = 0;
  std::string poly_a;
  std::optional<int> poly_n, poly_norlund;
  std::string poly_format = "plain";
  cmd_polynomial->add_option("--j", poly_j, "Degree j of the polynomial")
      ->required();
  auto* poly_a_opt = cmd_polynomial->add_option(
      "--a", poly_a, "Comma list of nonzero rational steps");
  auto* poly_n_opt = cmd_polynomial->add_option(
      "--n", poly_n, "Symbolic mode with n indeterminate steps");
  auto* poly_norlund_opt = cmd_polynomial->add_option(
      "--norlund", poly_norlund,
      "Equal-step polynomial of this order (steps all 1)");
  poly_a_opt->excludes(poly_n_opt);
  poly_a_opt->excludes(poly_norlund_opt);
  poly_n_opt->excludes(poly_norlund_opt);
  cmd_polynomial->add_option("--format", poly_format,
                             "Output format: plain, json, csv, or latex");

  // ---- table ----
  auto* cmd_table = app.add_subcommand(
      "table", "Emit a rectangular table of exact values");
  std::string table_kind;
  cmd_table->add_option("kind", table_kind,
                        "Table kind: bernoulli, norlund, or bb")
      ->required();
  std::optional<int> table_k, table_j, table_n;
  std::string table_a;
  std::string table_format = "plain";
  cmd_table->add_option("--k", table_k,
                        "Row bound k (bernoulli and bb tables)");
  cmd_table->add_option("--j", table_j, "Row bound j (norlund table)");
  cmd_table->add_option(
      "--n", table_n,
      "norlund: column bound on the order; bb: symbolic step count");
  cmd_table->add_option("--a", table_a,
                        "bb table: comma list of nonzero rational steps");
  cmd_table->add_option("--format", table_format,
                        "Output format: plain, json, csv, or latex");

  // ---- verify ----
  auto* cmd_verify = app.add_subcommand(
      "verify",
      "Check one identity (instance or sweep) or the whole battery.\n"
      "Registered identities: " + identity_list());
  std::string verify_id;
  cmd_verify->add_option("identity", verify_id,
                         "Identity id, or 'all' for the whole battery")
      ->required();
  Instance inst;
  std::string verify_a;
  cmd_verify->add_option("--m", inst.m, "Index m");
  cmd_verify->add_option("--l", inst.l, "Index l (symmetry laws)");
  cmd_verify->add_option("--n", inst.n, "Symbolic step count");
  cmd_verify->add_option("--j", inst.j, "Sequence index (self_dual)");
  cmd_verify->add_option("--r", inst.r, "Index r (equal-step recurrence)");
  cmd_verify->add_option("--p", inst.p, "Depth p (equal-step recurrence)");
  cmd_verify->add_option("--a", verify_a,
                         "Comma list of nonzero rational steps for a numeric "
                         "instance");
  std::string verify_ranges;
  auto* ranges_opt = cmd_verify->add_option(
      "--ranges", verify_ranges,
      "Sweep ranges as key=value pairs, e.g. m=6,l=6,n=4,N=10,p=8");
  auto* default_ranges_opt = cmd_verify->add_flag(
      "--default-ranges", "Sweep the built-in default ranges");
  default_ranges_opt->excludes(ranges_opt);
  std::string verify_format = "plain";
  auto* verify_format_opt = cmd_verify->add_option(
      "--format", verify_format, "Output format: plain, json, csv, or latex");
  int verify_workers = 1;
  auto* verify_workers_opt = cmd_verify->add_option(
      "--workers", verify_workers, "Concurrent checker threads (default 1)");
  std::uint64_t verify_seed = 0;
  auto* verify_seed_opt = cmd_verify->add_option(
      "--seed", verify_seed,
      "Seed for the randomized numeric spot-check steps (default 0)");
  std::string verify_config;
  cmd_verify->add_option("--config", verify_config,
                         "key = value file supplying ranges, workers, seed, "
                         "format; explicit flags win");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);  // --help and friends
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (app.got_subcommand(cmd_number)) {
      if (number_method != "umbral" && number_method != "multinomial" &&
          number_method != "series")
        throw UsageError("unknown method '" + number_method +
                         "' (expected umbral, multinomial, or series)");
      StepSpec spec;
      BarnesContext ctx = BarnesContext::symbolic(0);
      if (!number_a.empty()) {
        spec.steps = parse_steps(number_a);
        ctx = BarnesContext::numeric(spec.steps);
      } else if (number_n) {
        spec.symbolic_n = *number_n;
        ctx = BarnesContext::symbolic(*number_n);
      } else {
        throw UsageError("number needs --a <steps> or --n <count>");
      }
      MultiPoly value;
      if (number_method == "umbral")
        value = umbra::bb_number_umbral(number_k, ctx);
      else if (number_method == "multinomial")
        value = umbra::bb_number_multinomial(number_k, ctx);
      else
        value = umbra::bb_series(ctx, number_k).egf_coeff(number_k);
      emit_value(parse_format(number_format), "number", "k", number_k, spec,
                 number_method, value);
      return 0;
    }

    if (app.got_subcommand(cmd_polynomial)) {
      StepSpec spec;
      MultiPoly value;
      if (poly_norlund) {
        if (*poly_norlund < 0)
          throw UsageError("--norlund order must be nonnegative");
        spec.norlund = *poly_norlund;
        value = umbra::norlund_polynomial(poly_j, *poly_norlund);
      } else if (!poly_a.empty()) {
        spec.steps = parse_steps(poly_a);
        value = umbra::bb_polynomial(poly_j, BarnesContext::numeric(spec.steps));
      } else if (poly_n) {
        spec.symbolic_n = *poly_n;
        value =
            umbra::bb_polynomial(poly_j, BarnesContext::symbolic(*poly_n));
      } else {
        throw UsageError(
            "polynomial needs --a <steps>, --n <count>, or --norlund <order>");
      }
      emit_value(parse_format(poly_format), "polynomial", "j", poly_j, spec,
                 std::nullopt, value);
      return 0;
    }

    if (app.got_subcommand(cmd_table)) {
      const Format format = parse_format(table_format);
      if (table_kind == "bernoulli") {
        std::vector<std::vector<std::string>> rows;
        if (table_k) {
          if (*table_k < 0) throw UsageError("--k must be nonnegative");
          for (int k = 0; k <= *table_k; ++k)
            rows.push_back({std::to_string(k),
                            umbra::bernoulli_number(k).str()});
        }
        emit_table(format, "bernoulli", {"k", "value"}, rows);
        return 0;
      }
      if (table_kind == "norlund") {
        std::vector<std::string> columns{"j"};
        std::vector<std::vector<std::string>> rows;
        if (table_j && table_n) {
          if (*table_j < 0 || *table_n < 0)
            throw UsageError("--j and --n must be nonnegative");
          for (int n = 0; n <= *table_n; ++n)
            columns.push_back("order " + std::to_string(n));
          for (int j = 0; j <= *table_j; ++j) {
            std::vector<std::string> row{std::to_string(j)};
            for (int n = 0; n <= *table_n; ++n)
              row.push_back(umbra::norlund_polynomial(j, n).str());
            rows.push_back(std::move(row));
          }
        }
        emit_table(format, "norlund", columns, rows);
        return 0;
      }
      if (table_kind == "bb") {
        std::vector<std::vector<std::string>> rows;
        if (table_k) {
          if (*table_k < 0) throw UsageError("--k must be nonnegative");
          BarnesContext ctx = BarnesContext::symbolic(0);
          if (!table_a.empty())
            ctx = BarnesContext::numeric(parse_steps(table_a));
          else if (table_n)
            ctx = BarnesContext::symbolic(*table_n);
          else
            throw UsageError("bb table needs --a <steps> or --n <count>");
          for (int k = 0; k <= *table_k; ++k)
            rows.push_back({std::to_string(k),
                            umbra::bb_number_umbral(k, ctx).str()});
        }
        emit_table(format, "bb", {"k", "value"}, rows);
        return 0;
      }
      throw UsageError("unknown table kind '" + table_kind +
                       "' (expected bernoulli, norlund, or bb)");
    }

    // ---- verify ----
    const Format format = parse_format(verify_format);

    SuiteOptions opt;
    bool config_has_ranges = false;
    if (!verify_config.empty()) {
      const auto kv = read_config(verify_config);
      for (const auto& [key, value] : kv) {
        if (key == "m" || key == "l" || key == "n" || key == "N" ||
            key == "p") {
          apply_range_key(opt.ranges, key, value);
          config_has_ranges = true;
        } else if (key == "workers") {
          if (verify_workers_opt->count() == 0)
            verify_workers = parse_int(value, "config key 'workers'");
        } else if (key == "seed") {
          if (verify_seed_opt->count() == 0)
            verify_seed = static_cast<std::uint64_t>(
                parse_int(value, "config key 'seed'"));
        } else if (key == "format") {
          if (verify_format_opt->count() == 0) {
            verify_format = value;
          }
        } else {
          throw UsageError("unknown config key '" + key + "'");
        }
      }
    }
    // Re-parse the format in case the config supplied it.
    const Format effective_format =
        verify_format_opt->count() > 0 ? format : parse_format(verify_format);
    if (*default_ranges_opt) opt.ranges = SuiteRanges{};  // explicit reset
    if (ranges_opt->count() > 0) apply_ranges_spec(opt.ranges, verify_ranges);
    opt.workers = verify_workers;
    opt.seed = verify_seed;
    if (opt.workers < 1) throw UsageError("--workers must be at least 1");

    if (!verify_a.empty()) inst.steps = parse_steps(verify_a);

    if (verify_id == "all") {
      if (inst.any_index() || !inst.steps.empty() || inst.n.has_value())
        throw UsageError(
            "'verify all' sweeps ranges; instance flags (--m/--l/--n/--j/"
            "--r/--p/--a) apply to a single identity");
      const std::vector<IdentityReport> reports = umbra::run_suite(opt);
      return emit_reports(effective_format, reports,
                          static_cast<long long>(opt.seed));
    }

    if (!known_identity(verify_id))
      throw UsageError("unknown identity '" + verify_id + "'; expected one of "
                       + identity_list() + ", or all");

    const bool want_sweep = ranges_opt->count() > 0 ||
                            *default_ranges_opt || config_has_ranges;
    if (want_sweep && inst.any_index())
      throw UsageError(
          "give either instance parameters or sweep ranges, not both");
    if (want_sweep) {
      if (!inst.steps.empty() || inst.n.has_value())
        throw UsageError("sweep mode draws its own instances; drop --n/--a");
      // Sweep one identity: run the deterministic battery and keep its rows.
      std::vector<IdentityReport> reports = umbra::run_suite(opt);
      std::erase_if(reports, [&](const IdentityReport& r) {
        return r.identity != verify_id;
      });
      return emit_reports(effective_format, reports,
                          static_cast<long long>(opt.seed));
    }

    Verifier verifier;
    const IdentityReport report = run_single(verifier, verify_id, inst);
    return emit_reports(effective_format, {report},
                        static_cast<long long>(opt.seed));
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
}
