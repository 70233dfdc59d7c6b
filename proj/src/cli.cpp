#include "minpoly/cli.hpp"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <mutex>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "minpoly/circuit.hpp"
#include "minpoly/json_io.hpp"
#include "minpoly/oracle.hpp"

namespace minpoly::cli {

using nlohmann::json;

namespace {

class FlagError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class CircuitDisagrees : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct FuncFlags {
  std::string func;
  std::optional<std::uint32_t> p;
  std::optional<unsigned> n;
  std::optional<unsigned> r;
};

struct Options {
  FuncFlags f;
  std::string form = "closed";
  std::string out_path;
  std::string format;
  std::string point;
  std::string strategy = "nested_horner";
  std::string in_path;
  std::string table_path;
  std::string emit = "polynomial";
  bool cse = false;
  bool circuit = false;
  bool all = false;
  unsigned threads = 0;
  std::optional<std::size_t> max_table_size;
};

class TableLimitScope {
 public:
  TableLimitScope() : saved_(table_limit()) {}
  ~TableLimitScope() { set_table_limit(saved_); }
  TableLimitScope(const TableLimitScope&) = delete;
  TableLimitScope& operator=(const TableLimitScope&) = delete;

 private:
  std::size_t saved_;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

json read_json(const std::string& path) {
  try {
    return json::parse(read_file(path));
  } catch (const json::parse_error& e) {
    throw IoError("'" + path + "' is not valid JSON: " + e.what());
  }
}

void emit(const Options& o, const std::string& text, std::ostream& out) {
  if (o.out_path.empty()) {
    out << text;
  } else {
    write_file_atomic(o.out_path, text);
  }
}

FormulaId resolve_flags(const FuncFlags& f) {
  if (f.func.empty()) throw FlagError("--func is required");
  try {
    return resolve(find_formula(f.func), f.p, f.n, f.r);
  } catch (const DomainError& e) {
    throw FlagError(e.what());
  }
}

Polynomial build_checked(const FormulaId& id, const std::string& form) {
  if (form == "closed") return build_formula(id);
  if (form == "interpolated") return interpolate(tabulate(function_spec(id)));
  throw FlagError("--form must be 'closed' or 'interpolated'");
}

LoweringStrategy parse_strategy(const std::string& s) {
  if (s == "naive" || s == "naive_monomial") return LoweringStrategy::naive_monomial;
  if (s == "horner" || s == "nested_horner") return LoweringStrategy::nested_horner;
  throw FlagError("--strategy must be 'naive_monomial' or 'nested_horner'");
}

std::vector<FieldElement> parse_point(const std::string& text, PrimeModulus p, unsigned arity) {
  std::vector<FieldElement> point;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    unsigned long v = 0;
    try {
      v = std::stoul(item, &used);
    } catch (const std::exception&) {
      throw FlagError("--point: '" + item + "' is not a nonnegative integer");
    }
    if (used != item.size()) throw FlagError("--point: '" + item + "' is not a nonnegative integer");
    if (v >= p.value()) {
      throw FlagError("--point: value " + item + " is not below p=" + std::to_string(p.value()));
    }
    point.push_back(FieldElement{static_cast<std::uint32_t>(v)});
  }
  if (point.size() != arity) {
    throw FlagError("--point has " + std::to_string(point.size()) + " values, expected " +
                    std::to_string(arity));
  }
  return point;
}

/// The polynomial a command operates on: from --in, --table, or --func.
Polynomial subject(const Options& o, std::optional<FormulaId>& id) {
  if (!o.in_path.empty()) return polynomial_from_json(read_json(o.in_path));
  if (!o.table_path.empty()) return interpolate(truth_table_from_json(read_json(o.table_path)));
  id = resolve_flags(o.f);
  return build_checked(*id, o.form);
}

json id_json(const FormulaId& id) {
  json j = json::object();
  j["formula"] = id.name;
  j["p"] = id.p;
  j["n"] = id.n;
  j["r"] = id.r;
  return j;
}

int cmd_gen(const Options& o, std::ostream& out) {
  std::optional<FormulaId> id;
  const Polynomial f = subject(o, id);
  const std::string format = o.format.empty() ? "json" : o.format;
  if (o.emit == "circuit") {
    Circuit c = lower(f, parse_strategy(o.strategy));
    if (o.cse) c = eliminate_common_subexpressions(c);
    if (format != "json") throw FlagError("circuits are emitted as JSON only");
    emit(o, dump(to_json(c)), out);
    return kOk;
  }
  if (o.emit != "polynomial") throw FlagError("--emit must be 'polynomial' or 'circuit'");
  if (format == "json") {
    emit(o, dump(to_json(f)), out);
  } else if (format == "human") {
    emit(o, to_string(f) + "\n", out);
  } else {
    throw FlagError("--format must be 'json' or 'human'");
  }
  return kOk;
}

std::string human_line(const VerificationReport& r) {
  std::ostringstream os;
  os << (r.passed() ? "PASS " : "FAIL ") << r.formula.name << " p=" << r.formula.p
     << " n=" << r.formula.n << " r=" << r.formula.r << " points=" << r.points_checked
     << " coefficients=" << (r.coefficient_match ? "match" : "differ")
     << " function=" << (r.function_match ? "match" : "differ");
  if (r.first_mismatch) {
    os << " at (";
    for (std::size_t i = 0; i < r.first_mismatch->point.size(); ++i) {
      os << (i ? "," : "") << r.first_mismatch->point[i];
    }
    os << ") expected " << r.first_mismatch->expected << " got " << r.first_mismatch->actual;
  }
  return os.str();
}

int cmd_verify(const Options& o, std::ostream& out) {
  const std::string format = o.format.empty() ? "human" : o.format;
  if (format != "json" && format != "human") throw FlagError("--format must be 'json' or 'human'");
  std::vector<VerificationReport> reports;
  if (o.all) {
    if (!o.f.func.empty() || !o.in_path.empty()) throw FlagError("--all excludes --func and --in");
    for (const auto& entry : catalog()) {
      for (const auto& c : entry.default_cases) {
        FormulaId id{std::string(entry.name), c.p, c.n, c.r};
        reports.push_back(verify_polynomial(id, build_formula(id), o.threads));
      }
    }
  } else {
    const FormulaId id = resolve_flags(o.f);
    const Polynomial candidate = o.in_path.empty() ? build_checked(id, o.form)
                                                   : polynomial_from_json(read_json(o.in_path));
    reports.push_back(verify_polynomial(id, candidate, o.threads));
  }
  bool ok = std::all_of(reports.begin(), reports.end(), [](const auto& r) { return r.passed(); });
  if (format == "json") {
    json j = json::array();
    for (const auto& r : reports) j.push_back(to_json(r));
    out << (o.all ? j.dump(1) : j[0].dump(1)) << "\n";
  } else {
    for (const auto& r : reports) out << human_line(r) << "\n";
  }
  return ok ? kOk : kMismatch;
}

int cmd_eval(const Options& o, std::ostream& out) {
  std::optional<FormulaId> id;
  const Polynomial f = subject(o, id);
  const auto point = parse_point(o.point, f.modulus(), f.arity());
  const FieldElement value = eval(f, point);
  if (o.circuit) {
    Circuit c = lower(f, parse_strategy(o.strategy));
    if (o.cse) c = eliminate_common_subexpressions(c);
    const FieldElement via_circuit = run(c, point);
    if (via_circuit != value) {
      out << value.value << "\n";
      throw std::logic_error("circuit evaluation gave " + std::to_string(via_circuit.value) +
                             ", polynomial gave " + std::to_string(value.value));
    }
  }
  out << value.value << "\n";
  return kOk;
}

int cmd_stats(const Options& o, std::ostream& out) {
  std::optional<FormulaId> id;
  const Polynomial f = subject(o, id);
  const std::string format = o.format.empty() ? "human" : o.format;
  struct Row {
    LoweringStrategy strategy;
    bool cse;
    CostReport cost;
  };
  std::vector<Row> rows;
  for (auto s : {LoweringStrategy::naive_monomial, LoweringStrategy::nested_horner}) {
    const Circuit c = lower(f, s);
    rows.push_back({s, false, cost(c)});
    rows.push_back({s, true, cost(eliminate_common_subexpressions(c))});
  }
  if (format == "json") {
    json j = id ? id_json(*id) : json::object();
    j["terms"] = f.term_count();
    j["rows"] = json::array();
    for (const auto& r : rows) {
      json row = to_json(r.cost);
      row["strategy"] = std::string(to_string(r.strategy));
      row["cse"] = r.cse;
      j["rows"].push_back(std::move(row));
    }
    out << j.dump(1) << "\n";
  } else if (format == "human") {
    if (id) out << id->name << " p=" << id->p << " n=" << id->n << " r=" << id->r << "\n";
    out << "terms=" << f.term_count() << "\n";
    out << std::left << std::setw(16) << "strategy" << std::setw(5) << "cse" << std::right
        << std::setw(10) << "mul" << std::setw(10) << "add" << std::setw(10) << "scale"
        << std::setw(10) << "depth" << "\n";
    for (const auto& r : rows) {
      out << std::left << std::setw(16) << to_string(r.strategy) << std::setw(5)
          << (r.cse ? "yes" : "no") << std::right << std::setw(10) << r.cost.mul_count
          << std::setw(10) << r.cost.add_count << std::setw(10) << r.cost.scale_count
          << std::setw(10) << r.cost.mul_depth << "\n";
    }
  } else {
    throw FlagError("--format must be 'json' or 'human'");
  }
  return kOk;
}

int cmd_list(const Options& o, std::ostream& out) {
  const std::string format = o.format.empty() ? "human" : o.format;
  if (format == "json") {
    json j = json::array();
    for (const auto& e : catalog()) {
      json entry = json::object();
      entry["name"] = std::string(e.name);
      entry["summary"] = std::string(e.summary);
      entry["constraint"] = std::string(e.constraint);
      entry["identity"] = std::string(e.identity);
      entry["kind"] = std::string(to_string(e.kind));
      entry["uses_r"] = e.uses_r;
      j.push_back(std::move(entry));
    }
    out << j.dump(1) << "\n";
  } else if (format == "human") {
    for (const auto& e : catalog()) {
      out << std::left << std::setw(20) << e.name << " [" << e.constraint << "] " << e.summary
          << "\n    " << e.identity << "\n";
    }
  } else {
    throw FlagError("--format must be 'json' or 'human'");
  }
  return kOk;
}

void add_func_flags(CLI::App* cmd, Options& o) {
  cmd->add_option("--func", o.f.func, "Catalog formula name (see `list`)");
  cmd->add_option("--p", o.f.p, "Prime modulus");
  cmd->add_option("--n", o.f.n, "Number of compared inputs");
  cmd->add_option("--r", o.f.r, "Digit index");
  cmd->add_option("--form", o.form, "closed | interpolated")->check(CLI::IsMember({"closed", "interpolated"}));
}

std::optional<std::size_t> env_table_limit() {
  const char* raw = std::getenv(kTableLimitEnv);
  if (raw == nullptr || *raw == '\0') return std::nullopt;
  char* end = nullptr;
  const unsigned long long v = std::strtoull(raw, &end, 10);
  if (end == raw || *end != '\0' || v == 0) {
    throw FlagError(std::string(kTableLimitEnv) + " must be a positive integer");
  }
  return static_cast<std::size_t>(v);
}

}  // namespace

void write_file_atomic(const std::string& path, const std::string& contents) {
  namespace fs = std::filesystem;
  const fs::path target(path);
  fs::path tmp = target;
  tmp += ".tmp." + std::to_string(std::hash<std::thread::id>{}(std::this_thread::get_id()));
  {
    std::ofstream os(tmp, std::ios::binary | std::ios::trunc);
    if (!os) throw IoError("cannot write '" + tmp.string() + "'");
    os << contents;
    os.flush();
    if (!os) throw IoError("write to '" + tmp.string() + "' failed");
  }
  std::error_code ec;
  fs::rename(tmp, target, ec);
  if (ec) {
    fs::remove(tmp);
    throw IoError("cannot rename onto '" + path + "': " + ec.message());
  }
}

VerificationReport verify_polynomial(const FormulaId& formula, const Polynomial& candidate,
                                     unsigned threads) {
  const FunctionSpec spec = function_spec(formula);
  const TruthTable table = tabulate(spec);
  VerificationReport report;
  report.formula = formula;
  report.points_checked = table.size();
  if (candidate.modulus() != table.modulus() || candidate.arity() != table.arity()) {
    return report;  // nothing can match
  }
  report.coefficient_match = interpolate(table) == candidate;

  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, table.size()));
  std::vector<std::size_t> first_bad(threads, table.size());
  std::vector<std::thread> workers;
  const std::size_t chunk = (table.size() + threads - 1) / threads;
  for (unsigned w = 0; w < threads; ++w) {
    workers.emplace_back([&, w] {
      const std::size_t lo = w * chunk;
      const std::size_t hi = std::min(table.size(), lo + chunk);
      for (std::size_t k = lo; k < hi; ++k) {
        const auto x = point_at(k, table.modulus(), table.arity());
        if (eval(candidate, x) != table.value(k)) {
          first_bad[w] = k;
          return;
        }
      }
    });
  }
  for (auto& t : workers) t.join();
  const std::size_t bad = *std::min_element(first_bad.begin(), first_bad.end());
  report.function_match = bad == table.size();
  if (!report.function_match) {
    const auto x = point_at(bad, table.modulus(), table.arity());
    Mismatch m;
    for (auto v : x) m.point.push_back(v.value);
    m.expected = table.value(bad).value;
    m.actual = eval(candidate, x).value;
    report.first_mismatch = std::move(m);
  }
  return report;
}

json to_json(const VerificationReport& r) {
  json j = id_json(r.formula);
  j["points_checked"] = r.points_checked;
  j["coefficient_match"] = r.coefficient_match;
  j["function_match"] = r.function_match;
  if (r.first_mismatch) {
    j["mismatch"] = {{"point", r.first_mismatch->point},
                     {"expected", r.first_mismatch->expected},
                     {"actual", r.first_mismatch->actual}};
  } else {
    j["mismatch"] = nullptr;
  }
  return j;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  TableLimitScope restore_limit;
  Options o;
  CLI::App app{"Minimal polynomial expressions over F_p: build, verify, evaluate, compile."};
  app.require_subcommand(1);
  app.add_option("--max-table-size", o.max_table_size,
                 "Largest dense table (p^arity entries) to allocate")
      ->check(CLI::PositiveNumber);

  auto* gen = app.add_subcommand("gen", "Write a polynomial (or its circuit) as JSON or text");
  add_func_flags(gen, o);
  gen->add_option("--table", o.table_path, "Interpolate a truth-table JSON file instead of --func");
  gen->add_option("--in", o.in_path, "Read a polynomial JSON file instead of --func");
  gen->add_option("--out", o.out_path, "Output path (stdout when omitted)");
  gen->add_option("--format", o.format, "json | human");
  gen->add_option("--emit", o.emit, "polynomial | circuit");
  gen->add_option("--strategy", o.strategy, "naive_monomial | nested_horner");
  gen->add_flag("--cse", o.cse, "Merge common subexpressions in emitted circuits");

  auto* verify = app.add_subcommand("verify", "Check a formula against its semantics exhaustively");
  add_func_flags(verify, o);
  verify->add_option("--in", o.in_path, "Polynomial JSON file to check against --func semantics");
  verify->add_flag("--all", o.all, "Verify every catalog entry at its default sizes");
  verify->add_option("--format", o.format, "json | human");
  verify->add_option("--threads", o.threads, "Worker threads (0 = hardware concurrency)");

  auto* ev = app.add_subcommand("eval", "Evaluate a formula at one point");
  add_func_flags(ev, o);
  ev->add_option("--in", o.in_path, "Polynomial JSON file instead of --func");
  ev->add_option("--point", o.point, "Comma-separated input values")->required();
  ev->add_flag("--circuit", o.circuit, "Also evaluate through the lowered circuit and compare");
  ev->add_option("--strategy", o.strategy, "naive_monomial | nested_horner");
  ev->add_flag("--cse", o.cse, "Apply common-subexpression elimination to the circuit");

  auto* stats = app.add_subcommand("stats", "Circuit cost per lowering strategy");
  add_func_flags(stats, o);
  stats->add_option("--in", o.in_path, "Polynomial JSON file instead of --func");
  stats->add_option("--format", o.format, "json | human");

  auto* list = app.add_subcommand("list", "List catalog formulas");
  list->add_option("--format", o.format, "json | human");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kFlagError;
  }

  try {
    const auto env_limit = env_table_limit();
    std::size_t limit = env_limit.value_or(kDefaultTableLimit);
    if (o.max_table_size) limit = *o.max_table_size;
    if (limit > kDefaultTableLimit) {
      const double mib = static_cast<double>(limit) * sizeof(std::uint32_t) / (1024.0 * 1024.0);
      err << "note: table limit raised to " << limit << " entries; each dense table may use up to "
          << std::fixed << std::setprecision(1) << mib << " MiB\n";
    }
    set_table_limit(limit);

    if (gen->parsed()) return cmd_gen(o, out);
    if (verify->parsed()) return cmd_verify(o, out);
    if (ev->parsed()) return cmd_eval(o, out);
    if (stats->parsed()) return cmd_stats(o, out);
    if (list->parsed()) return cmd_list(o, out);
  } catch (const FlagError& e) {
    err << "error: " << e.what() << "\n";
    return kFlagError;
  } catch (const SizeLimitExceeded& e) {
    err << "error: " << e.what() << " (raise with --max-table-size or " << kTableLimitEnv << ")\n";
    return kSizeGuard;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return kFlagError;
  } catch (const IoError& e) {
    err << "error: " << e.what() << "\n";
    return kIoError;
  } catch (const FormatError& e) {
    err << "error: " << e.what() << "\n";
    return kIoError;
  } catch (const CircuitDisagrees& e) {
    err << "error: " << e.what() << "\n";
    return kMismatch;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kFlagError;
  }
  return kFlagError;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv;
  argv.push_back("minpoly");
  for (const auto& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace minpoly::cli
