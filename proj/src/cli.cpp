#include "zroupoid/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iterator>
#include <sstream>
#include <thread>

#include "zroupoid/catalog.hpp"
#include "zroupoid/chain.hpp"
#include "zroupoid/display.hpp"
#include "zroupoid/enumerate.hpp"
#include "zroupoid/error.hpp"
#include "zroupoid/json_io.hpp"
#include "zroupoid/order.hpp"
#include "zroupoid/parser.hpp"

namespace zroupoid {

namespace {

enum class Emit { json, table, count };

struct Output {
  std::string text;
  int code = kExitHolds;
};

class UsageError : public Error {
 public:
  using Error::Error;
};

std::string read_all(const std::string& path, std::istream& in) {
  if (path == "-") return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  std::ifstream file(path, std::ios::binary);
  if (!file) throw ValidationError("cannot read " + path);
  std::ostringstream buf;
  buf << file.rdbuf();
  return buf.str();
}

FiniteZroupoid load_algebra(const std::string& path, std::istream& in) {
  return algebra_from_json(parse_json(read_all(path, in)));
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

void require_not_count(Emit emit, const char* verb) {
  if (emit == Emit::count) throw UsageError(std::string("--emit count is not available for ") + verb);
}

// The statement file holds one statement; blank lines and '#' comments are
// ignored.
std::string statement_from_file(const std::string& path, std::istream& in) {
  std::istringstream text(read_all(path, in));
  std::string line, found;
  while (std::getline(text, line)) {
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    if (!found.empty()) throw ValidationError(path + ": expected a single statement");
    found = line.substr(first);
  }
  if (found.empty()) throw ValidationError(path + ": no statement found");
  return found;
}

unsigned resolve_workers(unsigned requested) {
  if (requested != 0) return requested;
  return std::max(1u, std::thread::hardware_concurrency());
}

struct Options {
  std::string emit_name = "table";
  // check
  std::string check_alg, statement, statement_file;
  // order
  std::string order_alg;
  // iso
  std::string iso_a, iso_b;
  // chain
  unsigned neg = 0, pos = 0;
  // enumerate
  std::size_t size = 0;
  bool chains = false, all_i20 = false;
  unsigned workers = 1;
  std::uint64_t budget = 0;
  bool column_major = false;
  // lemmas
  std::string universe, catalog_path;
  std::vector<std::string> only;
  unsigned lemma_workers = 1;
};

Output run_check(const Options& o, Emit emit, std::istream& in) {
  require_not_count(emit, "check");
  if (o.statement.empty() == o.statement_file.empty()) {
    throw UsageError("check needs exactly one of --statement and --statement-file");
  }
  const auto alg = load_algebra(o.check_alg, in);
  const std::string text = o.statement_file.empty() ? o.statement : statement_from_file(o.statement_file, in);
  const Statement s = parse_statement(text);
  const CheckResult r = check_statement(alg, s);
  Output out;
  out.code = r.holds ? kExitHolds : kExitFails;
  if (emit == Emit::json) {
    out.text = dump(to_json(r, s));
  } else {
    out.text = r.holds ? "holds\n" : "fails at " + format_assignment(*r.witness, alg) + "\n";
  }
  return out;
}

Output run_order(const Options& o, Emit emit, std::istream& in) {
  require_not_count(emit, "order");
  const auto alg = load_algebra(o.order_alg, in);
  const auto report = order_report(alg);
  Output out;
  out.code = report.is_partial_order() ? kExitHolds : kExitFails;
  out.text = emit == Emit::json ? dump(to_json(report, alg)) : format_order(report, alg);
  return out;
}

Output run_iso(const Options& o, Emit emit, std::istream& in) {
  require_not_count(emit, "iso");
  if (o.iso_a == "-" && o.iso_b == "-") throw UsageError("only one algebra can come from standard input");
  const auto a = load_algebra(o.iso_a, in);
  const auto b = load_algebra(o.iso_b, in);
  const auto r = are_isomorphic(a, b);
  Output out;
  out.code = r.isomorphic ? kExitHolds : kExitFails;
  if (emit == Emit::json) {
    out.text = dump(to_json(r));
  } else if (!r.isomorphic) {
    out.text = "not isomorphic\n";
  } else {
    out.text = "isomorphic:";
    for (Element x = 0; x < a.size(); ++x) out.text += " " + a.label(x) + "->" + b.label((*r.map)[x]);
    out.text += "\n";
  }
  return out;
}

Output run_chain(const Options& o, Emit emit) {
  require_not_count(emit, "chain");
  if (o.neg + o.pos + 1 > 64) throw ValidationError("chains are limited to 64 elements");
  const auto alg = build_chain(o.neg, o.pos);
  return {emit == Emit::json ? dump(to_json(alg)) : format_table(alg)};
}

Output run_enumerate(const Options& o, Emit emit, std::ostream& err) {
  if (o.chains && o.all_i20) throw UsageError("--chains and --all-i20 are exclusive");
  SearchConfig config;
  config.size = o.size;
  config.mode = o.all_i20 ? SearchMode::all_i20 : SearchMode::chains_only;
  config.worker_count = resolve_workers(o.workers);
  config.cell_order = o.column_major ? CellOrder::column_major : CellOrder::row_major;
  config.node_budget = o.budget;
  const auto result = enumerate(config);
  Output out;
  if (emit == Emit::json) {
    out.text = dump(to_json(result, config));
  } else if (emit == Emit::count) {
    out.text = std::to_string(result.algebras.size()) + "\n";
  } else {
    std::ostringstream s;
    for (std::size_t i = 0; i < result.algebras.size(); ++i) {
      const auto& alg = result.algebras[i];
      s << "# " << (i + 1) << " of " << result.algebras.size() << ", zero = " << alg.zero() << "\n"
        << format_table(alg) << "\n";
    }
    s << result.algebras.size() << " algebras" << (result.complete ? "" : " (search incomplete: budget exhausted)")
      << "\n";
    out.text = s.str();
  }
  if (!result.complete) err << "warning: node budget exhausted, result is partial\n";
  return out;
}

Output run_lemmas(const Options& o, Emit emit, std::istream& in) {
  std::vector<NamedCheck> checks =
      o.catalog_path.empty() ? builtin_catalog() : parse_catalog(read_all(o.catalog_path, in));
  if (!o.only.empty()) checks = select_checks(checks, o.only);
  const unsigned workers = resolve_workers(o.lemma_workers);
  std::vector<FiniteZroupoid> algebras;
  if (o.universe.starts_with("file:")) {
    algebras = algebras_from_json(parse_json(read_all(o.universe.substr(5), in)));
  } else {
    algebras = build_universe(o.universe, workers);
  }
  const auto report = run_catalog(algebras, checks, workers);
  Output out;
  out.code = report.all_passed() ? kExitHolds : kExitFails;
  const auto& s = report.summary;
  if (emit == Emit::json) {
    out.text = dump(to_json(report, checks));
    return out;
  }
  if (emit == Emit::count) {
    out.text = std::to_string(s.failed) + "\n";
    return out;
  }
  std::vector<std::size_t> applied(checks.size()), failed(checks.size());
  for (const auto& v : report.verdicts) {
    ++applied[v.check];
    if (!v.holds) ++failed[v.check];
  }
  std::size_t id_width = 2;
  for (const auto& c : checks) id_width = std::max(id_width, c.id.size());
  std::ostringstream t;
  for (std::size_t c = 0; c < checks.size(); ++c) {
    t << checks[c].id << std::string(id_width - checks[c].id.size() + 2, ' ');
    if (applied[c] == 0) {
      t << "n/a\n";
    } else if (failed[c] == 0) {
      t << "ok    " << applied[c] << " algebras\n";
    } else {
      t << "FAIL  " << failed[c] << " of " << applied[c] << " algebras\n";
    }
  }
  for (const auto& v : report.verdicts) {
    if (v.holds) continue;
    t << "  " << checks[v.check].id << " fails on algebra " << v.algebra;
    if (v.witness) t << " at " << format_assignment(*v.witness, algebras[v.algebra]);
    t << "\n";
  }
  t << s.algebras << " algebras, " << s.checks << " checks: " << s.applied << " applied, " << s.passed
    << " passed, " << s.failed << " failed, " << s.skipped << " out of scope\n";
  out.text = t.str();
  return out;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, std::istream& in) {
  Options o;
  CLI::App app{"Verification workbench for implication zroupoids", "zroupoid"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--emit", o.emit_name, "Output format")
      ->check(CLI::IsMember({"json", "table", "count"}))
      ->capture_default_str();

  auto* check = app.add_subcommand("check", "Check an identity or quasi-identity on an algebra");
  check->add_option("algebra", o.check_alg, "Algebra JSON file, or - for standard input")->required();
  check->add_option("--statement,-s", o.statement, "Statement text");
  check->add_option("--statement-file", o.statement_file, "File holding one statement");

  auto* order = app.add_subcommand("order", "Report the properties of the derived relation");
  order->add_option("algebra", o.order_alg, "Algebra JSON file, or - for standard input")->required();

  auto* iso = app.add_subcommand("iso", "Test two algebras for a zero-preserving isomorphism");
  iso->add_option("first", o.iso_a, "First algebra")->required();
  iso->add_option("second", o.iso_b, "Second algebra")->required();

  auto* chain = app.add_subcommand("chain", "Build the chain on the integer interval [-N, M]");
  chain->add_option("--neg", o.neg, "Elements below zero")->required();
  chain->add_option("--pos", o.pos, "Elements above zero")->required();

  auto* enumerate_cmd = app.add_subcommand("enumerate", "Enumerate algebras of a given size up to isomorphism");
  enumerate_cmd->add_option("--size", o.size, "Number of elements")->required();
  enumerate_cmd->add_flag("--chains", o.chains, "Only chains (default)");
  enumerate_cmd->add_flag("--all-i20", o.all_i20, "Every algebra satisfying x'' = x");
  enumerate_cmd->add_option("--workers", o.workers, "Worker threads, 0 for one per core")->capture_default_str();
  enumerate_cmd->add_option("--budget", o.budget, "Stop after this many search nodes (0 = unlimited)");
  enumerate_cmd->add_flag("--column-major", o.column_major, "Branch on cells column by column");

  auto* lemmas = app.add_subcommand("lemmas", "Run the lemma catalog over a universe of algebras");
  lemmas->add_option("--universe", o.universe, "chains:K, enum-chains:K, i20:K or file:PATH")->required();
  lemmas->add_option("--only", o.only, "Comma-separated check ids")->delimiter(',');
  lemmas->add_option("--catalog", o.catalog_path, "Catalog file instead of the built-in one");
  lemmas->add_option("--workers", o.lemma_workers, "Worker threads, 0 for one per core")->capture_default_str();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitHolds;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitHolds;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  const Emit emit = o.emit_name == "json" ? Emit::json : o.emit_name == "count" ? Emit::count : Emit::table;
  try {
    Output result;
    if (check->parsed()) {
      result = run_check(o, emit, in);
    } else if (order->parsed()) {
      result = run_order(o, emit, in);
    } else if (iso->parsed()) {
      result = run_iso(o, emit, in);
    } else if (chain->parsed()) {
      result = run_chain(o, emit);
    } else if (enumerate_cmd->parsed()) {
      result = run_enumerate(o, emit, err);
    } else {
      result = run_lemmas(o, emit, in);
    }
    out << result.text;
    out.flush();
    return result.code;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

}  // namespace zroupoid
