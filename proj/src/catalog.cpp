#include "zroupoid/catalog.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <thread>
#include <unordered_set>

#include "zroupoid/chain.hpp"
#include "zroupoid/enumerate.hpp"
#include "zroupoid/error.hpp"
#include "zroupoid/json_io.hpp"
#include "zroupoid/order.hpp"
#include "zroupoid/parser.hpp"

namespace zroupoid {

// Defined in the source file generated from data/lemmas.txt.
extern const char* const kBuiltinCatalogText;

namespace {

std::string_view trim(std::string_view s) {
  const auto not_space = [](char c) { return c != ' ' && c != '\t' && c != '\r'; };
  while (!s.empty() && !not_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && !not_space(s.back())) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split(std::string_view s, char sep, std::size_t max_parts) {
  std::vector<std::string_view> parts;
  while (parts.size() + 1 < max_parts) {
    const auto pos = s.find(sep);
    if (pos == std::string_view::npos) break;
    parts.push_back(s.substr(0, pos));
    s.remove_prefix(pos + 1);
  }
  parts.push_back(s);
  return parts;
}

bool valid_id(std::string_view id) {
  return !id.empty() && std::all_of(id.begin(), id.end(), [](char c) {
    return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == '.' || c == '-' ||
           c == '_';
  });
}

[[noreturn]] void fail_line(std::size_t line, const std::string& what) {
  throw ValidationError("catalog line " + std::to_string(line) + ": " + what);
}

Statement parse_at(std::string_view text, std::size_t line) {
  try {
    return parse_statement(text);
  } catch (const SyntaxError& e) {
    fail_line(line, std::string(e.what()) + " in \"" + std::string(text) + "\"");
  }
}

CheckVerdict run_one(const FiniteZroupoid& alg, const NamedCheck& check) {
  CheckVerdict v;
  if (!check.equivalence) {
    auto r = check_statement(alg, check.statements.front());
    v.holds = r.holds;
    v.witness = std::move(r.witness);
    return v;
  }
  std::vector<CheckResult> results;
  for (const auto& s : check.statements) {
    results.push_back(check_statement(alg, s));
    v.members.push_back(results.back().holds);
  }
  v.holds = std::adjacent_find(v.members.begin(), v.members.end(), std::not_equal_to<>()) == v.members.end();
  if (!v.holds) {
    for (auto& r : results) {
      if (!r.holds) {
        v.witness = std::move(r.witness);
        break;
      }
    }
  }
  return v;
}

unsigned parse_bound(std::string_view text, std::string_view spec) {
  unsigned k = 0;
  const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), k);
  if (ec != std::errc() || end != text.data() + text.size() || k == 0) {
    throw ValidationError("bad universe size in \"" + std::string(spec) + "\"");
  }
  return k;
}

std::string read_source(const std::string& path) {
  if (path == "-") {
    return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

std::string_view scope_name(Scope s) noexcept {
  switch (s) {
    case Scope::I:
      return "I";
    case Scope::I20:
      return "I20";
    case Scope::I20Chain:
      return "I20-chain";
  }
  return "?";
}

Scope parse_scope(std::string_view text) {
  if (text == "I") return Scope::I;
  if (text == "I20") return Scope::I20;
  if (text == "I20-chain") return Scope::I20Chain;
  throw ValidationError("unknown scope \"" + std::string(text) + "\" (expected I, I20 or I20-chain)");
}

std::vector<NamedCheck> parse_catalog(std::string_view text) {
  std::vector<NamedCheck> out;
  std::unordered_set<std::string> seen;
  std::size_t line_no = 0;
  for (std::size_t pos = 0; pos <= text.size();) {
    const auto eol = std::min(text.find('\n', pos), text.size());
    const std::string_view line = trim(text.substr(pos, eol - pos));
    pos = eol + 1;
    ++line_no;
    if (line.empty() || line.front() == '#') continue;
    const auto fields = split(line, '|', 4);
    if (fields.size() != 4) fail_line(line_no, "expected 'id | scope | statement | citation'");

    NamedCheck check;
    check.id = std::string(trim(fields[0]));
    if (!valid_id(check.id)) fail_line(line_no, "invalid id \"" + check.id + "\"");
    if (!seen.insert(check.id).second) fail_line(line_no, "duplicate id \"" + check.id + "\"");
    try {
      check.scope = parse_scope(trim(fields[1]));
    } catch (const ValidationError& e) {
      fail_line(line_no, e.what());
    }
    check.text = std::string(trim(fields[2]));
    check.source = std::string(trim(fields[3]));

    constexpr std::string_view kEquiv = "equiv:";
    if (check.text.starts_with(kEquiv)) {
      check.equivalence = true;
      for (auto member : split(std::string_view(check.text).substr(kEquiv.size()), ';', SIZE_MAX)) {
        member = trim(member);
        if (member.empty()) fail_line(line_no, "empty member in equivalence group");
        check.statements.push_back(parse_at(member, line_no));
      }
      if (check.statements.size() < 2) fail_line(line_no, "an equivalence group needs at least two members");
    } else {
      if (check.text.empty()) fail_line(line_no, "missing statement");
      check.statements.push_back(parse_at(check.text, line_no));
    }
    out.push_back(std::move(check));
  }
  return out;
}

std::string_view builtin_catalog_text() noexcept { return kBuiltinCatalogText; }

const std::vector<NamedCheck>& builtin_catalog() {
  static const std::vector<NamedCheck> catalog = parse_catalog(kBuiltinCatalogText);
  return catalog;
}

std::vector<NamedCheck> select_checks(const std::vector<NamedCheck>& checks, const std::vector<std::string>& ids) {
  std::unordered_set<std::string> wanted(ids.begin(), ids.end());
  std::vector<NamedCheck> out;
  for (const auto& c : checks) {
    if (wanted.erase(c.id) > 0) out.push_back(c);
  }
  if (!wanted.empty()) {
    std::vector<std::string> missing(wanted.begin(), wanted.end());
    std::sort(missing.begin(), missing.end());
    throw ValidationError("unknown check id \"" + missing.front() + "\"");
  }
  return out;
}

bool ScopeFlags::admits(Scope s) const noexcept {
  switch (s) {
    case Scope::I:
      return i;
    case Scope::I20:
      return i20;
    case Scope::I20Chain:
      return chain;
  }
  return false;
}

ScopeFlags scope_flags(const FiniteZroupoid& alg) {
  const auto m = variety_memberships(alg);
  ScopeFlags f;
  f.i = m.i;
  f.i20 = m.i20;
  f.chain = m.i20 && order_report(alg).is_total_order();
  return f;
}

SuiteReport run_catalog(const std::vector<FiniteZroupoid>& algebras, const std::vector<NamedCheck>& checks,
                        unsigned workers) {
  SuiteReport report;
  report.scopes.resize(algebras.size());
  std::vector<std::vector<CheckVerdict>> per_algebra(algebras.size());

  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t k = next++; k < algebras.size(); k = next++) {
      report.scopes[k] = scope_flags(algebras[k]);
      for (std::size_t c = 0; c < checks.size(); ++c) {
        if (!report.scopes[k].admits(checks[c].scope)) continue;
        auto v = run_one(algebras[k], checks[c]);
        v.algebra = k;
        v.check = c;
        per_algebra[k].push_back(std::move(v));
      }
    }
  };
  const unsigned n_workers = std::clamp<unsigned>(workers, 1, std::max<std::size_t>(1, algebras.size()));
  if (n_workers == 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < n_workers; ++w) pool.emplace_back(work);
  }

  auto& s = report.summary;
  s.algebras = algebras.size();
  s.checks = checks.size();
  for (auto& batch : per_algebra) {
    for (auto& v : batch) {
      ++s.applied;
      ++(v.holds ? s.passed : s.failed);
      report.verdicts.push_back(std::move(v));
    }
  }
  s.skipped = s.algebras * s.checks - s.applied;
  return report;
}

EquivalenceReport equivalence_check(const std::vector<FiniteZroupoid>& algebras) {
  const auto& conditions = involution_conditions();
  EquivalenceReport report;
  for (std::size_t k = 0; k < algebras.size(); ++k) {
    const auto& alg = algebras[k];
    if (!variety_memberships(alg).i) {
      throw ValidationError("algebra " + std::to_string(k) + " does not satisfy (I) and 0'' = 0");
    }
    std::array<bool, 4> row{};
    for (std::size_t j = 0; j < row.size(); ++j) row[j] = check_identity(alg, conditions[j]).holds;
    if (std::adjacent_find(row.begin(), row.end(), std::not_equal_to<>()) != row.end()) {
      std::string split;
      for (std::size_t j = 0; j < row.size(); ++j) {
        split += (j ? ", " : "") + print_identity(conditions[j]) + (row[j] ? ": holds" : ": fails");
      }
      throw EquivalenceViolation("algebra " + std::to_string(k) + " splits the involution conditions (" + split + ")");
    }
    report.verdicts.push_back(row);
  }
  return report;
}

std::vector<FiniteZroupoid> build_universe(std::string_view spec, unsigned workers) {
  const auto colon = spec.find(':');
  if (colon == std::string_view::npos) {
    throw ValidationError("universe must look like chains:K, enum-chains:K, i20:K or file:PATH");
  }
  const std::string_view kind = spec.substr(0, colon);
  const std::string_view arg = spec.substr(colon + 1);
  std::vector<FiniteZroupoid> out;
  if (kind == "file") {
    if (arg.empty()) throw ValidationError("file: universe needs a path");
    return algebras_from_json(parse_json(read_source(std::string(arg))));
  }
  const unsigned k = parse_bound(arg, spec);
  if (kind == "chains") {
    for (unsigned size = 1; size <= k; ++size) {
      for (unsigned neg = 0; neg < size; ++neg) out.push_back(build_chain(neg, size - 1 - neg));
    }
  } else if (kind == "enum-chains" || kind == "i20") {
    const auto mode = kind == "i20" ? SearchMode::all_i20 : SearchMode::chains_only;
    for (unsigned size = 1; size <= k; ++size) {
      auto found = enumerate({size, mode, workers}).algebras;
      out.insert(out.end(), std::make_move_iterator(found.begin()), std::make_move_iterator(found.end()));
    }
  } else {
    throw ValidationError("unknown universe kind \"" + std::string(kind) + "\"");
  }
  return out;
}

}  // namespace zroupoid
