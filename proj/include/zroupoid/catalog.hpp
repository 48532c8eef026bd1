#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "zroupoid/algebra.hpp"
#include "zroupoid/term.hpp"

namespace zroupoid {

/// Which algebras a check presumes.
enum class Scope { I, I20, I20Chain };

std::string_view scope_name(Scope s) noexcept;
/// Accepts "I", "I20" and "I20-chain". Throws ValidationError otherwise.
Scope parse_scope(std::string_view text);

struct NamedCheck {
  std::string id;
  Scope scope = Scope::I20;
  /// One statement, or the members of an equivalence group.
  std::vector<Statement> statements;
  /// True for "equiv:" entries: members must be all true or all false.
  bool equivalence = false;
  /// Statement text as written in the fixture.
  std::string text;
  std::string source;
};

/// Parses the fixture format: `id | scope | statement | citation` per line,
/// '#' comments and blank lines ignored. Throws ValidationError with the
/// line number on malformed entries, bad statements or duplicate ids.
std::vector<NamedCheck> parse_catalog(std::string_view text);

/// The catalog shipped with the library.
const std::vector<NamedCheck>& builtin_catalog();
std::string_view builtin_catalog_text() noexcept;

/// Keeps the checks whose id is listed, in catalog order. Throws
/// ValidationError for an unknown id.
std::vector<NamedCheck> select_checks(const std::vector<NamedCheck>& checks, const std::vector<std::string>& ids);

struct ScopeFlags {
  bool i = false;
  bool i20 = false;
  bool chain = false;
  bool admits(Scope s) const noexcept;
};

ScopeFlags scope_flags(const FiniteZroupoid& alg);

struct CheckVerdict {
  std::size_t algebra = 0;  // index into the input list
  std::size_t check = 0;    // index into the check list
  bool holds = true;
  /// For a failing plain check: the first falsifying assignment. For a
  /// failing equivalence group: the witness of the first failing member.
  std::optional<Assignment> witness;
  /// Per-member verdicts of an equivalence group; empty otherwise.
  std::vector<bool> members;
};

struct SuiteSummary {
  std::size_t algebras = 0;
  std::size_t checks = 0;
  std::size_t applied = 0;
  std::size_t passed = 0;
  std::size_t failed = 0;
  /// (algebra, check) pairs skipped because the algebra is outside the scope.
  std::size_t skipped = 0;
};

struct SuiteReport {
  std::vector<ScopeFlags> scopes;  // one per algebra
  /// Applied pairs only, ordered by algebra then check.
  std::vector<CheckVerdict> verdicts;
  SuiteSummary summary;

  bool all_passed() const noexcept { return summary.failed == 0; }
};

/// Runs every check on every algebra whose scope flags admit it. Work is
/// split over `workers` threads by algebra; the report order does not
/// depend on the worker count.
SuiteReport run_catalog(const std::vector<FiniteZroupoid>& algebras, const std::vector<NamedCheck>& checks,
                        unsigned workers = 1);

struct EquivalenceReport {
  /// verdicts[k][j]: condition j of involution_conditions() on algebra k.
  std::vector<std::array<bool, 4>> verdicts;
};

/// Evaluates the four involution conditions on each algebra. Throws
/// ValidationError if an algebra is not an I-zroupoid and
/// EquivalenceViolation if the conditions split on one.
EquivalenceReport equivalence_check(const std::vector<FiniteZroupoid>& algebras);

/// Test universes:
///   chains:K        build_chain(n, m) for all n + m + 1 <= K
///   enum-chains:K   enumerate_chains(k) for k = 1..K
///   i20:K           enumerate_i20(k) for k = 1..K
///   file:PATH       algebras read from a JSON file ("-" for standard input)
/// Throws ValidationError on a malformed spec.
std::vector<FiniteZroupoid> build_universe(std::string_view spec, unsigned workers = 1);

}  // namespace zroupoid
