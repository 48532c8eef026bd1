#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace zroupoid {

enum class TermKind { Var, Zero, Arrow };

/// Immutable term over variables, the constant 0 and the binary arrow.
///
/// Postfix priming has no node of its own: `Term::prime(t)` builds
/// `arrow(t, zero())`, so every tree contains only Var, Zero and Arrow nodes.
/// Subterms are shared, which makes copies O(1) and keeps values thread-safe.
class Term {
 public:
  /// The constant 0.
  Term();

  static Term var(std::string name);
  static Term zero();
  static Term arrow(Term left, Term right);
  static Term prime(Term t) { return arrow(std::move(t), zero()); }

  TermKind kind() const noexcept;
  bool is_var() const noexcept { return kind() == TermKind::Var; }
  bool is_zero() const noexcept { return kind() == TermKind::Zero; }
  bool is_arrow() const noexcept { return kind() == TermKind::Arrow; }
  /// True for `t -> 0`, which prints as `t'`.
  bool is_prime() const noexcept;

  // Precondition: is_var().
  const std::string& name() const;
  // Precondition: is_arrow().
  Term left() const;
  Term right() const;

  std::size_t depth() const noexcept;
  std::size_t node_count() const noexcept;

  friend bool operator==(const Term& a, const Term& b) noexcept;

  struct Node;  // defined in term.cpp

 private:
  explicit Term(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

/// True for names matching [a-z][a-z0-9_]*.
bool is_valid_var_name(std::string_view name) noexcept;

struct Identity {
  Term lhs;
  Term rhs;
  friend bool operator==(const Identity&, const Identity&) = default;
};

/// A hypothesis of a quasi-identity. Negated premises come from `lhs != rhs`
/// or from the strict-order sugar `a < b`.
struct Premise {
  Identity equation;
  bool negated = false;
  friend bool operator==(const Premise&, const Premise&) = default;
};

struct QuasiIdentity {
  std::vector<Premise> premises;
  Identity conclusion;
  friend bool operator==(const QuasiIdentity&, const QuasiIdentity&) = default;
};

using Statement = std::variant<Identity, QuasiIdentity>;

/// Variables in order of first occurrence, reading left to right.
std::vector<std::string> free_vars(const Term& t);
std::vector<std::string> free_vars(const Identity& id);
/// Premises are scanned before the conclusion.
std::vector<std::string> free_vars(const QuasiIdentity& q);
std::vector<std::string> free_vars(const Statement& s);

/// Minimal-parenthesis rendering; `parse_term(print_term(t)) == t`.
std::string print_term(const Term& t);
std::string print_identity(const Identity& id);
std::string print_statement(const Statement& s);

/// Expansion target of `a <= b`: the identity (a -> b')' = a.
Identity below(const Term& a, const Term& b);

}  // namespace zroupoid
