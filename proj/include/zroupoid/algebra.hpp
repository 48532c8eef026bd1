#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "zroupoid/term.hpp"

namespace zroupoid {

using Element = std::uint32_t;

/// A finite zroupoid: an n-element carrier {0, ..., n-1}, a designated zero
/// element and the arrow operation stored row-major (row = left operand).
/// Values are immutable after construction.
class FiniteZroupoid {
 public:
  /// Throws ValidationError naming the offending cell or field.
  FiniteZroupoid(std::size_t size, Element zero, std::vector<std::vector<Element>> table,
                 std::vector<std::string> labels = {});

  /// Row-major flat table of size*size entries.
  static FiniteZroupoid from_flat(std::size_t size, Element zero, std::vector<Element> flat,
                                  std::vector<std::string> labels = {});

  std::size_t size() const noexcept { return size_; }
  Element zero() const noexcept { return zero_; }
  Element op(Element x, Element y) const noexcept { return table_[x * size_ + y]; }
  Element prime(Element x) const noexcept { return op(x, zero_); }
  std::span<const Element> flat() const noexcept { return table_; }
  std::vector<std::vector<Element>> rows() const;

  /// Optional display names, one per element; empty when absent.
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  std::string label(Element x) const;
  FiniteZroupoid with_labels(std::vector<std::string> labels) const;

  /// Compares size, zero and table. Labels are presentation only.
  friend bool operator==(const FiniteZroupoid& a, const FiniteZroupoid& b) noexcept {
    return a.size_ == b.size_ && a.zero_ == b.zero_ && a.table_ == b.table_;
  }
  /// Lexicographic on (size, zero, flat table); used to sort canonical forms.
  friend bool operator<(const FiniteZroupoid& a, const FiniteZroupoid& b) noexcept;

 private:
  FiniteZroupoid() = default;
  void validate_labels() const;

  std::size_t size_ = 0;
  Element zero_ = 0;
  std::vector<Element> table_;
  std::vector<std::string> labels_;
};

FiniteZroupoid make_algebra(std::size_t size, Element zero, std::vector<std::vector<Element>> table);

using Assignment = std::vector<std::pair<std::string, Element>>;

struct CheckResult {
  bool holds = true;
  /// Lexicographically first falsifying assignment, variables in free_vars order.
  std::optional<Assignment> witness;
};

/// Throws UnboundVariable if the assignment misses a variable of t.
Element eval_term(const FiniteZroupoid& alg, const Term& t, const Assignment& assignment);

CheckResult check_identity(const FiniteZroupoid& alg, const Identity& id);
CheckResult check_quasi_identity(const FiniteZroupoid& alg, const QuasiIdentity& q);
CheckResult check_statement(const FiniteZroupoid& alg, const Statement& s);

struct VarietyMembership {
  bool i = false;
  bool i20 = false;
  bool dm = false;
  bool kl = false;
  bool ba = false;
  bool sl = false;
  /// The two Kleene axiom variants, checked separately on DM-algebras.
  /// kl follows kl2, (y -> y) -> (x -> x) = x -> x. The variant
  /// (x -> x) -> (y -> y)' = x -> x already fails on the two-element Boolean
  /// algebra, so only kl2 is used for the flag.
  bool kl1 = false;
  bool kl2 = false;
};

VarietyMembership variety_memberships(const FiniteZroupoid& alg);

/// x' = x -> 0.
inline Element prime(const FiniteZroupoid& alg, Element x) { return alg.prime(x); }

namespace axioms {
/// (I): (x -> y) -> z = ((z' -> x) -> (y -> z)')'
const Identity& implication();
/// (I0): 0'' = 0
const Identity& zero_double_prime();
/// x'' = x
const Identity& involution();
const Identity& de_morgan();
const Identity& kleene1();
const Identity& kleene2();
const Identity& boolean();
const Identity& semilattice_prime();
const Identity& semilattice_commutative();
}  // namespace axioms

/// The four conditions that are pairwise equivalent on I-zroupoids:
/// 0' -> x = x, x'' = x, (x -> x')' = x and x' -> x = x.
const std::vector<Identity>& involution_conditions();

/// The 2-element algebra with x -> y = 0 for all x, y and zero at index 0.
/// It satisfies (I) and (I0) but not x'' = x.
FiniteZroupoid constant_zero_algebra();

}  // namespace zroupoid
