#pragma once

// Flat straight-line programs for evaluating terms over a table. Shared by
// the checker, the lemma suite and the search.

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "zroupoid/algebra.hpp"
#include "zroupoid/term.hpp"

namespace zroupoid::detail {

struct Instr {
  enum class Kind : std::uint8_t { Var, Zero, Arrow };
  Kind kind;
  std::uint16_t a = 0;  // variable index, or left operand slot
  std::uint16_t b = 0;  // right operand slot
};

class CompiledTerm {
 public:
  CompiledTerm() = default;
  CompiledTerm(const Term& t, const std::vector<std::string>& vars) { emit(t, vars); }

  // scratch must hold at least size() entries.
  Element eval(const FiniteZroupoid& alg, const Element* values, Element* scratch) const {
    for (std::size_t i = 0; i < code_.size(); ++i) {
      const Instr& in = code_[i];
      switch (in.kind) {
        case Instr::Kind::Var: scratch[i] = values[in.a]; break;
        case Instr::Kind::Zero: scratch[i] = alg.zero(); break;
        case Instr::Kind::Arrow: scratch[i] = alg.op(scratch[in.a], scratch[in.b]); break;
      }
    }
    return scratch[code_.size() - 1];
  }

  const std::vector<Instr>& code() const noexcept { return code_; }
  std::size_t size() const noexcept { return code_.size(); }

 private:
  std::uint16_t emit(const Term& t, const std::vector<std::string>& vars) {
    Instr in{Instr::Kind::Zero};
    switch (t.kind()) {
      case TermKind::Zero:
        break;
      case TermKind::Var: {
        auto it = std::find(vars.begin(), vars.end(), t.name());
        in.kind = Instr::Kind::Var;
        in.a = static_cast<std::uint16_t>(it - vars.begin());
        break;
      }
      case TermKind::Arrow:
        in.kind = Instr::Kind::Arrow;
        in.a = emit(t.left(), vars);
        in.b = emit(t.right(), vars);
        break;
    }
    code_.push_back(in);
    return static_cast<std::uint16_t>(code_.size() - 1);
  }

  std::vector<Instr> code_;
};

struct CompiledEquation {
  CompiledTerm lhs;
  CompiledTerm rhs;
  bool negated = false;

  bool satisfied(const FiniteZroupoid& alg, const Element* values, Element* scratch) const {
    const bool equal = lhs.eval(alg, values, scratch) == rhs.eval(alg, values, scratch);
    return equal != negated;
  }
};

/// A statement compiled against its free-variable list. Identities compile
/// with an empty premise list.
class CompiledStatement {
 public:
  explicit CompiledStatement(const Statement& s);

  const std::vector<std::string>& vars() const noexcept { return vars_; }

  // Ok when premises fail or the conclusion holds.
  bool holds_at(const FiniteZroupoid& alg, const Element* values, Element* scratch) const {
    for (const auto& p : premises_) {
      if (!p.satisfied(alg, values, scratch)) return true;
    }
    return conclusion_.satisfied(alg, values, scratch);
  }

  std::size_t scratch_size() const noexcept { return scratch_; }

  /// Exhaustive lexicographic scan; first variable is the most significant.
  CheckResult check(const FiniteZroupoid& alg) const;

 private:
  std::vector<std::string> vars_;
  std::vector<CompiledEquation> premises_;
  CompiledEquation conclusion_;
  std::size_t scratch_ = 1;
};

}  // namespace zroupoid::detail
