#include "zroupoid/algebra.hpp"

#include <algorithm>

#include "compiled.hpp"
#include "zroupoid/error.hpp"
#include "zroupoid/parser.hpp"

namespace zroupoid {

FiniteZroupoid::FiniteZroupoid(std::size_t size, Element zero, std::vector<std::vector<Element>> table,
                               std::vector<std::string> labels) {
  if (size == 0) throw ValidationError("size must be at least 1");
  if (table.size() != size) {
    throw ValidationError("table has " + std::to_string(table.size()) + " rows, expected " + std::to_string(size));
  }
  std::vector<Element> flat;
  flat.reserve(size * size);
  for (std::size_t r = 0; r < size; ++r) {
    if (table[r].size() != size) {
      throw ValidationError("row " + std::to_string(r) + " has " + std::to_string(table[r].size()) +
                            " entries, expected " + std::to_string(size));
    }
    flat.insert(flat.end(), table[r].begin(), table[r].end());
  }
  *this = from_flat(size, zero, std::move(flat), std::move(labels));
}

FiniteZroupoid FiniteZroupoid::from_flat(std::size_t size, Element zero, std::vector<Element> flat,
                                         std::vector<std::string> labels) {
  if (size == 0) throw ValidationError("size must be at least 1");
  if (flat.size() != size * size) throw ValidationError("table must have size*size entries");
  if (zero >= size) {
    throw ValidationError("zero index " + std::to_string(zero) + " out of range for size " + std::to_string(size));
  }
  for (std::size_t i = 0; i < flat.size(); ++i) {
    if (flat[i] >= size) {
      throw ValidationError("table[" + std::to_string(i / size) + "][" + std::to_string(i % size) +
                            "] = " + std::to_string(flat[i]) + " out of range for size " + std::to_string(size));
    }
  }
  FiniteZroupoid alg;
  alg.size_ = size;
  alg.zero_ = zero;
  alg.table_ = std::move(flat);
  alg.labels_ = std::move(labels);
  alg.validate_labels();
  return alg;
}

void FiniteZroupoid::validate_labels() const {
  if (!labels_.empty() && labels_.size() != size_) {
    throw ValidationError("labels has " + std::to_string(labels_.size()) + " entries, expected " +
                          std::to_string(size_));
  }
}

std::vector<std::vector<Element>> FiniteZroupoid::rows() const {
  std::vector<std::vector<Element>> out(size_);
  for (std::size_t r = 0; r < size_; ++r) {
    out[r].assign(table_.begin() + static_cast<std::ptrdiff_t>(r * size_),
                  table_.begin() + static_cast<std::ptrdiff_t>((r + 1) * size_));
  }
  return out;
}

std::string FiniteZroupoid::label(Element x) const {
  return labels_.empty() ? std::to_string(x) : labels_.at(x);
}

FiniteZroupoid FiniteZroupoid::with_labels(std::vector<std::string> labels) const {
  FiniteZroupoid copy = *this;
  copy.labels_ = std::move(labels);
  copy.validate_labels();
  return copy;
}

bool operator<(const FiniteZroupoid& a, const FiniteZroupoid& b) noexcept {
  if (a.size_ != b.size_) return a.size_ < b.size_;
  if (a.zero_ != b.zero_) return a.zero_ < b.zero_;
  return a.table_ < b.table_;
}

FiniteZroupoid make_algebra(std::size_t size, Element zero, std::vector<std::vector<Element>> table) {
  return FiniteZroupoid(size, zero, std::move(table));
}

namespace detail {

CompiledStatement::CompiledStatement(const Statement& s) : vars_(free_vars(s)) {
  auto compile = [&](const Identity& id, bool negated) {
    CompiledEquation eq{CompiledTerm(id.lhs, vars_), CompiledTerm(id.rhs, vars_), negated};
    scratch_ = std::max({scratch_, eq.lhs.size(), eq.rhs.size()});
    return eq;
  };
  if (const auto* id = std::get_if<Identity>(&s)) {
    conclusion_ = compile(*id, false);
  } else {
    const auto& q = std::get<QuasiIdentity>(s);
    for (const auto& p : q.premises) premises_.push_back(compile(p.equation, p.negated));
    conclusion_ = compile(q.conclusion, false);
  }
}

CheckResult CompiledStatement::check(const FiniteZroupoid& alg) const {
  const std::size_t k = vars_.size();
  const auto n = static_cast<Element>(alg.size());
  std::vector<Element> values(k, 0);
  std::vector<Element> scratch(scratch_);
  while (true) {
    if (!holds_at(alg, values.data(), scratch.data())) {
      Assignment witness;
      for (std::size_t i = 0; i < k; ++i) witness.emplace_back(vars_[i], values[i]);
      return CheckResult{false, std::move(witness)};
    }
    std::size_t i = k;
    while (i > 0) {
      --i;
      if (++values[i] < n) break;
      values[i] = 0;
      if (i == 0) return CheckResult{true, std::nullopt};
    }
    if (k == 0) return CheckResult{true, std::nullopt};
  }
}

}  // namespace detail

Element eval_term(const FiniteZroupoid& alg, const Term& t, const Assignment& assignment) {
  const auto vars = free_vars(t);
  std::vector<Element> values;
  values.reserve(vars.size());
  for (const auto& v : vars) {
    auto it = std::find_if(assignment.begin(), assignment.end(), [&](const auto& p) { return p.first == v; });
    if (it == assignment.end()) throw UnboundVariable(v);
    if (it->second >= alg.size()) {
      throw ValidationError("value " + std::to_string(it->second) + " for '" + v + "' out of range");
    }
    values.push_back(it->second);
  }
  detail::CompiledTerm program(t, vars);
  std::vector<Element> scratch(program.size());
  return program.eval(alg, values.data(), scratch.data());
}

CheckResult check_identity(const FiniteZroupoid& alg, const Identity& id) {
  return detail::CompiledStatement(Statement{id}).check(alg);
}

CheckResult check_quasi_identity(const FiniteZroupoid& alg, const QuasiIdentity& q) {
  return detail::CompiledStatement(Statement{q}).check(alg);
}

CheckResult check_statement(const FiniteZroupoid& alg, const Statement& s) {
  return detail::CompiledStatement(s).check(alg);
}

namespace axioms {

namespace {
Identity identity(const char* text) { return std::get<Identity>(parse_statement(text)); }
}  // namespace

#define ZROUPOID_AXIOM(fn, text)               \
  const Identity& fn() {                       \
    static const Identity id = identity(text); \
    return id;                                 \
  }

ZROUPOID_AXIOM(implication, "(x -> y) -> z = ((z' -> x) -> (y -> z)')'")
ZROUPOID_AXIOM(zero_double_prime, "0'' = 0")
ZROUPOID_AXIOM(involution, "x'' = x")
ZROUPOID_AXIOM(de_morgan, "(x -> y) -> x = x")
ZROUPOID_AXIOM(kleene1, "(x -> x) -> (y -> y)' = x -> x")
ZROUPOID_AXIOM(kleene2, "(y -> y) -> (x -> x) = x -> x")
ZROUPOID_AXIOM(boolean, "x -> x = 0'")
ZROUPOID_AXIOM(semilattice_prime, "x' = x")
ZROUPOID_AXIOM(semilattice_commutative, "x -> y = y -> x")

#undef ZROUPOID_AXIOM

}  // namespace axioms

const std::vector<Identity>& involution_conditions() {
  static const std::vector<Identity> conditions = [] {
    std::vector<Identity> out;
    for (const char* text : {"0' -> x = x", "x'' = x", "(x -> x')' = x", "x' -> x = x"}) {
      out.push_back(std::get<Identity>(parse_statement(text)));
    }
    return out;
  }();
  return conditions;
}

VarietyMembership variety_memberships(const FiniteZroupoid& alg) {
  auto holds = [&](const Identity& id) { return check_identity(alg, id).holds; };
  VarietyMembership m;
  m.i = holds(axioms::implication()) && holds(axioms::zero_double_prime());
  if (!m.i) return m;
  m.i20 = holds(axioms::involution());
  m.dm = holds(axioms::de_morgan());
  if (m.dm) {
    m.kl1 = holds(axioms::kleene1());
    m.kl2 = holds(axioms::kleene2());
    m.kl = m.kl2;
    m.ba = holds(axioms::boolean());
  }
  m.sl = holds(axioms::semilattice_prime()) && holds(axioms::semilattice_commutative());
  return m;
}

FiniteZroupoid constant_zero_algebra() { return make_algebra(2, 0, {{0, 0}, {0, 0}}); }

}  // namespace zroupoid
