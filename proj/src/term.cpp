#include "zroupoid/term.hpp"

#include <algorithm>
#include <stdexcept>

#include "zroupoid/error.hpp"

namespace zroupoid {

struct Term::Node {
  TermKind kind;
  std::string name;
  std::shared_ptr<const Node> left;
  std::shared_ptr<const Node> right;
  std::size_t depth;
  std::size_t count;
};

namespace {

std::shared_ptr<const Term::Node> shared_zero();

}  // namespace

Term::Term() : node_(shared_zero()) {}

Term Term::zero() { return Term(); }

Term Term::var(std::string name) {
  if (!is_valid_var_name(name)) {
    throw ValidationError("invalid variable name '" + name + "'");
  }
  return Term(std::make_shared<const Node>(Node{TermKind::Var, std::move(name), nullptr, nullptr, 1, 1}));
}

Term Term::arrow(Term left, Term right) {
  auto depth = 1 + std::max(left.node_->depth, right.node_->depth);
  auto count = 1 + left.node_->count + right.node_->count;
  return Term(std::make_shared<const Node>(
      Node{TermKind::Arrow, {}, std::move(left.node_), std::move(right.node_), depth, count}));
}

TermKind Term::kind() const noexcept { return node_->kind; }

bool Term::is_prime() const noexcept {
  return node_->kind == TermKind::Arrow && node_->right->kind == TermKind::Zero;
}

const std::string& Term::name() const {
  if (!is_var()) throw std::logic_error("Term::name on a non-variable");
  return node_->name;
}

Term Term::left() const {
  if (!is_arrow()) throw std::logic_error("Term::left on a non-arrow");
  return Term(node_->left);
}

Term Term::right() const {
  if (!is_arrow()) throw std::logic_error("Term::right on a non-arrow");
  return Term(node_->right);
}

std::size_t Term::depth() const noexcept { return node_->depth; }
std::size_t Term::node_count() const noexcept { return node_->count; }

namespace {

std::shared_ptr<const Term::Node> shared_zero() {
  static const auto zero =
      std::make_shared<const Term::Node>(Term::Node{TermKind::Zero, {}, nullptr, nullptr, 1, 1});
  return zero;
}

bool nodes_equal(const Term::Node* a, const Term::Node* b) noexcept {
  if (a == b) return true;
  if (a->kind != b->kind || a->count != b->count) return false;
  switch (a->kind) {
    case TermKind::Zero:
      return true;
    case TermKind::Var:
      return a->name == b->name;
    case TermKind::Arrow:
      return nodes_equal(a->left.get(), b->left.get()) && nodes_equal(a->right.get(), b->right.get());
  }
  return false;
}

void collect_vars(const Term& t, std::vector<std::string>& out) {
  switch (t.kind()) {
    case TermKind::Zero:
      return;
    case TermKind::Var:
      if (std::find(out.begin(), out.end(), t.name()) == out.end()) out.push_back(t.name());
      return;
    case TermKind::Arrow:
      collect_vars(t.left(), out);
      collect_vars(t.right(), out);
      return;
  }
}

void print_into(const Term& t, std::string& out);

// Operand of a postfix prime or the left side of an arrow: anything but a
// non-prime arrow can appear bare.
void print_factor(const Term& t, std::string& out) {
  if (t.is_arrow() && !t.is_prime()) {
    out += '(';
    print_into(t, out);
    out += ')';
  } else {
    print_into(t, out);
  }
}

void print_into(const Term& t, std::string& out) {
  switch (t.kind()) {
    case TermKind::Zero:
      out += '0';
      return;
    case TermKind::Var:
      out += t.name();
      return;
    case TermKind::Arrow:
      if (t.is_prime()) {
        print_factor(t.left(), out);
        out += '\'';
      } else {
        print_factor(t.left(), out);
        out += " -> ";
        print_into(t.right(), out);
      }
      return;
  }
}

}  // namespace

bool operator==(const Term& a, const Term& b) noexcept { return nodes_equal(a.node_.get(), b.node_.get()); }

bool is_valid_var_name(std::string_view name) noexcept {
  if (name.empty() || name[0] < 'a' || name[0] > 'z') return false;
  return std::all_of(name.begin() + 1, name.end(), [](char c) {
    return (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == '_';
  });
}

std::vector<std::string> free_vars(const Term& t) {
  std::vector<std::string> out;
  collect_vars(t, out);
  return out;
}

std::vector<std::string> free_vars(const Identity& id) {
  std::vector<std::string> out;
  collect_vars(id.lhs, out);
  collect_vars(id.rhs, out);
  return out;
}

std::vector<std::string> free_vars(const QuasiIdentity& q) {
  std::vector<std::string> out;
  for (const auto& p : q.premises) {
    collect_vars(p.equation.lhs, out);
    collect_vars(p.equation.rhs, out);
  }
  collect_vars(q.conclusion.lhs, out);
  collect_vars(q.conclusion.rhs, out);
  return out;
}

std::vector<std::string> free_vars(const Statement& s) {
  return std::visit([](const auto& v) { return free_vars(v); }, s);
}

std::string print_term(const Term& t) {
  std::string out;
  print_into(t, out);
  return out;
}

std::string print_identity(const Identity& id) { return print_term(id.lhs) + " = " + print_term(id.rhs); }

std::string print_statement(const Statement& s) {
  if (const auto* id = std::get_if<Identity>(&s)) return print_identity(*id);
  const auto& q = std::get<QuasiIdentity>(s);
  std::string out;
  for (std::size_t i = 0; i < q.premises.size(); ++i) {
    if (i > 0) out += " & ";
    const auto& p = q.premises[i];
    out += print_term(p.equation.lhs);
    out += p.negated ? " != " : " = ";
    out += print_term(p.equation.rhs);
  }
  if (!q.premises.empty()) out += " => ";
  out += print_identity(q.conclusion);
  return out;
}

Identity below(const Term& a, const Term& b) {
  return Identity{Term::prime(Term::arrow(a, Term::prime(b))), a};
}

}  // namespace zroupoid
