#include <doctest.h>

#include <random>

#include "zroupoid/error.hpp"
#include "zroupoid/parser.hpp"
#include "zroupoid/term.hpp"

using namespace zroupoid;

namespace {

Term v(const char* name) { return Term::var(name); }
Term z() { return Term::zero(); }
Term ar(Term a, Term b) { return Term::arrow(std::move(a), std::move(b)); }
Term pr(Term a) { return Term::prime(std::move(a)); }

// Uniform over the three node kinds until the depth budget runs out.
Term random_term(std::mt19937& rng, int depth) {
  static const char* names[] = {"x", "y", "z", "a", "b1", "long_name"};
  std::uniform_int_distribution<int> pick(0, 5);
  if (depth <= 1) {
    const int k = pick(rng);
    return k == 0 ? z() : v(names[k]);
  }
  switch (pick(rng) % 3) {
    case 0:
      return pick(rng) == 0 ? z() : v(names[pick(rng)]);
    case 1:
      return pr(random_term(rng, depth - 1));
    default:
      return ar(random_term(rng, depth - 1), random_term(rng, depth - 1));
  }
}

bool only_core_nodes(const Term& t) {
  switch (t.kind()) {
    case TermKind::Var:
    case TermKind::Zero:
      return true;
    case TermKind::Arrow:
      return only_core_nodes(t.left()) && only_core_nodes(t.right());
  }
  return false;
}

const Identity& as_identity(const Statement& s) { return std::get<Identity>(s); }

}  // namespace

TEST_CASE("arrow is right-associative and parentheses override") {
  CHECK(parse_term("(x -> y) -> z") == ar(ar(v("x"), v("y")), v("z")));
  CHECK(parse_term("x -> y -> z") == ar(v("x"), ar(v("y"), v("z"))));
  CHECK_FALSE(parse_term("x -> y -> z") == parse_term("(x -> y) -> z"));
}

TEST_CASE("prime is sugar for arrow into zero and binds tightest") {
  CHECK(parse_term("x''") == ar(ar(v("x"), z()), z()));
  CHECK(parse_term("x -> y'") == ar(v("x"), ar(v("y"), z())));
  CHECK(parse_term("(x -> y)'") == ar(ar(v("x"), v("y")), z()));
  CHECK(parse_term("0'") == ar(z(), z()));
  CHECK(pr(v("x")) == ar(v("x"), z()));
  CHECK(pr(v("x")).is_prime());
}

TEST_CASE("right-hand side of the defining identity") {
  const Term rhs = pr(ar(ar(pr(v("z")), v("x")), pr(ar(v("y"), v("z")))));
  CHECK(parse_term("((z' -> x) -> (y -> z)')'") == rhs);
}

TEST_CASE("printing uses minimal parentheses") {
  CHECK(print_term(pr(v("x"))) == "x'");
  CHECK(print_term(ar(ar(v("x"), v("y")), v("z"))) == "(x -> y) -> z");
  CHECK(print_term(ar(v("x"), ar(v("y"), v("z")))) == "x -> y -> z");
  CHECK(print_term(pr(ar(v("x"), v("y")))) == "(x -> y)'");
  CHECK(print_term(pr(pr(v("x")))) == "x''");
  CHECK(print_term(ar(pr(v("x")), v("y"))) == "x' -> y");
  CHECK(print_term(z()) == "0");
  CHECK(print_term(pr(z())) == "0'");
  CHECK(print_term(ar(z(), pr(z()))) == "0 -> 0'");
}

TEST_CASE("statement printing of the defining identity") {
  const auto s = parse_statement("(x -> y) -> z ≈ ((z' -> x) -> (y -> z)')'");
  CHECK(print_statement(s) == "(x -> y) -> z = ((z' -> x) -> (y -> z)')'");
}

TEST_CASE("order sugar expands to the meet identity") {
  const auto s = parse_statement("x <= y");
  const auto& id = as_identity(s);
  CHECK(id.lhs == pr(ar(v("x"), pr(v("y")))));
  CHECK(id.rhs == v("x"));
  CHECK(id == below(v("x"), v("y")));
}

TEST_CASE("quasi-identities") {
  const auto s = parse_statement("0 <= x & 0 <= y => 0 <= x -> y");
  REQUIRE(std::holds_alternative<QuasiIdentity>(s));
  const auto& q = std::get<QuasiIdentity>(s);
  CHECK(q.premises.size() == 2);
  CHECK(q.premises[0].equation == below(z(), v("x")));
  CHECK(q.conclusion == below(z(), ar(v("x"), v("y"))));
  CHECK_FALSE(q.premises[0].negated);

  const auto strict = std::get<QuasiIdentity>(parse_statement("a < 0 => a = a'"));
  REQUIRE(strict.premises.size() == 2);
  CHECK(strict.premises[0].equation == below(v("a"), z()));
  CHECK(strict.premises[1].negated);
  CHECK(strict.premises[1].equation == Identity{v("a"), z()});

  const auto neq = std::get<QuasiIdentity>(parse_statement("x != y => x = x"));
  CHECK(neq.premises.size() == 1);
  CHECK(neq.premises[0].negated);
}

TEST_CASE("plain identities") {
  const auto s = parse_statement("x = x");
  CHECK(as_identity(s) == Identity{v("x"), v("x")});
}

TEST_CASE("statement printing round-trips") {
  for (const char* text : {"x = x", "0 <= x & 0 <= y => 0 <= x -> y", "a < 0 => a = a'", "x != y => x -> y = y",
                           "(a -> b')' = a & (0 -> e') -> b = b => (0 -> e) -> a' = a'"}) {
    const auto s = parse_statement(text);
    CHECK(parse_statement(print_statement(s)) == s);
  }
}

TEST_CASE("free variables in first-occurrence order") {
  CHECK(free_vars(parse_term("(x -> y) -> z")) == std::vector<std::string>{"x", "y", "z"});
  CHECK(free_vars(parse_term("0'")).empty());
  CHECK(free_vars(parse_term("y -> x -> y")) == std::vector<std::string>{"y", "x"});
  CHECK(free_vars(parse_statement("b <= c & a <= b => a <= c")) == std::vector<std::string>{"b", "c", "a"});
}

TEST_CASE("syntax errors carry offset and expected tokens") {
  auto expect_error = [](const char* text, std::size_t offset) {
    try {
      (void)parse_statement(text);
      FAIL("no error for " << text);
    } catch (const SyntaxError& e) {
      CHECK(e.offset() == offset);
      CHECK_FALSE(e.expected().empty());
    }
  };
  expect_error("x ->", 4);
  expect_error("x = ", 4);
  expect_error("(x -> y", 7);
  expect_error("x = y )", 6);
  expect_error("X = x", 0);
  expect_error("x != y", 6);
  expect_error("x = y & y = x", 13);
  expect_error("x => y = y", 2);
  CHECK_THROWS_AS(parse_term("x = y"), SyntaxError);
  CHECK_THROWS_AS(parse_term(""), SyntaxError);
}

TEST_CASE("variable names") {
  CHECK(is_valid_var_name("x"));
  CHECK(is_valid_var_name("a_1"));
  CHECK_FALSE(is_valid_var_name(""));
  CHECK_FALSE(is_valid_var_name("1x"));
  CHECK_FALSE(is_valid_var_name("Xy"));
  CHECK_THROWS_AS(Term::var("Bad"), ValidationError);
}

TEST_CASE("property: print then parse is the identity on 1000 random terms") {
  std::mt19937 rng(20141114);
  std::uniform_int_distribution<int> depth(1, 8);
  for (int i = 0; i < 1000; ++i) {
    const Term t = random_term(rng, depth(rng));
    REQUIRE(t.depth() <= 8);
    const std::string text = print_term(t);
    INFO(text);
    CHECK(parse_term(text) == t);
    CHECK(only_core_nodes(t));
  }
}

TEST_CASE("property: order sugar agrees with its expansion on random subterms") {
  std::mt19937 rng(7);
  for (int i = 0; i < 200; ++i) {
    const std::string a = print_term(random_term(rng, 4));
    const std::string b = print_term(random_term(rng, 4));
    CHECK(parse_statement("(" + a + ") <= (" + b + ")") ==
          parse_statement("((" + a + ") -> (" + b + ")')' = (" + a + ")"));
  }
}
