#pragma once

#include <string_view>

#include "zroupoid/term.hpp"

namespace zroupoid {

// Grammar:
//   statement := literal { "&" literal } [ "=>" identity ]
//   literal   := term ( "=" | "≈" | "<=" | "!=" | "<" ) term
//   identity  := term ( "=" | "≈" | "<=" ) term
//   term      := factor [ "->" term ]
//   factor    := atom { "'" }
//   atom      := ident | "0" | "(" term ")"
//
// "a <= b" expands to (a -> b')' = a. "a != b" and the strict sugar
// "a < b" (= a <= b & a != b) are accepted only as premises. A statement
// without "=>" must consist of a single identity.

/// Throws SyntaxError carrying the byte offset and the expected-token set.
Term parse_term(std::string_view input);
Statement parse_statement(std::string_view input);

}  // namespace zroupoid
