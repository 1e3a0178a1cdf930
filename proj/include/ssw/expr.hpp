/* Tiny arithmetic-expression language for polynomials on the command line:
 * variables x, z, q, a; integer literals; + - * ^; parentheses.  Recursive
 * descent with byte-offset diagnostics; no implicit multiplication. */
#pragma once

#include <cstddef>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "ssw/numtheory.hpp"

namespace ssw {

struct PolyExpr {
  enum class Kind { kVar, kLit, kAdd, kSub, kMul, kPow };
  Kind kind = Kind::kLit;
  char var = 0;       // kVar
  BigInt lit;         // kLit
  unsigned exp = 0;   // kPow
  std::vector<PolyExpr> kids;  // 2 for kAdd/kSub/kMul, 1 for kPow
};

struct ParseError : std::runtime_error {
  ParseError(std::size_t offset, std::string expected)
      : std::runtime_error("syntax error at offset " + std::to_string(offset) +
                           ": expected " + expected),
        offset(offset),
        expected(std::move(expected)) {}
  std::size_t offset;
  std::string expected;
};

/* Grammar: expr := term (('+'|'-') term)*; term := factor ('*' factor)*;
 * factor := base ('^' uint)?; base := var | uint | '(' expr ')'.
 * Whitespace insensitive.  Throws ParseError. */
PolyExpr parse_poly_expr(const std::string& s);

/* The distinct variables appearing in the expression, sorted. */
std::vector<char> expr_variables(const PolyExpr& e);

}  // namespace ssw
