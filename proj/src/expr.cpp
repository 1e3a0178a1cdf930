#include "ssw/expr.hpp"

#include <algorithm>
#include <cctype>
#include <set>

namespace ssw {

namespace {

class Parser {
 public:
  explicit Parser(const std::string& s) : s_(s) {}

  PolyExpr run() {
    PolyExpr e = expr();
    skip_ws();
    if (pos_ != s_.size())
      throw ParseError(pos_, "'+', '-', '*', '^' or end of input");
    return e;
  }

 private:
  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_])))
      ++pos_;
  }

  bool peek_is(char c) {
    skip_ws();
    return pos_ < s_.size() && s_[pos_] == c;
  }

  PolyExpr expr() {
    PolyExpr lhs = term();
    for (;;) {
      if (peek_is('+')) {
        ++pos_;
        PolyExpr node;
        node.kind = PolyExpr::Kind::kAdd;
        node.kids = {std::move(lhs), term()};
        lhs = std::move(node);
      } else if (peek_is('-')) {
        ++pos_;
        PolyExpr node;
        node.kind = PolyExpr::Kind::kSub;
        node.kids = {std::move(lhs), term()};
        lhs = std::move(node);
      } else {
        return lhs;
      }
    }
  }

  PolyExpr term() {
    PolyExpr lhs = factor();
    while (peek_is('*')) {
      ++pos_;
      PolyExpr node;
      node.kind = PolyExpr::Kind::kMul;
      node.kids = {std::move(lhs), factor()};
      lhs = std::move(node);
    }
    return lhs;
  }

  PolyExpr factor() {
    PolyExpr b = base();
    if (peek_is('^')) {
      ++pos_;
      PolyExpr node;
      node.kind = PolyExpr::Kind::kPow;
      node.exp = parse_uint_exponent();
      node.kids = {std::move(b)};
      return node;
    }
    return b;
  }

  PolyExpr base() {
    skip_ws();
    if (pos_ >= s_.size())
      throw ParseError(pos_, "variable (x, z, q, a), unsigned integer or '('");
    const char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      PolyExpr e = expr();
      skip_ws();
      if (pos_ >= s_.size() || s_[pos_] != ')') throw ParseError(pos_, "')'");
      ++pos_;
      return e;
    }
    if (c == 'x' || c == 'z' || c == 'q' || c == 'a') {
      ++pos_;
      PolyExpr e;
      e.kind = PolyExpr::Kind::kVar;
      e.var = c;
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      PolyExpr e;
      e.kind = PolyExpr::Kind::kLit;
      e.lit = parse_digits();
      return e;
    }
    throw ParseError(pos_, "variable (x, z, q, a), unsigned integer or '('");
  }

  BigInt parse_digits() {
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
      ++pos_;
    return BigInt(s_.substr(start, pos_ - start));
  }

  unsigned parse_uint_exponent() {
    skip_ws();
    if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
      throw ParseError(pos_, "unsigned integer exponent");
    const BigInt v = parse_digits();
    if (v > 9999) throw ParseError(pos_, "exponent <= 9999");
    return static_cast<unsigned>(v.get_ui());
  }

  const std::string& s_;
  std::size_t pos_ = 0;
};

void collect_vars(const PolyExpr& e, std::set<char>& out) {
  if (e.kind == PolyExpr::Kind::kVar) out.insert(e.var);
  for (const PolyExpr& k : e.kids) collect_vars(k, out);
}

}  // namespace

PolyExpr parse_poly_expr(const std::string& s) { return Parser(s).run(); }

std::vector<char> expr_variables(const PolyExpr& e) {
  std::set<char> vars;
  collect_vars(e, vars);
  return std::vector<char>(vars.begin(), vars.end());
}

}  // namespace ssw
