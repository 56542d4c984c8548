#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "qhopf/gauge.hpp"

namespace qhopf::cli {

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct Expr {
  enum Kind { Num, Sym, Index, Call, Neg, Add, Sub, Mul, Div, Pow };
  Kind kind = Num;
  mpz_class num;
  std::string name;
  std::vector<int> idx;
  std::vector<ExprPtr> args;  // operands, call arguments
  int exp = 0;                // Pow exponent
  int line = 1;
  int col = 1;
};

// Grammar:
//   expr    := term (('+' | '-') term)*
//   term    := unary (('*' | '/') unary)*
//   unary   := '-' unary | power
//   power   := primary ('^' '-'? integer)?
//   primary := integer | name | name '[' int (',' int)* ']' | name '(' expr (',' expr)* ')' | '(' expr ')'
// Throws SyntaxError with 1-based line and column.
ExprPtr parse(const std::string& text);
// Fully parenthesized rendering of the tree.
std::string print(const Expr& e);
// Highest braided copy index mentioned (y[m,..], rho[m]).
int max_copy(const Expr& e);

struct Value {
  enum Kind { Scalar, Matrix, Block } kind = Scalar;
  Element e;
  MatForm m;
  EMat b;
  std::string str() const;
  bool is_zero() const;
};

// Evaluates in the given algebra; every result is in normal form.
// Throws UnknownSymbol (with location) and engine errors.
Value evaluate(const Expr& e, const AlgebraPtr& a);

// Algebra suited to the expression: braided when it mentions copies.
AlgebraPtr algebra_for(const Expr& e, AlgebraConfig base);

// Exact rational value of a coefficient-only expression. u and p may be
// omitted when the value does not depend on them.
// Throws NotSpecializable or PoleAtPoint.
mpq_class eval_rational(const Value& v, const mpq_class& q, const std::optional<mpq_class>& u = std::nullopt,
                        const std::optional<mpq_class>& p = std::nullopt);

mpq_class parse_rational(const std::string& s);

}  // namespace qhopf::cli
