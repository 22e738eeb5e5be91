#pragma once

#include <memory>
#include <string>
#include <variant>

#include "divlie/derivation.hpp"

namespace divlie {

/// Abstract syntax of the text front-end. Grammar:
///
///   expr   := term (('+'|'-') term)*
///   term   := factor ('*' factor)*
///   factor := atom ('^' uint)?
///   atom   := rational | 'x'digit | 'd'digit | 'H'digit | '(' expr ')' | '-' factor
///
/// Rationals are "p" or "p/q"; variable indices are single digits 1..9, so the
/// text syntax caps n at 9 (the JSON interface has no such cap). Implicit
/// multiplication is a syntax error.
struct Expr {
    enum class Kind { Rational, Var, DOp, HOp, Add, Sub, Neg, Mul, Pow };

    Kind kind;
    Rational value;                 // Rational
    int index = 0;                  // Var / DOp / HOp
    std::shared_ptr<const Expr> lhs, rhs;  // Add/Sub/Mul(lhs,rhs), Neg/Pow(lhs)
    int exponent = 0;               // Pow

    bool equals(const Expr& other) const;
};

using ExprPtr = std::shared_ptr<const Expr>;

ExprPtr make_rational(Rational v);
ExprPtr make_var(int i);
ExprPtr make_dop(int i);
ExprPtr make_hop(int i);
ExprPtr make_add(ExprPtr a, ExprPtr b);
ExprPtr make_sub(ExprPtr a, ExprPtr b);
ExprPtr make_neg(ExprPtr a);
ExprPtr make_mul(ExprPtr a, ExprPtr b);
ExprPtr make_pow(ExprPtr base, int exponent);

/// Throws ParseError with 1-based line/column on bad input.
ExprPtr parse_expr(const std::string& text);

/// Prints with just enough parentheses that parse_expr(print_expr(e)) is
/// structurally equal to e.
std::string print_expr(const Expr& e);

using Lowered = std::variant<Polynomial, Derivation>;

/// Evaluates the tree in n variables: a Polynomial when no d/H symbol occurs,
/// a Derivation otherwise. d/H symbols may only appear as the rightmost
/// factor of a product (scaling from the left), never under '^', and never
/// mixed additively with polynomials.
Lowered lower(const Expr& e, int n);

Polynomial lower_polynomial(const std::string& text, int n);
Derivation lower_derivation(const std::string& text, int n);

}  // namespace divlie
