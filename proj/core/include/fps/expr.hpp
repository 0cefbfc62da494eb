#pragma once

#include "fps/rational.hpp"
#include "fps/series.hpp"

#include <memory>
#include <string>
#include <string_view>

namespace fps {

/// Function set of the expression language. `asin`/`atan` are the canonical
/// spellings; the parser also accepts `arcsin`/`arctan`.
enum class Func { Sin, Cos, Tan, Asin, Atan, Exp, Log1p };

std::string to_string(Func f);

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

/// Expression AST. Nodes are immutable and shared; build them through the
/// factories, which enforce the structural invariants (nonnegative Pow
/// exponent, non-null children).
struct Expr {
    enum class Kind { Constant, Variable, Negate, Add, Sub, Mul, Div, Pow, Apply, Inverse };

    Kind kind;
    Rational value{};        // Constant
    int exponent = 0;        // Pow
    Func func = Func::Sin;   // Apply
    ExprPtr lhs{}, rhs{};    // children; unary nodes use lhs only

    static ExprPtr constant(Rational value);
    static ExprPtr variable();
    static ExprPtr negate(ExprPtr e);
    static ExprPtr add(ExprPtr a, ExprPtr b);
    static ExprPtr sub(ExprPtr a, ExprPtr b);
    static ExprPtr mul(ExprPtr a, ExprPtr b);
    static ExprPtr div(ExprPtr a, ExprPtr b);
    static ExprPtr pow(ExprPtr base, int exponent);
    static ExprPtr apply(Func f, ExprPtr arg);
    static ExprPtr inverse(ExprPtr e);
};

bool structurally_equal(const Expr& a, const Expr& b);

/// Recursive-descent parser for
///
///   expr    := term { ("+"|"-") term }
///   term    := unary { ("*"|"/") unary }
///   unary   := "-" unary | postfix
///   postfix := atom { "^" integer }
///   atom    := number | "x" | ident "(" expr ")" | "(" expr ")"
///   ident   := "sin"|"cos"|"tan"|"asin"|"arcsin"|"atan"|"arctan"|"exp"|"log1p"|"inverse"
///   number  := integer                (nonnegative; sign via unary minus)
///
/// "p/q" therefore parses through the division operator, which evaluates
/// exactly on constants; "^" is left-associative and binds its base atom.
/// Errors carry the byte offset and the acceptable-token set (ParseError)
/// or the offending name (UnknownIdentifierError).
ExprPtr parse(std::string_view input);

/// Canonical text form: minimal parentheses, " + "/" - " around additive
/// operators, tight "*", "/", "^". parse(to_string(e)) reproduces the
/// printed string, so print-parse-print is a fixed point.
std::string to_string(const Expr& e);

/// Structural evaluation to a series at the given precision (>= 1).
/// Function application composes the function's Taylor series with the
/// argument (which needs a zero constant term), inverse() applies
/// lagrange_inverse, and a/b shifts both operands down by ord(b) and
/// multiplies by the reciprocal, losing ord(b) of precision.
TruncatedPowerSeries evaluate(const Expr& e, int precision);

}  // namespace fps
