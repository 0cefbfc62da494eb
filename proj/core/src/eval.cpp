#include "fps/expr.hpp"

#include "fps/elementary.hpp"
#include "fps/errors.hpp"
#include "fps/inversion.hpp"
#include "fps/theorem.hpp"

namespace fps {

namespace {

TruncatedPowerSeries generator(Func f, int precision) {
    switch (f) {
        case Func::Sin: return series_sin(precision);
        case Func::Cos: return series_cos(precision);
        case Func::Tan: return series_tan(precision);
        case Func::Asin: return series_arcsin(precision);
        case Func::Atan: return series_arctan(precision);
        case Func::Exp: return series_exp(precision);
        case Func::Log1p: return series_log1p(precision);
    }
    throw MalformedInputError("unknown function");
}

TruncatedPowerSeries eval_div(const TruncatedPowerSeries& a, const TruncatedPowerSeries& b) {
    if (b.is_zero())
        throw ZeroAtPrecisionError("division by a series that vanishes through precision " +
                                   std::to_string(b.precision()));
    const int s = ord_lead(b).order;
    for (int i = 0; i < s && i <= a.precision(); ++i)
        if (!a.coefficient(i).is_zero())
            throw DivisionOrderError("division needs ord(numerator) >= ord(denominator) = " +
                                     std::to_string(s));
    if (s > a.precision())
        throw DivisionOrderError("numerator precision " + std::to_string(a.precision()) +
                                 " cannot absorb a shift by " + std::to_string(s));
    return mul(shift_down(a, s), reciprocal(shift_down(b, s)));
}

}  // namespace

TruncatedPowerSeries evaluate(const Expr& e, int precision) {
    if (precision < 1) throw PreconditionError("evaluate needs precision >= 1");
    switch (e.kind) {
        case Expr::Kind::Constant:
            return TruncatedPowerSeries::constant(e.value, precision);
        case Expr::Kind::Variable:
            return TruncatedPowerSeries::identity(precision);
        case Expr::Kind::Negate:
            return neg(evaluate(*e.lhs, precision));
        case Expr::Kind::Add:
            return add(evaluate(*e.lhs, precision), evaluate(*e.rhs, precision));
        case Expr::Kind::Sub:
            return sub(evaluate(*e.lhs, precision), evaluate(*e.rhs, precision));
        case Expr::Kind::Mul:
            return mul(evaluate(*e.lhs, precision), evaluate(*e.rhs, precision));
        case Expr::Kind::Div:
            return eval_div(evaluate(*e.lhs, precision), evaluate(*e.rhs, precision));
        case Expr::Kind::Pow:
            return pow(evaluate(*e.lhs, precision), e.exponent);
        case Expr::Kind::Apply: {
            const auto arg = evaluate(*e.lhs, precision);
            if (!arg.coefficient(0).is_zero())
                throw NotComposableError(to_string(e.func) +
                                         " needs an argument with zero constant term");
            return compose(generator(e.func, precision), arg);
        }
        case Expr::Kind::Inverse:
            return lagrange_inverse(evaluate(*e.lhs, precision));
    }
    throw MalformedInputError("unknown expression node");
}

}  // namespace fps
