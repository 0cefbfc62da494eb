#include "fps/expr.hpp"

#include "fps/errors.hpp"

#include <cctype>
#include <charconv>
#include <optional>
#include <utility>
#include <vector>

namespace fps {

std::string to_string(Func f) {
    switch (f) {
        case Func::Sin: return "sin";
        case Func::Cos: return "cos";
        case Func::Tan: return "tan";
        case Func::Asin: return "asin";
        case Func::Atan: return "atan";
        case Func::Exp: return "exp";
        case Func::Log1p: return "log1p";
    }
    return "?";
}

namespace {

ExprPtr make(Expr e) { return std::make_shared<const Expr>(std::move(e)); }

void require(const ExprPtr& e) {
    if (!e) throw MalformedInputError("null expression node");
}

}  // namespace

ExprPtr Expr::constant(Rational value) {
    Expr e{Kind::Constant};
    e.value = std::move(value);
    return make(std::move(e));
}

ExprPtr Expr::variable() { return make(Expr{Kind::Variable}); }

ExprPtr Expr::negate(ExprPtr e) {
    require(e);
    Expr n{Kind::Negate};
    n.lhs = std::move(e);
    return make(std::move(n));
}

ExprPtr Expr::add(ExprPtr a, ExprPtr b) {
    require(a), require(b);
    Expr n{Kind::Add};
    n.lhs = std::move(a), n.rhs = std::move(b);
    return make(std::move(n));
}

ExprPtr Expr::sub(ExprPtr a, ExprPtr b) {
    require(a), require(b);
    Expr n{Kind::Sub};
    n.lhs = std::move(a), n.rhs = std::move(b);
    return make(std::move(n));
}

ExprPtr Expr::mul(ExprPtr a, ExprPtr b) {
    require(a), require(b);
    Expr n{Kind::Mul};
    n.lhs = std::move(a), n.rhs = std::move(b);
    return make(std::move(n));
}

ExprPtr Expr::div(ExprPtr a, ExprPtr b) {
    require(a), require(b);
    Expr n{Kind::Div};
    n.lhs = std::move(a), n.rhs = std::move(b);
    return make(std::move(n));
}

ExprPtr Expr::pow(ExprPtr base, int exponent) {
    require(base);
    if (exponent < 0) throw MalformedInputError("pow needs a nonnegative exponent");
    Expr n{Kind::Pow};
    n.lhs = std::move(base);
    n.exponent = exponent;
    return make(std::move(n));
}

ExprPtr Expr::apply(Func f, ExprPtr arg) {
    require(arg);
    Expr n{Kind::Apply};
    n.func = f;
    n.lhs = std::move(arg);
    return make(std::move(n));
}

ExprPtr Expr::inverse(ExprPtr e) {
    require(e);
    Expr n{Kind::Inverse};
    n.lhs = std::move(e);
    return make(std::move(n));
}

bool structurally_equal(const Expr& a, const Expr& b) {
    if (a.kind != b.kind) return false;
    switch (a.kind) {
        case Expr::Kind::Constant: return a.value == b.value;
        case Expr::Kind::Variable: return true;
        case Expr::Kind::Pow:
            return a.exponent == b.exponent && structurally_equal(*a.lhs, *b.lhs);
        case Expr::Kind::Apply:
            return a.func == b.func && structurally_equal(*a.lhs, *b.lhs);
        case Expr::Kind::Negate:
        case Expr::Kind::Inverse: return structurally_equal(*a.lhs, *b.lhs);
        default:
            return structurally_equal(*a.lhs, *b.lhs) && structurally_equal(*a.rhs, *b.rhs);
    }
}

// ---------------------------------------------------------------------------
// Lexer

namespace {

enum class TokenKind { Integer, Ident, Plus, Minus, Star, Slash, Caret, LParen, RParen, End, Invalid };

struct Token {
    TokenKind kind;
    std::size_t offset;
    std::string_view text;
};

std::vector<Token> lex(std::string_view input) {
    std::vector<Token> tokens;
    std::size_t i = 0;
    while (i < input.size()) {
        const char c = input[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        const std::size_t start = i;
        if (std::isdigit(static_cast<unsigned char>(c))) {
            while (i < input.size() && std::isdigit(static_cast<unsigned char>(input[i]))) ++i;
            tokens.push_back({TokenKind::Integer, start, input.substr(start, i - start)});
            continue;
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            while (i < input.size() &&
                   (std::isalnum(static_cast<unsigned char>(input[i])) || input[i] == '_'))
                ++i;
            tokens.push_back({TokenKind::Ident, start, input.substr(start, i - start)});
            continue;
        }
        TokenKind kind;
        switch (c) {
            case '+': kind = TokenKind::Plus; break;
            case '-': kind = TokenKind::Minus; break;
            case '*': kind = TokenKind::Star; break;
            case '/': kind = TokenKind::Slash; break;
            case '^': kind = TokenKind::Caret; break;
            case '(': kind = TokenKind::LParen; break;
            case ')': kind = TokenKind::RParen; break;
            default: kind = TokenKind::Invalid; break;
        }
        tokens.push_back({kind, start, input.substr(start, 1)});
        if (kind == TokenKind::Invalid) break;  // parser reports it when reached
        ++i;
    }
    tokens.push_back({TokenKind::End, input.size(), {}});
    return tokens;
}

std::optional<Func> func_from_name(std::string_view name) {
    if (name == "sin") return Func::Sin;
    if (name == "cos") return Func::Cos;
    if (name == "tan") return Func::Tan;
    if (name == "asin" || name == "arcsin") return Func::Asin;
    if (name == "atan" || name == "arctan") return Func::Atan;
    if (name == "exp") return Func::Exp;
    if (name == "log1p") return Func::Log1p;
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// Parser

class Parser {
  public:
    explicit Parser(std::string_view input) : tokens_(lex(input)) {}

    ExprPtr run() {
        auto e = parse_expr();
        if (peek().kind != TokenKind::End)
            throw ParseError(peek().offset, {"'+'", "'-'", "'*'", "'/'", "'^'", "end of input"});
        return e;
    }

  private:
    const Token& peek() const { return tokens_[pos_]; }
    Token advance() { return tokens_[pos_++]; }

    ExprPtr parse_expr() {
        auto e = parse_term();
        while (peek().kind == TokenKind::Plus || peek().kind == TokenKind::Minus) {
            const bool plus = advance().kind == TokenKind::Plus;
            auto r = parse_term();
            e = plus ? Expr::add(std::move(e), std::move(r)) : Expr::sub(std::move(e), std::move(r));
        }
        return e;
    }

    ExprPtr parse_term() {
        auto e = parse_unary();
        while (peek().kind == TokenKind::Star || peek().kind == TokenKind::Slash) {
            const bool star = advance().kind == TokenKind::Star;
            auto r = parse_unary();
            e = star ? Expr::mul(std::move(e), std::move(r)) : Expr::div(std::move(e), std::move(r));
        }
        return e;
    }

    ExprPtr parse_unary() {
        if (peek().kind == TokenKind::Minus) {
            advance();
            return Expr::negate(parse_unary());
        }
        return parse_postfix();
    }

    ExprPtr parse_postfix() {
        auto e = parse_atom();
        while (peek().kind == TokenKind::Caret) {
            advance();
            if (peek().kind != TokenKind::Integer)
                throw ParseError(peek().offset, {"a nonnegative integer exponent"});
            const Token t = advance();
            int exponent = 0;
            const auto [ptr, ec] =
                std::from_chars(t.text.data(), t.text.data() + t.text.size(), exponent);
            if (ec != std::errc() || ptr != t.text.data() + t.text.size())
                throw ParseError(t.offset, {"an exponent within int range"});
            e = Expr::pow(std::move(e), exponent);
        }
        return e;
    }

    ExprPtr parse_atom() {
        const Token& t = peek();
        switch (t.kind) {
            case TokenKind::Integer:
                advance();
                return Expr::constant(Rational(Integer(std::string(t.text))));
            case TokenKind::Ident: {
                advance();
                if (t.text == "x") return Expr::variable();
                const auto func = func_from_name(t.text);
                const bool is_inverse = t.text == "inverse";
                if (!func && !is_inverse) throw UnknownIdentifierError(t.offset, std::string(t.text));
                expect(TokenKind::LParen, "'('");
                auto arg = parse_expr();
                expect(TokenKind::RParen, "')'");
                return is_inverse ? Expr::inverse(std::move(arg)) : Expr::apply(*func, std::move(arg));
            }
            case TokenKind::LParen: {
                advance();
                auto e = parse_expr();
                expect(TokenKind::RParen, "')'");
                return e;
            }
            default:
                throw ParseError(t.offset, {"a number", "'x'", "a function name", "'('"});
        }
    }

    void expect(TokenKind kind, const char* what) {
        if (peek().kind != kind) throw ParseError(peek().offset, {what});
        advance();
    }

    std::vector<Token> tokens_;
    std::size_t pos_ = 0;
};

// ---------------------------------------------------------------------------
// Printer

// Binding strength, loosest first. Constants take the strength of the
// expression they would reparse as: "-2" reparses as a negation, "1/6" as a
// division, so printing them below those levels needs parentheses.
int strength(const Expr& e) {
    switch (e.kind) {
        case Expr::Kind::Add:
        case Expr::Kind::Sub: return 1;
        case Expr::Kind::Mul:
        case Expr::Kind::Div: return 2;
        case Expr::Kind::Negate: return 3;
        case Expr::Kind::Pow: return 4;
        case Expr::Kind::Constant:
            if (e.value.denominator() != 1) return 2;
            if (e.value.sign() < 0) return 3;
            return 5;
        default: return 5;
    }
}

void print(std::string& out, const Expr& e);

void print_child(std::string& out, const Expr& child, int parent, bool parenthesize_equal) {
    const int s = strength(child);
    const bool parens = s < parent || (parenthesize_equal && s == parent);
    if (parens) out += "(";
    print(out, child);
    if (parens) out += ")";
}

void print_binary(std::string& out, const Expr& e, const char* op) {
    const int s = strength(e);
    print_child(out, *e.lhs, s, false);
    out += op;
    print_child(out, *e.rhs, s, true);  // left-associative grammar
}

void print(std::string& out, const Expr& e) {
    switch (e.kind) {
        case Expr::Kind::Constant: out += e.value.str(); break;
        case Expr::Kind::Variable: out += "x"; break;
        case Expr::Kind::Negate:
            out += "-";
            print_child(out, *e.lhs, strength(e), false);
            break;
        case Expr::Kind::Add: print_binary(out, e, " + "); break;
        case Expr::Kind::Sub: print_binary(out, e, " - "); break;
        case Expr::Kind::Mul: print_binary(out, e, "*"); break;
        case Expr::Kind::Div: print_binary(out, e, "/"); break;
        case Expr::Kind::Pow:
            print_child(out, *e.lhs, strength(e), false);
            out += "^" + std::to_string(e.exponent);
            break;
        case Expr::Kind::Apply:
        case Expr::Kind::Inverse:
            out += e.kind == Expr::Kind::Inverse ? "inverse" : to_string(e.func);
            out += "(";
            print(out, *e.lhs);
            out += ")";
            break;
    }
}

}  // namespace

ExprPtr parse(std::string_view input) { return Parser(input).run(); }

std::string to_string(const Expr& e) {
    std::string out;
    print(out, e);
    return out;
}

}  // namespace fps
