#include "divlie/expr.hpp"

#include <cctype>
#include <vector>

namespace divlie {

bool Expr::equals(const Expr& other) const {
    if (kind != other.kind) return false;
    switch (kind) {
        case Kind::Rational: return value == other.value;
        case Kind::Var:
        case Kind::DOp:
        case Kind::HOp: return index == other.index;
        case Kind::Neg: return lhs->equals(*other.lhs);
        case Kind::Pow: return exponent == other.exponent && lhs->equals(*other.lhs);
        case Kind::Add:
        case Kind::Sub:
        case Kind::Mul: return lhs->equals(*other.lhs) && rhs->equals(*other.rhs);
    }
    return false;
}

namespace {

ExprPtr node(Expr e) { return std::make_shared<const Expr>(std::move(e)); }

}  // namespace

ExprPtr make_rational(Rational v) { return node({Expr::Kind::Rational, std::move(v), 0, nullptr, nullptr, 0}); }
ExprPtr make_var(int i) { return node({Expr::Kind::Var, Rational(0), i, nullptr, nullptr, 0}); }
ExprPtr make_dop(int i) { return node({Expr::Kind::DOp, Rational(0), i, nullptr, nullptr, 0}); }
ExprPtr make_hop(int i) { return node({Expr::Kind::HOp, Rational(0), i, nullptr, nullptr, 0}); }
ExprPtr make_add(ExprPtr a, ExprPtr b) { return node({Expr::Kind::Add, Rational(0), 0, std::move(a), std::move(b), 0}); }
ExprPtr make_sub(ExprPtr a, ExprPtr b) { return node({Expr::Kind::Sub, Rational(0), 0, std::move(a), std::move(b), 0}); }
ExprPtr make_neg(ExprPtr a) { return node({Expr::Kind::Neg, Rational(0), 0, std::move(a), nullptr, 0}); }
ExprPtr make_mul(ExprPtr a, ExprPtr b) { return node({Expr::Kind::Mul, Rational(0), 0, std::move(a), std::move(b), 0}); }
ExprPtr make_pow(ExprPtr base, int exponent) {
    if (exponent < 0) throw ValueError("negative exponent in expression");
    return node({Expr::Kind::Pow, Rational(0), 0, std::move(base), nullptr, exponent});
}

namespace {

struct Token {
    enum class Type { Rational, Var, DOp, HOp, Plus, Minus, Star, Caret, LParen, RParen, End };
    Type type;
    Rational value;
    int index = 0;
    int line = 1;
    int col = 1;
};

class Lexer {
public:
    explicit Lexer(const std::string& text) : text_(text) {}

    std::vector<Token> run() {
        std::vector<Token> out;
        while (true) {
            skip_space();
            Token t = next();
            bool end = t.type == Token::Type::End;
            out.push_back(std::move(t));
            if (end) break;
        }
        return out;
    }

private:
    void skip_space() {
        while (pos_ < text_.size()) {
            char c = text_[pos_];
            if (c == '\n') {
                ++line_;
                col_ = 1;
                ++pos_;
            } else if (std::isspace(static_cast<unsigned char>(c))) {
                ++col_;
                ++pos_;
            } else {
                break;
            }
        }
    }

    Token next() {
        int line = line_, col = col_;
        if (pos_ >= text_.size()) return {Token::Type::End, Rational(0), 0, line, col};
        char c = text_[pos_];
        auto simple = [&](Token::Type tt) {
            advance();
            return Token{tt, Rational(0), 0, line, col};
        };
        switch (c) {
            case '+': return simple(Token::Type::Plus);
            case '-': return simple(Token::Type::Minus);
            case '*': return simple(Token::Type::Star);
            case '^': return simple(Token::Type::Caret);
            case '(': return simple(Token::Type::LParen);
            case ')': return simple(Token::Type::RParen);
            default: break;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string digits = read_digits();
            if (pos_ < text_.size() && text_[pos_] == '/') {
                advance();
                if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
                    throw ParseError("expected digits after '/'", line_, col_);
                std::string den = read_digits();
                return {Token::Type::Rational, rational_from_string(digits + "/" + den), 0, line, col};
            }
            return {Token::Type::Rational, rational_from_string(digits), 0, line, col};
        }
        if (c == 'x' || c == 'd' || c == 'H') {
            advance();
            if (pos_ >= text_.size() || text_[pos_] < '1' || text_[pos_] > '9')
                throw ParseError(std::string("expected index digit 1..9 after '") + c + "'", line_, col_);
            int idx = text_[pos_] - '0';
            advance();
            Token::Type tt = c == 'x' ? Token::Type::Var : (c == 'd' ? Token::Type::DOp : Token::Type::HOp);
            return {tt, Rational(0), idx, line, col};
        }
        throw ParseError(std::string("unexpected character '") + c + "'", line, col);
    }

    std::string read_digits() {
        std::string out;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            out += text_[pos_];
            advance();
        }
        return out;
    }

    void advance() {
        ++pos_;
        ++col_;
    }

    const std::string& text_;
    size_t pos_ = 0;
    int line_ = 1;
    int col_ = 1;
};

class Parser {
public:
    explicit Parser(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

    ExprPtr run() {
        ExprPtr e = expr();
        if (!at(Token::Type::End)) throw ParseError("unexpected trailing input", cur().line, cur().col);
        return e;
    }

private:
    ExprPtr expr() {
        ExprPtr left = term();
        while (at(Token::Type::Plus) || at(Token::Type::Minus)) {
            bool plus = at(Token::Type::Plus);
            ++pos_;
            ExprPtr right = term();
            left = plus ? make_add(std::move(left), std::move(right)) : make_sub(std::move(left), std::move(right));
        }
        return left;
    }

    ExprPtr term() {
        ExprPtr left = factor();
        while (at(Token::Type::Star)) {
            ++pos_;
            left = make_mul(std::move(left), factor());
        }
        return left;
    }

    ExprPtr factor() {
        ExprPtr base = atom();
        if (at(Token::Type::Caret)) {
            ++pos_;
            if (!at(Token::Type::Rational)) throw ParseError("expected exponent", cur().line, cur().col);
            const Rational& v = cur().value;
            if (v.get_den() != 1 || v < 0) throw ParseError("exponent must be a nonnegative integer", cur().line, cur().col);
            if (!v.get_num().fits_sint_p()) throw ParseError("exponent overflow", cur().line, cur().col);
            int e = static_cast<int>(v.get_num().get_si());
            ++pos_;
            return make_pow(std::move(base), e);
        }
        return base;
    }

    ExprPtr atom() {
        const Token& t = cur();
        switch (t.type) {
            case Token::Type::Rational: {
                Rational v = t.value;
                ++pos_;
                return make_rational(std::move(v));
            }
            case Token::Type::Var: {
                int i = t.index;
                ++pos_;
                return make_var(i);
            }
            case Token::Type::DOp: {
                int i = t.index;
                ++pos_;
                return make_dop(i);
            }
            case Token::Type::HOp: {
                int i = t.index;
                ++pos_;
                return make_hop(i);
            }
            case Token::Type::Minus:
                ++pos_;
                return make_neg(factor());
            case Token::Type::LParen: {
                int line = t.line, col = t.col;
                ++pos_;
                ExprPtr inner = expr();
                if (!at(Token::Type::RParen)) throw ParseError("unclosed '('", line, col);
                ++pos_;
                return inner;
            }
            case Token::Type::End:
                // blame the last consumed token, not the phantom end position
                if (pos_ > 0) throw ParseError("unexpected end of input", tokens_[pos_ - 1].line, tokens_[pos_ - 1].col);
                throw ParseError("empty expression", t.line, t.col);
            default:
                throw ParseError("expected an operand", t.line, t.col);
        }
    }

    const Token& cur() const { return tokens_[pos_]; }
    bool at(Token::Type tt) const { return tokens_[pos_].type == tt; }

    std::vector<Token> tokens_;
    size_t pos_ = 0;
};

enum class Slot { ExprLeft, ExprRight, TermLeft, TermRight, NegArg, PowBase };

bool needs_parens(const Expr& e, Slot slot) {
    using K = Expr::Kind;
    bool additive = e.kind == K::Add || e.kind == K::Sub;
    switch (slot) {
        case Slot::ExprLeft: return false;
        case Slot::ExprRight: return additive;
        case Slot::TermLeft: return additive;
        case Slot::TermRight: return additive || e.kind == K::Mul;
        case Slot::NegArg: return additive || e.kind == K::Mul;
        case Slot::PowBase:
            return !(e.kind == K::Rational || e.kind == K::Var || e.kind == K::DOp || e.kind == K::HOp);
    }
    return true;
}

std::string print_in(const Expr& e, Slot slot) {
    std::string body;
    switch (e.kind) {
        case Expr::Kind::Rational: body = to_string(e.value); break;
        case Expr::Kind::Var: body = "x" + std::to_string(e.index); break;
        case Expr::Kind::DOp: body = "d" + std::to_string(e.index); break;
        case Expr::Kind::HOp: body = "H" + std::to_string(e.index); break;
        case Expr::Kind::Add:
            body = print_in(*e.lhs, Slot::ExprLeft) + " + " + print_in(*e.rhs, Slot::ExprRight);
            break;
        case Expr::Kind::Sub:
            body = print_in(*e.lhs, Slot::ExprLeft) + " - " + print_in(*e.rhs, Slot::ExprRight);
            break;
        case Expr::Kind::Mul:
            body = print_in(*e.lhs, Slot::TermLeft) + "*" + print_in(*e.rhs, Slot::TermRight);
            break;
        case Expr::Kind::Neg: body = "-" + print_in(*e.lhs, Slot::NegArg); break;
        case Expr::Kind::Pow:
            body = print_in(*e.lhs, Slot::PowBase) + "^" + std::to_string(e.exponent);
            break;
    }
    return needs_parens(e, slot) ? "(" + body + ")" : body;
}

}  // namespace

ExprPtr parse_expr(const std::string& text) { return Parser(Lexer(text).run()).run(); }

std::string print_expr(const Expr& e) { return print_in(e, Slot::ExprLeft); }

namespace {

Lowered lower_node(const Expr& e, int n) {
    using K = Expr::Kind;
    switch (e.kind) {
        case K::Rational: return Polynomial::constant(n, e.value);
        case K::Var:
            if (e.index > n) throw IndexError("variable x" + std::to_string(e.index) + " exceeds n=" + std::to_string(n));
            return Polynomial::variable(n, e.index);
        case K::DOp:
            if (e.index > n) throw IndexError("direction d" + std::to_string(e.index) + " exceeds n=" + std::to_string(n));
            return Derivation::partial(n, e.index);
        case K::HOp:
            if (e.index > n) throw IndexError("operator H" + std::to_string(e.index) + " exceeds n=" + std::to_string(n));
            return Derivation::euler(n, e.index);
        case K::Neg: {
            Lowered inner = lower_node(*e.lhs, n);
            if (auto* p = std::get_if<Polynomial>(&inner)) return -*p;
            return -std::get<Derivation>(inner);
        }
        case K::Add:
        case K::Sub: {
            Lowered a = lower_node(*e.lhs, n);
            Lowered b = lower_node(*e.rhs, n);
            bool sub = e.kind == K::Sub;
            if (auto* pa = std::get_if<Polynomial>(&a)) {
                auto* pb = std::get_if<Polynomial>(&b);
                if (!pb) throw ValueError("cannot mix polynomials and derivations additively");
                return sub ? *pa - *pb : *pa + *pb;
            }
            auto* db = std::get_if<Derivation>(&b);
            if (!db) throw ValueError("cannot mix polynomials and derivations additively");
            const auto& da = std::get<Derivation>(a);
            return sub ? da - *db : da + *db;
        }
        case K::Mul: {
            Lowered a = lower_node(*e.lhs, n);
            if (std::holds_alternative<Derivation>(a))
                throw ValueError("a d/H symbol may only appear as the rightmost factor");
            const auto& pa = std::get<Polynomial>(a);
            Lowered b = lower_node(*e.rhs, n);
            if (auto* pb = std::get_if<Polynomial>(&b)) return pa * *pb;
            return pa * std::get<Derivation>(b);
        }
        case K::Pow: {
            Lowered base = lower_node(*e.lhs, n);
            if (std::holds_alternative<Derivation>(base))
                throw ValueError("cannot raise a derivation to a power");
            return std::get<Polynomial>(base).pow(e.exponent);
        }
    }
    throw ValueError("unreachable expression kind");
}

}  // namespace

Lowered lower(const Expr& e, int n) {
    if (n < 1 || n > 9) throw ValueError("text expressions support n in 1..9");
    return lower_node(e, n);
}

Polynomial lower_polynomial(const std::string& text, int n) {
    Lowered v = lower(*parse_expr(text), n);
    if (auto* p = std::get_if<Polynomial>(&v)) return *p;
    throw ValueError("expected a polynomial, found a derivation");
}

Derivation lower_derivation(const std::string& text, int n) {
    Lowered v = lower(*parse_expr(text), n);
    if (auto* d = std::get_if<Derivation>(&v)) return *d;
    throw ValueError("expected a derivation (use d1..dn or H1..Hn)");
}

}  // namespace divlie
